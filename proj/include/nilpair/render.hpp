#pragma once
// Deterministic drawings of diagrams and data: ASCII boxes (rows printed top
// down, one box per cell, stars for highlighted cells) and self-contained
// SVG. Highlights name cells (for a bare diagram) or (component, cell) pairs
// (for a datum), matching the starred-box presentation of basis supports.

#include <string>
#include <vector>

#include "nilpair/datum.hpp"
#include "nilpair/diagram.hpp"

namespace nilpair {

std::string render_ascii(const SkewDiagram& g,
                         const std::vector<Cell>& highlight = {});
std::string render_ascii(const PairDatum& d,
                         const std::vector<std::pair<int, Cell>>& highlight = {});

std::string render_svg(const SkewDiagram& g,
                       const std::vector<Cell>& highlight = {});
std::string render_svg(const PairDatum& d,
                       const std::vector<std::pair<int, Cell>>& highlight = {});

}  // namespace nilpair
