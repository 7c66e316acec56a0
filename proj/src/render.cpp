#include "nilpair/render.hpp"

#include <algorithm>
#include <sstream>

namespace nilpair {

namespace {

struct Box {
  int amin = 0, amax = 0, bmin = 0, bmax = 0;
};

Box bounding(const CellSet& cells) {
  Box b{cells.front().a, cells.front().a, cells.front().b, cells.front().b};
  for (const Cell& c : cells) {
    b.amin = std::min(b.amin, c.a);
    b.amax = std::max(b.amax, c.a);
    b.bmin = std::min(b.bmin, c.b);
    b.bmax = std::max(b.bmax, c.b);
  }
  return b;
}

bool has(const std::vector<Cell>& v, const Cell& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// One text block for a cell set: rows top-down, each cell three characters.
std::vector<std::string> ascii_block(const CellSet& cells,
                                     const std::vector<Cell>& highlight) {
  std::vector<std::string> lines;
  Box bb = bounding(cells);
  for (int b = bb.bmax; b >= bb.bmin; b -= 2) {
    std::string line;
    for (int a = bb.amin; a <= bb.amax; a += 2) {
      Cell c{a, b};
      if (!contains_cell(cells, c)) {
        line += "   ";
      } else {
        line += has(highlight, c) ? "[*]" : "[ ]";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string join_blocks(const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& blocks) {
  // Pad blocks to a common height and uniform width, join with a gutter.
  size_t height = 0;
  std::vector<size_t> widths(blocks.size(), 0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    height = std::max(height, blocks[i].size());
    for (const auto& l : blocks[i]) widths[i] = std::max(widths[i], l.size());
    widths[i] = std::max(widths[i], labels[i].size());
  }
  std::ostringstream os;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << "   ";
    std::string lab = labels[i];
    lab.resize(widths[i], ' ');
    os << lab;
  }
  os << "\n";
  for (size_t row = 0; row < height; ++row) {
    std::string line;
    for (size_t i = 0; i < blocks.size(); ++i) {
      std::string cellrow =
          row < blocks[i].size() ? blocks[i][row] : std::string();
      cellrow.resize(widths[i], ' ');
      if (i) line += "   ";
      line += cellrow;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string svg_of_blocks(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<CellSet, std::vector<Cell>>>& blocks) {
  const int unit = 28, pad = 10, label_h = 18, gutter = 24;
  std::ostringstream body;
  int x_off = pad;
  int max_h = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const auto& [cells, highlight] = blocks[i];
    Box bb = bounding(cells);
    int cols = (bb.amax - bb.amin) / 2 + 1;
    int rows = (bb.bmax - bb.bmin) / 2 + 1;
    if (!labels[i].empty()) {
      body << "<text x=\"" << x_off << "\" y=\"" << (pad + label_h - 6)
           << "\" font-family=\"monospace\" font-size=\"13\">" << labels[i]
           << "</text>\n";
    }
    for (const Cell& c : cells) {
      int gx = x_off + (c.a - bb.amin) / 2 * unit;
      int gy = pad + label_h + (bb.bmax - c.b) / 2 * unit;
      bool hl = has(highlight, c);
      body << "<rect x=\"" << gx << "\" y=\"" << gy << "\" width=\"" << unit
           << "\" height=\"" << unit << "\" fill=\""
           << (hl ? "#f4c542" : "#ffffff")
           << "\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
      if (hl) {
        body << "<text x=\"" << (gx + unit / 2) << "\" y=\""
             << (gy + unit / 2 + 5)
             << "\" text-anchor=\"middle\" font-family=\"monospace\" "
                "font-size=\"14\">*</text>\n";
      }
    }
    max_h = std::max(max_h, rows * unit);
    x_off += cols * unit + gutter;
  }
  int width = x_off - gutter + pad;
  int height = pad + label_h + max_h + pad;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n"
     << body.str() << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_ascii(const SkewDiagram& g,
                         const std::vector<Cell>& highlight) {
  std::ostringstream os;
  for (const auto& line : ascii_block(g.cells(), highlight)) os << line << "\n";
  return os.str();
}

std::string render_ascii(const PairDatum& d,
                         const std::vector<std::pair<int, Cell>>& highlight) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> blocks;
  for (auto [k, g] :
       std::initializer_list<std::pair<int, const std::optional<SkewDiagram>*>>{
           {1, &d.g1}, {2, &d.g2}, {3, &d.g3}}) {
    if (!g->has_value()) continue;
    std::vector<Cell> hl;
    for (const auto& [hk, c] : highlight) {
      if (hk == k) hl.push_back(c);
    }
    labels.push_back("G" + std::to_string(k));
    blocks.push_back(ascii_block((*g)->cells(), hl));
  }
  return join_blocks(labels, blocks);
}

std::string render_svg(const SkewDiagram& g, const std::vector<Cell>& highlight) {
  return svg_of_blocks({""}, {{g.cells(), highlight}});
}

std::string render_svg(const PairDatum& d,
                       const std::vector<std::pair<int, Cell>>& highlight) {
  std::vector<std::string> labels;
  std::vector<std::pair<CellSet, std::vector<Cell>>> blocks;
  for (auto [k, g] :
       std::initializer_list<std::pair<int, const std::optional<SkewDiagram>*>>{
           {1, &d.g1}, {2, &d.g2}, {3, &d.g3}}) {
    if (!g->has_value()) continue;
    std::vector<Cell> hl;
    for (const auto& [hk, c] : highlight) {
      if (hk == k) hl.push_back(c);
    }
    labels.push_back("G" + std::to_string(k));
    blocks.emplace_back((*g)->cells(), hl);
  }
  return svg_of_blocks(labels, blocks);
}

}  // namespace nilpair
