#pragma once
// JSON interchange: diagrams, data, index entries, realizations, verdicts,
// census tables. Doubled integer coordinates and shifts everywhere; exact
// rationals as strings "n" or "n/d". Key order is insertion order, fixed by
// these builders, so equal inputs serialize byte-identically.

#include <string>

#include "json.hpp"
#include "nilpair/classify.hpp"
#include "nilpair/realization.hpp"

namespace nilpair {

using Json = nlohmann::ordered_json;

Json diagram_to_json(const SkewDiagram& g);
// Throws ParseError on malformed structure; diagram validation errors pass
// through from make_skew_diagram.
SkewDiagram diagram_from_json(const Json& j);

Json datum_to_json(const PairDatum& d);
// Validates fully (validate_datum); "rank", when present, is the declared
// rank and must match.
PairDatum datum_from_json(const Json& j);

Json shift_to_json(const Shift& s);
Shift shift_from_json(const Json& j);

Json entry_to_json(const IndexEntry& e);
Json entries_block_to_json(const Shift& s, const std::vector<IndexEntry>& es);

Json matrix_to_json(const QMat& m);
Json realization_to_json(const Realization& r);

Json verdict_to_json(const PairDatum& d, const ClassificationVerdict& v);
Json census_to_json(LieType type, const std::vector<CensusRow>& rows);

// Reads and parses a file; throws IoError (unreadable) or ParseError.
Json load_json_file(const std::string& path);
// Parses a string; throws ParseError.
Json parse_json(const std::string& text);

}  // namespace nilpair
