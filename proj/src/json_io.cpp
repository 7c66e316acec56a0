#include "nilpair/json_io.hpp"

#include <fstream>
#include <sstream>

#include "nilpair/error.hpp"

namespace nilpair {

namespace {

Json cells_to_json(const CellSet& cells) {
  Json a = Json::array();
  for (const Cell& c : cells) a.push_back(Json::array({c.a, c.b}));
  return a;
}

CellSet cells_from_json(const Json& j, const char* what) {
  if (!j.is_array()) {
    throw err_parse(std::string(what) + " must be an array of [a,b] pairs");
  }
  CellSet out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw err_parse(std::string(what) + " entries must be integer pairs");
    }
    out.push_back(Cell{e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace

Json diagram_to_json(const SkewDiagram& g) {
  Json j;
  j["cells"] = cells_to_json(g.cells());
  return j;
}

SkewDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells")) {
    throw err_parse("diagram object must have a \"cells\" array");
  }
  return make_skew_diagram(cells_from_json(j["cells"], "\"cells\""));
}

Json datum_to_json(const PairDatum& d) {
  Json j;
  j["type"] = to_string(d.type);
  j["rank"] = d.rank;
  for (auto [name, g] : std::initializer_list<
           std::pair<const char*, const std::optional<SkewDiagram>*>>{
           {"gamma1", &d.g1}, {"gamma2", &d.g2}, {"gamma3", &d.g3}}) {
    j[name] = g->has_value() ? diagram_to_json(**g) : Json(nullptr);
  }
  j["epsilon"] = d.epsilon ? Json(*d.epsilon) : Json(nullptr);
  return j;
}

PairDatum datum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw err_parse("datum object must have a string \"type\"");
  }
  auto type = lie_type_from_string(j["type"].get<std::string>());
  if (!type) {
    throw err_parse("unknown type \"" + j["type"].get<std::string>() +
                    "\" (expected A, B, C or D)");
  }
  auto component = [&](const char* name) -> std::optional<SkewDiagram> {
    if (!j.contains(name) || j[name].is_null()) return std::nullopt;
    return diagram_from_json(j[name]);
  };
  std::optional<int> eps;
  if (j.contains("epsilon") && !j["epsilon"].is_null()) {
    if (!j["epsilon"].is_number_integer()) {
      throw err_parse("\"epsilon\" must be an integer or null");
    }
    eps = j["epsilon"].get<int>();
  }
  std::optional<int> declared;
  if (j.contains("rank") && !j["rank"].is_null()) {
    if (!j["rank"].is_number_integer()) {
      throw err_parse("\"rank\" must be an integer");
    }
    declared = j["rank"].get<int>();
  }
  return validate_datum(*type, component("gamma1"), component("gamma2"),
                        component("gamma3"), eps, declared);
}

Json shift_to_json(const Shift& s) { return Json::array({s.dp, s.dq}); }

Shift shift_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw err_parse("shift must be an array [2p,2q] of integers");
  }
  return Shift{j[0].get<int>(), j[1].get<int>()};
}

Json entry_to_json(const IndexEntry& e) {
  Json j;
  switch (e.kind) {
    case IndexEntry::Kind::Single: j["kind"] = "single"; break;
    case IndexEntry::Kind::Cross: j["kind"] = "cross"; break;
    case IndexEntry::Kind::Self: j["kind"] = "self"; break;
  }
  j["k"] = e.k;
  j["l"] = e.l;
  j["C"] = cells_to_json(e.C);
  j["Cprime"] = e.kind == IndexEntry::Kind::Single ? Json(nullptr)
                                                   : cells_to_json(e.Cprime);
  j["self_paired"] = e.self_paired;
  return j;
}

Json entries_block_to_json(const Shift& s, const std::vector<IndexEntry>& es) {
  Json j;
  j["shift"] = shift_to_json(s);
  Json arr = Json::array();
  for (const auto& e : es) arr.push_back(entry_to_json(e));
  j["entries"] = arr;
  return j;
}

Json matrix_to_json(const QMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

Json realization_to_json(const Realization& r) {
  Json j;
  j["datum"] = datum_to_json(r.datum);
  j["dim"] = r.dim();
  Json basis = Json::array();
  for (const auto& b : r.basis) {
    Json e;
    e["k"] = b.k;
    e["cell"] = Json::array({b.cell.a, b.cell.b});
    basis.push_back(e);
  }
  j["basis"] = basis;
  j["form"] = to_string(r.form);
  j["e1"] = matrix_to_json(r.e1);
  j["e2"] = matrix_to_json(r.e2);
  j["h1"] = matrix_to_json(r.h1);
  j["h2"] = matrix_to_json(r.h2);
  j["gram"] = r.form == FormKind::None ? Json(nullptr) : matrix_to_json(r.gram);
  return j;
}

Json verdict_to_json(const PairDatum& d, const ClassificationVerdict& v) {
  Json j;
  j["datum"] = datum_to_json(d);
  j["rank"] = v.rank;
  j["dim_Z"] = v.dims.dim_Z;
  j["dim_Zplus"] = v.dims.dim_Zplus;
  j["dim_Zplus_int"] = v.dims.dim_Zplus_int;
  j["is_wonderful"] = v.is_wonderful;
  j["is_principal"] = v.is_principal;
  j["is_almost_principal"] = v.is_almost_principal;
  j["zplus_eq_rank"] = v.zplus_eq_rank;
  j["zplus_eq_z"] = v.zplus_eq_z;
  j["clause_wonderful"] = v.clause_wonderful;
  j["clause_principal"] = v.clause_principal;
  j["clause_almost_principal"] = v.clause_almost_principal;
  j["clause_zplus_eq_rank"] = v.clause_zplus_eq_rank;
  j["clauses_agree"] = v.clauses_agree();
  j["equality_case"] = v.equality_case;
  return j;
}

Json census_to_json(LieType type, const std::vector<CensusRow>& rows) {
  Json j;
  j["type"] = to_string(type);
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["rank"] = r.rank;
    e["data"] = r.n_data;
    e["wonderful"] = r.n_wonderful;
    e["principal"] = r.n_principal;
    e["almost_principal"] = r.n_almost_principal;
    arr.push_back(e);
  }
  j["ranks"] = arr;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw err_io("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw err_parse("malformed JSON");
  return j;
}

}  // namespace nilpair
