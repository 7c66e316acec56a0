#include "nilpair/cli.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nilpair/centralizer.hpp"
#include "nilpair/classify.hpp"
#include "nilpair/error.hpp"
#include "nilpair/json_io.hpp"
#include "nilpair/render.hpp"

namespace nilpair {

namespace {

Json load_input(const std::string& input) {
  if (!input.empty() && input.front() == '{') return parse_json(input);
  return load_json_file(input);
}

struct AnyInput {
  std::optional<PairDatum> datum;
  std::optional<SkewDiagram> diagram;
};

AnyInput parse_input(const Json& j) {
  AnyInput in;
  if (j.is_object() && j.contains("type")) {
    in.datum = datum_from_json(j);
  } else if (j.is_object() && j.contains("cells")) {
    in.diagram = diagram_from_json(j);
  } else {
    throw err_parse(
        "input must be a datum (object with \"type\") or a diagram (object "
        "with \"cells\")");
  }
  return in;
}

Shift parse_shift_flag(const std::string& s) {
  std::istringstream is(s);
  int dp = 0, dq = 0;
  char comma = 0;
  if (!(is >> dp >> comma >> dq) || comma != ',' || !(is >> std::ws).eof()) {
    throw err_parse("--shift expects \"2p,2q\" (doubled integers)");
  }
  return Shift{dp, dq};
}

// Highlight spec: semicolon-separated cells "a,b", each optionally prefixed
// with a component label "k:". Doubled coordinates throughout.
std::vector<std::pair<int, Cell>> parse_highlight(const std::string& spec) {
  std::vector<std::pair<int, Cell>> out;
  std::istringstream is(spec);
  std::string item;
  while (std::getline(is, item, ';')) {
    if (item.empty()) continue;
    int k = 0;
    std::string rest = item;
    auto colon = item.find(':');
    if (colon != std::string::npos) {
      k = std::stoi(item.substr(0, colon));
      rest = item.substr(colon + 1);
    }
    std::istringstream cs(rest);
    int a = 0, b = 0;
    char comma = 0;
    if (!(cs >> a >> comma >> b) || comma != ',') {
      throw err_parse("--highlight expects \"[k:]a,b;[k:]a,b;...\"");
    }
    out.emplace_back(k, Cell{a, b});
  }
  return out;
}

// Deterministic order-preserving parallel map.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int jobs, F f)
    -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  if (jobs <= 1 || items.size() <= 1) {
    for (size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < items.size();
         i = next.fetch_add(1)) {
      out[i] = f(items[i]);
    }
  };
  std::vector<std::thread> pool;
  int width = std::min<int>(jobs, static_cast<int>(items.size()));
  pool.reserve(width);
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

CliResult cmd_validate(const std::string& input, const std::string& format) {
  Json j;
  try {
    j = load_input(input);
  } catch (const DomainError&) {
    throw;  // IO/parse handled by the caller as exit 2
  }
  Json rep;
  try {
    AnyInput in = parse_input(j);
    if (in.datum) {
      rep["valid"] = true;
      rep["kind"] = "datum";
      rep["type"] = to_string(in.datum->type);
      rep["rank"] = in.datum->rank;
      if (format == "text") {
        return {0, "valid datum: type " + std::string(to_string(in.datum->type)) +
                       ", rank " + std::to_string(in.datum->rank) + "\n"};
      }
    } else {
      rep["valid"] = true;
      rep["kind"] = "diagram";
      rep["cells"] = in.diagram->size();
      rep["symmetry_class"] =
          is_centrally_symmetric(*in.diagram)
              ? std::string(to_string(in.diagram->symmetry_class()))
              : std::string("not-symmetric");
      if (format == "text") {
        return {0, "valid skew diagram: " +
                       std::to_string(in.diagram->size()) + " cells\n"};
      }
    }
    return {0, dumped(rep)};
  } catch (const DomainError& e) {
    if (e.code() == "IoError" || e.code() == "ParseError") throw;
    rep["valid"] = false;
    rep["error"] = e.code();
    rep["message"] = e.what();
    if (format == "text") {
      return {1, std::string("invalid: ") + e.what() + "\n"};
    }
    return {1, dumped(rep)};
  }
}

CliResult cmd_enum(const std::string& input, const std::string& shift_str,
                   const std::string& format) {
  AnyInput in = parse_input(load_input(input));
  std::optional<Shift> only;
  if (!shift_str.empty()) only = parse_shift_flag(shift_str);

  std::vector<std::pair<Shift, std::vector<IndexEntry>>> blocks;
  if (in.datum) {
    std::vector<Shift> shifts =
        only ? std::vector<Shift>{*only} : index_shift_support(*in.datum);
    for (const Shift& s : shifts) blocks.emplace_back(s, assemble_index(*in.datum, s));
  } else {
    std::vector<Shift> shifts;
    if (only) {
      shifts = {*only};
    } else {
      for (const Shift& s : single_shift_candidates(*in.diagram)) {
        if (!enum_single(*in.diagram, s).empty()) shifts.push_back(s);
      }
    }
    for (const Shift& s : shifts) {
      std::vector<IndexEntry> es;
      for (CellSet& c : enum_single(*in.diagram, s)) {
        IndexEntry e;
        e.kind = IndexEntry::Kind::Single;
        e.C = std::move(c);
        es.push_back(std::move(e));
      }
      blocks.emplace_back(s, std::move(es));
    }
  }

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& [s, es] : blocks) arr.push_back(entries_block_to_json(s, es));
    return {0, dumped(arr)};
  }
  std::ostringstream os;
  for (const auto& [s, es] : blocks) {
    os << "shift (" << s.dp << "," << s.dq << "): " << es.size()
       << (es.size() == 1 ? " entry\n" : " entries\n");
    for (const auto& e : es) {
      switch (e.kind) {
        case IndexEntry::Kind::Single:
          os << "  single C=" << cells_to_string(e.C) << "\n";
          break;
        case IndexEntry::Kind::Cross:
          os << "  cross k=" << e.k << " l=" << e.l
             << " C=" << cells_to_string(e.C)
             << " C'=" << cells_to_string(e.Cprime) << "\n";
          break;
        case IndexEntry::Kind::Self:
          if (e.self_paired) {
            os << "  self k=" << e.k << " C=C'=" << cells_to_string(e.C) << "\n";
          } else {
            os << "  self k=" << e.k << " C=" << cells_to_string(e.C)
               << " C'=" << cells_to_string(e.Cprime) << "\n";
          }
          break;
      }
    }
  }
  return {0, os.str()};
}

CliResult cmd_centralizer(const std::string& input, bool oracle,
                          const std::string& shift_str, bool elements,
                          const std::string& format) {
  AnyInput in = parse_input(load_input(input));
  if (!in.datum) throw err_invalid_datum("centralizer expects a datum input");
  const PairDatum& d = *in.datum;
  Realization r = build_realization(d);
  GradedCentralizerBasis basis = combinatorial_basis(r);

  std::map<Shift, int> oracle_dims;
  if (oracle) oracle_dims = oracle_centralizer(r);

  // Row set: combinatorial support, plus any oracle degree of nonzero
  // dimension (so a hypothetical mismatch in either direction is visible).
  std::map<Shift, std::pair<long, int>> rows;  // shift -> (count, oracle dim)
  for (const auto& [s, els] : basis.by_shift) {
    rows[s].first = static_cast<long>(els.size());
  }
  if (oracle) {
    for (const auto& [s, dim] : oracle_dims) {
      if (dim != 0 || rows.count(s)) rows[s].second = dim;
    }
  }
  std::optional<Shift> only;
  if (!shift_str.empty()) only = parse_shift_flag(shift_str);

  bool all_match = true;
  if (oracle) {
    for (const auto& [s, cd] : rows) {
      if (cd.first != cd.second) all_match = false;
    }
    // The trivial degree must carry no solutions at all.
    auto it = oracle_dims.find(Shift{0, 0});
    if (it != oracle_dims.end() && it->second != 0) all_match = false;
  }

  bool wonderful = basis.dims.dim_Zplus_int == d.rank;
  int exit_code = (oracle && !all_match) ? 1 : 0;

  if (format == "json") {
    Json out;
    out["datum"] = datum_to_json(d);
    out["rank"] = d.rank;
    Json arr = Json::array();
    for (const auto& [s, cd] : rows) {
      if (only && !(s == *only)) continue;
      Json row;
      row["shift"] = shift_to_json(s);
      row["count"] = cd.first;
      if (oracle) {
        row["oracle"] = cd.second;
        row["match"] = cd.first == cd.second;
      }
      arr.push_back(row);
    }
    out["shifts"] = arr;
    out["dim_Z"] = basis.dims.dim_Z;
    out["dim_Zplus"] = basis.dims.dim_Zplus;
    out["dim_Zplus_int"] = basis.dims.dim_Zplus_int;
    out["is_wonderful"] = wonderful;
    if (oracle) out["all_match"] = all_match;
    if (elements) {
      Json els = Json::array();
      for (const auto& [s, list] : basis.by_shift) {
        if (only && !(s == *only)) continue;
        for (const auto& el : list) {
          Json e;
          e["shift"] = shift_to_json(s);
          e["entry"] = entry_to_json(el.entry);
          e["matrix"] = matrix_to_json(el.x);
          els.push_back(e);
        }
      }
      out["elements"] = els;
    }
    return {exit_code, dumped(out)};
  }

  std::ostringstream os;
  os << "type " << to_string(d.type) << " rank " << d.rank << "\n";
  os << std::setw(6) << "2p" << std::setw(6) << "2q" << std::setw(8) << "count";
  if (oracle) os << std::setw(8) << "oracle" << std::setw(7) << "match";
  os << "\n";
  for (const auto& [s, cd] : rows) {
    if (only && !(s == *only)) continue;
    os << std::setw(6) << s.dp << std::setw(6) << s.dq << std::setw(8)
       << cd.first;
    if (oracle) {
      os << std::setw(8) << cd.second << std::setw(7)
         << (cd.first == cd.second ? "yes" : "NO");
    }
    os << "\n";
  }
  os << "dim_Z=" << basis.dims.dim_Z << " dim_Zplus=" << basis.dims.dim_Zplus
     << " dim_Zplus_int=" << basis.dims.dim_Zplus_int
     << " wonderful=" << (wonderful ? "true" : "false");
  if (oracle) os << " all_match=" << (all_match ? "true" : "false");
  os << "\n";
  if (elements) {
    for (const auto& [s, list] : basis.by_shift) {
      if (only && !(s == *only)) continue;
      for (const auto& el : list) {
        os << "element at (" << s.dp << "," << s.dq << "):";
        for (const auto& [k, c, lam] : el.coeffs) {
          os << " v^" << k << "_" << to_string(c) << "->" << lam.get_str();
        }
        os << "\n";
      }
    }
  }
  return {exit_code, os.str()};
}

CliResult cmd_classify(const std::string& input, const std::string& format) {
  AnyInput in = parse_input(load_input(input));
  if (!in.datum) throw err_invalid_datum("classify expects a datum input");
  ClassificationVerdict v = verdict(*in.datum);
  int exit_code = v.clauses_agree() ? 0 : 1;
  if (format == "json") return {exit_code, dumped(verdict_to_json(*in.datum, v))};
  std::ostringstream os;
  os << "type " << to_string(in.datum->type) << " rank " << v.rank << "\n"
     << "dim_Z=" << v.dims.dim_Z << " dim_Zplus=" << v.dims.dim_Zplus
     << " dim_Zplus_int=" << v.dims.dim_Zplus_int << "\n"
     << "wonderful=" << (v.is_wonderful ? "true" : "false")
     << " principal=" << (v.is_principal ? "true" : "false")
     << " almost_principal=" << (v.is_almost_principal ? "true" : "false")
     << "\n"
     << "clauses_agree=" << (v.clauses_agree() ? "true" : "false") << " ["
     << v.equality_case << "]\n";
  return {exit_code, os.str()};
}

CliResult cmd_search(const std::string& type_str, const std::string& pred_str,
                     int rank_bound, int jobs, const std::string& format) {
  auto type = lie_type_from_string(type_str);
  if (!type) throw err_parse("unknown type \"" + type_str + "\"");
  auto pred = predicate_from_string(pred_str);
  if (!pred) throw err_parse("unknown predicate \"" + pred_str + "\"");
  if (rank_bound > rank_ceiling()) {
    throw err_rank_too_large("rank bound " + std::to_string(rank_bound) +
                             " exceeds ceiling " +
                             std::to_string(rank_ceiling()));
  }

  std::vector<std::pair<PairDatum, ClassificationVerdict>> matches;
  for (int rk = 1; rk <= rank_bound; ++rk) {
    std::vector<PairDatum> data = enumerate_data(*type, rk);
    auto verdicts =
        parallel_map(data, jobs, [](const PairDatum& d) { return verdict(d); });
    for (size_t i = 0; i < data.size(); ++i) {
      if (verdict_matches(verdicts[i], *pred)) {
        matches.emplace_back(std::move(data[i]), std::move(verdicts[i]));
      }
    }
  }

  if (format == "json") {
    Json out;
    out["type"] = to_string(*type);
    out["predicate"] = to_string(*pred);
    out["rank_bound"] = rank_bound;
    Json arr = Json::array();
    for (const auto& [d, v] : matches) arr.push_back(verdict_to_json(d, v));
    out["matches"] = arr;
    out["count"] = matches.size();
    return {0, dumped(out)};
  }
  std::ostringstream os;
  os << "search type " << to_string(*type) << " predicate " << to_string(*pred)
     << " rank<=" << rank_bound << ": " << matches.size() << " match"
     << (matches.size() == 1 ? "" : "es") << "\n";
  for (const auto& [d, v] : matches) {
    os << "  " << datum_to_string(d) << "  dim_Z=" << v.dims.dim_Z
       << " dim_Zplus=" << v.dims.dim_Zplus << "\n";
  }
  return {0, os.str()};
}

CliResult cmd_census(const std::string& type_str, int rank_bound, int jobs,
                     const std::string& format) {
  auto type = lie_type_from_string(type_str);
  if (!type) throw err_parse("unknown type \"" + type_str + "\"");
  if (rank_bound > rank_ceiling()) {
    throw err_rank_too_large("rank bound " + std::to_string(rank_bound) +
                             " exceeds ceiling " +
                             std::to_string(rank_ceiling()));
  }
  std::vector<CensusRow> rows;
  for (int rk = 1; rk <= rank_bound; ++rk) {
    std::vector<PairDatum> data = enumerate_data(*type, rk);
    auto verdicts =
        parallel_map(data, jobs, [](const PairDatum& d) { return verdict(d); });
    CensusRow row;
    row.rank = rk;
    row.n_data = static_cast<long>(data.size());
    for (const auto& v : verdicts) {
      if (v.is_wonderful) ++row.n_wonderful;
      if (v.is_principal) ++row.n_principal;
      if (v.is_almost_principal) ++row.n_almost_principal;
    }
    rows.push_back(row);
  }
  if (format == "json") return {0, dumped(census_to_json(*type, rows))};
  std::ostringstream os;
  os << "census type " << to_string(*type) << "\n";
  os << std::setw(6) << "rank" << std::setw(8) << "data" << std::setw(11)
     << "wonderful" << std::setw(11) << "principal" << std::setw(8) << "a.p."
     << "\n";
  for (const auto& r : rows) {
    os << std::setw(6) << r.rank << std::setw(8) << r.n_data << std::setw(11)
       << r.n_wonderful << std::setw(11) << r.n_principal << std::setw(8)
       << r.n_almost_principal << "\n";
  }
  return {0, os.str()};
}

CliResult cmd_render(const std::string& input, bool svg,
                     const std::string& highlight_spec) {
  AnyInput in = parse_input(load_input(input));
  auto hl = parse_highlight(highlight_spec);
  if (in.datum) {
    std::vector<std::pair<int, Cell>> pairs;
    for (auto& [k, c] : hl) pairs.emplace_back(k == 0 ? 1 : k, c);
    return {0, svg ? render_svg(*in.datum, pairs)
                   : render_ascii(*in.datum, pairs)};
  }
  std::vector<Cell> cells;
  for (auto& [k, c] : hl) cells.push_back(c);
  return {0,
          svg ? render_svg(*in.diagram, cells) : render_ascii(*in.diagram, cells)};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"skew-diagram classification data, graded centralizer bases, "
               "and classification verdicts for classical Lie algebras"};
  app.require_subcommand(1);

  std::string input, shift_str, highlight, format = "text", type_str,
              pred_str;
  int rank_bound = 6, jobs = 1;
  bool oracle = false, want_svg = false, want_ascii = false, elements = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check a diagram or datum");
  c_validate->add_option("input", input, "file path or inline JSON")->required();
  add_format(c_validate);

  CLI::App* c_enum = app.add_subcommand("enum-e", "index entries per shift");
  c_enum->add_option("input", input, "file path or inline JSON")->required();
  c_enum->add_option("--shift", shift_str, "restrict to one doubled shift 2p,2q");
  add_format(c_enum);

  CLI::App* c_cent = app.add_subcommand("centralizer", "graded centralizer table");
  c_cent->add_option("input", input, "file path or inline JSON")->required();
  c_cent->add_flag("--oracle", oracle, "also solve the exact linear system");
  c_cent->add_option("--shift", shift_str, "restrict output to one shift");
  c_cent->add_flag("--elements", elements, "dump each basis element");
  add_format(c_cent);

  CLI::App* c_classify = app.add_subcommand("classify", "verdict for one datum");
  c_classify->add_option("input", input, "file path or inline JSON")->required();
  add_format(c_classify);

  CLI::App* c_search = app.add_subcommand("search", "filter enumerated data");
  c_search->add_option("type", type_str, "A, B, C or D")->required();
  c_search
      ->add_option("predicate", pred_str,
                   "principal | almost-principal | wonderful | not-wonderful "
                   "| zplus-equals-z")
      ->required();
  c_search->add_option("--rank-bound", rank_bound, "maximum rank (default 6)");
  c_search->add_option("--jobs", jobs, "worker threads");
  add_format(c_search);

  CLI::App* c_census = app.add_subcommand("census", "per-rank verdict counts");
  c_census->add_option("type", type_str, "A, B, C or D")->required();
  c_census->add_option("--rank-bound", rank_bound, "maximum rank (default 6)");
  c_census->add_option("--jobs", jobs, "worker threads");
  add_format(c_census);

  CLI::App* c_render = app.add_subcommand("render", "draw a diagram or datum");
  c_render->add_option("input", input, "file path or inline JSON")->required();
  c_render->add_flag("--svg", want_svg, "emit SVG");
  c_render->add_flag("--ascii", want_ascii, "emit ASCII boxes (default)");
  c_render->add_option("--highlight", highlight,
                       "cells to star: \"[k:]a,b;[k:]a,b\" (doubled coords)");

  std::vector<const char*> argv;
  argv.push_back("nilpair");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("usage error: ") + e.what() + "\n"};
  }

  try {
    if (app.got_subcommand(c_validate)) return cmd_validate(input, format);
    if (app.got_subcommand(c_enum)) return cmd_enum(input, shift_str, format);
    if (app.got_subcommand(c_cent)) {
      return cmd_centralizer(input, oracle, shift_str, elements, format);
    }
    if (app.got_subcommand(c_classify)) return cmd_classify(input, format);
    if (app.got_subcommand(c_search)) {
      return cmd_search(type_str, pred_str, rank_bound, jobs, format);
    }
    if (app.got_subcommand(c_census)) {
      return cmd_census(type_str, rank_bound, jobs, format);
    }
    if (app.got_subcommand(c_render)) {
      return cmd_render(input, want_svg && !want_ascii, highlight);
    }
    return {2, "usage error: no command\n"};
  } catch (const DomainError& e) {
    int code = (e.code() == "IoError" || e.code() == "ParseError") ? 2 : 1;
    return {code, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace nilpair
