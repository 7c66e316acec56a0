// JSON round trips, CLI exit codes, and output determinism.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilpair/classify.hpp"
#include "nilpair/cli.hpp"
#include "nilpair/error.hpp"
#include "nilpair/json_io.hpp"
#include "nilpair/realization.hpp"
#include "nilpair/render.hpp"

using namespace nilpair;

namespace {

CellSet cells(std::initializer_list<std::pair<int, int>> ps) {
  CellSet out;
  for (auto& p : ps) out.push_back({p.first, p.second});
  return normalized(out);
}

SkewDiagram staircase7() {
  return make_skew_diagram(
      cells({{-2, 2}, {0, 2}, {-2, 0}, {0, 0}, {2, 0}, {0, -2}, {2, -2}}));
}

const char* kStaircaseDatum =
    R"({"type":"B","gamma1":{"cells":[[-2,2],[0,2],[-2,0],[0,0],[2,0],[0,-2],[2,-2]]},"gamma2":null,"gamma3":null,"epsilon":null})";

CliResult run(std::vector<std::string> args) { return run_cli(std::move(args)); }

}  // namespace

TEST_CASE("diagram and datum JSON round trips are byte identical") {
  SkewDiagram g = staircase7();
  Json j = diagram_to_json(g);
  CHECK(diagram_from_json(j) == g);
  CHECK(diagram_to_json(diagram_from_json(j)).dump() == j.dump());

  PairDatum d =
      validate_datum(LieType::D,
                     std::nullopt, make_skew_diagram(cells({{-2, 0}, {0, 0}, {2, 0}})),
                     make_skew_diagram(cells({{-2, 2}, {0, 2}, {0, 0}, {0, -2}, {2, -2}})),
                     1);
  Json jd = datum_to_json(d);
  PairDatum back = datum_from_json(jd);
  CHECK(back == d);
  CHECK(datum_to_json(back).dump() == jd.dump());
  // Doubled coordinates appear verbatim in the wire format.
  CHECK(jd["gamma2"]["cells"][0][0] == -2);
  CHECK(jd["epsilon"] == 1);
  CHECK(jd["type"] == "D");

  // Both-empty pair keeps its epsilon through the round trip.
  PairDatum eps2 = validate_datum(
      LieType::D,
      make_skew_diagram(cells({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}})),
      std::nullopt, std::nullopt, 2);
  CHECK(datum_from_json(datum_to_json(eps2)) == eps2);
  CHECK(datum_from_json(datum_to_json(eps2)).epsilon == 2);
}

TEST_CASE("realization and verdict JSON carry exact rational entries") {
  PairDatum d = validate_datum(LieType::A,
                               make_skew_diagram(cells({{-1, 0}, {1, 0}})),
                               std::nullopt, std::nullopt);
  Realization r = build_realization(d);
  Json j = realization_to_json(r);
  // h1 of the two-cell strip has eigenvalues -1/2 and 1/2: strings, not floats.
  std::string h1 = j["h1"].dump();
  CHECK(h1.find("\"-1/2\"") != std::string::npos);
  CHECK(h1.find("\"1/2\"") != std::string::npos);

  ClassificationVerdict v = verdict(d);
  Json vj = verdict_to_json(d, v);
  CHECK(vj["rank"] == 1);
  CHECK(vj["is_wonderful"] == true);
  CHECK(vj["is_principal"] == true);
  CHECK(vj["dim_Z"] == 1);
  CHECK(vj["clauses_agree"] == true);
  CHECK(datum_from_json(vj["datum"]) == d);
}

TEST_CASE("json parse errors carry the ParseError code") {
  CHECK_THROWS_WITH_AS(parse_json("{broken"), doctest::Contains("ParseError"),
                       DomainError);
  CHECK_THROWS_WITH_AS(diagram_from_json(parse_json("{\"nope\":1}")),
                       doctest::Contains("ParseError"), DomainError);
  CHECK_THROWS_WITH_AS(datum_from_json(parse_json("{\"type\":\"Q\"}")),
                       doctest::Contains("ParseError"), DomainError);
  CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/none.json"),
                       doctest::Contains("IoError"), DomainError);
}

TEST_CASE("cli validate: exit 0 on valid, 1 on domain-invalid, 2 on io/usage") {
  CliResult ok = run({"validate", kStaircaseDatum});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("rank 3") != std::string::npos);

  CliResult diag = run({"validate", R"({"cells":[[0,0],[2,0]]})"});
  CHECK(diag.exit_code == 0);
  CHECK(diag.out.find("2 cells") != std::string::npos);

  // Non-integral first component in the odd orthogonal family.
  CliResult bad = run(
      {"validate",
       R"({"type":"B","gamma1":{"cells":[[-1,-1],[1,-1],[-1,1],[1,1]]},"gamma2":null,"gamma3":null})"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("WrongCoset") != std::string::npos);

  CHECK(run({"validate", "/nonexistent/missing.json"}).exit_code == 2);
  CHECK(run({"validate", "{oops"}).exit_code == 2);
  CHECK(run({"no-such-command"}).exit_code == 2);
  CHECK(run({"search", "B", "no-such-predicate"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("cli validate --format json reports structured validity") {
  CliResult ok = run({"validate", "--format", "json", kStaircaseDatum});
  CHECK(ok.exit_code == 0);
  Json j = parse_json(ok.out);
  CHECK(j["valid"] == true);
  CHECK(j["rank"] == 3);

  CliResult bad = run(
      {"validate", "--format", "json",
       R"({"type":"C","gamma1":{"cells":[[0,0]]},"gamma2":null,"gamma3":null})"});
  CHECK(bad.exit_code == 1);
  Json jb = parse_json(bad.out);
  CHECK(jb["valid"] == false);
  CHECK(jb["error"] == "WrongCoset");
}

TEST_CASE("cli enum-e lists entries and honours --shift") {
  CliResult all = run({"enum-e", kStaircaseDatum});
  CHECK(all.exit_code == 0);
  for (const char* s : {"(-2,4)", "(0,2)", "(2,0)", "(2,2)", "(4,-2)"})
    CHECK(all.out.find(s) != std::string::npos);

  CliResult one = run({"enum-e", "--shift", "2,2", kStaircaseDatum});
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("self k=1") != std::string::npos);
  CHECK(one.out.find("C={(-1,0)}") != std::string::npos);
  CHECK(one.out.find("C'={(0,-1)}") != std::string::npos);
  CHECK(one.out.find("(0,2)") == std::string::npos);

  CliResult none = run({"enum-e", "--shift", "20,20", kStaircaseDatum});
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("0 entries") != std::string::npos);

  CHECK(run({"enum-e", "--shift", "fish", kStaircaseDatum}).exit_code == 2);
}

TEST_CASE("cli centralizer --oracle cross-checks every shift") {
  CliResult r = run({"centralizer", "--oracle", kStaircaseDatum});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("all_match=true") != std::string::npos);
  CHECK(r.out.find("dim_Z=5") != std::string::npos);
  CHECK(r.out.find("dim_Zplus=3") != std::string::npos);

  CliResult js = run({"centralizer", "--oracle", "--format", "json", kStaircaseDatum});
  CHECK(js.exit_code == 0);
  Json j = parse_json(js.out);
  CHECK(j["all_match"] == true);
  CHECK(j["dim_Z"] == 5);
  CHECK(j["shifts"].size() == 5);

  CliResult el = run({"centralizer", "--elements", "--shift", "2,2", kStaircaseDatum});
  CHECK(el.exit_code == 0);
  CHECK(el.out.find("(2,2)") != std::string::npos);
}

TEST_CASE("cli classify agrees with the library verdict") {
  CliResult r = run({"classify", kStaircaseDatum});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wonderful=true") != std::string::npos);
  CHECK(r.out.find("principal=false") != std::string::npos);
  CHECK(r.out.find("clauses_agree=true") != std::string::npos);

  CliResult js = run({"classify", "--format", "json", kStaircaseDatum});
  Json j = parse_json(js.out);
  CHECK(j["is_wonderful"] == true);
  CHECK(j["clauses_agree"] == true);
}

TEST_CASE("cli search and census are deterministic") {
  CliResult a = run({"search", "B", "almost-principal", "--rank-bound", "2"});
  CliResult b = run({"search", "B", "almost-principal", "--rank-bound", "2"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("3 matches") != std::string::npos);

  CliResult c1 = run({"census", "A", "--rank-bound", "3"});
  CliResult c2 = run({"census", "A", "--rank-bound", "3", "--jobs", "2"});
  CHECK(c1.exit_code == 0);
  CHECK(c1.out == c2.out);

  CliResult cj = run({"census", "A", "--rank-bound", "3", "--format", "json"});
  Json j = parse_json(cj.out);
  REQUIRE(j["ranks"].size() == 3);
  CHECK(j["ranks"][2]["data"] == 9);
  CHECK(j["ranks"][2]["principal"] == 7);

  CHECK(run({"census", "E", "--rank-bound", "2"}).exit_code == 2);
}

TEST_CASE("cli render produces ascii boxes and svg") {
  CliResult a = run({"render", "--ascii", "--highlight", "1:0,0", kStaircaseDatum});
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("[*]") != std::string::npos);
  CHECK(a.out.find("[ ]") != std::string::npos);

  CliResult s = run({"render", "--svg", kStaircaseDatum});
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("<svg") != std::string::npos);
  CHECK(s.out.find("</svg>") != std::string::npos);

  CliResult d = run({"render", "--ascii", R"({"cells":[[0,0],[2,0],[0,2]]})"});
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("[ ]") != std::string::npos);
}

TEST_CASE("cli reads datum input from a file") {
  std::string path = "/tmp/nilpair_test_datum.json";
  {
    std::ofstream f(path);
    f << kStaircaseDatum;
  }
  CliResult r = run({"classify", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rank 3") != std::string::npos);
  std::remove(path.c_str());
}
