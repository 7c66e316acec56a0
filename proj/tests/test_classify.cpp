// Datum validation, enumeration, verdicts, searches and censuses.

#include <set>
#include <vector>

#include "doctest.h"
#include "nilpair/classify.hpp"
#include "nilpair/error.hpp"

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
SkewDiagram fivecell() {
  return make_skew_diagram(cells({{-2, 2}, {0, 2}, {0, 0}, {0, -2}, {2, -2}}));
}
SkewDiagram h3strip() { return make_skew_diagram(cells({{-2, 0}, {0, 0}, {2, 0}})); }
SkewDiagram v3strip() { return make_skew_diagram(cells({{0, -2}, {0, 0}, {0, 2}})); }
SkewDiagram origin1() { return make_skew_diagram(cells({{0, 0}})); }
SkewDiagram square4() {
  return make_skew_diagram(cells({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}));
}

std::string validation_code(LieType t, std::optional<SkewDiagram> g1,
                            std::optional<SkewDiagram> g2,
                            std::optional<SkewDiagram> g3,
                            std::optional<int> eps = std::nullopt,
                            std::optional<int> rank = std::nullopt) {
  try {
    validate_datum(t, std::move(g1), std::move(g2), std::move(g3), eps, rank);
  } catch (const DomainError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("validation accepts the fixtures and derives ranks") {
  CHECK(validate_datum(LieType::B, staircase7(), std::nullopt, std::nullopt).rank == 3);
  CHECK(validate_datum(LieType::A, h3strip(), std::nullopt, std::nullopt).rank == 2);
  CHECK(validate_datum(LieType::D, std::nullopt, h3strip(), fivecell(), 1).rank == 4);
  CHECK(validate_datum(LieType::C, std::nullopt,
                       make_skew_diagram(cells({{-1, 0}, {1, 0}})), std::nullopt)
            .rank == 1);
  // Declared rank must match the cardinalities.
  CHECK(validate_datum(LieType::B, staircase7(), std::nullopt, std::nullopt,
                       std::nullopt, 3)
            .rank == 3);
  CHECK(validation_code(LieType::B, staircase7(), std::nullopt, std::nullopt,
                        std::nullopt, 4) == "CardinalityMismatch");
}

TEST_CASE("validation rejects structural misuse") {
  // Type A allows only the first component.
  CHECK(validation_code(LieType::A, h3strip(), h3strip(), std::nullopt) ==
        "InvalidDatum");
  CHECK(validation_code(LieType::A, std::nullopt, std::nullopt, std::nullopt) ==
        "InvalidDatum");
  // Type B: first component integral, second non-integral.
  CHECK(validation_code(LieType::B, square4(), std::nullopt, std::nullopt) ==
        "WrongCoset");
  CHECK(validation_code(LieType::B, staircase7(), h3strip(), std::nullopt) ==
        "WrongCoset");
  // Coset-valid components make the total odd automatically: an integral
  // symmetric diagram has odd size, a non-integral one even size.
  CHECK(validate_datum(LieType::B, staircase7(), square4(), std::nullopt).rank == 5);
  // Type C wants the two semi-integral cosets.
  CHECK(validation_code(LieType::C, h3strip(), std::nullopt, std::nullopt) ==
        "WrongCoset");
  CHECK(validation_code(LieType::C, std::nullopt, std::nullopt, std::nullopt) ==
        "InvalidDatum");
  // Symmetry is required outside type A.
  SkewDiagram bent = make_skew_diagram(cells({{0, 2}, {0, 0}, {2, 0}}));
  CHECK(validation_code(LieType::B, bent, std::nullopt, std::nullopt) ==
        "NotCentrallySymmetric");
  // Type A requires the canonical barycentre position.
  SkewDiagram off = translated(h3strip(), Shift{2, 0});
  CHECK(validation_code(LieType::A, off, std::nullopt, std::nullopt) ==
        "BarycentreNonzero");
}

TEST_CASE("type D origin condition and epsilon rules") {
  // Both-empty pair requires epsilon 1 or 2.
  CHECK(validate_datum(LieType::D, square4(), std::nullopt, std::nullopt, 1).rank == 2);
  CHECK(validate_datum(LieType::D, square4(), std::nullopt, std::nullopt, 2).rank == 2);
  CHECK(validation_code(LieType::D, square4(), std::nullopt, std::nullopt) ==
        "EpsilonInvalid");
  CHECK(validation_code(LieType::D, square4(), std::nullopt, std::nullopt, 3) ==
        "EpsilonInvalid");
  // Nonempty pair forces epsilon 1.
  CHECK(validation_code(LieType::D, std::nullopt, h3strip(), fivecell(), 2) ==
        "EpsilonInvalid");
  // The pair must share exactly the origin.
  CHECK(validation_code(LieType::D, std::nullopt, v3strip(), fivecell(), 1) ==
        "OriginConditionViolated");
  // The third component must not be the origin singleton.
  CHECK(validation_code(LieType::D, std::nullopt, h3strip(), origin1(), 1) ==
        "OriginConditionViolated");
  // ... but the second may be.
  CHECK(validate_datum(LieType::D, std::nullopt, origin1(), v3strip(), 1).rank == 2);
  // One of the pair present without the other is structural misuse.
  CHECK(validation_code(LieType::D, std::nullopt, h3strip(), std::nullopt, 1) ==
        "InvalidDatum");
}

TEST_CASE("enumeration counts at low rank") {
  CHECK(enumerate_data(LieType::A, 1).size() == 2);
  CHECK(enumerate_data(LieType::A, 2).size() == 4);
  CHECK(enumerate_data(LieType::A, 3).size() == 9);
  CHECK(enumerate_data(LieType::B, 1).size() == 2);
  CHECK(enumerate_data(LieType::C, 1).size() == 2);
  CHECK(enumerate_data(LieType::D, 1).empty());
  CHECK(enumerate_data(LieType::D, 2).size() == 4);
  CHECK_THROWS_WITH_AS(enumerate_data(LieType::A, 0),
                       doctest::Contains("InvalidDatum"), DomainError);
  CHECK_THROWS_WITH_AS(enumerate_data(LieType::A, 100),
                       doctest::Contains("RankTooLarge"), DomainError);
}

TEST_CASE("enumeration is sorted, duplicate-free, and valid") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D})
    for (int rk = 1; rk <= 3; ++rk) {
      auto data = enumerate_data(t, rk);
      for (size_t i = 0; i < data.size(); ++i) {
        const PairDatum& d = data[i];
        CHECK(d.rank == rk);
        CHECK(d.type == t);
        // Revalidates without throwing and reproduces itself.
        PairDatum again = validate_datum(d.type, d.g1, d.g2, d.g3, d.epsilon, d.rank);
        CHECK(again == d);
        if (i > 0) {
          CHECK(datum_less(data[i - 1], d));
          CHECK_FALSE(data[i - 1] == d);
        }
      }
    }
}

TEST_CASE("type D enumeration emits ordered pairs both ways") {
  auto data = enumerate_data(LieType::D, 2);
  int with_pair = 0, origin_second = 0;
  for (const PairDatum& d : data)
    if (d.g2 && d.g3) {
      ++with_pair;
      CHECK(d.g3->cells() != cells({{0, 0}}));
      if (d.g2->cells() == cells({{0, 0}})) ++origin_second;
    }
  CHECK(with_pair == 2);     // ({0}, v3) and ({0}, h3)
  CHECK(origin_second == 2);  // the strip never sits second against the origin
}

TEST_CASE("verdicts on the fixtures") {
  ClassificationVerdict st = verdict(
      validate_datum(LieType::B, staircase7(), std::nullopt, std::nullopt));
  CHECK(st.rank == 3);
  CHECK(st.dims == Dims{5, 3, 3});
  CHECK(st.is_wonderful);
  CHECK_FALSE(st.is_principal);
  CHECK_FALSE(st.is_almost_principal);
  CHECK(st.zplus_eq_rank);
  CHECK_FALSE(st.zplus_eq_z);
  CHECK(st.clauses_agree());

  ClassificationVerdict dp =
      verdict(validate_datum(LieType::D, std::nullopt, h3strip(), fivecell(), 1));
  CHECK(dp.dims == Dims{7, 5, 5});
  CHECK_FALSE(dp.is_wonderful);
  CHECK_FALSE(dp.is_principal);
  CHECK_FALSE(dp.is_almost_principal);
  CHECK_FALSE(dp.zplus_eq_rank);
  CHECK(dp.clauses_agree());

  ClassificationVerdict strip =
      verdict(validate_datum(LieType::A, h3strip(), std::nullopt, std::nullopt));
  CHECK(strip.is_principal);
  CHECK(strip.is_wonderful);
  CHECK(strip.dims.dim_Z == 2);
  CHECK(strip.clauses_agree());

  // Almost principal: origin singleton with rectangular non-integral partner.
  ClassificationVerdict ap =
      verdict(validate_datum(LieType::B, origin1(), square4(), std::nullopt));
  CHECK(ap.is_almost_principal);
  CHECK(ap.is_wonderful);
  CHECK_FALSE(ap.is_principal);
  CHECK(ap.dims.dim_Z == 3);
  CHECK(ap.clauses_agree());
  CHECK(ap.equality_case.find("origin-times-rect") != std::string::npos);
}

TEST_CASE("clause agreement sweep at small rank") {
  for (LieType t : {LieType::A, LieType::B, LieType::C, LieType::D}) {
    int top = t == LieType::A ? 4 : 3;
    for (int rk = 1; rk <= top; ++rk)
      for (const PairDatum& d : enumerate_data(t, rk)) {
        ClassificationVerdict v = verdict(d);
        INFO(datum_to_string(d), " case ", v.equality_case);
        CHECK(v.clauses_agree());
      }
  }
}

TEST_CASE("predicates parse and match") {
  CHECK(predicate_from_string("principal") == SearchPredicate::Principal);
  CHECK(predicate_from_string("almost-principal") == SearchPredicate::AlmostPrincipal);
  CHECK(predicate_from_string("wonderful") == SearchPredicate::Wonderful);
  CHECK(predicate_from_string("not-wonderful") == SearchPredicate::NotWonderful);
  CHECK(predicate_from_string("zplus-equals-z") == SearchPredicate::ZplusEqualsZ);
  CHECK_FALSE(predicate_from_string("bogus").has_value());
  for (auto p : {SearchPredicate::Principal, SearchPredicate::AlmostPrincipal,
                 SearchPredicate::Wonderful, SearchPredicate::NotWonderful,
                 SearchPredicate::ZplusEqualsZ})
    CHECK(predicate_from_string(to_string(p)) == p);
}

TEST_CASE("searches find the expected families") {
  // No almost principal data in type A at small rank.
  CHECK(search(LieType::A, 4, SearchPredicate::AlmostPrincipal).empty());
  CHECK(search(LieType::D, 3, SearchPredicate::AlmostPrincipal).empty());
  // Rank <= 2 gives exactly three: the origin against the square, and the two
  // five-cell zigzags (near-rectangular, no second component).
  auto bap = search(LieType::B, 2, SearchPredicate::AlmostPrincipal);
  REQUIRE(bap.size() == 3);
  int zigzags = 0, origin_square = 0;
  for (auto& [d, v] : bap) {
    CHECK(v.dims.dim_Z == d.rank + 1);
    if (d.g1->cells() == cells({{0, 0}})) {
      ++origin_square;
      CHECK(d.g2->cells() == square4().cells());
    } else {
      ++zigzags;
      CHECK_FALSE(d.g2.has_value());
      CHECK(d.g1->size() == 5);
      NearRectReport nr = near_rectangular(*d.g1);
      bool ab = nr.type_a || nr.type_b;
      CHECK(ab);
    }
  }
  CHECK(origin_square == 1);
  CHECK(zigzags == 2);
  // Not-wonderful data exist in type D only.
  CHECK(search(LieType::B, 3, SearchPredicate::NotWonderful).empty());
  CHECK(search(LieType::C, 3, SearchPredicate::NotWonderful).empty());
  CHECK_FALSE(search(LieType::D, 4, SearchPredicate::NotWonderful).empty());
  // Every search result actually satisfies its predicate.
  for (auto& [d, v] : search(LieType::C, 3, SearchPredicate::Principal)) {
    CHECK(v.is_principal);
    CHECK(verdict_matches(v, SearchPredicate::Principal));
  }
}

TEST_CASE("lone symplectic near-rectangles split by coset-compatible type") {
  // The 3-2-3 zigzag on the x-semi-integral coset is near-rectangular of
  // type a, which on that coset leaves two mixed-sign self entries: its
  // centralizer has dimension rank + 2, so it is not almost principal.
  SkewDiagram zx = make_skew_diagram(
      cells({{-3, 2}, {-1, 2}, {1, 2}, {-1, 0}, {1, 0}, {-1, -2}, {1, -2}, {3, -2}}));
  NearRectReport nrx = near_rectangular(zx);
  CHECK(nrx.type_a);
  CHECK_FALSE(nrx.type_b);
  CHECK_FALSE(nrx.type_c);
  ClassificationVerdict vx =
      verdict(validate_datum(LieType::C, std::nullopt, zx, std::nullopt));
  CHECK(vx.rank == 4);
  CHECK(vx.dims.dim_Z == 6);
  CHECK_FALSE(vx.is_almost_principal);
  CHECK_FALSE(vx.is_principal);
  CHECK(vx.clauses_agree());

  // Its transpose on the y-semi-integral coset is type b and fails the same
  // way, while type b on the x-side and type a on the y-side succeed.
  CellSet t;
  for (const Cell& c : zx.cells()) t.push_back({c.b, c.a});
  SkewDiagram zy = make_skew_diagram(t);
  NearRectReport nry = near_rectangular(zy);
  CHECK(nry.type_b);
  CHECK_FALSE(nry.type_a);
  ClassificationVerdict vy =
      verdict(validate_datum(LieType::C, zy, std::nullopt, std::nullopt));
  CHECK(vy.dims.dim_Z == 6);
  CHECK_FALSE(vy.is_almost_principal);
  CHECK(vy.clauses_agree());

  // Flagged strip: the 4-strip with a cell above its left end and below its
  // right end is type b, hence almost principal on the x-semi-integral side.
  SkewDiagram flag = make_skew_diagram(
      cells({{-3, 2}, {-3, 0}, {-1, 0}, {1, 0}, {3, 0}, {3, -2}}));
  CHECK(near_rectangular(flag).type_b);
  ClassificationVerdict vf =
      verdict(validate_datum(LieType::C, std::nullopt, flag, std::nullopt));
  CHECK(vf.rank == 3);
  CHECK(vf.is_almost_principal);
  CHECK(vf.dims.dim_Z == 4);
  CHECK(vf.clauses_agree());
  CHECK(vf.equality_case.find("near-rect-bc") != std::string::npos);

  // The transposed flagged strip is type a on the y-semi-integral side.
  CellSet ft;
  for (const Cell& c : flag.cells()) ft.push_back({c.b, c.a});
  ClassificationVerdict vg =
      verdict(validate_datum(LieType::C, make_skew_diagram(ft), std::nullopt,
                             std::nullopt));
  CHECK(vg.is_almost_principal);
  CHECK(vg.equality_case.find("near-rect-ac") != std::string::npos);
}

TEST_CASE("census of the special linear family") {
  auto rows = census(LieType::A, 4);
  REQUIRE(rows.size() == 4);
  std::vector<long> data = {2, 4, 9, 20}, principal = {2, 4, 7, 12};
  for (int i = 0; i < 4; ++i) {
    CHECK(rows[size_t(i)].rank == i + 1);
    CHECK(rows[size_t(i)].n_data == data[size_t(i)]);
    CHECK(rows[size_t(i)].n_wonderful == data[size_t(i)]);  // always wonderful
    CHECK(rows[size_t(i)].n_principal == principal[size_t(i)]);
    CHECK(rows[size_t(i)].n_almost_principal == 0);
  }
}

TEST_CASE("wonderful never fails outside type D") {
  for (LieType t : {LieType::A, LieType::B, LieType::C})
    for (int rk = 1; rk <= 3; ++rk)
      for (const PairDatum& d : enumerate_data(t, rk)) CHECK(verdict(d).is_wonderful);
}
