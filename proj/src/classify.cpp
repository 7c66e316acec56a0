#include "nilpair/classify.hpp"

#include <cassert>

#include "nilpair/error.hpp"

namespace nilpair {

bool origin_pair_minimal_a(const SkewDiagram& g2, const SkewDiagram& g3) {
  if (g2.cells() != CellSet{{0, 0}}) return false;
  int low = 0;
  for (const Cell& c : corners(g3).sw_corners) {
    if (c.a <= 0 && c.b <= 0) ++low;
  }
  return low == 1;
}

bool origin_pair_minimal_b(const SkewDiagram& g2, const SkewDiagram& g3) {
  return is_rectangular(g2) && is_rectangular(g3);
}

namespace {

bool is_origin_singleton(const SkewDiagram& g) {
  return g.cells() == CellSet{{0, 0}};
}

// Strips along the coordinate axes (the rectangular symmetric diagrams of the
// semi-integral cosets that admit a minimal partner).
bool is_vertical_strip_on_y_axis(const SkewDiagram& g) {
  for (const Cell& c : g.cells()) {
    if (c.a != 0) return false;
  }
  return true;
}

bool is_horizontal_strip_on_x_axis(const SkewDiagram& g) {
  for (const Cell& c : g.cells()) {
    if (c.b != 0) return false;
  }
  return true;
}

}  // namespace

ClassificationVerdict verdict(const PairDatum& d) {
  validate_datum(d.type, d.g1, d.g2, d.g3, d.epsilon, d.rank);

  ClassificationVerdict v;
  v.rank = d.rank;
  v.dims = dims(d);
  v.is_wonderful = v.dims.dim_Zplus_int == d.rank;
  v.is_principal = v.dims.dim_Z == d.rank;
  v.is_almost_principal = v.dims.dim_Z == d.rank + 1;
  v.zplus_eq_rank = v.dims.dim_Zplus == d.rank;
  v.zplus_eq_z = v.dims.dim_Zplus == v.dims.dim_Z;

  std::string tok_zplus = "none", tok_wonderful = "none",
              tok_principal = "none", tok_almost = "none";

  switch (d.type) {
    case LieType::A: {
      tok_zplus = "single-diagram";
      tok_wonderful = "integral-type";
      v.clause_zplus_eq_rank = true;
      v.clause_wonderful = true;
      if (satisfies_Y(*d.g1)) {
        v.clause_principal = true;
        tok_principal = "Y";
      }
      v.clause_almost_principal = false;  // no such data in this type
      break;
    }
    case LieType::B: {
      v.clause_zplus_eq_rank = !d.g2;
      if (v.clause_zplus_eq_rank) tok_zplus = "no-second-component";
      v.clause_wonderful = true;  // cross shifts are half-integral
      tok_wonderful = "half-integral-cross";
      if (!d.g2 && satisfies_R(*d.g1)) {
        v.clause_principal = true;
        tok_principal = "R";
      }
      if (!d.g2) {
        auto nr = near_rectangular(*d.g1);
        if (nr.type_a || nr.type_b) {
          v.clause_almost_principal = true;
          tok_almost = "near-rect-ab";
        }
      } else if (is_origin_singleton(*d.g1) && is_rectangular(*d.g2)) {
        v.clause_almost_principal = true;
        tok_almost = "origin-times-rect";
      }
      break;
    }
    case LieType::C: {
      // Coset arithmetic: every cross shift between the two components is
      // half-integral in both coordinates, so only self entries are
      // integer-graded.
      if (d.g1 && d.g2) {
        for (const Shift& s : cross_shift_candidates(*d.g1, *d.g2)) {
          assert(s.dp % 2 != 0 && s.dq % 2 != 0);
        }
      }
      v.clause_zplus_eq_rank = !d.g1 || !d.g2;
      if (v.clause_zplus_eq_rank) tok_zplus = "empty-component";
      v.clause_wonderful = true;
      tok_wonderful = "half-integral-cross";
      const SkewDiagram* lone =
          (!d.g1 && d.g2) ? &*d.g2 : ((d.g1 && !d.g2) ? &*d.g1 : nullptr);
      if (lone && satisfies_R(*lone)) {
        v.clause_principal = true;
        tok_principal = "R";
      }
      // A lone near-rectangular component is almost principal only for the
      // coset-compatible types. Counting the self entries at mixed-sign
      // shifts of a near-rectangular diagram with southwest corners
      // (i1,j1), (i2,j2): the two type-a candidates exist iff 2(i1+j1) is
      // odd resp. j1 is an integer, the type-b candidates are their
      // transposes, and the type-c candidates exist iff i1 resp. j1 is an
      // integer. On the y-semi-integral coset (Γ¹) that leaves exactly one
      // mixed entry for types a and c but two for type b; on the
      // x-semi-integral coset (Γ²) the roles of a and b swap. The excluded
      // type would put the full dimension at rank + 2.
      if (lone) {
        const NearRectReport nr = near_rectangular(*lone);
        const bool y_side = lone == &*d.g1;
        const bool good_type = nr.type_c || (y_side ? nr.type_a : nr.type_b);
        if (good_type) {
          v.clause_almost_principal = true;
          tok_almost = y_side ? "near-rect-ac" : "near-rect-bc";
        }
      } else if (d.g1 && d.g2 && is_vertical_strip_on_y_axis(*d.g1) &&
                 is_horizontal_strip_on_x_axis(*d.g2)) {
        v.clause_almost_principal = true;
        tok_almost = "axis-strips";
      }
      break;
    }
    case LieType::D: {
      bool pair_min_a = d.g2 && origin_pair_minimal_a(*d.g2, *d.g3);
      bool pair_min_b = d.g2 && origin_pair_minimal_b(*d.g2, *d.g3);
      if (!d.g2) {
        v.clause_zplus_eq_rank = true;
        tok_zplus = "no-pair";
        v.clause_wonderful = true;
        tok_wonderful = "no-pair";
      } else {
        if (!d.g1 && (pair_min_a || pair_min_b)) {
          v.clause_zplus_eq_rank = true;
          tok_zplus = pair_min_a ? "origin-corner" : "rect-pair";
        }
        if (pair_min_a || pair_min_b) {
          v.clause_wonderful = true;
          tok_wonderful = pair_min_a ? "origin-corner" : "rect-pair";
        }
      }
      if (!d.g2 && satisfies_R(*d.g1)) {
        v.clause_principal = true;
        tok_principal = "R";
      } else if (!d.g1 && d.g2 && origin_pair_minimal_b(*d.g2, *d.g3)) {
        v.clause_principal = true;
        tok_principal = "rect-pair";
      }
      v.clause_almost_principal = false;  // no such data in this type
      break;
    }
  }

  v.equality_case = "zplus=" + tok_zplus + ";wonderful=" + tok_wonderful +
                    ";principal=" + tok_principal + ";almost=" + tok_almost;
  return v;
}

std::optional<SearchPredicate> predicate_from_string(const std::string& s) {
  if (s == "principal") return SearchPredicate::Principal;
  if (s == "almost-principal" || s == "almost_principal")
    return SearchPredicate::AlmostPrincipal;
  if (s == "wonderful") return SearchPredicate::Wonderful;
  if (s == "not-wonderful" || s == "not_wonderful")
    return SearchPredicate::NotWonderful;
  if (s == "zplus-equals-z" || s == "Zplus_equals_Z" || s == "zplus_equals_z")
    return SearchPredicate::ZplusEqualsZ;
  return std::nullopt;
}

std::string to_string(SearchPredicate p) {
  switch (p) {
    case SearchPredicate::Principal: return "principal";
    case SearchPredicate::AlmostPrincipal: return "almost-principal";
    case SearchPredicate::Wonderful: return "wonderful";
    case SearchPredicate::NotWonderful: return "not-wonderful";
    case SearchPredicate::ZplusEqualsZ: return "zplus-equals-z";
  }
  return "?";
}

bool verdict_matches(const ClassificationVerdict& v, SearchPredicate pred) {
  switch (pred) {
    case SearchPredicate::Principal: return v.is_principal;
    case SearchPredicate::AlmostPrincipal: return v.is_almost_principal;
    case SearchPredicate::Wonderful: return v.is_wonderful;
    case SearchPredicate::NotWonderful: return !v.is_wonderful;
    case SearchPredicate::ZplusEqualsZ: return v.zplus_eq_z;
  }
  return false;
}

std::vector<std::pair<PairDatum, ClassificationVerdict>> search(
    LieType type, int rank_bound, SearchPredicate pred) {
  if (rank_bound > rank_ceiling()) {
    throw err_rank_too_large("search bound " + std::to_string(rank_bound) +
                             " exceeds ceiling " +
                             std::to_string(rank_ceiling()));
  }
  std::vector<std::pair<PairDatum, ClassificationVerdict>> out;
  for (int rk = 1; rk <= rank_bound; ++rk) {
    for (const PairDatum& d : enumerate_data(type, rk)) {
      ClassificationVerdict v = verdict(d);
      if (verdict_matches(v, pred)) out.emplace_back(d, v);
    }
  }
  return out;
}

std::vector<CensusRow> census(LieType type, int rank_bound) {
  if (rank_bound > rank_ceiling()) {
    throw err_rank_too_large("census bound " + std::to_string(rank_bound) +
                             " exceeds ceiling " +
                             std::to_string(rank_ceiling()));
  }
  std::vector<CensusRow> out;
  for (int rk = 1; rk <= rank_bound; ++rk) {
    CensusRow row;
    row.rank = rk;
    for (const PairDatum& d : enumerate_data(type, rk)) {
      ClassificationVerdict v = verdict(d);
      ++row.n_data;
      if (v.is_wonderful) ++row.n_wonderful;
      if (v.is_principal) ++row.n_principal;
      if (v.is_almost_principal) ++row.n_almost_principal;
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace nilpair
