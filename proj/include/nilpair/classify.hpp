#pragma once
// Wonderful / principal / almost-principal verdicts, computed two independent
// ways: from the graded dimension totals, and from pure diagram predicates
// (corner counts, rectangularity, near-rectangularity, origin-sharing corner
// counts). Agreement of the two is a swept test.

#include <string>
#include <vector>

#include "nilpair/centralizer.hpp"
#include "nilpair/datum.hpp"

namespace nilpair {

// For an origin-sharing pair of integral symmetric diagrams (the type-D
// second/third components): does the positive-quadrant cross index have
// cardinality exactly 1?  True exactly when the first diagram is the origin
// singleton and the second has exactly one SW corner with both coordinates
// <= 0 (clause a), or both diagrams are rectangular (clause b).
bool origin_pair_minimal_a(const SkewDiagram& g2, const SkewDiagram& g3);
bool origin_pair_minimal_b(const SkewDiagram& g2, const SkewDiagram& g3);

struct ClassificationVerdict {
  int rank = 0;
  Dims dims;

  // Dimension-based verdicts.
  bool is_wonderful = false;         // dim_Zplus_int == rank
  bool is_principal = false;         // dim_Z == rank
  bool is_almost_principal = false;  // dim_Z == rank + 1
  bool zplus_eq_rank = false;        // dim_Zplus == rank
  bool zplus_eq_z = false;           // dim_Zplus == dim_Z

  // Independent diagram-predicate predictions of the same verdicts.
  bool clause_wonderful = false;
  bool clause_principal = false;
  bool clause_almost_principal = false;
  bool clause_zplus_eq_rank = false;

  // Which clause fired for each prediction, as "key=token" pairs.
  std::string equality_case;

  bool clauses_agree() const {
    return is_wonderful == clause_wonderful &&
           is_principal == clause_principal &&
           is_almost_principal == clause_almost_principal &&
           zplus_eq_rank == clause_zplus_eq_rank;
  }
};

// Dimension totals via the combinatorial index counts, plus the predicate
// clauses. Throws InvalidDatum (via validation) on a malformed datum.
ClassificationVerdict verdict(const PairDatum& d);

enum class SearchPredicate {
  Principal,
  AlmostPrincipal,
  Wonderful,
  NotWonderful,
  ZplusEqualsZ,
};

std::optional<SearchPredicate> predicate_from_string(const std::string& s);
std::string to_string(SearchPredicate p);

bool verdict_matches(const ClassificationVerdict& v, SearchPredicate pred);

// All data of the type up to the rank bound whose verdict satisfies the
// predicate, with their verdicts. Throws RankTooLarge above the ceiling.
std::vector<std::pair<PairDatum, ClassificationVerdict>> search(
    LieType type, int rank_bound, SearchPredicate pred);

struct CensusRow {
  int rank = 0;
  long n_data = 0;
  long n_wonderful = 0;
  long n_principal = 0;
  long n_almost_principal = 0;
};

// Per-rank counts of data and verdicts, ranks 1..rank_bound.
std::vector<CensusRow> census(LieType type, int rank_bound);

}  // namespace nilpair
