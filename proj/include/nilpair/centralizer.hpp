#pragma once
// The graded centralizer Z(e) = Z(e1) ∩ Z(e2) two ways:
//
//  * combinatorially — one explicit basis element per index entry, built from
//    the per-type sign table and normalized to +1 at the canonically smallest
//    cell of C;
//  * by oracle — exact kernel computation of {x : [x,e1]=[x,e2]=0, x ∈ g}
//    in the full matrix space, split by (h1,h2)-bidegree.
//
// The two are compared per shift; agreement is the project's central test.

#include <map>
#include <tuple>
#include <vector>

#include "nilpair/realization.hpp"
#include "nilpair/subdiagram.hpp"

namespace nilpair {

struct CentralizerElement {
  Shift shift;       // doubled (2p, 2q)
  IndexEntry entry;  // the combinatorial label
  QMat x;            // the explicit matrix, entries in {-1,0,+1}
  // Per-cell coefficients λ: (component label of the source cell, source
  // cell, coefficient). Source cells run over C (and C' for pairs).
  std::vector<std::tuple<int, Cell, Rat>> coeffs;
};

// Build the explicit element for one index entry at shift s, per the case
// table: type A coefficient 1 on C; types B/D with p+q even +1 on C and -1 on
// C'; with p+q odd (-1)^{i+j} on both (including the self-paired case);
// type C +1 on C and (-1)^{p+q+1} on C', +1 when self-paired. Afterwards the
// element is rescaled so the coefficient at the canonically smallest cell of
// C is +1.
CentralizerElement element_matrix(const Realization& r, const IndexEntry& e,
                                  const Shift& s);

struct Dims {
  long dim_Z = 0;          // all shifts
  long dim_Zplus = 0;      // shifts with p,q >= 0 (half-integers included)
  long dim_Zplus_int = 0;  // integer shifts with p,q >= 0

  bool operator==(const Dims&) const = default;
};

struct GradedCentralizerBasis {
  std::map<Shift, std::vector<CentralizerElement>> by_shift;
  Dims dims;
};

// Every basis element of Z(e), grouped by shift; totals tallied into dims.
GradedCentralizerBasis combinatorial_basis(const Realization& r);
GradedCentralizerBasis combinatorial_basis(const PairDatum& d);

// Pure index counting (no matrices): per-shift entry counts summed into the
// three totals. Agrees with combinatorial_basis(...).dims by construction;
// agreement with the oracle is what the test suite establishes.
Dims dims(const PairDatum& d);

// Per-bidegree dimension of the exact solution space of
//   [x,e1] = 0, [x,e2] = 0, x in g.
// Keys cover every (h1,h2)-bidegree of the matrix space, including those of
// dimension 0 (so the (0,0) entry is always present and testably zero). The
// constraints preserve bidegree, so the blocks solve the full system exactly.
std::map<Shift, int> oracle_centralizer(const Realization& r);

// Same system solved in one un-blocked kernel computation over the whole
// matrix space, then split by degree — a cross-check of the blocked oracle on
// small realizations.
std::map<Shift, int> oracle_centralizer_fullspace(const Realization& r);

// Dimension of the oracle solution space restricted to matrices supported on
// the nonzero positions of elem.x. The scalar-uniqueness property says 1.
int oracle_dim_on_support(const Realization& r, const CentralizerElement& elem);

// Do the given matrices pairwise commute?
bool is_abelian(const std::vector<QMat>& xs);

// The rank-sized abelian subalgebra inside the integer-graded positive
// quadrant: type A — all nontrivial nonnegative-shift entries; B/C — the
// positive-quadrant self entries of both components; D — the positive-quadrant
// self entries of all components plus one distinguished cross pair of
// SW-corner singletons of (Γ²,Γ³) (present only when those are nonempty).
std::vector<CentralizerElement> build_abelian_subalgebra(const PairDatum& d);

// Are all positive-quadrant basis elements pairwise commuting?
bool check_Zplus_abelian(const PairDatum& d);

}  // namespace nilpair
