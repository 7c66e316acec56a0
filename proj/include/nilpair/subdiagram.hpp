#pragma once
// Enumeration of the skew-subdiagram index sets that grade the centralizer.
//
// For a skew diagram Γ and a shift s = (p,q):
//   E_{p,q}(Γ)      = skew subdiagrams C ⊆ Γ with C+(p,q) a σ-skew
//                     subdiagram of Γ              (the "single" sets);
//   E_{p,q}(Γ,Γ')   = pairs (C,C') of skew subdiagrams of the two distinct
//                     diagrams with C+(p,q) = σ(C')  (the "cross" sets);
//   E_{p,q}(Γ,Γ)    = unordered {C,C'} of skew subdiagrams of Γ with
//                     C+(p,q) = σ(C'), and C ≠ C' when p+q is even
//                                                   (the "self" sets).
//
// Every member is a full connected component of the relevant overlap region
// (Γ ∩ (Γ−s), resp. Γ ∩ (σ(Γ')−s)): the subdiagram closure conditions absorb
// all four neighbour directions inside the overlap, so a connected qualifying
// set can only be a whole component. The enumerators therefore list the
// components and filter by the two closure conditions; a brute-force subset
// search verifies this exhaustively in the tests.

#include <vector>

#include "nilpair/datum.hpp"
#include "nilpair/diagram.hpp"

namespace nilpair {

// E_{p,q}(Γ). Any shift on the diagram's difference lattice is allowed
// (integral shifts, since C and C+s live on the same coset).
std::vector<CellSet> enum_single(const SkewDiagram& g, const Shift& s);

// Connected components of (Γ−s) ∩ Γ for s in the nonnegative quadrant, as
// plain components with no closure filtering. For p,q ≥ 0 this equals
// enum_single as a set (a counting identity the tests assert); the separate
// entry point keeps the two computations independent. Throws NegativeShift.
std::vector<CellSet> enum_components_overlap(const SkewDiagram& g, const Shift& s);

struct CrossEntry {
  CellSet C;       // ⊆ first diagram
  CellSet Cprime;  // ⊆ second diagram, C + s = σ(C')
};
// E_{p,q}(Γ,Γ') for two (distinct) centrally symmetric diagrams.
std::vector<CrossEntry> enum_cross(const SkewDiagram& g, const SkewDiagram& gp, const Shift& s);

struct SelfEntry {
  CellSet C;
  CellSet Cprime;        // σ(C) − s; equals C when self_paired
  bool self_paired = false;
};
// E_{p,q}(Γ,Γ) for a centrally symmetric diagram. The shift must be integral
// (throws NonIntegralShift): both members live on Γ's own coset.
std::vector<SelfEntry> enum_self(const SkewDiagram& g, const Shift& s);

// Exact shift supports: all s for which the corresponding set can possibly be
// nonempty (difference sets of the two cell sets involved).
std::vector<Shift> single_shift_candidates(const SkewDiagram& g);
std::vector<Shift> cross_shift_candidates(const SkewDiagram& g, const SkewDiagram& gp);

// Cardinality totals. "plus" sums over the nonnegative quadrant, "full" over
// all shifts; both exclude the trivial entry at s = (0,0) (the single set
// there is {Γ} and the symmetric sets are empty anyway).
long card_E_plus_single(const SkewDiagram& g);
long card_E_full_single(const SkewDiagram& g);
long card_E_plus_self(const SkewDiagram& g);
long card_E_full_self(const SkewDiagram& g);
long card_E_plus_cross(const SkewDiagram& g, const SkewDiagram& gp);
long card_E_full_cross(const SkewDiagram& g, const SkewDiagram& gp);

// ---------------------------------------------------------------------------
// Assembled per-datum index (the basis labels of the graded centralizer).

struct IndexEntry {
  enum class Kind { Single, Cross, Self };
  Kind kind = Kind::Single;
  int k = 1, l = 1;  // component labels (k < l for Cross, k == l otherwise)
  CellSet C, Cprime;  // Cprime empty for Single; C == Cprime when self-paired
  bool self_paired = false;
};

// All index entries of the datum at shift s: the single set of Γ¹ for type A;
// for B/C/D the disjoint union of self sets of each component and cross sets
// of each pair k < l whose coset difference matches s. The trivial shift
// (0,0) yields no entries. Entries are ordered by (k, l, canonical first
// cell of C).
std::vector<IndexEntry> assemble_index(const PairDatum& d, const Shift& s);

// All shifts with at least one entry, in lexicographic (dp,dq) order.
std::vector<Shift> index_shift_support(const PairDatum& d);

}  // namespace nilpair
