#pragma once
// Skew diagrams and their combinatorial predicates.
//
// A skew diagram is a finite, connected (edge-adjacent) set of cells on one
// coset translate of Z^2 that is closed under the "skew" rule: whenever the
// cells c and c+(1,1) are present, so are c+(1,0) and c+(0,1). Equivalently:
// the rows are intervals whose left and right endpoints both weakly decrease
// as the row index increases, with consecutive rows overlapping in at least
// one column.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "nilpair/cell.hpp"

namespace nilpair {

// A set of cells held in canonical order with no duplicates. No further
// invariant: subsets, overlap regions and other scratch sets use it too.
using CellSet = std::vector<Cell>;

CellSet normalized(CellSet cells);               // sort canonically, dedupe
bool contains_cell(const CellSet& s, const Cell& c);  // binary search
bool is_subset(const CellSet& small, const CellSet& big);
CellSet intersect(const CellSet& x, const CellSet& y);
CellSet translated(const CellSet& s, const Shift& by);
CellSet sigma(const CellSet& s);

bool all_one_coset(const CellSet& cells);
bool is_connected(const CellSet& cells);  // 4-neighbour connectivity
// Skew closure: no missing c+(1,0) / c+(0,1) when c and c+(1,1) are present.
// On failure *witness (if non-null) receives an offending cell pair's base.
bool is_skew_closed(const CellSet& cells, Cell* witness = nullptr);
// All four conditions of a (connected) skew diagram: nonempty, one coset,
// skew-closed, connected.
bool is_skew_shape(const CellSet& cells);

// A validated skew diagram. Construction goes through make_skew_diagram which
// throws DomainError with code EmptyDiagram / NotOneCoset /
// SkewClosureViolated / NotConnected (checked in that order).
class SkewDiagram {
 public:
  const CellSet& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(const Cell& c) const { return contains_cell(cells_, c); }
  SymmetryClass symmetry_class() const { return coset_class_of(cells_.front()); }

  friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

 private:
  explicit SkewDiagram(CellSet cells) : cells_(std::move(cells)) {}
  friend SkewDiagram make_skew_diagram(const CellSet&);
  friend SkewDiagram make_skew_diagram_unchecked(CellSet);
  CellSet cells_;
};

SkewDiagram make_skew_diagram(const CellSet& cells);
// For internal use where validity is already established (translations,
// sigma images, enumeration output). Asserts in debug builds.
SkewDiagram make_skew_diagram_unchecked(CellSet cells);

SkewDiagram sigma(const SkewDiagram& g);
SkewDiagram translated(const SkewDiagram& g, const Shift& by);

bool is_centrally_symmetric(const SkewDiagram& g);

// ---------------------------------------------------------------------------
// Subdiagram relations.
//
// C is a *skew subdiagram* of G when C is itself a skew diagram, C ⊆ G, and C
// is closed downward/leftward inside G: a cell of G directly left of or below
// a cell of C lies in C. C is a *sigma-skew subdiagram* when sigma(C) is a
// skew subdiagram of sigma(G); equivalently C is connected and closed
// upward/rightward inside G. (The skew-closure of C is implied by either
// directional closure since G is skew-closed.) Both throw NotASubset if
// C ⊄ G; empty C returns false.
bool is_skew_subdiagram(const CellSet& c, const SkewDiagram& g);
bool is_sigma_skew_subdiagram(const CellSet& c, const SkewDiagram& g);

// Connected components (4-neighbour) of an arbitrary cell set, each in
// canonical order, the list ordered by each component's canonical first cell.
std::vector<CellSet> connected_components(const CellSet& cells);

// ---------------------------------------------------------------------------
// Geometry reports.

struct CornerReport {
  // A SW corner is a cell with no diagram cell directly left or below.
  // A NE corner is a cell with no diagram cell directly right or above.
  // A SW angle is a cell whose lower-left diagonal neighbour is missing while
  // both the cell directly left and the cell directly below are present; a NE
  // angle mirrors this with the upper-right diagonal and the right/above cells.
  std::vector<Cell> sw_corners;
  std::vector<Cell> ne_corners;
  std::vector<Cell> sw_angles;
  std::vector<Cell> ne_angles;
};

CornerReport corners(const SkewDiagram& g);

// Exact barycentre (mean of cell centres), as a pair of rationals.
std::pair<mpq_class, mpq_class> barycentre(const SkewDiagram& g);

// Condition (Y): exactly one SW corner or exactly one NE corner.
bool satisfies_Y(const SkewDiagram& g);

// A diagram is rectangular when it fills its bounding box.
bool is_rectangular(const SkewDiagram& g);

// Near-rectangular (defined for centrally symmetric diagrams only; throws
// NotCentrallySymmetric otherwise): exactly two SW corners (i,j), (k,l) with
// i<k and one of
//   a) removing (i,j) and (-i,-j) leaves a rectangle,
//   b) removing (k,l) and (-k,-l) leaves a rectangle,
//   c) (i,j) = (k-1, l+1)  (corners on adjacent diagonals).
// Cases are not mutually exclusive; all that apply are reported.
struct NearRectReport {
  bool type_a = false, type_b = false, type_c = false;
  bool any() const { return type_a || type_b || type_c; }
};
NearRectReport near_rectangular(const SkewDiagram& g);

// Condition (R) for centrally symmetric diagrams: rectangular, or
// non-integral and near-rectangular.
bool satisfies_R(const SkewDiagram& g);

// ---------------------------------------------------------------------------
// Shape enumeration (exhaustive, up to translation resp. exactly centred).

// All connected skew diagrams with n cells, translated so the bounding box
// minimum is the origin (integral coset). Counts for n = 1.. run
// 1, 2, 4, 9, 20, 46, 105, 242, ... (strictly fewer than general polyominoes,
// since the skew-closure rule forbids e.g. the diagonal L-bends at n = 3).
std::vector<SkewDiagram> all_skew_shapes(int ncells);

// All centrally symmetric connected skew diagrams with n cells in the given
// coset class, centred at the origin. Empty when the parity of n does not
// match the class (Integral needs n odd; the other classes need n even).
std::vector<SkewDiagram> all_symmetric_shapes(SymmetryClass cls, int ncells);

}  // namespace nilpair
