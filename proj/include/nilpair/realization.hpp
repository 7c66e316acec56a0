#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilpair/datum.hpp"
#include "nilpair/qmatrix.hpp"

namespace nilpair {

// One basis vector v^k_{cell}: component label k in {1,2,3} plus a cell of
// that component.  For type D the origin cell occurs twice, once with k=2 and
// once with k=3.
struct BasisIndex {
  int k = 1;
  Cell cell;

  bool operator==(const BasisIndex&) const = default;
};

enum class FormKind { None, Symmetric, Alternating };

std::string to_string(FormKind f);

// Explicit matrix model of a classification datum: the commuting nilpotents
// e1, e2, the diagonal semisimple pair h1, h2, and (outside type A) the Gram
// matrix of the invariant bilinear form in the chosen basis.  All entries are
// exact rationals; e1/e2 entries are in {-1,0,+1}.
struct Realization {
  PairDatum datum;
  std::vector<BasisIndex> basis;  // component ascending, then canonical cells
  QMat e1, e2, h1, h2;
  FormKind form = FormKind::None;
  QMat gram;                 // empty for type A
  std::vector<Rat> w1, w2;   // exact h1/h2 eigenvalues per basis vector

  int dim() const { return static_cast<int>(basis.size()); }

  // Position of v^k_{cell} in the basis order, or -1 when absent.
  int index_of(int k, const Cell& cell) const;
};

// The components actually present in a datum, as (label, diagram) pairs with
// ascending labels.
std::vector<std::pair<int, const SkewDiagram*>> present_components(
    const PairDatum& d);

// Build the matrices per the type-specific coefficient rules:
//   A:   e1 v_{i,j} =            v_{i+1,j}, e2 v_{i,j} =            v_{i,j+1}
//   B,D: e1 v_{i,j} = (-1)^{i+j} v_{i+1,j}, e2 v_{i,j} = (-1)^{i+j+1} v_{i,j+1}
//   C:   coefficient 1 for both
// with image 0 whenever the target cell is outside the component, and
// h1 v_{i,j} = i v, h2 v_{i,j} = j v (type A: coordinates measured from the
// exact barycentre, so h1, h2 are traceless).
Realization build_realization(const PairDatum& d);

// One named identity check with a human-readable witness on failure.
struct CheckResult {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_ok() const;
  std::string summary() const;
};

// Re-verifies every defining identity of a realization by matrix arithmetic:
// the five bracket identities, sharp nilpotency orders (width/height bounds),
// Gram symmetry/antisymmetry and nondegeneracy, membership of e1, e2, h1, h2
// in the algebra, entry range of e1/e2, and the coset parity facts that make
// the sign rules well defined.
VerifyReport verify_realization(const Realization& r);

// Membership in the realized Lie algebra: trace 0 for type A, form-skewness
// x^T G + G x = 0 otherwise.  Throws DimensionMismatch when x is not square
// of the realization's dimension.
bool in_lie_algebra(const QMat& x, const Realization& r);

// The (h1,h2) bidegree of a homogeneous matrix, as a doubled-integer Shift:
// returns (2p,2q) when [h1,x] = p x and [h2,x] = q x exactly, nullopt when x
// is zero or not homogeneous.
std::optional<Shift> graded_degree(const QMat& x, const Realization& r);

}  // namespace nilpair
