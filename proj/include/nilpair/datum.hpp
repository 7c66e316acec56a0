#pragma once
// Classification data: the combinatorial objects indexing distinguished
// nilpotent pairs in the classical simple Lie algebras.
//
//   type A (sl_{rk+1}):  one skew diagram, |Γ| = rk+1, barycentre (0,0).
//   type B (so_{2rk+1}): (Γ¹,Γ²) centrally symmetric, |Γ¹|+|Γ²| = 2rk+1,
//                        Γ¹ integral (nonempty), Γ² non-integral or empty.
//   type C (sp_{2rk}):   (Γ¹,Γ²), |Γ¹|+|Γ²| = 2rk, Γ¹ ⊂ Z²+(0,1/2),
//                        Γ² ⊂ Z²+(1/2,0), not both empty.
//   type D (so_{2rk}):   (Γ¹,Γ²,Γ³,ε), |Γ¹|+|Γ²|+|Γ³| = 2rk, Γ¹ non-integral;
//                        either Γ²=Γ³=∅ with ε ∈ {1,2}, or Γ²,Γ³ integral with
//                        Γ²∩Γ³ = {(0,0)} ≠ Γ³ and ε = 1.
//
// Stored positions are canonical: symmetric components are centred at the
// origin; a type-A diagram sits in the unique translate whose doubled
// barycentre lies in [0,1)² (the exact barycentre-0 position whenever that is
// on the half-integer lattice).

#include <optional>
#include <string>
#include <vector>

#include "nilpair/diagram.hpp"

namespace nilpair {

enum class LieType { A, B, C, D };

const char* to_string(LieType t);
std::optional<LieType> lie_type_from_string(const std::string& s);

struct PairDatum {
  LieType type = LieType::A;
  int rank = 0;
  std::optional<SkewDiagram> g1, g2, g3;
  std::optional<int> epsilon;  // type D only

  friend bool operator==(const PairDatum&, const PairDatum&) = default;
};

// Deterministic order used to sort and deduplicate enumerations.
bool datum_less(const PairDatum& x, const PairDatum& y);

/// Full validation. Throws DomainError with one of: InvalidDatum, WrongCoset,
// CardinalityMismatch, NotCentrallySymmetric, BarycentreNonzero,
// OriginConditionViolated, EpsilonInvalid. When declared_rank is given it
// must match the rank derived from the cardinalities.
PairDatum validate_datum(LieType type, std::optional<SkewDiagram> g1,
                         std::optional<SkewDiagram> g2, std::optional<SkewDiagram> g3,
                         std::optional<int> epsilon = std::nullopt,
                         std::optional<int> declared_rank = std::nullopt);

/// Hard rank ceiling: NILPAIR_RANK_CEILING in the environment, default 8.
int rank_ceiling();

// The unique translate with doubled barycentre in [0,1)² (type A canonical
// position; the exact barycentre-0 translate whenever representable).
SkewDiagram canonical_a_translate(const SkewDiagram& g);

// All classification data of the given type and exact rank, sorted by
// datum_less, duplicate-free. Throws RankTooLarge above the ceiling and
// InvalidDatum for rank < 1.
std::vector<PairDatum> enumerate_data(LieType type, int rank);

// dim V of the defining representation the datum realizes.
int ambient_dimension(const PairDatum& d);

std::string datum_to_string(const PairDatum& d);

}  // namespace nilpair
