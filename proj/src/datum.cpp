#include "nilpair/datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "nilpair/error.hpp"

namespace nilpair {

const char* to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
  }
  return "?";
}

std::optional<LieType> lie_type_from_string(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  return std::nullopt;
}

static int cells_compare(const std::optional<SkewDiagram>& x, const std::optional<SkewDiagram>& y) {
  const CellSet empty;
  const CellSet& cx = x ? x->cells() : empty;
  const CellSet& cy = y ? y->cells() : empty;
  if (std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end(), CanonicalLess{}))
    return -1;
  if (std::lexicographical_compare(cy.begin(), cy.end(), cx.begin(), cx.end(), CanonicalLess{}))
    return 1;
  return 0;
}

bool datum_less(const PairDatum& x, const PairDatum& y) {
  if (x.type != y.type) return x.type < y.type;
  if (x.rank != y.rank) return x.rank < y.rank;
  for (auto sel : {&PairDatum::g1, &PairDatum::g2, &PairDatum::g3}) {
    const int c = cells_compare(x.*sel, y.*sel);
    if (c != 0) return c < 0;
  }
  return x.epsilon.value_or(0) < y.epsilon.value_or(0);
}

static long cardinality(const std::optional<SkewDiagram>& g) { return g ? g->size() : 0; }

// The canonical type-A translate: doubled barycentre in [0,1)x[0,1).
static bool in_canonical_a_position(const SkewDiagram& g) {
  long sa = 0, sb = 0;
  for (const Cell& c : g.cells()) {
    sa += c.a;
    sb += c.b;
  }
  const long n = g.size();
  return 0 <= sa && sa < n && 0 <= sb && sb < n;
}

SkewDiagram canonical_a_translate(const SkewDiagram& g) {
  long sa = 0, sb = 0;
  for (const Cell& c : g.cells()) {
    sa += c.a;
    sb += c.b;
  }
  const long n = g.size();
  auto floordiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  const Shift t{static_cast<int>(-floordiv(sa, n)), static_cast<int>(-floordiv(sb, n))};
  return translated(g, t);
}

static void require_class(const SkewDiagram& g, SymmetryClass cls, const char* which) {
  if (g.symmetry_class() != cls)
    throw err_wrong_coset(std::string(which) + " must lie on the " + to_string(cls) +
                          " coset, found " + to_string(g.symmetry_class()));
}

static void require_symmetric(const std::optional<SkewDiagram>& g, const char* which) {
  if (g && !is_centrally_symmetric(*g))
    throw err_not_centrally_symmetric(std::string(which) + " is not centrally symmetric");
}

PairDatum validate_datum(LieType type, std::optional<SkewDiagram> g1,
                         std::optional<SkewDiagram> g2, std::optional<SkewDiagram> g3,
                         std::optional<int> epsilon, std::optional<int> declared_rank) {
  // Structural checks per type.
  if (type != LieType::D && (g3 || epsilon))
    throw err_invalid_datum("Γ³/ε are only meaningful for type D");
  if (type == LieType::A && (g2 || !g1))
    throw err_invalid_datum("type A takes exactly one diagram");
  if (type == LieType::B && !g1)
    throw err_invalid_datum("type B requires a nonempty Γ¹");
  if (type == LieType::C && !g1 && !g2)
    throw err_invalid_datum("type C requires at least one nonempty component");
  if (type == LieType::D && (static_cast<bool>(g2) != static_cast<bool>(g3)))
    throw err_invalid_datum("type D requires Γ² and Γ³ both present or both absent");
  if (type == LieType::D && !g1 && !g2)
    throw err_invalid_datum("type D requires a nonempty component");

  // Coset classes.
  switch (type) {
    case LieType::A:
      break;  // any single coset (the diagram type already enforces one coset)
    case LieType::B:
      require_class(*g1, SymmetryClass::Integral, "Γ¹");
      if (g2) require_class(*g2, SymmetryClass::NonIntegral, "Γ²");
      break;
    case LieType::C:
      if (g1) require_class(*g1, SymmetryClass::SemiIntegralY, "Γ¹");
      if (g2) require_class(*g2, SymmetryClass::SemiIntegralX, "Γ²");
      break;
    case LieType::D:
      if (g1) require_class(*g1, SymmetryClass::NonIntegral, "Γ¹");
      if (g2) require_class(*g2, SymmetryClass::Integral, "Γ²");
      if (g3) require_class(*g3, SymmetryClass::Integral, "Γ³");
      break;
  }

  // Rank from cardinalities.
  const long total = cardinality(g1) + cardinality(g2) + cardinality(g3);
  long rank = 0;
  switch (type) {
    case LieType::A: rank = total - 1; break;
    case LieType::B:
      if (total % 2 == 0) throw err_cardinality_mismatch("type B needs an odd cardinality sum");
      rank = (total - 1) / 2;
      break;
    case LieType::C:
    case LieType::D:
      if (total % 2 == 1) throw err_cardinality_mismatch("the cardinality sum must be even");
      rank = total / 2;
      break;
  }
  if (rank < 1)
    throw err_cardinality_mismatch("cardinalities " + std::to_string(total) +
                                   " give rank " + std::to_string(rank) + " < 1");
  if (declared_rank && *declared_rank != rank)
    throw err_cardinality_mismatch("declared rank " + std::to_string(*declared_rank) +
                                   " but cardinalities give " + std::to_string(rank));

  // Central symmetry of every component (types B, C, D).
  if (type != LieType::A) {
    require_symmetric(g1, "Γ¹");
    require_symmetric(g2, "Γ²");
    require_symmetric(g3, "Γ³");
  }

  // Type A canonical position.
  if (type == LieType::A && !in_canonical_a_position(*g1))
    throw err_barycentre_nonzero(
        "type A diagram is not in its barycentre-normalized position (doubled barycentre must "
        "lie in [0,1)²)");

  // Type D origin condition and ε.
  if (type == LieType::D) {
    if (g2) {
      const Cell origin{0, 0};
      const CellSet meet = intersect(g2->cells(), g3->cells());
      if (meet.size() != 1 || !(meet.front() == origin))
        throw err_origin_condition("Γ² and Γ³ must intersect exactly in the origin");
      if (g3->size() == 1)
        throw err_origin_condition("Γ³ must differ from {(0,0)}");
      if (!epsilon || *epsilon != 1)
        throw err_epsilon_invalid("ε must be 1 when Γ², Γ³ are nonempty");
    } else {
      if (!epsilon || (*epsilon != 1 && *epsilon != 2))
        throw err_epsilon_invalid("ε must be 1 or 2 when Γ² = Γ³ = ∅");
    }
  }

  PairDatum d;
  d.type = type;
  d.rank = static_cast<int>(rank);
  d.g1 = std::move(g1);
  d.g2 = std::move(g2);
  d.g3 = std::move(g3);
  d.epsilon = epsilon;
  return d;
}

int rank_ceiling() {
  if (const char* env = std::getenv("NILPAIR_RANK_CEILING")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

int ambient_dimension(const PairDatum& d) {
  switch (d.type) {
    case LieType::A: return d.rank + 1;
    case LieType::B: return 2 * d.rank + 1;
    case LieType::C:
    case LieType::D: return 2 * d.rank;
  }
  return 0;
}

static void gate_rank(int rank) {
  if (rank < 1) throw err_invalid_datum("rank must be >= 1");
  if (rank > rank_ceiling())
    throw err_rank_too_large("rank " + std::to_string(rank) + " exceeds the ceiling " +
                             std::to_string(rank_ceiling()));
}

std::vector<PairDatum> enumerate_data(LieType type, int rank) {
  gate_rank(rank);
  std::vector<PairDatum> out;
  auto opt = [](const SkewDiagram& g) { return std::optional<SkewDiagram>(g); };

  switch (type) {
    case LieType::A: {
      for (const SkewDiagram& g : all_skew_shapes(rank + 1))
        out.push_back(validate_datum(LieType::A, canonical_a_translate(g), {}, {}));
      break;
    }
    case LieType::B: {
      for (int n1 = 1; n1 <= 2 * rank + 1; n1 += 2) {
        const int n2 = 2 * rank + 1 - n1;
        for (const SkewDiagram& a : all_symmetric_shapes(SymmetryClass::Integral, n1)) {
          if (n2 == 0) {
            out.push_back(validate_datum(LieType::B, opt(a), {}, {}));
          } else {
            for (const SkewDiagram& b : all_symmetric_shapes(SymmetryClass::NonIntegral, n2))
              out.push_back(validate_datum(LieType::B, opt(a), opt(b), {}));
          }
        }
      }
      break;
    }
    case LieType::C: {
      for (int n1 = 0; n1 <= 2 * rank; n1 += 2) {
        const int n2 = 2 * rank - n1;
        std::vector<std::optional<SkewDiagram>> firsts, seconds;
        if (n1 == 0) firsts.push_back(std::nullopt);
        for (const SkewDiagram& a : all_symmetric_shapes(SymmetryClass::SemiIntegralY, n1))
          firsts.push_back(opt(a));
        if (n2 == 0) seconds.push_back(std::nullopt);
        for (const SkewDiagram& b : all_symmetric_shapes(SymmetryClass::SemiIntegralX, n2))
          seconds.push_back(opt(b));
        for (const auto& a : firsts)
          for (const auto& b : seconds) {
            if (!a && !b) continue;
            out.push_back(validate_datum(LieType::C, a, b, {}));
          }
      }
      break;
    }
    case LieType::D: {
      // Γ² = Γ³ = ∅: the whole cardinality in Γ¹, two values of ε.
      for (const SkewDiagram& a : all_symmetric_shapes(SymmetryClass::NonIntegral, 2 * rank))
        for (int eps : {1, 2}) out.push_back(validate_datum(LieType::D, opt(a), {}, {}, eps));
      // Γ², Γ³ nonempty integral sharing exactly the origin, Γ³ ≠ {(0,0)}.
      for (int n1 = 0; n1 <= 2 * rank - 2; n1 += 2) {
        std::vector<std::optional<SkewDiagram>> firsts;
        if (n1 == 0) firsts.push_back(std::nullopt);
        for (const SkewDiagram& a : all_symmetric_shapes(SymmetryClass::NonIntegral, n1))
          firsts.push_back(opt(a));
        const int rest = 2 * rank - n1;
        for (int n2 = 1; n2 < rest; n2 += 2) {
          const int n3 = rest - n2;
          for (const SkewDiagram& b : all_symmetric_shapes(SymmetryClass::Integral, n2)) {
            for (const SkewDiagram& c : all_symmetric_shapes(SymmetryClass::Integral, n3)) {
              if (c.size() == 1) continue;  // Γ³ ≠ {(0,0)}
              const CellSet meet = intersect(b.cells(), c.cells());
              if (meet.size() != 1) continue;  // always contain (0,0); demand nothing else
              for (const auto& a : firsts)
                out.push_back(validate_datum(LieType::D, a, opt(b), opt(c), 1));
            }
          }
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), datum_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string datum_to_string(const PairDatum& d) {
  std::ostringstream os;
  os << to_string(d.type) << d.rank;
  auto part = [&](const char* name, const std::optional<SkewDiagram>& g) {
    os << " " << name << "=";
    if (g)
      os << cells_to_string(g->cells());
    else
      os << "∅";
  };
  part("Γ¹", d.g1);
  if (d.type != LieType::A) part("Γ²", d.g2);
  if (d.type == LieType::D) {
    part("Γ³", d.g3);
    os << " ε=" << (d.epsilon ? std::to_string(*d.epsilon) : "-");
  }
  return os.str();
}

}  // namespace nilpair
