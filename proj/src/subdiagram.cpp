#include "nilpair/subdiagram.hpp"

#include <algorithm>
#include <cassert>

#include "nilpair/error.hpp"

namespace nilpair {

std::vector<CellSet> enum_single(const SkewDiagram& g, const Shift& s) {
  const CellSet region = intersect(g.cells(), translated(g.cells(), Shift{-s.dp, -s.dq}));
  std::vector<CellSet> out;
  for (CellSet& comp : connected_components(region)) {
    if (!is_skew_subdiagram(comp, g)) continue;
    if (!is_sigma_skew_subdiagram(translated(comp, s), g)) continue;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<CellSet> enum_components_overlap(const SkewDiagram& g, const Shift& s) {
  if (s.dp < 0 || s.dq < 0)
    throw err_negative_shift("overlap counting is stated for the nonnegative quadrant, got " +
                             to_string(s));
  return connected_components(
      intersect(translated(g.cells(), Shift{-s.dp, -s.dq}), g.cells()));
}

// Shared core of the cross/self sets: qualifying components of
// Γ ∩ (σ(Γ')−s), paired with their partner σ(C+s) ⊆ Γ'.
static std::vector<CrossEntry> cross_components(const SkewDiagram& g, const SkewDiagram& gp,
                                                const Shift& s) {
  const CellSet region =
      intersect(g.cells(), translated(sigma(gp.cells()), Shift{-s.dp, -s.dq}));
  std::vector<CrossEntry> out;
  for (CellSet& comp : connected_components(region)) {
    if (!is_skew_subdiagram(comp, g)) continue;
    CellSet partner = sigma(translated(comp, s));
    if (!is_skew_subdiagram(partner, gp)) continue;
    out.push_back({std::move(comp), std::move(partner)});
  }
  return out;
}

std::vector<CrossEntry> enum_cross(const SkewDiagram& g, const SkewDiagram& gp, const Shift& s) {
  return cross_components(g, gp, s);
}

std::vector<SelfEntry> enum_self(const SkewDiagram& g, const Shift& s) {
  if (!s.is_integral())
    throw err_non_integral_shift("self sets need an integral shift, got " + to_string(s));
  // p+q parity in true (halved) coordinates.
  const bool sum_odd = ((s.dp + s.dq) / 2) % 2 != 0;
  std::vector<SelfEntry> out;
  for (CrossEntry& e : cross_components(g, g, s)) {
    if (e.C == e.Cprime) {
      if (sum_odd) out.push_back({e.C, e.Cprime, true});
      continue;
    }
    // Unordered {C, C'}: both orientations appear as components; keep the
    // canonically smaller one as the representative.
    if (std::lexicographical_compare(e.C.begin(), e.C.end(), e.Cprime.begin(), e.Cprime.end(),
                                     CanonicalLess{}))
      out.push_back({std::move(e.C), std::move(e.Cprime), false});
  }
  return out;
}

std::vector<Shift> single_shift_candidates(const SkewDiagram& g) {
  std::vector<Shift> out;
  for (const Cell& c : g.cells())
    for (const Cell& d : g.cells()) out.push_back(d - c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Shift> cross_shift_candidates(const SkewDiagram& g, const SkewDiagram& gp) {
  std::vector<Shift> out;
  for (const Cell& c : g.cells())
    for (const Cell& d : gp.cells()) out.push_back(sigma(d) - c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long card_E_plus_single(const SkewDiagram& g) {
  long total = 0;
  for (const Shift& s : single_shift_candidates(g)) {
    if (!s.in_positive_quadrant() || s.is_zero()) continue;
    total += static_cast<long>(enum_single(g, s).size());
  }
  return total;
}

long card_E_full_single(const SkewDiagram& g) {
  long total = 0;
  for (const Shift& s : single_shift_candidates(g)) {
    if (s.is_zero()) continue;
    total += static_cast<long>(enum_single(g, s).size());
  }
  return total;
}

long card_E_plus_self(const SkewDiagram& g) {
  long total = 0;
  for (const Shift& s : cross_shift_candidates(g, g)) {
    if (!s.in_positive_quadrant() || s.is_zero()) continue;
    total += static_cast<long>(enum_self(g, s).size());
  }
  return total;
}

long card_E_full_self(const SkewDiagram& g) {
  long total = 0;
  for (const Shift& s : cross_shift_candidates(g, g)) {
    if (s.is_zero()) continue;
    total += static_cast<long>(enum_self(g, s).size());
  }
  return total;
}

long card_E_plus_cross(const SkewDiagram& g, const SkewDiagram& gp) {
  long total = 0;
  for (const Shift& s : cross_shift_candidates(g, gp)) {
    if (!s.in_positive_quadrant()) continue;
    total += static_cast<long>(enum_cross(g, gp, s).size());
  }
  return total;
}

long card_E_full_cross(const SkewDiagram& g, const SkewDiagram& gp) {
  long total = 0;
  for (const Shift& s : cross_shift_candidates(g, gp))
    total += static_cast<long>(enum_cross(g, gp, s).size());
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct LabeledComponent {
  int label;
  const SkewDiagram* diagram;
};

std::vector<LabeledComponent> components_of(const PairDatum& d) {
  std::vector<LabeledComponent> v;
  if (d.g1) v.push_back({1, &*d.g1});
  if (d.g2) v.push_back({2, &*d.g2});
  if (d.g3) v.push_back({3, &*d.g3});
  return v;
}

// Does s connect the cosets of the two diagrams? (s ≡ σ(cell of Γ') − cell
// of Γ (mod 2) componentwise; σ preserves parities.)
bool coset_compatible(const SkewDiagram& g, const SkewDiagram& gp, const Shift& s) {
  const Cell a = g.cells().front(), b = gp.cells().front();
  return (s.dp - (b.a - a.a)) % 2 == 0 && (s.dq - (b.b - a.b)) % 2 == 0;
}

}  // namespace

std::vector<IndexEntry> assemble_index(const PairDatum& d, const Shift& s) {
  std::vector<IndexEntry> out;
  if (s.is_zero()) return out;  // the (0,0) graded piece is always trivial

  if (d.type == LieType::A) {
    for (CellSet& c : enum_single(*d.g1, s)) {
      IndexEntry e;
      e.kind = IndexEntry::Kind::Single;
      e.k = e.l = 1;
      e.C = std::move(c);
      out.push_back(std::move(e));
    }
    return out;
  }

  const auto comps = components_of(d);
  for (size_t i = 0; i < comps.size(); ++i) {
    // Self sets of component i (integral shifts only).
    if (s.is_integral() && coset_compatible(*comps[i].diagram, *comps[i].diagram, s)) {
      for (SelfEntry& se : enum_self(*comps[i].diagram, s)) {
        IndexEntry e;
        e.kind = IndexEntry::Kind::Self;
        e.k = e.l = comps[i].label;
        e.C = std::move(se.C);
        e.Cprime = std::move(se.Cprime);
        e.self_paired = se.self_paired;
        out.push_back(std::move(e));
      }
    }
    // Cross sets with the later components.
    for (size_t j = i + 1; j < comps.size(); ++j) {
      if (!coset_compatible(*comps[i].diagram, *comps[j].diagram, s)) continue;
      for (CrossEntry& ce : enum_cross(*comps[i].diagram, *comps[j].diagram, s)) {
        IndexEntry e;
        e.kind = IndexEntry::Kind::Cross;
        e.k = comps[i].label;
        e.l = comps[j].label;
        e.C = std::move(ce.C);
        e.Cprime = std::move(ce.Cprime);
        out.push_back(std::move(e));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IndexEntry& x, const IndexEntry& y) {
    if (x.k != y.k) return x.k < y.k;
    if (x.l != y.l) return x.l < y.l;
    return std::lexicographical_compare(x.C.begin(), x.C.end(), y.C.begin(), y.C.end(),
                                        CanonicalLess{});
  });
  return out;
}

std::vector<Shift> index_shift_support(const PairDatum& d) {
  std::vector<Shift> candidates;
  if (d.type == LieType::A) {
    candidates = single_shift_candidates(*d.g1);
  } else {
    const auto comps = components_of(d);
    for (size_t i = 0; i < comps.size(); ++i)
      for (size_t j = i; j < comps.size(); ++j) {
        auto v = cross_shift_candidates(*comps[i].diagram, *comps[j].diagram);
        candidates.insert(candidates.end(), v.begin(), v.end());
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  std::vector<Shift> out;
  for (const Shift& s : candidates)
    if (!assemble_index(d, s).empty()) out.push_back(s);
  return out;
}

}  // namespace nilpair
