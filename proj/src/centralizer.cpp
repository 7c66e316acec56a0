#include "nilpair/centralizer.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "nilpair/error.hpp"

namespace nilpair {

namespace {

// (-1)^{i+j} of a cell with integral coordinate sum.
int sign_ij(const Cell& c) {
  assert((c.a + c.b) % 2 == 0);
  return ((c.a + c.b) / 2) % 2 == 0 ? 1 : -1;
}

// p + q of a doubled shift with integral sum; parity decides the sign rules.
bool shift_sum_odd(const Shift& s) {
  assert((s.dp + s.dq) % 2 == 0);
  return ((s.dp + s.dq) / 2) % 2 != 0;
}

void put(CentralizerElement& el, const Realization& r, int src_k,
         const Cell& src, int dst_k, const Shift& s, int coef) {
  int col = r.index_of(src_k, src);
  int row = r.index_of(dst_k, src + s);
  assert(col >= 0 && row >= 0);
  assert(el.x.at(row, col) == 0);
  el.x.at(row, col) = coef;
  el.coeffs.emplace_back(src_k, src, Rat(coef));
}

}  // namespace

CentralizerElement element_matrix(const Realization& r, const IndexEntry& e,
                                  const Shift& s) {
  CentralizerElement el;
  el.shift = s;
  el.entry = e;
  el.x = QMat(r.dim(), r.dim());

  const LieType type = r.datum.type;
  switch (e.kind) {
    case IndexEntry::Kind::Single:
      for (const Cell& c : e.C) put(el, r, e.k, c, e.k, s, 1);
      break;
    case IndexEntry::Kind::Cross:
    case IndexEntry::Kind::Self: {
      if (e.self_paired) {
        // C + s = σ(C): a single loop covers the whole orbit; p+q is odd.
        assert(shift_sum_odd(s));
        for (const Cell& c : e.C) {
          int coef = (type == LieType::C) ? 1 : sign_ij(c);
          put(el, r, e.k, c, e.k, s, coef);
        }
        break;
      }
      if (type == LieType::C) {
        int cp = shift_sum_odd(s) ? 1 : -1;  // (-1)^{p+q+1}
        for (const Cell& c : e.C) put(el, r, e.k, c, e.l, s, 1);
        for (const Cell& c : e.Cprime) put(el, r, e.l, c, e.k, s, cp);
      } else if (shift_sum_odd(s)) {
        for (const Cell& c : e.C) put(el, r, e.k, c, e.l, s, sign_ij(c));
        for (const Cell& c : e.Cprime) put(el, r, e.l, c, e.k, s, sign_ij(c));
      } else {
        for (const Cell& c : e.C) put(el, r, e.k, c, e.l, s, 1);
        for (const Cell& c : e.Cprime) put(el, r, e.l, c, e.k, s, -1);
      }
      break;
    }
  }

  // Normalize: +1 at the canonically smallest cell of C. C's cells sit
  // earliest in the basis order among the support (for cross pairs k < l; for
  // self pairs C is the lexicographically smaller set).
  int lead = r.index_of(e.k, e.C.front());
  assert(lead >= 0);
  Rat lead_coef = 0;
  for (int row = 0; row < r.dim(); ++row) {
    if (el.x.at(row, lead) != 0) {
      lead_coef = el.x.at(row, lead);
      break;
    }
  }
  assert(lead_coef == 1 || lead_coef == -1);
  if (lead_coef == -1) {
    for (int i = 0; i < r.dim(); ++i) {
      for (int j = 0; j < r.dim(); ++j) el.x.at(i, j) = -el.x.at(i, j);
    }
    for (auto& t : el.coeffs) std::get<2>(t) = -std::get<2>(t);
  }
  return el;
}

GradedCentralizerBasis combinatorial_basis(const Realization& r) {
  GradedCentralizerBasis out;
  for (const Shift& s : index_shift_support(r.datum)) {
    auto entries = assemble_index(r.datum, s);
    if (entries.empty()) continue;
    auto& slot = out.by_shift[s];
    for (const auto& e : entries) slot.push_back(element_matrix(r, e, s));
    long c = static_cast<long>(entries.size());
    out.dims.dim_Z += c;
    if (s.dp >= 0 && s.dq >= 0) {
      out.dims.dim_Zplus += c;
      if (s.is_integral()) out.dims.dim_Zplus_int += c;
    }
  }
  return out;
}

GradedCentralizerBasis combinatorial_basis(const PairDatum& d) {
  return combinatorial_basis(build_realization(d));
}

Dims dims(const PairDatum& d) {
  Dims out;
  for (const Shift& s : index_shift_support(d)) {
    long c = static_cast<long>(assemble_index(d, s).size());
    out.dim_Z += c;
    if (s.dp >= 0 && s.dq >= 0) {
      out.dim_Zplus += c;
      if (s.is_integral()) out.dim_Zplus_int += c;
    }
  }
  return out;
}

namespace {

// Matrix units E_{r,c} are the variables; rows are the entries of [x,e1],
// [x,e2] and the membership constraint (x^T G + G x, or trace for type A),
// restricted to x supported on `units`. Units must share one bidegree for the
// blocked oracle; the constraints preserve bidegree, so rows sourced from
// other degrees are identically zero and never materialize.
QMat constraint_matrix(const Realization& r,
                       const std::vector<std::pair<int, int>>& units) {
  const int n = r.dim();
  // Row key: (family, row, col) of the constraint expression entry.
  std::map<std::tuple<int, int, int>, std::map<int, Rat>> rows;

  auto add = [&](int family, int er, int ec, int unit, const Rat& v) {
    if (v == 0) return;
    rows[{family, er, ec}][unit] += v;
  };

  for (int u = 0; u < static_cast<int>(units.size()); ++u) {
    auto [a, b] = units[u];
    // [x, f] = x f - f x for f in {e1, e2}: unit (a,b) contributes
    // f(b,s) to entry (a,s) and -f(r,a) to entry (r,b).
    for (int family = 0; family < 2; ++family) {
      const QMat& f = family == 0 ? r.e1 : r.e2;
      for (int s = 0; s < n; ++s) add(family, a, s, u, f.at(b, s));
      for (int row = 0; row < n; ++row) add(family, row, b, u, -f.at(row, a));
    }
    if (r.form == FormKind::None) {
      if (a == b) add(2, 0, 0, u, 1);  // trace row
    } else {
      // (x^T G)_{b,s} picks up G(a,s); (G x)_{row,b} picks up G(row,a).
      for (int s = 0; s < n; ++s) add(2, b, s, u, r.gram.at(a, s));
      for (int row = 0; row < n; ++row) add(2, row, b, u, r.gram.at(row, a));
    }
  }

  QMat m(static_cast<int>(rows.size()), static_cast<int>(units.size()));
  int i = 0;
  for (const auto& [key, cols] : rows) {
    for (const auto& [j, v] : cols) m.at(i, j) = v;
    ++i;
  }
  return m;
}

// Bidegree of the matrix unit E_{rc} as a doubled-integer shift.
Shift unit_degree(const Realization& r, int row, int col) {
  Rat dp = (r.w1[row] - r.w1[col]) * 2;
  Rat dq = (r.w2[row] - r.w2[col]) * 2;
  assert(dp.get_den() == 1 && dq.get_den() == 1);
  return Shift{static_cast<int>(dp.get_num().get_si()),
               static_cast<int>(dq.get_num().get_si())};
}

}  // namespace

std::map<Shift, int> oracle_centralizer(const Realization& r) {
  const int n = r.dim();
  std::map<Shift, std::vector<std::pair<int, int>>> groups;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) groups[unit_degree(r, i, j)].emplace_back(i, j);
  }
  std::map<Shift, int> out;
  for (const auto& [deg, units] : groups) {
    QMat m = constraint_matrix(r, units);
    out[deg] = static_cast<int>(units.size()) - rank_of(m);
  }
  return out;
}

std::map<Shift, int> oracle_centralizer_fullspace(const Realization& r) {
  const int n = r.dim();
  std::vector<std::pair<int, int>> units;
  units.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) units.emplace_back(i, j);
  }
  QMat m = constraint_matrix(r, units);
  KernelResult ker = kernel_basis(m);

  std::map<Shift, int> out;
  // Seed with every bidegree so zero dimensions are visible, as in the
  // blocked oracle.
  for (const auto& [i, j] : units) out[unit_degree(r, i, j)] = 0;
  for (const auto& v : ker.basis) {
    // Each kernel vector lies in one block: the system is block-diagonal by
    // bidegree, so a solution seeded from one free column stays in its block.
    std::optional<Shift> deg;
    for (size_t u = 0; u < v.size(); ++u) {
      if (v[u] == 0) continue;
      Shift d = unit_degree(r, units[u].first, units[u].second);
      assert(!deg || *deg == d);
      deg = d;
    }
    assert(deg);
    out[*deg] += 1;
  }
  return out;
}

int oracle_dim_on_support(const Realization& r,
                          const CentralizerElement& elem) {
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < r.dim(); ++i) {
    for (int j = 0; j < r.dim(); ++j) {
      if (elem.x.at(i, j) != 0) units.emplace_back(i, j);
    }
  }
  if (units.empty()) return 0;
  QMat m = constraint_matrix(r, units);
  return static_cast<int>(units.size()) - rank_of(m);
}

bool is_abelian(const std::vector<QMat>& xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      if (!commutator(xs[i], xs[j]).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// A SW corner with both coordinates <= 0, preferring a corner on the given
// axis (axis = 0: the x-axis, b == 0; axis = 1: the y-axis, a == 0).
Cell sw_corner_le0(const SkewDiagram& g, int prefer_axis) {
  std::vector<Cell> sw = corners(g).sw_corners;
  std::vector<Cell> low;
  for (const Cell& c : sw) {
    if (c.a <= 0 && c.b <= 0) low.push_back(c);
  }
  assert(!low.empty());  // every centrally symmetric diagram has one
  for (const Cell& c : low) {
    if ((prefer_axis == 0 && c.b == 0) || (prefer_axis == 1 && c.a == 0)) {
      return c;
    }
  }
  return low.front();
}

}  // namespace

std::vector<CentralizerElement> build_abelian_subalgebra(const PairDatum& d) {
  Realization r = build_realization(d);
  std::vector<CentralizerElement> out;
  for (const Shift& s : index_shift_support(d)) {
    if (s.dp < 0 || s.dq < 0 || s.is_zero()) continue;
    for (const auto& e : assemble_index(d, s)) {
      bool take = (d.type == LieType::A) ? e.kind == IndexEntry::Kind::Single
                                         : e.kind == IndexEntry::Kind::Self;
      if (take) out.push_back(element_matrix(r, e, s));
    }
  }
  if (d.type == LieType::D && d.g2) {
    // The distinguished cross pair: SW-corner singletons of Γ² and Γ³, the
    // first on the x-axis and the second on the y-axis when available, so the
    // shift σ(c3) - c2 lands in the nonnegative quadrant.
    Cell c2 = sw_corner_le0(*d.g2, 0);
    Cell c3 = sw_corner_le0(*d.g3, 1);
    Shift s{-c3.a - c2.a, -c3.b - c2.b};
    assert(s.dp >= 0 && s.dq >= 0);
    IndexEntry e;
    e.kind = IndexEntry::Kind::Cross;
    e.k = 2;
    e.l = 3;
    e.C = {c2};
    e.Cprime = {c3};
    out.push_back(element_matrix(r, e, s));
  }
  return out;
}

bool check_Zplus_abelian(const PairDatum& d) {
  Realization r = build_realization(d);
  std::vector<QMat> xs;
  for (const Shift& s : index_shift_support(d)) {
    if (s.dp < 0 || s.dq < 0) continue;
    for (const auto& e : assemble_index(d, s)) {
      xs.push_back(element_matrix(r, e, s).x);
    }
  }
  return is_abelian(xs);
}

}  // namespace nilpair
