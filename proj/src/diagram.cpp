#include "nilpair/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "nilpair/error.hpp"

namespace nilpair {

CellSet normalized(CellSet cells) {
  std::sort(cells.begin(), cells.end(), CanonicalLess{});
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

bool contains_cell(const CellSet& s, const Cell& c) {
  return std::binary_search(s.begin(), s.end(), c, CanonicalLess{});
}

bool is_subset(const CellSet& small, const CellSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end(), CanonicalLess{});
}

CellSet intersect(const CellSet& x, const CellSet& y) {
  CellSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out),
                        CanonicalLess{});
  return out;
}

CellSet translated(const CellSet& s, const Shift& by) {
  CellSet out;
  out.reserve(s.size());
  for (const Cell& c : s) out.push_back(c + by);
  return out;  // translation preserves canonical order
}

CellSet sigma(const CellSet& s) {
  CellSet out;
  out.reserve(s.size());
  // sigma reverses the canonical order, so build back-to-front.
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(sigma(*it));
  return out;
}

bool all_one_coset(const CellSet& cells) {
  if (cells.empty()) return true;
  const SymmetryClass cls = coset_class_of(cells.front());
  for (const Cell& c : cells)
    if (coset_class_of(c) != cls) return false;
  return true;
}

// Lattice steps are +-2 in doubled coordinates.
static const Shift kRight{2, 0}, kLeft{-2, 0}, kUp{0, 2}, kDown{0, -2};

bool is_connected(const CellSet& cells) {
  if (cells.empty()) return false;
  std::vector<char> seen(cells.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  auto index_of = [&](const Cell& c) -> int {
    auto it = std::lower_bound(cells.begin(), cells.end(), c, CanonicalLess{});
    if (it != cells.end() && *it == c) return static_cast<int>(it - cells.begin());
    return -1;
  };
  while (!stack.empty()) {
    const Cell c = cells[stack.back()];
    stack.pop_back();
    for (const Shift& step : {kRight, kLeft, kUp, kDown}) {
      const int j = index_of(c + step);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == cells.size();
}

bool is_skew_closed(const CellSet& cells, Cell* witness) {
  for (const Cell& c : cells) {
    if (contains_cell(cells, {c.a + 2, c.b + 2})) {
      if (!contains_cell(cells, {c.a + 2, c.b}) || !contains_cell(cells, {c.a, c.b + 2})) {
        if (witness) *witness = c;
        return false;
      }
    }
  }
  return true;
}

bool is_skew_shape(const CellSet& cells) {
  return !cells.empty() && all_one_coset(cells) && is_skew_closed(cells) && is_connected(cells);
}

SkewDiagram make_skew_diagram(const CellSet& raw) {
  CellSet cells = normalized(raw);
  if (cells.empty()) throw err_empty_diagram("a skew diagram must have at least one cell");
  if (!all_one_coset(cells))
    throw err_not_one_coset("cells mix coordinate cosets: " + cells_to_string(cells));
  Cell w;
  if (!is_skew_closed(cells, &w))
    throw err_skew_closure("cells " + to_string(w) + " and " + to_string(Cell{w.a + 2, w.b + 2}) +
                           " are present without " + to_string(Cell{w.a + 2, w.b}) + " and " +
                           to_string(Cell{w.a, w.b + 2}));
  if (!is_connected(cells)) throw err_not_connected("cell set is not edge-connected");
  return SkewDiagram(std::move(cells));
}

SkewDiagram make_skew_diagram_unchecked(CellSet cells) {
  assert(is_skew_shape(cells));
  return SkewDiagram(std::move(cells));
}

SkewDiagram sigma(const SkewDiagram& g) { return make_skew_diagram_unchecked(sigma(g.cells())); }

SkewDiagram translated(const SkewDiagram& g, const Shift& by) {
  return make_skew_diagram_unchecked(translated(g.cells(), by));
}

bool is_centrally_symmetric(const SkewDiagram& g) { return sigma(g.cells()) == g.cells(); }

bool is_skew_subdiagram(const CellSet& c, const SkewDiagram& g) {
  if (!is_subset(c, g.cells()))
    throw err_not_a_subset("candidate subdiagram has cells outside the diagram");
  if (c.empty()) return false;
  if (!is_connected(c)) return false;
  for (const Cell& x : c) {
    const Cell left = x + kLeft, below = x + kDown;
    if (g.contains(left) && !contains_cell(c, left)) return false;
    if (g.contains(below) && !contains_cell(c, below)) return false;
  }
  return true;
}

bool is_sigma_skew_subdiagram(const CellSet& c, const SkewDiagram& g) {
  if (!is_subset(c, g.cells()))
    throw err_not_a_subset("candidate subdiagram has cells outside the diagram");
  if (c.empty()) return false;
  if (!is_connected(c)) return false;
  for (const Cell& x : c) {
    const Cell right = x + kRight, above = x + kUp;
    if (g.contains(right) && !contains_cell(c, right)) return false;
    if (g.contains(above) && !contains_cell(c, above)) return false;
  }
  return true;
}

std::vector<CellSet> connected_components(const CellSet& cells) {
  std::vector<CellSet> comps;
  std::vector<char> used(cells.size(), 0);
  auto index_of = [&](const Cell& c) -> int {
    auto it = std::lower_bound(cells.begin(), cells.end(), c, CanonicalLess{});
    if (it != cells.end() && *it == c) return static_cast<int>(it - cells.begin());
    return -1;
  };
  for (size_t i = 0; i < cells.size(); ++i) {
    if (used[i]) continue;
    CellSet comp;
    std::vector<int> stack{static_cast<int>(i)};
    used[i] = 1;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      comp.push_back(cells[k]);
      for (const Shift& step : {kRight, kLeft, kUp, kDown}) {
        const int j = index_of(cells[k] + step);
        if (j >= 0 && !used[j]) {
          used[j] = 1;
          stack.push_back(j);
        }
      }
    }
    comps.push_back(normalized(std::move(comp)));
  }
  // Cells are scanned in canonical order, so each component is discovered at
  // its canonical-first cell and the list is already ordered by that cell.
  return comps;
}

CornerReport corners(const SkewDiagram& g) {
  CornerReport r;
  for (const Cell& c : g.cells()) {
    const bool right = g.contains(c + kRight), above = g.contains(c + kUp);
    const bool left = g.contains(c + kLeft), below = g.contains(c + kDown);
    if (!right && !above) r.ne_corners.push_back(c);
    if (!left && !below) r.sw_corners.push_back(c);
    if (right && above && !g.contains({c.a + 2, c.b + 2})) r.ne_angles.push_back(c);
    if (left && below && !g.contains({c.a - 2, c.b - 2})) r.sw_angles.push_back(c);
  }
  return r;
}

std::pair<mpq_class, mpq_class> barycentre(const SkewDiagram& g) {
  long sa = 0, sb = 0;
  for (const Cell& c : g.cells()) {
    sa += c.a;
    sb += c.b;
  }
  const long n = g.size();
  mpq_class x(sa, 2 * n), y(sb, 2 * n);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

bool satisfies_Y(const SkewDiagram& g) {
  const CornerReport r = corners(g);
  return r.sw_corners.size() == 1 || r.ne_corners.size() == 1;
}

bool is_rectangular(const SkewDiagram& g) {
  int amin = g.cells().front().a, amax = amin;
  int bmin = g.cells().front().b, bmax = bmin;
  for (const Cell& c : g.cells()) {
    amin = std::min(amin, c.a);
    amax = std::max(amax, c.a);
    bmin = std::min(bmin, c.b);
    bmax = std::max(bmax, c.b);
  }
  const long w = (amax - amin) / 2 + 1, h = (bmax - bmin) / 2 + 1;
  return w * h == g.size();
}

// Does this bare cell set fill its bounding box? (Used on sets obtained by
// deleting cells from a diagram, which need not be connected.)
static bool fills_bounding_box(const CellSet& s) {
  if (s.empty()) return false;
  int amin = s.front().a, amax = amin, bmin = s.front().b, bmax = bmin;
  for (const Cell& c : s) {
    amin = std::min(amin, c.a);
    amax = std::max(amax, c.a);
    bmin = std::min(bmin, c.b);
    bmax = std::max(bmax, c.b);
  }
  const long w = (amax - amin) / 2 + 1, h = (bmax - bmin) / 2 + 1;
  return w * h == static_cast<long>(s.size());
}

NearRectReport near_rectangular(const SkewDiagram& g) {
  if (!is_centrally_symmetric(g))
    throw err_not_centrally_symmetric("near-rectangular is defined for centrally symmetric diagrams");
  NearRectReport rep;
  const CornerReport cr = corners(g);
  if (cr.sw_corners.size() != 2) return rep;
  // Canonical order puts the corner with larger j first; two SW corners
  // (i,j), (k,l) always satisfy i<k, j>l.
  const Cell ij = cr.sw_corners[0], kl = cr.sw_corners[1];
  auto without = [&](const Cell& u, const Cell& v) {
    CellSet s;
    for (const Cell& c : g.cells())
      if (!(c == u) && !(c == v)) s.push_back(c);
    return s;
  };
  rep.type_a = fills_bounding_box(without(ij, sigma(ij)));
  rep.type_b = fills_bounding_box(without(kl, sigma(kl)));
  rep.type_c = (ij.a == kl.a - 2) && (ij.b == kl.b + 2);
  return rep;
}

bool satisfies_R(const SkewDiagram& g) {
  if (!is_centrally_symmetric(g))
    throw err_not_centrally_symmetric("condition (R) is defined for centrally symmetric diagrams");
  if (is_rectangular(g)) return true;
  return g.symmetry_class() == SymmetryClass::NonIntegral && near_rectangular(g).any();
}

// ---------------------------------------------------------------------------
// Shape enumeration via row-interval profiles. A connected skew diagram is
// exactly a stack of nonempty row intervals [L_y, R_y] whose endpoints both
// weakly decrease as y increases, with consecutive rows overlapping.

std::vector<SkewDiagram> all_skew_shapes(int ncells) {
  std::vector<SkewDiagram> out;
  if (ncells <= 0) return out;
  // rows[r] = (L, length), bottom row first, plain integer coordinates.
  std::vector<std::pair<int, int>> rows;
  std::function<void(int)> emit = [&](int remaining) {
    if (remaining == 0) {
      int minL = rows.front().first;
      for (auto& [L, len] : rows) minL = std::min(minL, L);
      CellSet cells;
      for (size_t y = 0; y < rows.size(); ++y)
        for (int x = rows[y].first; x < rows[y].first + rows[y].second; ++x)
          cells.push_back({2 * (x - minL), 2 * static_cast<int>(y)});
      out.push_back(make_skew_diagram_unchecked(normalized(std::move(cells))));
      return;
    }
    const auto [L, len] = rows.back();
    const int R = L + len - 1;
    for (int nlen = 1; nlen <= remaining; ++nlen) {
      // L' <= L, R' <= R, R' >= L  =>  L' in [L-nlen+1, min(L, R-nlen+1)].
      const int lo = L - nlen + 1, hi = std::min(L, R - nlen + 1);
      for (int nl = lo; nl <= hi; ++nl) {
        rows.push_back({nl, nlen});
        emit(remaining - nlen);
        rows.pop_back();
      }
    }
  };
  for (int blen = 1; blen <= ncells; ++blen) {
    rows.push_back({0, blen});
    emit(ncells - blen);
    rows.pop_back();
  }
  return out;
}

std::vector<SkewDiagram> all_symmetric_shapes(SymmetryClass cls, int ncells) {
  std::vector<SkewDiagram> out;
  if (ncells <= 0) return out;
  const int px = (cls == SymmetryClass::SemiIntegralX || cls == SymmetryClass::NonIntegral) ? 1 : 0;
  const int py = (cls == SymmetryClass::SemiIntegralY || cls == SymmetryClass::NonIntegral) ? 1 : 0;
  // Upper rows at doubled heights b = py, py+2, ...; the lower half is the
  // sigma mirror. With py == 0 the central row b'=0 is shared and must itself
  // be symmetric. Intervals [L, R] are in doubled x-coordinates (step 2).
  // upper[r] = (L, R) for b = base + 2r.
  std::vector<std::pair<int, int>> upper;

  auto assemble = [&]() {
    CellSet cells;
    const int b0 = py == 0 ? 2 : 1;  // doubled height of the first *upper* row
    for (size_t r = 0; r < upper.size(); ++r) {
      const int b = b0 + 2 * static_cast<int>(r);
      for (int a = upper[r].first; a <= upper[r].second; a += 2) {
        cells.push_back({a, b});
        cells.push_back({-a, -b});
      }
    }
    return cells;
  };

  // Extend rows upward above a previous interval [L, R]; `remaining` counts
  // cells still to place in the upper half.
  std::function<void(int, int, int, const std::function<void()>&)> grow =
      [&](int L, int R, int remaining, const std::function<void()>& sink) {
        if (remaining == 0) {
          sink();
          return;
        }
        for (int nlen = 1; nlen <= remaining; ++nlen) {
          const int span = 2 * (nlen - 1);  // doubled width of the interval
          // L' <= L, R' <= R, R' >= L  with R' = L' + span.
          const int lo = L - span, hi = std::min(L, R - span);
          for (int nl = lo; nl <= hi; nl += 2) {
            upper.push_back({nl, nl + span});
            grow(nl, nl + span, remaining - nlen, sink);
            upper.pop_back();
          }
        }
      };

  if (py == 0) {
    // Central row: symmetric interval [-R0, R0], R0 parity px, length R0+1.
    for (int R0 = px;; R0 += 2) {
      const int central = R0 + 1;  // cells in the central row
      if (central > ncells) break;
      if ((ncells - central) % 2 != 0) continue;
      const int upcells = (ncells - central) / 2;
      auto sink = [&]() {
        CellSet cells = assemble();
        for (int a = -R0; a <= R0; a += 2) cells.push_back({a, 0});
        cells = normalized(std::move(cells));
        if (is_skew_shape(cells)) out.push_back(make_skew_diagram_unchecked(std::move(cells)));
      };
      grow(-R0, R0, upcells, sink);
    }
  } else {
    // Base upper row b = 1: [L, R] with R >= 0 and L + R <= 0 (overlap and
    // nesting against its own mirror at b = -1).
    if (ncells % 2 != 0) return out;
    const int upcells = ncells / 2;
    for (int len = 1; len <= upcells; ++len) {
      const int span = 2 * (len - 1);
      // R >= 0 with L + R <= 0, i.e. 2R <= span.
      for (int R = px; 2 * R <= span; R += 2) {
        const int L = R - span;
        upper.push_back({L, R});
        auto sink = [&]() {
          CellSet cells = normalized(assemble());
          if (is_skew_shape(cells)) out.push_back(make_skew_diagram_unchecked(std::move(cells)));
        };
        grow(L, R, upcells - len, sink);
        upper.pop_back();
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SkewDiagram& x, const SkewDiagram& y) {
    return std::lexicographical_compare(x.cells().begin(), x.cells().end(), y.cells().begin(),
                                        y.cells().end(), CanonicalLess{});
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nilpair
