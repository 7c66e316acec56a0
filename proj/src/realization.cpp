#include "nilpair/realization.hpp"

#include <cassert>
#include <sstream>

#include "nilpair/error.hpp"

namespace nilpair {

std::string to_string(FormKind f) {
  switch (f) {
    case FormKind::None: return "none";
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Alternating: return "alternating";
  }
  return "?";
}

int Realization::index_of(int k, const Cell& cell) const {
  for (int r = 0; r < dim(); ++r) {
    if (basis[r].k == k && basis[r].cell == cell) return r;
  }
  return -1;
}

std::vector<std::pair<int, const SkewDiagram*>> present_components(
    const PairDatum& d) {
  std::vector<std::pair<int, const SkewDiagram*>> out;
  if (d.g1) out.emplace_back(1, &*d.g1);
  if (d.g2) out.emplace_back(2, &*d.g2);
  if (d.g3) out.emplace_back(3, &*d.g3);
  return out;
}

namespace {

// Exact rational a/b in lowest terms (mpq_class(int,int) does not reduce).
Rat rat(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

// (-1)^{i+j} for a cell with i+j an integer; the doubled coordinates satisfy
// a + b = 2(i+j), so the exponent parity is ((a+b)/2) mod 2.
int sign_ij(const Cell& c) {
  assert((c.a + c.b) % 2 == 0);
  int t = (c.a + c.b) / 2;
  return (t % 2 == 0) ? 1 : -1;
}

// (-1)^{i+j+1/2} for a cell with i+j a half-integer: a + b = 2(i+j) is odd
// and the exponent i+j+1/2 = (a+b+1)/2 is an integer.
int sign_ij_half(const Cell& c) {
  assert((c.a + c.b) % 2 != 0);
  int t = (c.a + c.b + 1) / 2;  // a+b odd, so this divides exactly
  return (t % 2 == 0) ? 1 : -1;
}

}  // namespace

Realization build_realization(const PairDatum& d) {
  validate_datum(d.type, d.g1, d.g2, d.g3, d.epsilon, d.rank);

  Realization r;
  r.datum = d;
  for (auto [k, g] : present_components(d)) {
    for (const Cell& c : g->cells()) r.basis.push_back({k, c});
  }
  const int n = r.dim();
  assert(n == ambient_dimension(d));

  // Eigenvalues: exact cell coordinates; type A measures from the barycentre
  // so that h1, h2 are traceless.
  Rat bar_x = 0, bar_y = 0;
  if (d.type == LieType::A) {
    auto [bx, by] = barycentre(*d.g1);
    bar_x = bx;
    bar_y = by;
  }
  r.w1.resize(n);
  r.w2.resize(n);
  for (int t = 0; t < n; ++t) {
    r.w1[t] = rat(r.basis[t].cell.a, 2) - bar_x;
    r.w2[t] = rat(r.basis[t].cell.b, 2) - bar_y;
  }
  r.h1 = QMat(n, n);
  r.h2 = QMat(n, n);
  for (int t = 0; t < n; ++t) {
    r.h1.at(t, t) = r.w1[t];
    r.h2.at(t, t) = r.w2[t];
  }

  // e1, e2 with the type-specific coefficient rules.
  r.e1 = QMat(n, n);
  r.e2 = QMat(n, n);
  const Shift step1{2, 0}, step2{0, 2};
  for (int t = 0; t < n; ++t) {
    const auto& [k, c] = r.basis[t];
    int c1 = 1, c2 = 1;
    if (d.type == LieType::B || d.type == LieType::D) {
      c1 = sign_ij(c);
      c2 = -c1;
    } else if (d.type == LieType::C) {
      // Coefficient 1, but the coset parity must make the form sign below
      // well defined.
      assert((c.a + c.b) % 2 != 0);
    }
    int t1 = r.index_of(k, c + step1);
    int t2 = r.index_of(k, c + step2);
    if (t1 >= 0) r.e1.at(t1, t) = c1;
    if (t2 >= 0) r.e2.at(t2, t) = c2;
  }

  // Bilinear form.
  switch (d.type) {
    case LieType::A:
      r.form = FormKind::None;
      break;
    case LieType::B:
    case LieType::D: {
      r.form = FormKind::Symmetric;
      r.gram = QMat(n, n);
      for (int s = 0; s < n; ++s) {
        int t = r.index_of(r.basis[s].k, sigma(r.basis[s].cell));
        assert(t >= 0);
        r.gram.at(s, t) = 1;
      }
      break;
    }
    case LieType::C: {
      r.form = FormKind::Alternating;
      r.gram = QMat(n, n);
      for (int s = 0; s < n; ++s) {
        int t = r.index_of(r.basis[s].k, sigma(r.basis[s].cell));
        assert(t >= 0);
        r.gram.at(s, t) = sign_ij_half(r.basis[s].cell);
      }
      break;
    }
  }
  return r;
}

bool VerifyReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "pass " : "FAIL ") << c.name;
    if (!c.ok && !c.witness.empty()) os << " [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string first_nonzero_witness(const QMat& m,
                                  const std::vector<BasisIndex>& basis) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j) != 0) {
        std::ostringstream os;
        os << "entry (v^" << basis[i].k << "_" << to_string(basis[i].cell)
           << ", v^" << basis[j].k << "_" << to_string(basis[j].cell)
           << ") = " << m.at(i, j).get_str();
        return os.str();
      }
    }
  }
  return "";
}

void check_zero(VerifyReport& rep, const std::string& name, const QMat& m,
                const std::vector<BasisIndex>& basis) {
  bool ok = m.is_zero();
  rep.checks.push_back({name, ok, ok ? "" : first_nonzero_witness(m, basis)});
}

}  // namespace

VerifyReport verify_realization(const Realization& r) {
  VerifyReport rep;
  const int n = r.dim();
  const auto& B = r.basis;

  check_zero(rep, "e1_e2_commute", commutator(r.e1, r.e2), B);
  check_zero(rep, "h1_e1_bracket", commutator(r.h1, r.e1) - r.e1, B);
  check_zero(rep, "h2_e2_bracket", commutator(r.h2, r.e2) - r.e2, B);
  check_zero(rep, "h1_e2_bracket", commutator(r.h1, r.e2), B);
  check_zero(rep, "h2_e1_bracket", commutator(r.h2, r.e1), B);
  check_zero(rep, "h1_h2_commute", commutator(r.h1, r.h2), B);

  // Sharp nilpotency orders: width/height in cells, maximised over the
  // present components.
  int width = 0, height = 0;
  for (auto [k, g] : present_components(r.datum)) {
    int amin = g->cells().front().a, amax = amin;
    int bmin = g->cells().front().b, bmax = bmin;
    for (const Cell& c : g->cells()) {
      amin = std::min(amin, c.a);
      amax = std::max(amax, c.a);
      bmin = std::min(bmin, c.b);
      bmax = std::max(bmax, c.b);
    }
    width = std::max(width, (amax - amin) / 2 + 1);
    height = std::max(height, (bmax - bmin) / 2 + 1);
  }
  {
    QMat p1 = QMat::identity(n), p2 = QMat::identity(n);
    for (int i = 0; i <= width; ++i) p1 = p1 * r.e1;
    for (int i = 0; i <= height; ++i) p2 = p2 * r.e2;
    check_zero(rep, "e1_nilpotent_width", p1, B);
    check_zero(rep, "e2_nilpotent_height", p2, B);
  }

  // Entry range of e1, e2.
  {
    bool ok = true;
    std::string wit;
    for (const QMat* m : {&r.e1, &r.e2}) {
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n && ok; ++j) {
          const Rat& v = m->at(i, j);
          if (v != 0 && v != 1 && v != -1) {
            ok = false;
            wit = "entry value " + v.get_str();
          }
        }
      }
    }
    rep.checks.push_back({"entries_pm1", ok, wit});
  }

  // h eigenvalues match cell coordinates.
  {
    bool ok = true;
    std::string wit;
    Rat bar_x = 0, bar_y = 0;
    if (r.datum.type == LieType::A) {
      auto [bx, by] = barycentre(*r.datum.g1);
      bar_x = bx;
      bar_y = by;
    }
    for (int t = 0; t < n && ok; ++t) {
      Rat ex = Rat(B[t].cell.a) / 2 - bar_x;
      Rat ey = Rat(B[t].cell.b) / 2 - bar_y;
      if (r.h1.at(t, t) != ex || r.h2.at(t, t) != ey) {
        ok = false;
        wit = "v^" + std::to_string(B[t].k) + "_" + to_string(B[t].cell);
      }
    }
    rep.checks.push_back({"h_eigenvalues_match_cells", ok, wit});
  }

  if (r.form == FormKind::None) {
    bool ok = r.e1.trace() == 0 && r.e2.trace() == 0 && r.h1.trace() == 0 &&
              r.h2.trace() == 0;
    rep.checks.push_back(
        {"traceless", ok, ok ? "" : "a generator has nonzero trace"});
  } else {
    bool sym_ok = (r.form == FormKind::Symmetric)
                      ? (r.gram.transpose() == r.gram)
                      : (r.gram.transpose() == Rat(-1) * r.gram);
    rep.checks.push_back({r.form == FormKind::Symmetric
                              ? "gram_symmetric"
                              : "gram_antisymmetric",
                          sym_ok, sym_ok ? "" : "gram shape violated"});
    bool nondeg = rank_of(r.gram) == n;
    rep.checks.push_back(
        {"gram_nondegenerate", nondeg, nondeg ? "" : "gram is singular"});
    for (auto [name, m] : std::initializer_list<std::pair<const char*, const QMat*>>{
             {"e1_in_algebra", &r.e1},
             {"e2_in_algebra", &r.e2},
             {"h1_in_algebra", &r.h1},
             {"h2_in_algebra", &r.h2}}) {
      check_zero(rep, name, m->transpose() * r.gram + r.gram * (*m), B);
    }
  }

  // Coset parity facts that make the sign rules well defined: i+j must be
  // integral on the orthogonal cosets (Integral/NonIntegral cells) and
  // half-integral on the symplectic ones. Type A uses coefficient 1 with no
  // sign rule and its canonical position may sit on any coset, so there is
  // nothing to require there.
  {
    bool ok = true;
    std::string wit;
    if (r.datum.type != LieType::A) {
      for (int t = 0; t < n && ok; ++t) {
        bool sum_even = (B[t].cell.a + B[t].cell.b) % 2 == 0;
        bool want_even = r.datum.type != LieType::C;
        if (sum_even != want_even) {
          ok = false;
          wit = "cell " + to_string(B[t].cell);
        }
      }
    }
    rep.checks.push_back({"coset_parity", ok, wit});
  }

  return rep;
}

bool in_lie_algebra(const QMat& x, const Realization& r) {
  if (x.rows() != r.dim() || x.cols() != r.dim()) throw err_dimension_mismatch(
      "matrix is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
      ", realization dimension is " + std::to_string(r.dim()));
  if (r.form == FormKind::None) return x.trace() == 0;
  return (x.transpose() * r.gram + r.gram * x).is_zero();
}

std::optional<Shift> graded_degree(const QMat& x, const Realization& r) {
  if (x.is_zero()) return std::nullopt;
  // Candidate degree from the first nonzero entry; eigenvalue differences are
  // half-integral, and for type A the barycentre offsets cancel.
  int r0 = -1, c0 = -1;
  for (int i = 0; i < x.rows() && r0 < 0; ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      if (x.at(i, j) != 0) {
        r0 = i;
        c0 = j;
        break;
      }
    }
  }
  Rat p = r.w1[r0] - r.w1[c0];
  Rat q = r.w2[r0] - r.w2[c0];
  if (commutator(r.h1, x) != p * x) return std::nullopt;
  if (commutator(r.h2, x) != q * x) return std::nullopt;
  Rat dp = p * 2, dq = q * 2;
  assert(dp.get_den() == 1 && dq.get_den() == 1);
  return Shift{static_cast<int>(dp.get_num().get_si()),
               static_cast<int>(dq.get_num().get_si())};
}

}  // namespace nilpair
