#include "nilpair/qmatrix.hpp"

#include <cassert>
#include <utility>

namespace nilpair {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMat::is_zero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

Rat QMat::trace() const {
  assert(rows_ == cols_);
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QMat QMat::transpose() const {
  QMat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

QMat operator+(const QMat& x, const QMat& y) {
  assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
  QMat m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
  return m;
}

QMat operator-(const QMat& x, const QMat& y) {
  assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
  QMat m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
  return m;
}

QMat operator*(const QMat& x, const QMat& y) {
  assert(x.cols_ == y.rows_);
  QMat m(x.rows_, y.cols_);
  for (int r = 0; r < x.rows_; ++r)
    for (int k = 0; k < x.cols_; ++k) {
      const Rat& v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < y.cols_; ++c) {
        if (y.at(k, c) == 0) continue;
        m.at(r, c) += v * y.at(k, c);
      }
    }
  return m;
}

QMat operator*(const Rat& s, const QMat& x) {
  QMat m(x.rows_, x.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = s * x.a_[i];
  return m;
}

bool operator==(const QMat& x, const QMat& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

namespace {

void divexact(mpz_class& out, const mpz_class& num, const mpz_class& den) {
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

}  // namespace

KernelResult kernel_basis(const QMat& m) {
  const int R = m.rows(), C = m.cols();
  // Clear denominators row by row (row scaling preserves the null space).
  std::vector<std::vector<mpz_class>> M(R, std::vector<mpz_class>(C));
  for (int r = 0; r < R; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < C; ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < C; ++c) {
      mpz_class f;
      divexact(f, l, m.at(r, c).get_den());
      M[r][c] = m.at(r, c).get_num() * f;
    }
  }

  // Fraction-free (Bareiss) forward elimination with column pivot tracking.
  // After step k every entry is a k+1 minor of the original integer matrix,
  // so the division by the previous pivot is exact.
  std::vector<int> pivot_cols;
  int row = 0;
  mpz_class prev = 1;
  for (int col = 0; col < C && row < R; ++col) {
    int pr = -1;
    for (int i = row; i < R; ++i)
      if (M[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[row], M[pr]);
    mpz_class t;
    for (int i = row + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j) {
        t = M[row][col] * M[i][j] - M[i][col] * M[row][j];
        divexact(M[i][j], t, prev);
      }
      M[i][col] = 0;
    }
    prev = M[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  const int rank = row;

  KernelResult res;
  res.rank = rank;
  // Free columns parameterize the kernel; back-substitute over the rationals.
  std::vector<char> is_pivot(C, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(C, Rat(0));
    v[f] = 1;
    for (int i = rank - 1; i >= 0; --i) {
      const int p = pivot_cols[i];
      Rat s = 0;
      for (int j = p + 1; j < C; ++j)
        if (v[j] != 0) s += Rat(M[i][j]) * v[j];
      if (s != 0) {
        v[p] = -s / Rat(M[i][p]);
        v[p].canonicalize();
      }
    }
    res.basis.push_back(std::move(v));
  }
  return res;
}

int rank_of(const QMat& m) { return kernel_basis(m).rank; }

}  // namespace nilpair
