#pragma once
// Dense exact rational matrices (GMP-backed) and fraction-free elimination.
//
// Sizes here are small (matrix dimensions up to a few hundred), entries are
// small integers or halves; exactness is the point, not speed. The kernel
// routine clears denominators row-wise and runs integer fraction-free
// (Bareiss) elimination, so no intermediate rounding of any kind occurs.

#include <gmpxx.h>

#include <vector>

namespace nilpair {

using Rat = mpq_class;

class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Rat trace() const;
  QMat transpose() const;

  friend QMat operator+(const QMat& x, const QMat& y);
  friend QMat operator-(const QMat& x, const QMat& y);
  friend QMat operator*(const QMat& x, const QMat& y);
  friend QMat operator*(const Rat& s, const QMat& x);
  friend bool operator==(const QMat& x, const QMat& y);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

struct KernelResult {
  int rank = 0;
  std::vector<std::vector<Rat>> basis;  // basis of the right null space
};

// Exact right null space of m (vectors v with m v = 0).
KernelResult kernel_basis(const QMat& m);
int rank_of(const QMat& m);

}  // namespace nilpair
