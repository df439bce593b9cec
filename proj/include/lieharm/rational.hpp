#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace lieharm {

/// Exact rational scalar used wherever identities must hold exactly
/// (structure constants, Killing contractions, coalgebra polynomials).
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Small dense matrix over Rat. Only what the exact-algebra layer needs:
/// storage, products, exact Gauss-Jordan inverse.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& v = (*this)(i, k);
        if (v == Rat(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  /// Exact inverse; empty when singular.
  std::optional<RatMatrix> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square matrix");
    const int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (a(r, col) != Rat(0)) { pivot = r; break; }
      if (pivot < 0) return std::nullopt;
      if (pivot != col) {
        for (int j = 0; j < n; ++j) {
          std::swap(a(pivot, j), a(col, j));
          std::swap(inv(pivot, j), inv(col, j));
        }
      }
      const Rat p = a(col, col);
      for (int j = 0; j < n; ++j) { a(col, j) /= p; inv(col, j) /= p; }
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const Rat f = a(r, col);
        if (f == Rat(0)) continue;
        for (int j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace lieharm
