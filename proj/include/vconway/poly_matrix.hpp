#pragma once

// Square matrices over the Laurent ring and their determinants.

#include <cstddef>
#include <vector>

#include "vconway/laurent.hpp"

namespace vconway {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static PolyMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] const LaurentPoly& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  LaurentPoly& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Block-diagonal matrix diag(a, b).
PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by elimination. Pivots on units of the Laurent ring while
/// any remain (these steps need no division), then finishes the residual
/// block with det_bareiss. Returns 1 for the empty matrix.
LaurentPoly det(const PolyMatrix& m);

/// Fraction-free Bareiss elimination. Each row is first scaled by a
/// monomial so every entry is an ordinary polynomial; the collected
/// monomial is divided out of the result.
LaurentPoly det_bareiss(const PolyMatrix& m);

/// Laplace expansion along rows, memoised on the set of remaining columns.
/// Exponential in n; intended as an independent check for small matrices.
/// Throws AlgebraError when n > 24.
LaurentPoly det_cofactor(const PolyMatrix& m);

}  // namespace vconway
