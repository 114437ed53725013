#include "vconway/poly_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>

namespace vconway {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one();
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw AlgebraError("matrix size mismatch");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw AlgebraError("matrix size mismatch");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw AlgebraError("matrix size mismatch");
  const std::size_t n = a.n_;
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t na = a.size();
  PolyMatrix out(na + b.size());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(na + i, na + j) = b(i, j);
  return out;
}

LaurentPoly det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();

  PolyMatrix a = m;
  std::vector<bool> row_alive(n, true), col_alive(n, true);
  std::vector<std::size_t> row_nnz(n), col_nnz(n);
  LaurentPoly factor = LaurentPoly::one();
  std::size_t remaining = n;

  while (remaining > 0) {
    std::fill(row_nnz.begin(), row_nnz.end(), 0);
    std::fill(col_nnz.begin(), col_nnz.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_alive[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (col_alive[j] && !a(i, j).is_zero()) {
          ++row_nnz[i];
          ++col_nnz[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      if ((row_alive[i] && row_nnz[i] == 0) || (col_alive[i] && col_nnz[i] == 0)) return {};

    // Markowitz choice among unit pivots.
    std::size_t best_row = n, best_col = n;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n && best_cost > 0; ++i) {
      if (!row_alive[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!col_alive[j] || !a(i, j).is_unit()) continue;
        const std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (best_row == n) break;

    const std::size_t pr = best_row, pc = best_col;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < pr; ++i) pos += row_alive[i];
    for (std::size_t j = 0; j < pc; ++j) pos += col_alive[j];
    factor *= (pos % 2 == 0) ? a(pr, pc) : -a(pr, pc);

    const LaurentPoly inv = unit_inverse(a(pr, pc));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pr || !row_alive[r] || a(r, pc).is_zero()) continue;
      const LaurentPoly f = a(r, pc) * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (c != pc && col_alive[c] && !a(pr, c).is_zero()) a(r, c) -= f * a(pr, c);
      a(r, pc) = LaurentPoly();
    }
    row_alive[pr] = false;
    col_alive[pc] = false;
    --remaining;
  }
  if (remaining == 0) return factor;

  PolyMatrix residual(remaining);
  std::size_t ri = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_alive[i]) continue;
    std::size_t rj = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (col_alive[j]) residual(ri, rj++) = std::move(a(i, j));
    ++ri;
  }
  return factor * det_bareiss(residual);
}

LaurentPoly det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();

  PolyMatrix a = m;
  Monomial scale{};
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    Monomial low{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (std::size_t j = 0; j < n; ++j)
      for (const Term& t : a(i, j).terms()) {
        any = true;
        low.x = std::min(low.x, t.exponent.x);
        low.y = std::min(low.y, t.exponent.y);
      }
    if (!any) return {};
    for (std::size_t j = 0; j < n; ++j) a(i, j) = shift(a(i, j), Monomial{-low.x, -low.y});
    scale = scale + low;
  }

  bool negate = false;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r)
      if (!a(r, k).is_zero() && (pivot == n || a(r, k).size() < a(pivot, k).size())) pivot = r;
    if (pivot == n) return {};
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a(i, j) * a(k, k);
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) v -= a(i, k) * a(k, j);
        a(i, j) = exact_divide(v, prev);
      }
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  LaurentPoly result = shift(a(n - 1, n - 1), scale);
  return negate ? -result : result;
}

LaurentPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > 24) throw AlgebraError("cofactor expansion limited to n <= 24");
  std::unordered_map<std::uint32_t, LaurentPoly> memo;

  // Determinant of rows [row, n) restricted to the columns in mask.
  auto minor = [&](auto&& self, std::size_t row, std::uint32_t mask) -> LaurentPoly {
    if (row == n) return LaurentPoly::one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    LaurentPoly sum;
    std::size_t index = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!m(row, c).is_zero()) {
        LaurentPoly sub = self(self, row + 1, mask & ~(1u << c));
        if (!sub.is_zero()) {
          if (index % 2 == 0)
            sum += m(row, c) * sub;
          else
            sum -= m(row, c) * sub;
        }
      }
      ++index;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return minor(minor, 0, n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

}  // namespace vconway
