#pragma once

// Polynomials in z = 1 - x with Laurent-in-y coefficients.

#include <cstddef>
#include <string>
#include <vector>

#include "vconway/laurent.hpp"

namespace vconway {

/// C(y, z) = sum_k coeffs[k] * z^k, each coefficient a Laurent polynomial in
/// y alone. Trailing zero coefficients are trimmed, so the zero polynomial
/// has no coefficients.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  explicit ConwayPoly(std::vector<LaurentPoly> coeffs);

  [[nodiscard]] const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of z^k; zero past the end.
  [[nodiscard]] LaurentPoly coefficient(std::size_t k) const;

  ConwayPoly& operator+=(const ConwayPoly& o);
  ConwayPoly& operator-=(const ConwayPoly& o);
  friend ConwayPoly operator+(ConwayPoly a, const ConwayPoly& b) { return a += b; }
  friend ConwayPoly operator-(ConwayPoly a, const ConwayPoly& b) { return a -= b; }
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

 private:
  void trim();
  std::vector<LaurentPoly> coeffs_;
};

/// Rewrites p (no negative x-exponents) in powers of z = 1 - x.
/// Throws AlgebraError("not x-normalized") otherwise.
ConwayPoly expand_conway(const LaurentPoly& p);

/// sum_k c_k (1 - x)^k as a polynomial in x, y.
LaurentPoly reconstruct(const ConwayPoly& c);

/// e.g. "(y + 2 + y^-1) + (-y^-1)*z + (1)*z^2"; "0" for the zero polynomial.
std::string to_string(const ConwayPoly& c);

}  // namespace vconway
