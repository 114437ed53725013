#pragma once

// Sparse integer Laurent polynomials in two variables x, y.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vconway {

using Integer = boost::multiprecision::cpp_int;

/// Exponent pair x^x * y^y. Ordered lexicographically, x first.
struct Monomial {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator+(const Monomial& o) const { return {x + o.x, y + o.y}; }
  Monomial operator-(const Monomial& o) const { return {x - o.x, y - o.y}; }
};

struct Term {
  Monomial exponent;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Z[x^{+-1}, y^{+-1}].
///
/// Terms are kept sorted by exponent (lexicographic, x first) with no zero
/// coefficients and no repeated exponents, so the representation is unique
/// and equality is structural. The zero polynomial has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  LaurentPoly(Integer coeff, Monomial exponent);

  /// Builds a polynomial from arbitrary terms; duplicates are summed and
  /// zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  static LaurentPoly one() { return LaurentPoly(Integer(1)); }
  static LaurentPoly x(int e = 1) { return {Integer(1), Monomial{e, 0}}; }
  static LaurentPoly y(int e = 1) { return {Integer(1), Monomial{0, e}}; }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Integer coefficient(Monomial m) const;

  /// True for +-1 times a monomial, i.e. the units of the ring.
  [[nodiscard]] bool is_unit() const;
  /// True when no term involves x.
  [[nodiscard]] bool is_y_only() const;
  /// Smallest and largest exponent in lexicographic order. Requires non-zero.
  [[nodiscard]] const Term& lowest_term() const { return terms_.front(); }
  [[nodiscard]] const Term& leading_term() const { return terms_.back(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly operator*(const LaurentPoly& a, const Integer& k);
inline LaurentPoly operator*(const Integer& k, const LaurentPoly& a) { return a * k; }

/// p * x^m.x * y^m.y
LaurentPoly shift(const LaurentPoly& p, Monomial m);

/// Integer power; negative exponents are only allowed for units.
LaurentPoly pow(const LaurentPoly& p, int e);

/// Inverse of a unit (+-monomial). Throws AlgebraError otherwise.
LaurentPoly unit_inverse(const LaurentPoly& u);

/// Quotient a / b when b divides a exactly; throws AlgebraError when the
/// division leaves a remainder or b is zero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Minimum x-exponent over the terms. Throws "undefined exponent" on zero.
int lowest_x_exponent(const LaurentPoly& p);

/// x^{-N} * p with N the lowest x-exponent; zero stays zero.
LaurentPoly normalize_x(const LaurentPoly& p);

/// Substitute x = 1.
LaurentPoly eval_x1(const LaurentPoly& p);

/// Substitute y -> y^{-1}.
LaurentPoly substitute_y_inverse(const LaurentPoly& p);

/// Text form, e.g. "1 + x*y^-1 - 2*y^2". Terms are printed in graded
/// lexicographic order (total degree, then x-exponent, both ascending).
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string. Accepts optional whitespace and explicit
/// coefficients ("3*x", "-y^-2", "x*y*2" is rejected). Throws
/// std::invalid_argument on malformed input.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace vconway
