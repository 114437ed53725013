#pragma once

// Z-polynomial, its normalisation, the Conway polynomial and the low-order
// coefficients c0, c1, plus their extension to singular diagrams.

#include <cstddef>
#include <functional>
#include <vector>

#include "vconway/conway_poly.hpp"
#include "vconway/diagram.hpp"
#include "vconway/laurent.hpp"
#include "vconway/poly_matrix.hpp"

namespace vconway {

/// Crossing matrices. Rows/columns are ordered (l, r).
///   M+ = [ 1-x    -y  ]     M- = [   0     -x^-1 y ]
///        [ -x/y    0  ]          [ -y^-1   1-x^-1  ]
PolyMatrix crossing_matrix_positive();
PolyMatrix crossing_matrix_negative();

struct ZOptions {
  /// Negates M- before assembling; only used to check that the property
  /// harness notices a broken invariant.
  bool mutate_negative_block = false;
};

/// M - P with M = diag(M+^{e_1}, ..., M+^{e_n}) in sorted crossing-id order.
PolyMatrix z_matrix(const Diagram& d, ZOptions opts = {});

/// (-1)^(n + k) det(M - P) for n classical crossings and k components.
/// Zero when d has no classical crossings or has a crossing-free component.
/// Throws DiagramError for singular or invalid input.
LaurentPoly z_polynomial(const Diagram& d, ZOptions opts = {});

/// Same value through det_cofactor; for cross-checking small diagrams.
LaurentPoly z_polynomial_cofactor(const Diagram& d, ZOptions opts = {});

LaurentPoly z_normalized(const Diagram& d, ZOptions opts = {});

/// Z normalised and rewritten in z = 1 - x.
ConwayPoly conway(const Diagram& d, ZOptions opts = {});

/// Z(1, y).
LaurentPoly c0(const Diagram& d, ZOptions opts = {});

/// det(diag(y^-1, y, ..., y^-1, y) + TP). Equals (-1)^k c0 for k
/// components. Needs at least one classical crossing and no crossing-free
/// component.
LaurentPoly c0_via_tp(const Diagram& d);

/// Coefficient of z in the Conway polynomial.
LaurentPoly c1(const Diagram& d, ZOptions opts = {});

inline constexpr std::size_t kMaxVassilievDoublePoints = 20;

/// sum over e in {+,-}^k of (prod e) * f(d resolved by e); f(d) when d has
/// no double points. Throws DiagramError when k exceeds the cap.
template <typename Value>
Value vassiliev_eval(const Diagram& d, const std::function<Value(const Diagram&)>& f) {
  const std::size_t k = d.double_count();
  if (k == 0) return f(d);
  if (k > kMaxVassilievDoublePoints) throw DiagramError("too many double points for Vassiliev expansion");
  Value total{};
  std::vector<int> signs(k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    bool negative = false;
    for (std::size_t i = 0; i < k; ++i) {
      signs[i] = (mask >> i) & 1u ? -1 : 1;
      negative ^= signs[i] < 0;
    }
    Value v = f(resolve_all(d, signs));
    if (negative)
      total -= v;
    else
      total += v;
  }
  return total;
}

/// c1(D++) - c1(D+-) - c1(D-+) + c1(D--) at two distinct classical crossings.
LaurentPoly order_one_defect(const Diagram& d, int id1, int id2, ZOptions opts = {});

}  // namespace vconway
