#include "vconway/invariants.hpp"

namespace vconway {

PolyMatrix crossing_matrix_positive() {
  PolyMatrix m(2);
  m(0, 0) = LaurentPoly::one() - LaurentPoly::x();
  m(0, 1) = -LaurentPoly::y();
  m(1, 0) = -LaurentPoly(Integer(1), Monomial{1, -1});
  return m;
}

PolyMatrix crossing_matrix_negative() {
  PolyMatrix m(2);
  m(0, 1) = -LaurentPoly(Integer(1), Monomial{-1, 1});
  m(1, 0) = -LaurentPoly::y(-1);
  m(1, 1) = LaurentPoly::one() - LaurentPoly::x(-1);
  return m;
}

namespace {

void require_nonsingular(const Diagram& d) {
  require_valid(d);
  if (d.is_singular()) throw DiagramError("resolve double points first");
}

bool z_vanishes_trivially(const Diagram& d) {
  return d.classical_count() == 0 || d.has_crossing_free_component();
}

// (-1)^(n + components): the parity of the component count is what makes
// the skein relation come out with +(1 - x) Z(D0).
LaurentPoly signed_det(const Diagram& d, const PolyMatrix& m, LaurentPoly (*determinant)(const PolyMatrix&)) {
  const LaurentPoly value = determinant(m);
  return (d.classical_count() + d.component_count()) % 2 == 0 ? value : -value;
}

}  // namespace

PolyMatrix z_matrix(const Diagram& d, ZOptions opts) {
  const SlotPermutation p = build_P(d);
  const std::vector<int> ids = d.classical_ids();
  const PolyMatrix plus = crossing_matrix_positive();
  PolyMatrix minus = crossing_matrix_negative();
  if (opts.mutate_negative_block)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) minus(i, j) = -minus(i, j);

  PolyMatrix m(2 * ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const PolyMatrix& block = d.crossing(ids[k]).sign > 0 ? plus : minus;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(2 * k + i, 2 * k + j) = block(i, j);
  }
  // Column s of P is the unit vector at P(s).
  for (std::size_t s = 0; s < p.size(); ++s) m(p(s), s) -= LaurentPoly::one();
  return m;
}

LaurentPoly z_polynomial(const Diagram& d, ZOptions opts) {
  require_nonsingular(d);
  if (z_vanishes_trivially(d)) return {};
  return signed_det(d, z_matrix(d, opts), &det);
}

LaurentPoly z_polynomial_cofactor(const Diagram& d, ZOptions opts) {
  require_nonsingular(d);
  if (z_vanishes_trivially(d)) return {};
  return signed_det(d, z_matrix(d, opts), &det_cofactor);
}

LaurentPoly z_normalized(const Diagram& d, ZOptions opts) { return normalize_x(z_polynomial(d, opts)); }

ConwayPoly conway(const Diagram& d, ZOptions opts) { return expand_conway(z_normalized(d, opts)); }

LaurentPoly c0(const Diagram& d, ZOptions opts) { return eval_x1(z_polynomial(d, opts)); }

LaurentPoly c0_via_tp(const Diagram& d) {
  require_nonsingular(d);
  if (d.has_crossing_free_component())
    throw DiagramError("c0 via TP needs every component to carry a crossing");
  const SlotPermutation tp = build_TP(d);
  PolyMatrix m(tp.size());
  for (std::size_t s = 0; s < tp.size(); ++s) m(s, s) = LaurentPoly::y(s % 2 == 0 ? -1 : 1);
  for (std::size_t s = 0; s < tp.size(); ++s) m(tp(s), s) += LaurentPoly::one();
  return det(m);
}

LaurentPoly c1(const Diagram& d, ZOptions opts) { return conway(d, opts).coefficient(1); }

LaurentPoly order_one_defect(const Diagram& d, int id1, int id2, ZOptions opts) {
  if (id1 == id2) throw DiagramError("order-one defect needs two distinct crossings");
  if (!d.crossing(id1).is_classical() || !d.crossing(id2).is_classical())
    throw DiagramError("order-one defect needs classical crossings");
  LaurentPoly total;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const LaurentPoly v = c1(with_sign(with_sign(d, id1, s1), id2, s2), opts);
      if (s1 * s2 > 0)
        total += v;
      else
        total -= v;
    }
  return total;
}

}  // namespace vconway
