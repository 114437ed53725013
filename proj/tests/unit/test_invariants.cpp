#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vconway/diagram_io.hpp"
#include "vconway/invariants.hpp"
#include "vconway/moves.hpp"

using namespace vconway;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }
Diagram D(const char* s) { return parse_diagram(s); }

const LaurentPoly& kink_factor(KinkType k) {
  static const LaurentPoly factors[] = {LaurentPoly::one(), LaurentPoly::x(), LaurentPoly::x(-1),
                                        LaurentPoly::one()};
  return factors[static_cast<int>(k)];
}

}  // namespace

TEST_CASE("crossing matrices") {
  const PolyMatrix p = crossing_matrix_positive();
  CHECK(p(0, 0) == P("1 - x"));
  CHECK(p(0, 1) == P("-y"));
  CHECK(p(1, 0) == P("-x*y^-1"));
  CHECK(p(1, 1).is_zero());
  const PolyMatrix m = crossing_matrix_negative();
  CHECK(m(0, 0).is_zero());
  CHECK(m(0, 1) == P("-x^-1*y"));
  CHECK(m(1, 0) == P("-y^-1"));
  CHECK(m(1, 1) == P("1 - x^-1"));
}

TEST_CASE("virtual Hopf link values") {
  const Diagram d = D(oracle::kVirtualHopf);
  CHECK(z_polynomial(d) == P(oracle::kVirtualHopfZ));
  CHECK(z_polynomial_cofactor(d) == P(oracle::kVirtualHopfZ));
  CHECK(z_polynomial(d).size() == 4);
  CHECK(c0(d) == P(oracle::kVirtualHopfC0));
  CHECK(c0_via_tp(d) == P(oracle::kVirtualHopfC0));
  CHECK(c1(d) == P(oracle::kVirtualHopfC1));
  CHECK(z_polynomial(D(oracle::kVirtualHopfNegative)) == P(oracle::kVirtualHopfNegativeZ));
}

TEST_CASE("classical codes vanish") {
  for (const char* code : {oracle::kTrefoil, oracle::kFigureEight, oracle::kHopf, oracle::kUnlinkR2}) {
    CAPTURE(code);
    CHECK(z_polynomial(D(code)).is_zero());
    CHECK(z_polynomial_cofactor(D(code)).is_zero());
    CHECK(conway(D(code)).is_zero());
  }
}

TEST_CASE("non-planar same-over code") {
  const Diagram d = D(oracle::kSameOverHopf);
  CHECK(z_polynomial(d) == P(oracle::kSameOverHopfZ));
  CHECK(z_polynomial_cofactor(d) == P(oracle::kSameOverHopfZ));
}

TEST_CASE("two-crossing virtual knot") {
  const Diagram d = D(oracle::kVirtualTrefoil);
  CHECK(z_polynomial(d) == (P("1 - x") * P(oracle::kVirtualHopfZ)));
  CHECK(z_polynomial_cofactor(d) == (P("1 - x") * P(oracle::kVirtualHopfZ)));
  CHECK(c0(d).is_zero());
  CHECK(z_polynomial(with_sign(d, 1, -1)).is_zero());
}

TEST_CASE("base cases") {
  CHECK(z_polynomial(Diagram()).is_zero());
  CHECK(z_polynomial(D("component:\n")).is_zero());
  CHECK(z_polynomial(disjoint_union(D(oracle::kVirtualHopf), D("component:\n"))).is_zero());
  CHECK_THROWS_WITH_AS(z_polynomial(D("component: A1 B1\n")), "resolve double points first", DiagramError);
  CHECK_THROWS_AS(c0_via_tp(D("component:\n")), DiagramError);
}

TEST_CASE("Vassiliev extension") {
  const Diagram one = D("component: A1\ncomponent: B1\n");
  const auto f = [](const Diagram& e) { return z_polynomial(e); };
  const LaurentPoly v = vassiliev_eval<LaurentPoly>(one, f);
  CHECK(v == P(oracle::kVirtualHopfZ) - z_polynomial(resolve_all(one, {-1})));
  CHECK(vassiliev_eval<LaurentPoly>(D(oracle::kVirtualHopf), f) == P(oracle::kVirtualHopfZ));
  CHECK(vassiliev_eval<LaurentPoly>(one, [](const Diagram& e) { return c0(e); }).is_zero());
  std::string many;
  for (int i = 1; i <= 21; ++i) many += " A" + std::to_string(i) + " B" + std::to_string(i);
  CHECK_THROWS_AS(vassiliev_eval<LaurentPoly>(D(("component:" + many + "\n").c_str()), f), DiagramError);
}

TEST_CASE("order-one defect arguments") {
  const Diagram d = D(oracle::kVirtualTrefoil);
  CHECK(order_one_defect(d, 1, 2).is_zero());
  CHECK_THROWS_AS(order_one_defect(d, 1, 1), DiagramError);
  CHECK_THROWS_AS(order_one_defect(d, 1, 9), DiagramError);
}

TEST_CASE("property: elimination matches cofactor oracle") {
  testgen::Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    const Diagram d = testgen::random_link(rng, 5, 3);
    CHECK(z_polynomial(d) == z_polynomial_cofactor(d));
  }
}

TEST_CASE("property: normalised Z is invariant along random walks") {
  testgen::Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    const Diagram d = testgen::random_link(rng, 6, 3);
    const LaurentPoly zn = z_normalized(d);
    CHECK(z_normalized(random_walk(d, 30, rng())) == zn);
    for (const MoveEvent& m : enumerate_moves(d, MoveKind::r3)) CHECK(z_normalized(apply(d, m)) == zn);
  }
}

TEST_CASE("property: kink factors") {
  testgen::Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    const Diagram d = testgen::random_link(rng, 6, 3);
    const LaurentPoly z = z_polynomial(d);
    const std::size_t comp = static_cast<std::size_t>(testgen::uniform_int(rng, 0, int(d.component_count()) - 1));
    const std::size_t len = d.components()[comp].size();
    const Gap gap{comp, len == 0 ? 0 : static_cast<std::size_t>(testgen::uniform_int(rng, 0, int(len) - 1))};
    for (KinkType k : kAllKinkTypes)
      CHECK(z_polynomial(apply(d, {MoveKind::r1_add, {gap}, k, 1, true, {}})) == z * kink_factor(k));
  }
}

TEST_CASE("property: disjoint union multiplies") {
  testgen::Rng rng(54);
  for (int i = 0; i < 150; ++i) {
    const Diagram a = testgen::random_link(rng, 5, 2), b = testgen::random_link(rng, 4, 2);
    CHECK(z_polynomial(disjoint_union(a, b)) == z_polynomial(a) * z_polynomial(b));
  }
}

TEST_CASE("property: skein triples") {
  testgen::Rng rng(55);
  const LaurentPoly x = LaurentPoly::x();
  for (int i = 0; i < 150; ++i) {
    const Diagram d = testgen::random_link(rng, 6, 3);
    for (int id : d.classical_ids()) {
      const LaurentPoly zp = z_polynomial(with_sign(d, id, 1));
      const LaurentPoly zm = z_polynomial(with_sign(d, id, -1));
      const LaurentPoly z0 = z_polynomial(smooth(d, id));
      CHECK(zp - x * zm == (LaurentPoly::one() - x) * z0);
      CHECK(eval_x1(zp) == eval_x1(zm));
    }
  }
}

TEST_CASE("property: c0 identities") {
  testgen::Rng rng(56);
  for (int i = 0; i < 300; ++i) {
    const Diagram d = testgen::random_link(rng, 7, 3);
    const LaurentPoly v = c0(d);
    CHECK(v == conway(d).coefficient(0));
    if (d.classical_count() > 0 && !d.has_crossing_free_component())
      CHECK(c0_via_tp(d) == (d.component_count() % 2 == 0 ? v : -v));
    CHECK(c0(reverse(d)) == v);
    CHECK(substitute_y_inverse(v) == (d.component_count() % 2 == 0 ? v : -v));
    if (d.component_count() == 1) CHECK(v.is_zero());
  }
}

TEST_CASE("property: c1 on knots") {
  testgen::Rng rng(57);
  for (int i = 0; i < 80; ++i) {
    const Diagram d = testgen::random_knot(rng, 6);
    const std::vector<int> ids = d.classical_ids();
    for (int id : ids)
      CHECK(c1(with_sign(d, id, 1)) - c1(with_sign(d, id, -1)) == c0(smooth(d, id)));
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) CHECK(order_one_defect(d, ids[a], ids[b]).is_zero());
  }
}

TEST_CASE("property: singular knots") {
  testgen::Rng rng(58);
  for (int i = 0; i < 80; ++i) {
    const Diagram d = testgen::random_knot(rng, 4, 2);
    CHECK(vassiliev_eval<LaurentPoly>(d, [](const Diagram& e) { return c0(e); }).is_zero());
    CHECK(vassiliev_eval<LaurentPoly>(d, [](const Diagram& e) { return c1(e); }).is_zero());
  }
}

TEST_CASE("mutated negative block breaks invariance") {
  testgen::Rng rng(59);
  std::size_t broken = 0;
  for (int i = 0; i < 50; ++i) {
    const Diagram d = testgen::random_link(rng, 5, 2);
    const ZOptions bad{true};
    if (z_normalized(random_walk(d, 30, rng()), bad) != z_normalized(d, bad)) ++broken;
  }
  CHECK(broken > 0);
}
