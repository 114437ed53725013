// Acceptance run: one PASS/FAIL line per criterion, exact comparisons
// throughout. Exit status 0 only when every criterion passes.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vconway/campaign.hpp"
#include "vconway/conway_poly.hpp"
#include "vconway/diagram_io.hpp"
#include "vconway/invariants.hpp"
#include "vconway/moves.hpp"

using namespace vconway;

namespace {

struct Tally {
  std::size_t ok = 0;
  std::size_t total = 0;
  void add(bool pass) {
    ++total;
    ok += pass ? 1 : 0;
  }
  [[nodiscard]] bool all() const { return ok == total; }
  [[nodiscard]] std::string str() const { return std::to_string(ok) + "/" + std::to_string(total); }
};

// Every Z computed here also feeds the reconstruction part of criterion 10.
Tally g_reconstruct;

LaurentPoly Z(const Diagram& d) {
  const LaurentPoly z = z_polynomial(d);
  const LaurentPoly zn = normalize_x(z);
  g_reconstruct.add(reconstruct(expand_conway(zn)) == zn);
  return z;
}

int g_failed = 0;

void report(int n, bool pass, const std::string& title, const std::string& detail) {
  std::printf("%s  criterion %2d  %s: %s\n", pass ? "PASS" : "FAIL", n, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

void note(const std::string& text) { std::printf("      note: %s\n", text.c_str()); }

Diagram D(const char* s) { return parse_diagram(s); }
LaurentPoly P(const char* s) { return parse_laurent(s); }

const LaurentPoly kX = LaurentPoly::x();
const LaurentPoly kOneMinusX = LaurentPoly::one() - LaurentPoly::x();

void classical_vanishing() {
  Tally t;
  for (const char* code : {oracle::kTrefoil, oracle::kFigureEight, oracle::kHopf}) t.add(Z(D(code)).is_zero());
  report(1, t.all(), "classical vanishing", t.str() + " of trefoil, figure-eight, Hopf link have Z = 0");
  note("Hopf link checked as " + std::string("O1+ U2+ / U1+ O2+") +
       "; the code O1+ O2+ / U1+ U2+ has no planar realisation and gives Z = " +
       to_string(Z(D(oracle::kSameOverHopf))));
}

void move_invariance() {
  testgen::Rng rng(1001);
  Tally walks, kinks;
  const LaurentPoly factors[] = {LaurentPoly::one(), kX, LaurentPoly::x(-1), LaurentPoly::one()};
  for (int i = 0; i < 500; ++i) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    const LaurentPoly z = Z(d);
    walks.add(normalize_x(Z(random_walk(d, 50, rng()))) == normalize_x(z));
    for (std::size_t comp = 0; comp < d.component_count(); ++comp)
      for (KinkType k : kAllKinkTypes)
        kinks.add(Z(apply(d, {MoveKind::r1_add, {Gap{comp, 0}}, k, 1, true, {}})) == z * factors[int(k)]);
  }
  report(2, walks.all() && kinks.all(), "move invariance",
         "Z~ equal after 50-step walks " + walks.str() + ", kink factors 1, x, x^-1, 1 " + kinks.str());
}

void skein() {
  testgen::Rng rng(1002);
  Tally stated;
  for (int i = 0; i < 200; ++i) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    for (int id : d.classical_ids()) {
      const LaurentPoly lhs = Z(with_sign(d, id, 1)) - kX * Z(with_sign(d, id, -1));
      const LaurentPoly z0 = Z(smooth(d, id));
      stated.add((lhs - kOneMinusX * z0).is_zero());
    }
  }
  report(3, stated.all(), "skein relation",
         "Z(D+) - x Z(D-) - (1-x) Z(D0) = 0 at " + stated.str() + " crossings of 200 diagrams");
}

void disjoint_union_check() {
  testgen::Rng rng(1003);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const Diagram a = testgen::random_link(rng, 6, 3), b = testgen::random_link(rng, 6, 3);
    t.add(Z(disjoint_union(a, b)) == Z(a) * Z(b));
  }
  report(4, t.all(), "disjoint union", "Z(d1 + d2) = Z(d1) Z(d2) on " + t.str() + " pairs");
}

void c0_tp_cross_check() {
  testgen::Rng rng(1004);
  Tally t, signed_t, by_count[4];
  while (t.total < 500) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    if (d.classical_count() == 0 || d.has_crossing_free_component()) continue;
    const LaurentPoly c0 = eval_x1(Z(d));
    const LaurentPoly via = c0_via_tp(d);
    t.add(c0 == via);
    by_count[d.component_count()].add(c0 == via);
    signed_t.add(c0 == (d.component_count() % 2 == 0 ? via : -via));
  }
  const Diagram hopf = D(oracle::kVirtualHopf);
  const LaurentPoly want = P("y + 2 + y^-1");
  const bool hopf_ok = eval_x1(Z(hopf)) == want && c0_via_tp(hopf) == want;
  report(5, t.all() && hopf_ok, "c0 via TP cross-check",
         "c0 = c0_via_tp on " + t.str() + " diagrams; virtual Hopf link both " + (hopf_ok ? "=" : "!=") +
             " y + 2 + y^-1");
  note("by component count: 1: " + by_count[1].str() + ", 2: " + by_count[2].str() + ", 3: " + by_count[3].str() +
       "; c0 = (-1)^components c0_via_tp on " + signed_t.str());
  note("Z is normalised by (-1)^(n + components) so that the skein relation holds; with (-1)^n alone this "
       "criterion passes and criteria 3, 7, 8 fail instead");
}

void c0_identities() {
  testgen::Rng rng(1005);
  Tally knots, reversed, symmetric;
  for (int i = 0; i < 500; ++i) knots.add(eval_x1(Z(testgen::random_knot(rng, 8))).is_zero());
  for (int i = 0; i < 500; ++i) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    const LaurentPoly v = eval_x1(Z(d));
    reversed.add(eval_x1(Z(reverse(d))) == v);
    symmetric.add(substitute_y_inverse(v) == (d.component_count() % 2 == 0 ? v : -v));
  }
  report(6, knots.all() && reversed.all() && symmetric.all(), "c0 identities",
         "knot c0 = 0 " + knots.str() + ", reverse " + reversed.str() + ", y -> y^-1 symmetry " + symmetric.str());
}

struct KnotIdentities {
  Tally c1_stated, defect;
};

void knot_identities(const Diagram& d, KnotIdentities& k) {
  const std::vector<int> ids = d.classical_ids();
  for (int id : ids) {
    const LaurentPoly diff = c1(with_sign(d, id, 1)) - c1(with_sign(d, id, -1));
    const LaurentPoly smoothed = eval_x1(Z(smooth(d, id)));
    k.c1_stated.add(diff == smoothed);
  }
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b) k.defect.add(order_one_defect(d, ids[a], ids[b]).is_zero());
}

void vassiliev_structure() {
  testgen::Rng rng(1006);
  Tally order0;
  for (int i = 0; i < 200; ++i) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    for (int id : d.classical_ids()) order0.add(eval_x1(Z(with_sign(d, id, 1))) == eval_x1(Z(with_sign(d, id, -1))));
  }
  KnotIdentities k;
  for (int i = 0; i < 200; ++i) knot_identities(testgen::random_knot(rng, 7), k);
  report(7, order0.all() && k.c1_stated.all() && k.defect.all(), "Vassiliev structure",
         "c0(D+) = c0(D-) " + order0.str() + ", knots c1(D+) - c1(D-) = c0(D0) " + k.c1_stated.str() +
             ", order_one_defect = 0 " + k.defect.str());
}

void orientation_sensitivity() {
  const OrientationSearch s = search_noninvertible(4);
  if (!s.hit) {
    report(8, false, "orientation sensitivity", "no hit among " + std::to_string(s.examined) + " codes");
    return;
  }
  KnotIdentities k;
  knot_identities(s.hit->diagram, k);
  knot_identities(reverse(s.hit->diagram), k);
  std::string code = format_diagram(s.hit->diagram);
  code.pop_back();
  report(8, k.c1_stated.all() && k.defect.all(), "orientation sensitivity",
         "\"" + code + "\" after " + std::to_string(s.examined) + " codes: c1 = " + to_string(s.hit->c1) +
             ", c1(reverse) = " + to_string(s.hit->c1_reverse) + "; criterion 7 identities on D and reverse: c1 " +
             k.c1_stated.str() + ", defect " + k.defect.str());
  const bool reference = s.hit->c1 == P("-y^2 - y + 1 + y^-1") && s.hit->c1_reverse == P("y + 1 - y^-1 - y^-2");
  note(std::string("the pair ") + (reference ? "equals" : "differs from") +
       " the reference values -y^2 - y + 1 + y^-1 / y + 1 - y^-1 - y^-2 (figure not reconstructed, informational)");
}

void non_vassiliev_links() {
  const auto hit = search_non_vassiliev_link(6, 10000, 1009);
  if (!hit) {
    report(9, false, "c1 not Vassiliev for links", "no hit in 10000 trials");
    return;
  }
  std::string code = format_diagram(hit->diagram);
  for (char& ch : code)
    if (ch == '\n') ch = '/';
  report(9, true, "c1 not Vassiliev for links",
         "trial " + std::to_string(hit->trial + 1) + ": " + code + " has vassiliev_eval(c1) = " + to_string(hit->value));
}

void oracle_equivalence() {
  testgen::Rng rng(1010);
  Tally matrices, diagrams;
  for (int i = 0; i < 500; ++i) {
    const PolyMatrix m = testgen::random_matrix(rng, static_cast<std::size_t>(testgen::uniform_int(rng, 1, 5)));
    matrices.add(det(m) == det_cofactor(m));
  }
  for (int i = 0; i < 500; ++i) {
    const Diagram d = testgen::random_link(rng, 5, 3);
    diagrams.add(Z(d) == z_polynomial_cofactor(d));
  }
  report(10, matrices.all() && diagrams.all() && g_reconstruct.all(), "oracle equivalence",
         "det = cofactor on " + matrices.str() + " matrices and " + diagrams.str() +
             " diagrams; Conway reconstruction " + g_reconstruct.str());
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {classical_vanishing, move_invariance,         skein,
                                            disjoint_union_check, c0_tp_cross_check,              c0_identities,
                                            vassiliev_structure, orientation_sensitivity, non_vassiliev_links,
                                            oracle_equivalence};
  for (const auto& run : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      report(0, false, "exception", e.what());
    }
  }
  std::printf("%d of 10 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
