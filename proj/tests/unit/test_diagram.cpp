#include <doctest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "vconway/diagram.hpp"
#include "vconway/diagram_io.hpp"

using namespace vconway;

namespace {

std::size_t nonempty_components(const Diagram& d) {
  std::size_t n = 0;
  for (const Component& c : d.components()) n += c.empty() ? 0 : 1;
  return n;
}

bool has_issue(const Diagram& d, const std::string& text) {
  for (const ValidationIssue& i : validate(d))
    if (i.message == text) return true;
  return false;
}

}  // namespace

TEST_CASE("parse: comments, blank lines and empty components") {
  const Diagram d = parse_diagram("# two loops\n\ncomponent: O1+ U2-\n  component:   U1+ O2-  \ncomponent:\n");
  CHECK(d.component_count() == 3);
  CHECK(d.classical_count() == 2);
  CHECK(d.crossing(2).sign == -1);
  CHECK(d.has_crossing_free_component());
  CHECK(validate(d).empty());
  CHECK(d.writhe() == 0);
}

TEST_CASE("parse: double points") {
  const Diagram d = parse_diagram("component: A3 O1+ B3 U1+\n");
  CHECK(d.is_singular());
  CHECK(d.double_count() == 1);
  CHECK(d.double_ids() == std::vector<int>{3});
  CHECK(d.classical_ids() == std::vector<int>{1});
  CHECK(validate(d).empty());
}

TEST_CASE("parse errors carry positions") {
  auto error_at = [](const char* text, std::size_t line, std::size_t col) {
    try {
      (void)parse_diagram(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return;
    }
    FAIL("no ParseError for " << text);
  };
  error_at("component: O1+ X2+\n", 1, 16);
  error_at("\ncomponent: O1\n", 2, 14);
  error_at("compnent: O1+\n", 1, 1);
  error_at("component: O1+\ncomponent: U1-\n", 2, 12);
  error_at("component: O1+ A1\n", 1, 16);
  error_at("component: O0+\n", 1, 13);
}

TEST_CASE("validation messages") {
  CHECK(has_issue(parse_diagram("component: O1+ O1+\n"), "crossing 1: has two over-passages"));
  CHECK(has_issue(parse_diagram("component: U1+ U1+\n"), "crossing 1: has two under-passages"));
  CHECK(has_issue(parse_diagram("component: O1+\n"), "crossing 1: occurs 1 times, expected 2"));
  CHECK(has_issue(parse_diagram("component: A1 A1\n"), "crossing 1: has two A-passages"));
  const Diagram dangling({Component{{7, Role::over}, {7, Role::under}}}, {});
  CHECK(has_issue(dangling, "crossing 7: dangling crossing (referenced but not declared)"));
  CHECK_THROWS_AS(require_valid(dangling), DiagramError);
}

TEST_CASE("format round trip") {
  const char* text = "component: O1+ U2- A3\ncomponent:\ncomponent: U1+ O2- B3\n";
  const Diagram d = parse_diagram(text);
  CHECK(format_diagram(d) == text);
  CHECK(parse_diagram(format_diagram(d)) == d);
}

TEST_CASE("virtual Hopf link slot maps") {
  const Diagram d = parse_diagram(oracle::kVirtualHopf);
  CHECK(entry_side(1, Role::over) == Side::left);
  CHECK(entry_side(1, Role::under) == Side::right);
  CHECK(entry_side(-1, Role::over) == Side::right);
  CHECK(build_P(d) == SlotPermutation::side_swap(1));
  CHECK(build_TP(d) == SlotPermutation::identity(1));
  CHECK_THROWS_WITH_AS(build_P(parse_diagram("component: A1 B1\n")), "resolve double points first", DiagramError);
}

TEST_CASE("slot permutations") {
  const SlotPermutation t = SlotPermutation::side_swap(2);
  CHECK(t * t == SlotPermutation::identity(2));
  CHECK(t.cycle_count() == 2);
  const SlotPermutation p(std::vector<std::size_t>{1, 2, 3, 0});
  CHECK(p * p.inverse() == SlotPermutation::identity(2));
  CHECK(p.cycle_count() == 1);
  CHECK_THROWS_AS(SlotPermutation(std::vector<std::size_t>{0, 0}), DiagramError);
}

TEST_CASE("smoothing splits and joins components") {
  const Diagram knot = parse_diagram(oracle::kVirtualTrefoil);
  const Diagram split = smooth(knot, 1);
  CHECK(split.component_count() == 2);
  CHECK(format_diagram(split) == "component: U2+\ncomponent: O2+\n");
  const Diagram joined = smooth(parse_diagram(oracle::kVirtualHopf), 1);
  CHECK(joined.component_count() == 1);
  CHECK(joined.classical_count() == 0);
}

TEST_CASE("double point resolutions") {
  const Diagram d = parse_diagram("component: A1 B1\n");
  CHECK(format_diagram(resolve_double(d, 1, Resolution::positive)) == "component: O1+ U1+\n");
  CHECK(format_diagram(resolve_double(d, 1, Resolution::negative)) == "component: U1- O1-\n");
  CHECK(resolve_double(d, 1, Resolution::smoothing).component_count() == 2);
  CHECK_THROWS_AS(resolve_all(d, {1, 1}), DiagramError);
  CHECK_THROWS_AS(resolve_double(parse_diagram(oracle::kVirtualHopf), 1, Resolution::positive), DiagramError);
}

TEST_CASE("disjoint union shifts ids") {
  const Diagram a = parse_diagram(oracle::kVirtualHopf);
  const Diagram u = disjoint_union(a, a);
  CHECK(u.component_count() == 4);
  CHECK(u.classical_ids() == std::vector<int>{1, 2});
  CHECK(validate(u).empty());
}

TEST_CASE("property: slot maps on random diagrams") {
  testgen::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Diagram d = testgen::random_link(rng, 8, 3);
    REQUIRE(validate(d).empty());
    if (d.classical_count() == 0) continue;
    const SlotPermutation p = build_P(d);
    const SlotPermutation tp = build_TP(d);
    CHECK(tp == SlotPermutation::side_swap(d.classical_count()) * p);
    CHECK(tp.cycle_count() == nonempty_components(d));
    CHECK(p.inverse().inverse() == p);
  }
}

TEST_CASE("property: involutions and smoothing counts") {
  testgen::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const Diagram d = testgen::random_link(rng, 7, 3);
    CHECK(reverse(reverse(d)) == d);
    CHECK(mirror(mirror(d)) == d);
    CHECK(mirror(d).writhe() == -d.writhe());
    CHECK(parse_diagram(format_diagram(d)) == d);
    for (int id : d.classical_ids()) {
      CHECK(switch_crossing(switch_crossing(d, id), id) == d);
      CHECK(with_sign(d, id, d.crossing(id).sign) == d);
      const Diagram s = smooth(d, id);
      CHECK(validate(s).empty());
      CHECK(s.classical_count() + 1 == d.classical_count());
      const std::size_t c = d.component_count();
      CHECK((s.component_count() == c + 1 || s.component_count() + 1 == c));
    }
  }
}

TEST_CASE("property: resolving double points gives valid diagrams") {
  testgen::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = testgen::random_link(rng, 5, 2, 2);
    REQUIRE(validate(d).empty());
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        const Diagram r = resolve_all(d, {a, b});
        CHECK_FALSE(r.is_singular());
        CHECK(validate(r).empty());
        CHECK(r.component_count() == d.component_count());
      }
  }
}
