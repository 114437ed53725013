// vconway: compute and verify Z / Conway invariants of virtual link diagrams.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vconway/campaign.hpp"
#include "vconway/diagram_io.hpp"
#include "vconway/invariants.hpp"
#include "vconway/moves.hpp"
#include "vconway/report.hpp"

namespace vc = vconway;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr std::size_t kShownCounterexamples = 10;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_output(const std::string& format) { return format == "json"; }

vc::Diagram load_valid(const std::string& path) {
  vc::Diagram d = vc::load_diagram(path);
  const auto issues = vc::validate(d);
  if (!issues.empty()) {
    std::string msg = path + ": invalid diagram";
    for (const auto& issue : issues) msg += "\n  " + issue.message;
    throw InputError(msg);
  }
  return d;
}

std::array<std::size_t, 3> parse_counts(const std::string& text) {
  std::array<std::size_t, 3> out{};
  std::istringstream in(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 3 || part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("--random expects k,c,d with non-negative integers, got '" + text + "'");
    out[i++] = std::stoul(part);
  }
  if (i != 3) throw InputError("--random expects k,c,d, got '" + text + "'");
  if (out[1] == 0) throw InputError("--random needs at least one component");
  return out;
}

int print_summary(const vc::CampaignSummary& s, const std::string& format) {
  if (json_output(format)) {
    Json j;
    j["trials"] = s.trials;
    j["passed"] = s.ok();
    Json checks = Json::object();
    for (const auto& [name, t] : s.tallies) checks[name] = {{"passed", t.passed}, {"failed", t.failed}};
    j["checks"] = checks;
    Json failures = Json::array();
    for (const auto& f : s.failures)
      failures.push_back({{"trial", f.trial}, {"check", f.check}, {"detail", f.detail}, {"diagram", f.diagram}});
    j["failures"] = failures;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "trials: " << s.trials << '\n';
    for (const auto& [name, t] : s.tallies)
      std::cout << name << ": " << t.passed << '/' << (t.passed + t.failed) << (t.failed ? " FAIL" : " ok") << '\n';
    std::size_t shown = 0;
    for (const auto& f : s.failures) {
      if (shown++ == kShownCounterexamples) {
        std::cout << "... " << (s.failures.size() - kShownCounterexamples) << " more counterexamples\n";
        break;
      }
      std::cout << "counterexample (trial " << f.trial << ", " << f.check << "): " << f.detail << '\n'
                << f.diagram;
    }
    std::cout << "result: " << (s.ok() ? "PASS" : "FAIL") << '\n';
  }
  return s.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z-polynomial, Conway polynomial and Vassiliev checks for virtual links"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;

  auto* compute = app.add_subcommand("compute", "Print the invariant report of a diagram file")->fallthrough();
  compute->add_option("file", file, "Diagram file")->required();

  auto* verify = app.add_subcommand("verify", "Run the property checks")->fallthrough();
  std::string random_counts;
  std::size_t moves = 50;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool mutate = false;
  verify->add_option("file", file, "Diagram file; random diagrams when omitted");
  verify->add_option("--random", random_counts, "Fixed counts k,c,d (crossings, components, double points)");
  verify->add_option("--moves", moves, "Random walk length");
  verify->add_option("--trials", trials, "Number of trials");
  verify->add_option("--seed", seed, "Base seed");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--mutate", mutate, "Negate M- (harness sanity check; expected to fail)");

  auto* skein = app.add_subcommand("skein", "Skein triple at one crossing")->fallthrough();
  int crossing_id = 0;
  skein->add_option("file", file, "Diagram file")->required();
  skein->add_option("--crossing", crossing_id, "Classical crossing id")->required();

  auto* orient = app.add_subcommand("orient", "c1 of D, reverse, mirror, mirror of reverse")->fallthrough();
  orient->add_option("file", file, "Diagram file")->required();

  auto* search = app.add_subcommand("search", "Find a knot with c1(D) != c1(reverse D)")->fallthrough();
  std::size_t max_crossings = 4;
  std::size_t budget = 0;
  std::uint64_t search_seed = 0;
  search->add_option("--max-crossings", max_crossings, "Largest crossing count")->required();
  search->add_option("--budget", budget, "Diagrams to examine, 0 for unlimited");
  search->add_option("--seed", search_seed, "0 for canonical order, otherwise shuffled");

  auto* random = app.add_subcommand("random", "Generate a random diagram")->fallthrough();
  vc::GeneratorConfig gen;
  bool emit = false;
  random->add_option("--crossings", gen.classical_crossings, "Classical crossings")->required();
  random->add_option("--components", gen.components, "Components")->required()->check(CLI::PositiveNumber);
  random->add_option("--doubles", gen.double_points, "Double points");
  random->add_option("--seed", gen.seed, "Seed")->required();
  random->add_flag("--emit", emit, "Print only the diagram code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const bool js = json_output(format);
    if (compute->parsed()) {
      const vc::InvariantReport r = vc::compute_report(load_valid(file));
      std::cout << (js ? vc::to_json(r) : vc::to_text(r));
      return 0;
    }

    if (verify->parsed()) {
      const vc::ZOptions z{mutate};
      if (!file.empty()) {
        if (!random_counts.empty()) throw InputError("verify takes either a file or --random, not both");
        return print_summary(vc::verify_diagram(load_valid(file), trials, moves, seed, z, jobs), format);
      }
      vc::CampaignConfig cfg;
      if (!random_counts.empty()) cfg.counts = parse_counts(random_counts);
      cfg.trials = trials;
      cfg.moves = moves;
      cfg.seed = seed;
      cfg.z = z;
      cfg.jobs = jobs;
      return print_summary(vc::run_campaign(cfg), format);
    }

    if (skein->parsed()) {
      const vc::Diagram d = load_valid(file);
      if (d.is_singular()) throw InputError("skein needs a diagram without double points");
      if (!d.crossings().contains(crossing_id) || !d.crossing(crossing_id).is_classical())
        throw InputError("no classical crossing " + std::to_string(crossing_id));
      const vc::LaurentPoly zp = vc::z_polynomial(vc::with_sign(d, crossing_id, 1));
      const vc::LaurentPoly zm = vc::z_polynomial(vc::with_sign(d, crossing_id, -1));
      const vc::LaurentPoly z0 = vc::z_polynomial(vc::smooth(d, crossing_id));
      const vc::LaurentPoly x = vc::LaurentPoly::x();
      const vc::LaurentPoly residual = zp - x * zm - (vc::LaurentPoly::one() - x) * z0;
      if (js) {
        Json j{{"z_plus", to_string(zp)},
               {"z_minus", to_string(zm)},
               {"z_zero", to_string(z0)},
               {"residual", to_string(residual)}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "Z(D+): " << to_string(zp) << '\n'
                  << "Z(D-): " << to_string(zm) << '\n'
                  << "Z(D0): " << to_string(z0) << '\n'
                  << "residual Z(D+) - x*Z(D-) - (1 - x)*Z(D0): " << to_string(residual) << '\n';
      }
      return residual.is_zero() ? 0 : kExitFailure;
    }

    if (orient->parsed()) {
      const vc::Diagram d = load_valid(file);
      if (d.is_singular()) throw InputError("orient needs a diagram without double points");
      const std::pair<const char*, vc::Diagram> rows[] = {{"D", d},
                                                          {"reverse(D)", vc::reverse(d)},
                                                          {"mirror(D)", vc::mirror(d)},
                                                          {"mirror(reverse(D))", vc::mirror(vc::reverse(d))}};
      if (js) {
        Json j = Json::object();
        for (const auto& [label, e] : rows) j[label] = to_string(vc::c1(e));
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& [label, e] : rows) {
          std::string name = label;
          name.resize(20, ' ');
          std::cout << name << vc::to_string(vc::c1(e)) << '\n';
        }
      }
      return 0;
    }

    if (search->parsed()) {
      const vc::OrientationSearch s = vc::search_noninvertible(max_crossings, budget, search_seed);
      if (js) {
        Json j{{"examined", s.examined}, {"budget_exhausted", s.budget_exhausted}, {"found", s.hit.has_value()}};
        if (s.hit) {
          j["diagram"] = vc::format_diagram(s.hit->diagram);
          j["c1"] = to_string(s.hit->c1);
          j["c1_reverse"] = to_string(s.hit->c1_reverse);
        }
        std::cout << j.dump(2) << '\n';
      } else if (s.hit) {
        std::cout << "found after " << s.examined << " diagrams\n"
                  << vc::format_diagram(s.hit->diagram) << "c1(D): " << to_string(s.hit->c1) << '\n'
                  << "c1(reverse(D)): " << to_string(s.hit->c1_reverse) << '\n';
      } else if (s.budget_exhausted) {
        std::cout << "budget exhausted after " << s.examined << " diagrams\n";
      } else {
        std::cout << "no orientation-sensitive knot with at most " << max_crossings << " crossings ("
                  << s.examined << " diagrams)\n";
      }
      return s.hit ? 0 : kExitFailure;
    }

    if (random->parsed()) {
      const vc::Diagram d = vc::random_diagram(gen);
      if (emit) {
        std::cout << vc::format_diagram(d);
      } else {
        const vc::InvariantReport r = vc::compute_report(d);
        std::cout << vc::format_diagram(d) << (js ? vc::to_json(r) : vc::to_text(r));
      }
      return 0;
    }
  } catch (const vc::ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const vc::DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
