#pragma once

// Property checks over single diagrams, randomized verification campaigns,
// and searches for orientation-sensitive knots and non-Vassiliev links.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vconway/diagram.hpp"
#include "vconway/invariants.hpp"
#include "vconway/laurent.hpp"

namespace vconway {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Empty on success; otherwise what disagreed.
  std::string detail;
};

struct CheckOptions {
  ZOptions z;
  std::size_t walk_steps = 50;
  std::uint64_t walk_seed = 1;
  /// Second factor for the disjoint-union check; skipped when absent.
  std::optional<Diagram> partner;
  /// Largest crossing count for the cofactor oracle.
  std::size_t oracle_max_crossings = 5;
};

/// Runs every property applicable to d (valid, possibly singular).
/// Non-singular: oracle, reconstruct, tp, moves, kinks, skein,
/// c0-order-zero, union, c0-tp, c0-tp-signed, c0-reverse, c0-y-inverse, and for
/// knots knot-c0, c1-skein, order-one.
/// Singular: vassiliev-c0, and for knots with two or more double points
/// vassiliev-c1.
/// c0-tp compares c0 with det(diag + TP) as is; c0-tp-signed
/// includes the (-1)^components factor that the Z normalisation implies.
std::vector<CheckResult> check_diagram(const Diagram& d, const CheckOptions& opts);

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::size_t trial = 0;
  std::string check;
  std::string detail;
  std::string diagram;  // format_diagram output
};

struct CampaignSummary {
  std::size_t trials = 0;
  /// Keyed by check name, sorted.
  std::map<std::string, CheckTally> tallies;
  /// At most one per (check, trial), ordered by trial then check.
  std::vector<Counterexample> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

struct CampaignConfig {
  std::size_t trials = 500;
  /// Fixed (classical crossings, components, double points) for every trial.
  /// When absent each trial draws 0..max_crossings crossings and
  /// 1..max_components components, non-singular, and additionally checks a
  /// random singular knot with two double points.
  std::optional<std::array<std::size_t, 3>> counts;
  std::size_t max_crossings = 8;
  std::size_t max_components = 3;
  std::size_t moves = 50;
  std::uint64_t seed = 1;
  ZOptions z;
  std::size_t jobs = 1;
};

/// Seed for trial i of a campaign with the given base seed.
std::uint64_t trial_seed(std::uint64_t base, std::size_t trial);

CampaignSummary run_campaign(const CampaignConfig& cfg);

/// check_diagram on a fixed diagram, once per trial with a different walk
/// seed and a different random union partner.
CampaignSummary verify_diagram(const Diagram& d, std::size_t trials, std::size_t moves, std::uint64_t seed,
                               ZOptions z = {}, std::size_t jobs = 1);

/// Calls visit on every single-component signed Gauss code with exactly n
/// classical crossings (ids 1..n numbered by first occurrence) until it
/// returns false.
void for_each_knot_code(std::size_t n, const std::function<bool(const Diagram&)>& visit);

struct OrientationHit {
  Diagram diagram;
  LaurentPoly c1;
  LaurentPoly c1_reverse;
};

struct OrientationSearch {
  std::optional<OrientationHit> hit;
  std::size_t examined = 0;
  bool budget_exhausted = false;
};

/// Knot codes with 0..max_crossings crossings in increasing size; the first
/// with c1(D) != c1(reverse(D)) wins. seed 0 keeps the canonical order
/// inside each size, any other seed shuffles it. budget 0 means unlimited.
OrientationSearch search_noninvertible(std::size_t max_crossings, std::size_t budget = 0,
                                       std::uint64_t seed = 0);

struct NonVassilievHit {
  Diagram diagram;
  LaurentPoly value;  // vassiliev_eval of c1
  std::size_t trial = 0;
};

/// Random two-component links with two double points and 0..max_classical
/// classical crossings; the first with nonzero vassiliev_eval(c1) wins.
std::optional<NonVassilievHit> search_non_vassiliev_link(std::size_t max_classical, std::size_t trials,
                                                        std::uint64_t seed);

}  // namespace vconway
