#include "vconway/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "vconway/conway_poly.hpp"
#include "vconway/diagram_io.hpp"
#include "vconway/moves.hpp"

namespace vconway {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = detail();
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string crossing_label(int id) { return "crossing " + std::to_string(id); }

std::string mismatch(const LaurentPoly& got, const LaurentPoly& want) {
  return to_string(got) + " != " + to_string(want);
}

const LaurentPoly& kink_factor(KinkType k) {
  static const LaurentPoly one = LaurentPoly::one();
  static const LaurentPoly x = LaurentPoly::x();
  static const LaurentPoly x_inv = LaurentPoly::x(-1);
  switch (k) {
    case KinkType::under_first_positive: return x;
    case KinkType::under_first_negative: return x_inv;
    default: return one;
  }
}

std::string kink_name(KinkType k) {
  switch (k) {
    case KinkType::over_first_positive: return "over-first positive";
    case KinkType::under_first_positive: return "under-first positive";
    case KinkType::under_first_negative: return "under-first negative";
    case KinkType::over_first_negative: return "over-first negative";
  }
  return "?";
}

void check_singular(const Diagram& d, ZOptions zo, std::vector<CheckResult>& out) {
  Checker v0("vassiliev-c0");
  const LaurentPoly e0 = vassiliev_eval<LaurentPoly>(d, [&](const Diagram& e) { return c0(e, zo); });
  v0.expect(e0.is_zero(), [&] { return "vassiliev_eval(c0) = " + to_string(e0); });
  out.push_back(v0.done());

  if (d.component_count() == 1 && d.double_count() >= 2) {
    Checker v1("vassiliev-c1");
    const LaurentPoly e1 = vassiliev_eval<LaurentPoly>(d, [&](const Diagram& e) { return c1(e, zo); });
    v1.expect(e1.is_zero(), [&] { return "vassiliev_eval(c1) = " + to_string(e1); });
    out.push_back(v1.done());
  }
}

}  // namespace

std::vector<CheckResult> check_diagram(const Diagram& d, const CheckOptions& opts) {
  require_valid(d);
  std::vector<CheckResult> out;
  if (d.is_singular()) {
    check_singular(d, opts.z, out);
    return out;
  }
  const ZOptions zo = opts.z;
  auto Z = [&](const Diagram& e) { return z_polynomial(e, zo); };
  const LaurentPoly z = Z(d);
  const LaurentPoly zn = normalize_x(z);
  const LaurentPoly c0d = eval_x1(z);
  const std::vector<int> ids = d.classical_ids();
  const LaurentPoly x = LaurentPoly::x();
  const LaurentPoly one_minus_x = LaurentPoly::one() - x;

  if (d.classical_count() <= opts.oracle_max_crossings) {
    Checker c("oracle");
    const LaurentPoly slow = z_polynomial_cofactor(d, zo);
    c.expect(slow == z, [&] { return "elimination " + mismatch(z, slow); });
    out.push_back(c.done());
  }

  {
    Checker c("reconstruct");
    const LaurentPoly back = reconstruct(expand_conway(zn));
    c.expect(back == zn, [&] { return mismatch(back, zn); });
    out.push_back(c.done());
  }

  if (!ids.empty()) {
    Checker c("tp");
    const SlotPermutation p = build_P(d);
    const SlotPermutation tp = build_TP(d);
    c.expect(tp == SlotPermutation::side_swap(ids.size()) * p, [] { return "TP differs from T*P"; });
    std::size_t carrying = 0;
    for (const Component& comp : d.components()) carrying += comp.empty() ? 0 : 1;
    c.expect(tp.cycle_count() == carrying, [&] {
      return std::to_string(tp.cycle_count()) + " cycles for " + std::to_string(carrying) + " components";
    });
    out.push_back(c.done());
  }

  {
    Checker c("moves");
    for (MoveKind kind : {MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::r3})
      for (const MoveEvent& m : enumerate_moves(d, kind)) {
        const LaurentPoly after = z_normalized(apply(d, m), zo);
        c.expect(after == zn, [&] { return describe(m) + ": " + mismatch(after, zn); });
      }
    const Diagram walked = random_walk(d, opts.walk_steps, opts.walk_seed);
    const LaurentPoly after = z_normalized(walked, zo);
    c.expect(after == zn, [&] { return "walk to " + format_diagram(walked) + ": " + mismatch(after, zn); });
    out.push_back(c.done());
  }

  if (d.component_count() > 0) {
    Checker c("kinks");
    for (std::size_t comp = 0; comp < d.component_count(); ++comp)
      for (KinkType k : kAllKinkTypes) {
        MoveEvent m;
        m.kind = MoveKind::r1_add;
        m.gaps = {Gap{comp, 0}};
        m.kink = k;
        const LaurentPoly after = Z(apply(d, m));
        const LaurentPoly want = z * kink_factor(k);
        c.expect(after == want, [&] { return kink_name(k) + " kink: " + mismatch(after, want); });
      }
    out.push_back(c.done());
  }

  {
    Checker stated("skein");
    Checker order0("c0-order-zero");
    for (int id : ids) {
      const LaurentPoly zp = Z(with_sign(d, id, 1));
      const LaurentPoly zm = Z(with_sign(d, id, -1));
      const LaurentPoly z0 = Z(smooth(d, id));
      const LaurentPoly residual = zp - x * zm - one_minus_x * z0;
      stated.expect(residual.is_zero(), [&] { return crossing_label(id) + ": residual " + to_string(residual); });
      order0.expect(eval_x1(zp) == eval_x1(zm),
                    [&] { return crossing_label(id) + ": " + mismatch(eval_x1(zp), eval_x1(zm)); });
    }
    out.push_back(stated.done());
    out.push_back(order0.done());
  }

  if (opts.partner) {
    Checker c("union");
    const LaurentPoly joint = Z(disjoint_union(d, *opts.partner));
    const LaurentPoly want = z * Z(*opts.partner);
    c.expect(joint == want, [&] { return "with " + format_diagram(*opts.partner) + ": " + mismatch(joint, want); });
    out.push_back(c.done());
  }

  if (!ids.empty() && !d.has_crossing_free_component()) {
    Checker c("c0-tp");
    Checker signed_c("c0-tp-signed");
    const LaurentPoly via = c0_via_tp(d);
    c.expect(via == c0d, [&] { return mismatch(c0d, via); });
    const LaurentPoly want = d.component_count() % 2 == 0 ? via : -via;
    signed_c.expect(want == c0d, [&] { return mismatch(c0d, want); });
    out.push_back(c.done());
    out.push_back(signed_c.done());
  }

  {
    Checker c("c0-reverse");
    const LaurentPoly rev = c0(reverse(d), zo);
    c.expect(rev == c0d, [&] { return "reverse " + mismatch(rev, c0d); });
    out.push_back(c.done());
  }

  {
    Checker c("c0-y-inverse");
    const LaurentPoly flipped = substitute_y_inverse(c0d);
    const LaurentPoly want = d.component_count() % 2 == 0 ? c0d : -c0d;
    c.expect(flipped == want, [&] { return "c0(y^-1) = " + mismatch(flipped, want); });
    out.push_back(c.done());
  }

  if (d.component_count() == 1) {
    Checker vanish("knot-c0");
    vanish.expect(c0d.is_zero(), [&] { return "c0 = " + to_string(c0d); });
    out.push_back(vanish.done());

    Checker stated("c1-skein");
    for (int id : ids) {
      const LaurentPoly diff = c1(with_sign(d, id, 1), zo) - c1(with_sign(d, id, -1), zo);
      const LaurentPoly c00 = c0(smooth(d, id), zo);
      stated.expect(diff == c00, [&] { return crossing_label(id) + ": c1+ - c1- = " + mismatch(diff, c00); });
    }
    out.push_back(stated.done());

    Checker order1("order-one");
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const LaurentPoly defect = order_one_defect(d, ids[i], ids[j], zo);
        const LaurentPoly smoothed = c0(smooth(with_sign(d, ids[i], 1), ids[j]), zo) -
                                     c0(smooth(with_sign(d, ids[i], -1), ids[j]), zo);
        order1.expect(defect.is_zero() && smoothed.is_zero(), [&] {
          return "crossings " + std::to_string(ids[i]) + "," + std::to_string(ids[j]) + ": defect " +
                 to_string(defect) + ", c0(D+0) - c0(D-0) = " + to_string(smoothed);
        });
      }
    out.push_back(order1.done());
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t trial) {
  // splitmix64 finaliser
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

struct Subject {
  Diagram diagram;
  CheckOptions opts;
};

using TrialBody = std::function<std::vector<Subject>(std::size_t trial)>;

CampaignSummary run_trials(std::size_t trials, std::size_t jobs, const TrialBody& body) {
  std::vector<std::vector<std::pair<Diagram, std::vector<CheckResult>>>> results(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++)
      for (Subject& s : body(t)) results[t].emplace_back(s.diagram, check_diagram(s.diagram, s.opts));
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(jobs, trials));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  }

  CampaignSummary summary;
  summary.trials = trials;
  for (std::size_t t = 0; t < trials; ++t)
    for (const auto& [diagram, checks] : results[t])
      for (const CheckResult& r : checks) {
        CheckTally& tally = summary.tallies[r.name];
        if (r.passed) {
          ++tally.passed;
          continue;
        }
        ++tally.failed;
        summary.failures.push_back({t, r.name, r.detail, format_diagram(diagram)});
      }
  return summary;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Diagram random_partner(std::mt19937_64& rng) {
  return random_diagram({uniform(rng, 0, 3), uniform(rng, 1, 2), 0, rng()});
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  return run_trials(cfg.trials, cfg.jobs, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(cfg.seed, t));
    GeneratorConfig g;
    if (cfg.counts) {
      g = {(*cfg.counts)[0], (*cfg.counts)[1], (*cfg.counts)[2], rng()};
    } else {
      g.classical_crossings = uniform(rng, 0, cfg.max_crossings);
      g.components = uniform(rng, 1, std::max<std::size_t>(1, cfg.max_components));
      g.seed = rng();
    }
    CheckOptions opts;
    opts.z = cfg.z;
    opts.walk_steps = cfg.moves;
    opts.walk_seed = rng();
    opts.partner = random_partner(rng);
    std::vector<Subject> subjects{{random_diagram(g), opts}};
    if (!cfg.counts) subjects.push_back({random_diagram({uniform(rng, 0, 4), 1, 2, rng()}), opts});
    return subjects;
  });
}

CampaignSummary verify_diagram(const Diagram& d, std::size_t trials, std::size_t moves, std::uint64_t seed,
                               ZOptions z, std::size_t jobs) {
  require_valid(d);
  return run_trials(trials, jobs, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    CheckOptions opts;
    opts.z = z;
    opts.walk_steps = moves;
    opts.walk_seed = rng();
    opts.partner = random_partner(rng);
    return std::vector<Subject>{{d, opts}};
  });
}

namespace {

// Positions of a perfect matching on 2n slots, filled left to right, then
// every over/under choice and sign pattern.
void enumerate_matchings(std::vector<int>& slots, int next_id, const std::function<bool()>& leaf) {
  auto first_free = std::find(slots.begin(), slots.end(), 0);
  if (first_free == slots.end()) {
    leaf();
    return;
  }
  *first_free = next_id;
  for (auto it = first_free + 1; it != slots.end(); ++it) {
    if (*it != 0) continue;
    *it = next_id;
    enumerate_matchings(slots, next_id + 1, leaf);
    *it = 0;
  }
  *first_free = 0;
}

}  // namespace

void for_each_knot_code(std::size_t n, const std::function<bool(const Diagram&)>& visit) {
  if (n == 0) {
    visit(Diagram({Component{}}, {}));
    return;
  }
  std::vector<int> slots(2 * n, 0);
  bool stop = false;
  enumerate_matchings(slots, 1, [&] {
    if (stop) return false;
    for (std::uint32_t over_mask = 0; over_mask < (1u << n) && !stop; ++over_mask)
      for (std::uint32_t sign_mask = 0; sign_mask < (1u << n) && !stop; ++sign_mask) {
        std::map<int, Crossing> crossings;
        for (std::size_t i = 0; i < n; ++i)
          crossings[static_cast<int>(i + 1)] = {CrossingKind::classical, (sign_mask >> i) & 1u ? -1 : 1};
        std::vector<bool> seen(n + 1, false);
        Component comp;
        for (int id : slots) {
          const bool first = !seen[id];
          seen[id] = true;
          const bool over_first = ((over_mask >> (id - 1)) & 1u) == 0;
          comp.push_back({id, first == over_first ? Role::over : Role::under});
        }
        stop = !visit(Diagram({comp}, crossings));
      }
    return !stop;
  });
}

OrientationSearch search_noninvertible(std::size_t max_crossings, std::size_t budget, std::uint64_t seed) {
  OrientationSearch result;
  for (std::size_t n = 0; n <= max_crossings; ++n) {
    std::vector<Diagram> codes;
    for_each_knot_code(n, [&](const Diagram& d) {
      codes.push_back(d);
      return true;
    });
    if (seed != 0) {
      std::mt19937_64 rng(trial_seed(seed, n));
      std::shuffle(codes.begin(), codes.end(), rng);
    }
    for (const Diagram& d : codes) {
      if (budget != 0 && result.examined >= budget) {
        result.budget_exhausted = true;
        return result;
      }
      ++result.examined;
      const LaurentPoly forward = c1(d);
      const LaurentPoly backward = c1(reverse(d));
      if (forward != backward) {
        result.hit = OrientationHit{d, forward, backward};
        return result;
      }
    }
  }
  return result;
}

std::optional<NonVassilievHit> search_non_vassiliev_link(std::size_t max_classical, std::size_t trials,
                                                        std::uint64_t seed) {
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_seed(seed, t));
    const Diagram d = random_diagram({uniform(rng, 0, max_classical), 2, 2, rng()});
    const LaurentPoly v = vassiliev_eval<LaurentPoly>(d, [](const Diagram& e) { return c1(e); });
    if (!v.is_zero()) return NonVassilievHit{d, v, t};
  }
  return std::nullopt;
}

}  // namespace vconway
