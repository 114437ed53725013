#include "vconway/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>


namespace vconway {

namespace {

struct Location {
  std::size_t component;
  std::size_t position;
};

class PassageIndex {
 public:
  explicit PassageIndex(const Diagram& d) : d_(d) {
    for (std::size_t c = 0; c < d.components().size(); ++c)
      for (std::size_t i = 0; i < d.components()[c].size(); ++i) {
        const Passage& p = d.components()[c][i];
        where_[{p.crossing, p.role}] = {c, i};
      }
  }

  [[nodiscard]] std::optional<Location> find(int id, Role role) const {
    auto it = where_.find({id, role});
    if (it == where_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] const Passage& at(const Location& l) const { return d_.components()[l.component][l.position]; }

  [[nodiscard]] Location next(const Location& l) const {
    const std::size_t len = d_.components()[l.component].size();
    return {l.component, (l.position + 1) % len};
  }
  [[nodiscard]] Location prev(const Location& l) const {
    const std::size_t len = d_.components()[l.component].size();
    return {l.component, (l.position + len - 1) % len};
  }

  /// True if passage (id2, r2) directly follows (id1, r1) on a component.
  [[nodiscard]] bool followed_by(int id1, Role r1, int id2, Role r2) const {
    auto a = find(id1, r1);
    if (!a) return false;
    const Passage& n = at(next(*a));
    return n.crossing == id2 && n.role == r2 && !(n.crossing == id1 && n.role == r1);
  }

  [[nodiscard]] bool adjacent(int id1, Role r1, int id2, Role r2) const {
    return followed_by(id1, r1, id2, r2) || followed_by(id2, r2, id1, r1);
  }

 private:
  const Diagram& d_;
  std::map<std::pair<int, Role>, Location> where_;
};

[[noreturn]] void inapplicable(const MoveEvent& m, const std::string& why) {
  throw MoveError("inapplicable move: " + describe(m) + " (" + why + ")");
}

std::vector<Gap> all_gaps(const Diagram& d) {
  std::vector<Gap> gaps;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const std::size_t len = d.components()[c].size();
    for (std::size_t i = 0; i < std::max<std::size_t>(len, 1); ++i) gaps.push_back({c, i});
  }
  return gaps;
}

bool gap_ok(const Diagram& d, const Gap& g) {
  if (g.component >= d.components().size()) return false;
  const std::size_t len = d.components()[g.component].size();
  return g.position < std::max<std::size_t>(len, 1);
}

Diagram without_crossings(const Diagram& d, const std::set<int>& ids) {
  std::vector<Component> comps;
  comps.reserve(d.components().size());
  for (const Component& comp : d.components()) {
    Component kept;
    for (const Passage& p : comp)
      if (!ids.contains(p.crossing)) kept.push_back(p);
    comps.push_back(std::move(kept));
  }
  auto crossings = d.crossings();
  for (int id : ids) crossings.erase(id);
  return {std::move(comps), std::move(crossings)};
}

bool classical(const Diagram& d, int id) {
  auto it = d.crossings().find(id);
  return it != d.crossings().end() && it->second.is_classical();
}

bool is_kink(const Diagram& d, const PassageIndex& idx, int id) {
  return classical(d, id) && idx.adjacent(id, Role::over, id, Role::under);
}

bool is_bigon(const Diagram& d, const PassageIndex& idx, int a, int b) {
  if (a == b || !classical(d, a) || !classical(d, b)) return false;
  if (d.crossing(a).sign != -d.crossing(b).sign) return false;
  return idx.adjacent(a, Role::over, b, Role::over) && idx.adjacent(a, Role::under, b, Role::under);
}

enum class TriangleShape { none, forward, backward };

// Braid-like type III configuration. With x = top/middle, y = top/bottom and
// z = middle/bottom, and all three signs equal:
//   forward:  top O_x O_y, middle U_x O_z, bottom U_y U_z
//   backward: top O_y O_x, middle O_z U_x, bottom U_z U_y
// The move reverses each of the three fragments, exchanging the shapes.
TriangleShape triangle_shape(const Diagram& d, const PassageIndex& idx, int x, int y, int z) {
  if (x == y || y == z || x == z) return TriangleShape::none;
  if (!classical(d, x) || !classical(d, y) || !classical(d, z)) return TriangleShape::none;
  const int s = d.crossing(x).sign;
  if (d.crossing(y).sign != s || d.crossing(z).sign != s) return TriangleShape::none;
  if (idx.followed_by(x, Role::over, y, Role::over) && idx.followed_by(x, Role::under, z, Role::over) &&
      idx.followed_by(y, Role::under, z, Role::under))
    return TriangleShape::forward;
  if (idx.followed_by(y, Role::over, x, Role::over) && idx.followed_by(z, Role::over, x, Role::under) &&
      idx.followed_by(z, Role::under, y, Role::under))
    return TriangleShape::backward;
  return TriangleShape::none;
}

std::vector<Passage> kink_passages(KinkType k, int id) {
  switch (k) {
    case KinkType::over_first_positive:
    case KinkType::over_first_negative: return {{id, Role::over}, {id, Role::under}};
    case KinkType::under_first_positive:
    case KinkType::under_first_negative: return {{id, Role::under}, {id, Role::over}};
  }
  return {};
}

int kink_sign(KinkType k) {
  return (k == KinkType::over_first_positive || k == KinkType::under_first_positive) ? 1 : -1;
}

void insert_at(Component& comp, std::size_t position, const std::vector<Passage>& ps) {
  comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(std::min(position, comp.size())), ps.begin(), ps.end());
}

Diagram apply_r1_add(const Diagram& d, const MoveEvent& m) {
  if (m.gaps.size() != 1 || !gap_ok(d, m.gaps[0])) inapplicable(m, "bad gap");
  const int id = d.max_id() + 1;
  auto comps = d.components();
  insert_at(comps[m.gaps[0].component], m.gaps[0].position, kink_passages(m.kink, id));
  auto crossings = d.crossings();
  crossings[id] = Crossing{CrossingKind::classical, kink_sign(m.kink)};
  return {std::move(comps), std::move(crossings)};
}

Diagram apply_r2_add(const Diagram& d, const MoveEvent& m) {
  if (m.gaps.size() != 2 || !gap_ok(d, m.gaps[0]) || !gap_ok(d, m.gaps[1])) inapplicable(m, "bad gap");
  if (m.sign != 1 && m.sign != -1) inapplicable(m, "bad sign");
  const int a = d.max_id() + 1;
  const int b = d.max_id() + 2;
  const std::vector<Passage> over = {{a, Role::over}, {b, Role::over}};
  const std::vector<Passage> under = m.parallel ? std::vector<Passage>{{a, Role::under}, {b, Role::under}}
                                                : std::vector<Passage>{{b, Role::under}, {a, Role::under}};
  auto comps = d.components();
  const Gap& g1 = m.gaps[0];
  const Gap& g2 = m.gaps[1];
  // Insert the later position first so the earlier index stays valid; at a
  // shared gap the over strand's pair ends up first.
  if (g1.component == g2.component && g1.position < g2.position) {
    insert_at(comps[g2.component], g2.position, under);
    insert_at(comps[g1.component], g1.position, over);
  } else if (g1.component == g2.component && g1.position > g2.position) {
    insert_at(comps[g1.component], g1.position, over);
    insert_at(comps[g2.component], g2.position, under);
  } else {
    insert_at(comps[g2.component], g2.position, under);
    insert_at(comps[g1.component], g1.position, over);
  }
  auto crossings = d.crossings();
  crossings[a] = Crossing{CrossingKind::classical, m.sign};
  crossings[b] = Crossing{CrossingKind::classical, -m.sign};
  return {std::move(comps), std::move(crossings)};
}

Diagram apply_r3(const Diagram& d, const MoveEvent& m) {
  if (m.crossings.size() != 3) inapplicable(m, "needs three crossings");
  const PassageIndex idx(d);
  const int x = m.crossings[0], y = m.crossings[1], z = m.crossings[2];
  const TriangleShape shape = triangle_shape(d, idx, x, y, z);
  if (shape == TriangleShape::none) inapplicable(m, "no type III triangle");

  auto comps = d.components();
  auto swap_fragment = [&](int id, Role role, bool forward_start) {
    // forward_start: the fragment begins at (id, role); else it ends there.
    const Location at = *idx.find(id, role);
    const Location other = forward_start ? idx.next(at) : idx.prev(at);
    std::swap(comps[at.component][at.position], comps[other.component][other.position]);
  };
  const bool fwd = shape == TriangleShape::forward;
  swap_fragment(x, Role::over, fwd);    // top
  swap_fragment(x, Role::under, fwd);   // middle
  swap_fragment(y, Role::under, fwd);   // bottom
  return {std::move(comps), d.crossings()};
}

}  // namespace

std::string describe(const MoveEvent& m) {
  auto gap = [](const Gap& g) { return "c" + std::to_string(g.component) + ":" + std::to_string(g.position); };
  auto ids = [&] {
    std::string s;
    for (int id : m.crossings) s += (s.empty() ? "" : ",") + std::to_string(id);
    return s;
  };
  switch (m.kind) {
    case MoveKind::r1_add: {
      static const char* names[] = {"over-first+", "under-first+", "under-first-", "over-first-"};
      return "R1+ at " + (m.gaps.empty() ? std::string("?") : gap(m.gaps[0])) + " " +
             names[static_cast<int>(m.kink)];
    }
    case MoveKind::r1_remove: return "R1- at crossing " + ids();
    case MoveKind::r2_add:
      return "R2+ over " + (m.gaps.size() > 0 ? gap(m.gaps[0]) : "?") + " under " +
             (m.gaps.size() > 1 ? gap(m.gaps[1]) : "?") + (m.sign > 0 ? " +-" : " -+") +
             (m.parallel ? " parallel" : " antiparallel");
    case MoveKind::r2_remove: return "R2- at crossings " + ids();
    case MoveKind::r3: return "R3 at crossings " + ids();
  }
  return "?";
}

std::vector<MoveEvent> enumerate_moves(const Diagram& d, MoveKind kind) {
  if (d.is_singular()) throw MoveError("moves are only generated for non-singular diagrams");
  std::vector<MoveEvent> out;
  switch (kind) {
    case MoveKind::r1_add:
      for (const Gap& g : all_gaps(d))
        for (KinkType k : kAllKinkTypes) out.push_back({MoveKind::r1_add, {g}, k, 1, true, {}});
      break;
    case MoveKind::r2_add: {
      const auto gaps = all_gaps(d);
      for (const Gap& g1 : gaps)
        for (const Gap& g2 : gaps)
          for (int sign : {1, -1})
            for (bool parallel : {true, false})
              out.push_back({MoveKind::r2_add, {g1, g2}, KinkType::over_first_positive, sign, parallel, {}});
      break;
    }
    case MoveKind::r1_remove: {
      const PassageIndex idx(d);
      for (int id : d.classical_ids())
        if (is_kink(d, idx, id)) out.push_back({MoveKind::r1_remove, {}, {}, 1, true, {id}});
      break;
    }
    case MoveKind::r2_remove: {
      const PassageIndex idx(d);
      const auto ids = d.classical_ids();
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          if (is_bigon(d, idx, ids[i], ids[j]))
            out.push_back({MoveKind::r2_remove, {}, {}, 1, true, {ids[i], ids[j]}});
      break;
    }
    case MoveKind::r3: {
      const PassageIndex idx(d);
      // Every triangle has a top fragment of two adjacent over-passages.
      for (const Component& comp : d.components()) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
          const Passage& p = comp[i];
          const Passage& q = comp[(i + 1) % comp.size()];
          if (p.role != Role::over || q.role != Role::over || p.crossing == q.crossing) continue;
          // forward: x = p, y = q; z follows U_x
          if (auto ux = idx.find(p.crossing, Role::under)) {
            const Passage& after = idx.at(idx.next(*ux));
            if (after.role == Role::over &&
                triangle_shape(d, idx, p.crossing, q.crossing, after.crossing) == TriangleShape::forward)
              out.push_back({MoveKind::r3, {}, {}, 1, true, {p.crossing, q.crossing, after.crossing}});
          }
          // backward: y = p, x = q; z precedes U_x
          if (auto ux = idx.find(q.crossing, Role::under)) {
            const Passage& before = idx.at(idx.prev(*ux));
            if (before.role == Role::over &&
                triangle_shape(d, idx, q.crossing, p.crossing, before.crossing) == TriangleShape::backward)
              out.push_back({MoveKind::r3, {}, {}, 1, true, {q.crossing, p.crossing, before.crossing}});
          }
        }
      }
      break;
    }
  }
  return out;
}

std::vector<MoveEvent> enumerate_moves(const Diagram& d) {
  std::vector<MoveEvent> out;
  for (MoveKind k : {MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::r3, MoveKind::r1_add, MoveKind::r2_add}) {
    auto part = enumerate_moves(d, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Diagram apply(const Diagram& d, const MoveEvent& m) {
  if (d.is_singular()) throw MoveError("moves are only applied to non-singular diagrams");
  switch (m.kind) {
    case MoveKind::r1_add: return apply_r1_add(d, m);
    case MoveKind::r2_add: return apply_r2_add(d, m);
    case MoveKind::r1_remove: {
      if (m.crossings.size() != 1) inapplicable(m, "needs one crossing");
      if (!is_kink(d, PassageIndex(d), m.crossings[0])) inapplicable(m, "not a kink");
      return without_crossings(d, {m.crossings[0]});
    }
    case MoveKind::r2_remove: {
      if (m.crossings.size() != 2) inapplicable(m, "needs two crossings");
      if (!is_bigon(d, PassageIndex(d), m.crossings[0], m.crossings[1])) inapplicable(m, "not a bigon");
      return without_crossings(d, {m.crossings[0], m.crossings[1]});
    }
    case MoveKind::r3: return apply_r3(d, m);
  }
  inapplicable(m, "unknown kind");
}

Diagram random_walk(const Diagram& d, std::size_t steps, std::uint64_t seed, WalkOptions opts) {
  std::mt19937_64 rng(seed);
  const std::size_t cap = d.classical_count() + opts.extra_crossings;
  Diagram cur = d;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::vector<MoveEvent>> choices;
    for (MoveKind k : {MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::r3}) {
      auto moves = enumerate_moves(cur, k);
      if (!moves.empty()) choices.push_back(std::move(moves));
    }
    const std::size_t n = cur.classical_count();
    const bool can_r1 = n + 1 <= cap;
    const bool can_r2 = n + 2 <= cap;
    const std::size_t kinds = choices.size() + can_r1 + can_r2;
    if (kinds == 0) break;

    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, kinds - 1)(rng);
    MoveEvent m;
    if (pick < choices.size()) {
      const auto& moves = choices[pick];
      m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    } else {
      // Additions are sampled directly; uniform over the same parameter space
      // enumerate_moves lists.
      const auto gaps = all_gaps(cur);
      auto any_gap = [&] { return gaps[std::uniform_int_distribution<std::size_t>(0, gaps.size() - 1)(rng)]; };
      pick -= choices.size();
      if (can_r1 && pick == 0) {
        m.kind = MoveKind::r1_add;
        m.gaps = {any_gap()};
        m.kink = kAllKinkTypes[std::uniform_int_distribution<int>(0, 3)(rng)];
      } else {
        m.kind = MoveKind::r2_add;
        m.gaps = {any_gap(), any_gap()};
        m.sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        m.parallel = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      }
    }
    cur = apply(cur, m);
  }
  return cur;
}

Diagram random_diagram(const GeneratorConfig& cfg) {
  if (cfg.components == 0) throw DiagramError("a diagram needs at least one component");
  std::mt19937_64 rng(cfg.seed);
  std::vector<Passage> passages;
  std::map<int, Crossing> crossings;
  int id = 0;
  for (std::size_t i = 0; i < cfg.classical_crossings; ++i) {
    ++id;
    passages.push_back({id, Role::over});
    passages.push_back({id, Role::under});
    crossings[id] = Crossing{CrossingKind::classical, std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1};
  }
  for (std::size_t i = 0; i < cfg.double_points; ++i) {
    ++id;
    passages.push_back({id, Role::double_a});
    passages.push_back({id, Role::double_b});
    crossings[id] = Crossing{CrossingKind::double_point, 0};
  }
  std::shuffle(passages.begin(), passages.end(), rng);
  std::vector<Component> comps(cfg.components);
  std::uniform_int_distribution<std::size_t> which(0, cfg.components - 1);
  for (const Passage& p : passages) comps[which(rng)].push_back(p);
  return {std::move(comps), std::move(crossings)};
}

}  // namespace vconway
