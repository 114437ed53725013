#include "vconway/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace vconway {

std::size_t Diagram::classical_count() const {
  return static_cast<std::size_t>(std::count_if(crossings_.begin(), crossings_.end(),
                                                [](const auto& kv) { return kv.second.is_classical(); }));
}

std::size_t Diagram::double_count() const { return crossings_.size() - classical_count(); }

bool Diagram::has_crossing_free_component() const {
  return std::any_of(components_.begin(), components_.end(), [](const Component& c) { return c.empty(); });
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& [id, c] : crossings_)
    if (c.is_classical()) w += c.sign;
  return w;
}

const Crossing& Diagram::crossing(int id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) throw DiagramError("unknown crossing " + std::to_string(id));
  return it->second;
}

std::vector<int> Diagram::classical_ids() const {
  std::vector<int> ids;
  for (const auto& [id, c] : crossings_)
    if (c.is_classical()) ids.push_back(id);
  return ids;
}

std::vector<int> Diagram::double_ids() const {
  std::vector<int> ids;
  for (const auto& [id, c] : crossings_)
    if (!c.is_classical()) ids.push_back(id);
  return ids;
}

std::vector<ValidationIssue> validate(const Diagram& d) {
  std::vector<ValidationIssue> issues;
  struct Count {
    int over = 0, under = 0, a = 0, b = 0;
  };
  std::map<int, Count> seen;
  for (const Component& comp : d.components()) {
    for (const Passage& p : comp) {
      Count& c = seen[p.crossing];
      switch (p.role) {
        case Role::over: ++c.over; break;
        case Role::under: ++c.under; break;
        case Role::double_a: ++c.a; break;
        case Role::double_b: ++c.b; break;
      }
    }
  }
  auto issue = [&](int id, std::string msg) {
    issues.push_back({id, "crossing " + std::to_string(id) + ": " + std::move(msg)});
  };

  for (const auto& [id, count] : seen) {
    auto it = d.crossings().find(id);
    if (it == d.crossings().end()) {
      issue(id, "dangling crossing (referenced but not declared)");
      continue;
    }
    const Crossing& c = it->second;
    const int total = count.over + count.under + count.a + count.b;
    if (total != 2) issue(id, "occurs " + std::to_string(total) + " times, expected 2");
    if (c.is_classical()) {
      if (count.a + count.b > 0) issue(id, "classical crossing has double-point passages");
      if (count.over > 1) issue(id, "has two over-passages");
      if (count.under > 1) issue(id, "has two under-passages");
      if (total == 2 && (count.over != 1 || count.under != 1) && count.over <= 1 && count.under <= 1)
        issue(id, "needs one over- and one under-passage");
      if (c.sign != 1 && c.sign != -1) issue(id, "classical crossing sign must be +1 or -1");
    } else {
      if (count.over + count.under > 0) issue(id, "double point has over/under passages");
      if (count.a > 1) issue(id, "has two A-passages");
      if (count.b > 1) issue(id, "has two B-passages");
      if (c.sign != 0) issue(id, "double point carries a sign");
    }
  }
  for (const auto& [id, c] : d.crossings()) {
    if (id <= 0) issue(id, "ids must be positive");
    if (!seen.contains(id)) issue(id, "declared but never referenced");
  }
  return issues;
}

void require_valid(const Diagram& d) {
  const auto issues = validate(d);
  if (issues.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& i : issues) msg += "\n  " + i.message;
  throw DiagramError(msg);
}

SlotPermutation::SlotPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t s : image_) {
    if (s >= image_.size() || hit[s]) throw DiagramError("slot map is not a bijection");
    hit[s] = true;
  }
  if (image_.size() % 2 != 0) throw DiagramError("slot map must act on an even number of slots");
}

SlotPermutation SlotPermutation::identity(std::size_t crossings) {
  std::vector<std::size_t> image(2 * crossings);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return SlotPermutation(std::move(image));
}

SlotPermutation SlotPermutation::side_swap(std::size_t crossings) {
  std::vector<std::size_t> image(2 * crossings);
  for (std::size_t s = 0; s < image.size(); ++s) image[s] = s ^ 1u;
  return SlotPermutation(std::move(image));
}

std::size_t SlotPermutation::cycle_count() const {
  std::vector<bool> done(image_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (done[s]) continue;
    ++cycles;
    for (std::size_t t = s; !done[t]; t = image_[t]) done[t] = true;
  }
  return cycles;
}

SlotPermutation SlotPermutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t s = 0; s < image_.size(); ++s) inv[image_[s]] = s;
  return SlotPermutation(std::move(inv));
}

SlotPermutation operator*(const SlotPermutation& a, const SlotPermutation& b) {
  if (a.size() != b.size()) throw DiagramError("slot maps of different sizes");
  std::vector<std::size_t> image(a.size());
  for (std::size_t s = 0; s < image.size(); ++s) image[s] = a(b(s));
  return SlotPermutation(std::move(image));
}

Side entry_side(int sign, Role role) {
  return ((sign > 0) == (role == Role::over)) ? Side::left : Side::right;
}

namespace {

Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

std::map<int, std::size_t> slot_block_index(const Diagram& d) {
  std::map<int, std::size_t> index;
  for (int id : d.classical_ids()) index.emplace(id, index.size());
  return index;
}

void require_classical_input(const Diagram& d) {
  require_valid(d);
  if (d.is_singular()) throw DiagramError("resolve double points first");
  if (d.classical_count() == 0) throw DiagramError("diagram has no classical crossings");
}

struct PassageSlots {
  std::size_t in;
  std::size_t out;
};

PassageSlots slots_of(const Diagram& d, const std::map<int, std::size_t>& index, const Passage& p) {
  const int sign = d.crossing(p.crossing).sign;
  const Side in = entry_side(sign, p.role);
  const std::size_t k = index.at(p.crossing);
  return {slot_index(k, in), slot_index(k, opposite(in))};
}

}  // namespace

SlotPermutation build_P(const Diagram& d) {
  require_classical_input(d);
  const auto index = slot_block_index(d);
  std::vector<std::size_t> image(2 * index.size());
  for (const Component& comp : d.components()) {
    const std::size_t len = comp.size();
    for (std::size_t t = 0; t < len; ++t) {
      const Passage& cur = comp[t];
      const Passage& prev = comp[(t + len - 1) % len];
      image[slots_of(d, index, cur).in] = slots_of(d, index, prev).out;
    }
  }
  return SlotPermutation(std::move(image));
}

SlotPermutation build_TP(const Diagram& d) {
  require_classical_input(d);
  const auto index = slot_block_index(d);
  std::vector<std::size_t> image(2 * index.size());
  for (const Component& comp : d.components()) {
    std::vector<std::size_t> incoming;
    incoming.reserve(comp.size());
    for (const Passage& p : comp) incoming.push_back(slots_of(d, index, p).in);
    for (std::size_t t = 0; t < incoming.size(); ++t)
      image[incoming[t]] = incoming[(t + incoming.size() - 1) % incoming.size()];
  }
  return SlotPermutation(std::move(image));
}

namespace {

Role flipped(Role r) {
  switch (r) {
    case Role::over: return Role::under;
    case Role::under: return Role::over;
    case Role::double_a: return Role::double_b;
    case Role::double_b: return Role::double_a;
  }
  return r;
}

struct Location {
  std::size_t component;
  std::size_t position;
};

std::vector<Location> locate(const Diagram& d, int id) {
  std::vector<Location> out;
  for (std::size_t c = 0; c < d.components().size(); ++c)
    for (std::size_t i = 0; i < d.components()[c].size(); ++i)
      if (d.components()[c][i].crossing == id) out.push_back({c, i});
  return out;
}

}  // namespace

Diagram switch_crossing(const Diagram& d, int id) {
  const Crossing& c = d.crossing(id);
  if (!c.is_classical()) throw DiagramError("crossing " + std::to_string(id) + " is a double point");
  auto comps = d.components();
  for (Component& comp : comps)
    for (Passage& p : comp)
      if (p.crossing == id) p.role = flipped(p.role);
  auto crossings = d.crossings();
  crossings[id].sign = -c.sign;
  return {std::move(comps), std::move(crossings)};
}

Diagram with_sign(const Diagram& d, int id, int sign) {
  const Crossing& c = d.crossing(id);
  if (!c.is_classical()) throw DiagramError("crossing " + std::to_string(id) + " is a double point");
  return c.sign == sign ? d : switch_crossing(d, id);
}

Diagram smooth(const Diagram& d, int id) {
  (void)d.crossing(id);
  const auto where = locate(d, id);
  if (where.size() != 2) throw DiagramError("crossing " + std::to_string(id) + " does not occur twice");

  std::vector<Component> comps;
  const auto& src = d.components();
  const Location first = where[0], second = where[1];
  if (first.component == second.component) {
    // alpha p beta p' gamma  ->  (alpha gamma), (beta)
    const Component& w = src[first.component];
    Component outer(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(first.position));
    outer.insert(outer.end(), w.begin() + static_cast<std::ptrdiff_t>(second.position) + 1, w.end());
    Component inner(w.begin() + static_cast<std::ptrdiff_t>(first.position) + 1,
                    w.begin() + static_cast<std::ptrdiff_t>(second.position));
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (c == first.component) {
        comps.push_back(std::move(outer));
        comps.push_back(std::move(inner));
      } else {
        comps.push_back(src[c]);
      }
    }
  } else {
    // alpha p, beta p'  ->  (alpha beta), each read starting after the passage
    auto after = [&](const Location& loc) {
      const Component& w = src[loc.component];
      Component out(w.begin() + static_cast<std::ptrdiff_t>(loc.position) + 1, w.end());
      out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(loc.position));
      return out;
    };
    Component merged = after(first);
    Component tail = after(second);
    merged.insert(merged.end(), tail.begin(), tail.end());
    for (std::size_t c = 0; c < src.size(); ++c) {
      if (c == first.component)
        comps.push_back(std::move(merged));
      else if (c != second.component)
        comps.push_back(src[c]);
    }
  }
  auto crossings = d.crossings();
  crossings.erase(id);
  return {std::move(comps), std::move(crossings)};
}

Diagram resolve_double(const Diagram& d, int id, Resolution how) {
  const Crossing& c = d.crossing(id);
  if (c.is_classical()) throw DiagramError("crossing " + std::to_string(id) + " is not a double point");
  if (how == Resolution::smoothing) return smooth(d, id);

  auto comps = d.components();
  for (Component& comp : comps)
    for (Passage& p : comp)
      if (p.crossing == id) p.role = p.role == Role::double_a ? Role::over : Role::under;
  auto crossings = d.crossings();
  crossings[id] = Crossing{CrossingKind::classical, 1};
  Diagram positive(std::move(comps), std::move(crossings));
  return how == Resolution::positive ? positive : switch_crossing(positive, id);
}

Diagram resolve_all(const Diagram& d, const std::vector<int>& signs) {
  const auto ids = d.double_ids();
  if (signs.size() != ids.size()) throw DiagramError("one sign per double point required");
  Diagram out = d;
  for (std::size_t i = 0; i < ids.size(); ++i)
    out = resolve_double(out, ids[i], signs[i] > 0 ? Resolution::positive : Resolution::negative);
  return out;
}

Diagram reverse(const Diagram& d) {
  auto comps = d.components();
  for (Component& comp : comps) std::reverse(comp.begin(), comp.end());
  return {std::move(comps), d.crossings()};
}

Diagram mirror(const Diagram& d) {
  auto comps = d.components();
  auto crossings = d.crossings();
  for (Component& comp : comps)
    for (Passage& p : comp)
      if (crossings.at(p.crossing).is_classical()) p.role = flipped(p.role);
  for (auto& [id, c] : crossings)
    if (c.is_classical()) c.sign = -c.sign;
  return {std::move(comps), std::move(crossings)};
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  const int offset = d1.max_id();
  auto comps = d1.components();
  auto crossings = d1.crossings();
  for (Component comp : d2.components()) {
    for (Passage& p : comp) p.crossing += offset;
    comps.push_back(std::move(comp));
  }
  for (const auto& [id, c] : d2.crossings()) crossings.emplace(id + offset, c);
  return {std::move(comps), std::move(crossings)};
}

}  // namespace vconway
