#pragma once

// Signed Gauss code model of (singular) virtual link diagrams.
//
// Virtual crossings are not stored: the Gauss code is unchanged by the
// purely virtual and mixed moves, so everything computed from it is
// automatically invariant under them.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vconway {

enum class Role { over, under, double_a, double_b };

struct Passage {
  int crossing = 0;
  Role role = Role::over;

  friend bool operator==(const Passage&, const Passage&) = default;
};

enum class CrossingKind { classical, double_point };

struct Crossing {
  CrossingKind kind = CrossingKind::classical;
  int sign = 1;  // +1 or -1 for classical crossings, 0 for double points

  [[nodiscard]] bool is_classical() const { return kind == CrossingKind::classical; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Cyclic sequence of passages along one link component.
using Component = std::vector<Passage>;

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (possibly singular) virtual link diagram. Values are immutable; every
/// operation below returns a new diagram. The constructor does not check the
/// structural invariants, use validate() for that.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Component> components, std::map<int, Crossing> crossings)
      : components_(std::move(components)), crossings_(std::move(crossings)) {}

  [[nodiscard]] const std::vector<Component>& components() const { return components_; }
  [[nodiscard]] const std::map<int, Crossing>& crossings() const { return crossings_; }

  [[nodiscard]] std::size_t component_count() const { return components_.size(); }
  [[nodiscard]] std::size_t classical_count() const;
  [[nodiscard]] std::size_t double_count() const;
  [[nodiscard]] bool is_singular() const { return double_count() > 0; }
  [[nodiscard]] bool has_crossing_free_component() const;
  [[nodiscard]] int writhe() const;
  [[nodiscard]] int max_id() const { return crossings_.empty() ? 0 : crossings_.rbegin()->first; }

  /// Throws DiagramError for ids not present.
  [[nodiscard]] const Crossing& crossing(int id) const;
  /// Sorted ids of classical crossings; index k here owns slots 2k (l), 2k+1 (r).
  [[nodiscard]] std::vector<int> classical_ids() const;
  [[nodiscard]] std::vector<int> double_ids() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Component> components_;
  std::map<int, Crossing> crossings_;
};

struct ValidationIssue {
  int crossing = 0;
  std::string message;
};

/// Every violated structural invariant; empty when the diagram is valid.
std::vector<ValidationIssue> validate(const Diagram& d);

/// Throws DiagramError listing all issues when validate() finds any.
void require_valid(const Diagram& d);

enum class Side { left = 0, right = 1 };

/// Slot index of (crossing index k, side): 2k + side.
constexpr std::size_t slot_index(std::size_t k, Side s) { return 2 * k + static_cast<std::size_t>(s); }

/// A permutation of the 2n slots {1..n} x {l, r}.
class SlotPermutation {
 public:
  SlotPermutation() = default;
  explicit SlotPermutation(std::vector<std::size_t> image);

  static SlotPermutation identity(std::size_t crossings);
  /// T: swaps (k, l) and (k, r) for every k.
  static SlotPermutation side_swap(std::size_t crossings);

  [[nodiscard]] std::size_t crossings() const { return image_.size() / 2; }
  [[nodiscard]] std::size_t size() const { return image_.size(); }
  [[nodiscard]] std::size_t operator()(std::size_t slot) const { return image_[slot]; }
  [[nodiscard]] const std::vector<std::size_t>& image() const { return image_; }
  [[nodiscard]] std::size_t cycle_count() const;
  [[nodiscard]] SlotPermutation inverse() const;

  /// (a * b)(s) = a(b(s)); matches the product of permutation matrices.
  friend SlotPermutation operator*(const SlotPermutation& a, const SlotPermutation& b);
  friend bool operator==(const SlotPermutation&, const SlotPermutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Side of the incoming half-edge used by a classical passage. With both
/// strands pointing up, a positive crossing's over-strand runs from l+ to
/// r- and its under-strand from r+ to l-; a negative crossing mirrors that.
/// The outgoing side is always the opposite one.
Side entry_side(int sign, Role role);

/// P: slot (i,a) -> (j,b) when the arc arriving at a+ of crossing i left
/// crossing j through b-. Requires a valid non-singular diagram with at
/// least one classical crossing.
SlotPermutation build_P(const Diagram& d);

/// TP read off by walking each component: the incoming slot of every
/// passage maps to the incoming slot of the passage before it. One cycle per
/// component that carries passages.
SlotPermutation build_TP(const Diagram& d);

/// Crossing change at a classical crossing: sign negated, over/under swapped.
Diagram switch_crossing(const Diagram& d, int id);

/// Sets a classical crossing to the given sign, switching it if needed.
Diagram with_sign(const Diagram& d, int id, int sign);

/// Oriented smoothing at a classical crossing or double point.
Diagram smooth(const Diagram& d, int id);

enum class Resolution { positive, negative, smoothing };

/// Positive resolution puts the A passage on top with sign +1; negative is
/// its crossing change; smoothing is smooth().
Diagram resolve_double(const Diagram& d, int id, Resolution how);

/// Resolves every double point; signs[i] (+1 or -1) applies to the i-th
/// double point in increasing id order.
Diagram resolve_all(const Diagram& d, const std::vector<int>& signs);

/// Reverses the orientation of every component.
Diagram reverse(const Diagram& d);

/// Crossing change at every classical crossing.
Diagram mirror(const Diagram& d);

/// d1 followed by d2 with d2's ids shifted above d1's largest id.
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

}  // namespace vconway
