#pragma once

// Classical Reidemeister moves on Gauss codes and random diagrams.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vconway/diagram.hpp"

namespace vconway {

enum class MoveKind { r1_add, r1_remove, r2_add, r2_remove, r3 };

/// The four kinks a type I move can create, named by which passage comes
/// first along the strand and the crossing sign. Creating them multiplies Z
/// by 1, x, x^-1 and 1 in this order.
enum class KinkType { over_first_positive, under_first_positive, under_first_negative, over_first_negative };

inline constexpr KinkType kAllKinkTypes[] = {KinkType::over_first_positive, KinkType::under_first_positive,
                                             KinkType::under_first_negative, KinkType::over_first_negative};

/// Insertion point: before passage `position` of component `component`
/// (position 0 for an empty component).
struct Gap {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const Gap&, const Gap&) = default;
};

struct MoveEvent {
  MoveKind kind = MoveKind::r1_add;
  /// r1_add: one gap. r2_add: the over strand's gap, then the under strand's.
  std::vector<Gap> gaps;
  KinkType kink = KinkType::over_first_positive;
  /// r2_add: sign of the first new crossing; the second gets the opposite.
  int sign = 1;
  /// r2_add: whether the under strand meets the new crossings in the same
  /// order as the over strand.
  bool parallel = true;
  /// r1_remove: {id}. r2_remove: {a, b}. r3: {top-middle, top-bottom,
  /// middle-bottom}.
  std::vector<int> crossings;

  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string describe(const MoveEvent& m);

/// All moves of one kind applicable to d.
std::vector<MoveEvent> enumerate_moves(const Diagram& d, MoveKind kind);

/// Every applicable move: removals of kinks and bigons, braid-like type III
/// triangles, and every parameterised addition at every gap.
std::vector<MoveEvent> enumerate_moves(const Diagram& d);

/// Applies m; throws MoveError("inapplicable move: ...") when its site does
/// not match d.
Diagram apply(const Diagram& d, const MoveEvent& m);

struct WalkOptions {
  /// Additions are skipped once the diagram has this many more classical
  /// crossings than the starting one.
  std::size_t extra_crossings = 6;
};

/// `steps` random moves. Each step picks a move kind uniformly among the
/// kinds with an applicable site, then a site uniformly within that kind.
Diagram random_walk(const Diagram& d, std::size_t steps, std::uint64_t seed, WalkOptions opts = {});

struct GeneratorConfig {
  std::size_t classical_crossings = 0;
  std::size_t components = 1;
  std::size_t double_points = 0;
  std::uint64_t seed = 0;
};

/// Random signed Gauss code: every passage lands on a uniformly random
/// component in a uniformly random order; signs and A/B or over/under
/// assignments are uniform. Classical crossings get ids 1..k, double points
/// the ids after them. Deterministic in the config.
Diagram random_diagram(const GeneratorConfig& cfg);

}  // namespace vconway
