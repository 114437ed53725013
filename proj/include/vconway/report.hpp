#pragma once

// Aggregated invariant report and its text / JSON serialisations.

#include <cstddef>
#include <optional>
#include <string>

#include "vconway/conway_poly.hpp"
#include "vconway/diagram.hpp"
#include "vconway/laurent.hpp"

namespace vconway {

struct InvariantReport {
  /// Absent for singular diagrams, where only the Vassiliev extensions of
  /// the Conway data are defined.
  std::optional<LaurentPoly> z;
  std::optional<LaurentPoly> z_normalized;
  ConwayPoly conway;
  LaurentPoly c0;
  LaurentPoly c1;
  std::size_t components = 0;
  std::size_t classical_crossings = 0;
  std::size_t double_points = 0;
};

/// Validates d, then fills every field. Singular diagrams get vassiliev_eval
/// of conway, c0 and c1.
InvariantReport compute_report(const Diagram& d);

/// "key: value" lines in a fixed order.
std::string to_text(const InvariantReport& r);

/// One JSON object with keys z, z_normalized, conway (coefficient strings,
/// lowest z power first), c0, c1, components, crossings, double_points.
/// z and z_normalized are null for singular input.
std::string to_json(const InvariantReport& r);

}  // namespace vconway
