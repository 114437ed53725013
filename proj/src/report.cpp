#include "vconway/report.hpp"

#include <sstream>

#include <json.hpp>

#include "vconway/invariants.hpp"

namespace vconway {

InvariantReport compute_report(const Diagram& d) {
  require_valid(d);
  InvariantReport r;
  r.components = d.component_count();
  r.classical_crossings = d.classical_count();
  r.double_points = d.double_count();
  if (!d.is_singular()) {
    r.z = z_polynomial(d);
    r.z_normalized = normalize_x(*r.z);
    r.conway = expand_conway(*r.z_normalized);
    r.c0 = r.conway.coefficient(0);
    r.c1 = r.conway.coefficient(1);
    return r;
  }
  r.conway = vassiliev_eval<ConwayPoly>(d, [](const Diagram& e) { return conway(e); });
  r.c0 = vassiliev_eval<LaurentPoly>(d, [](const Diagram& e) { return c0(e); });
  r.c1 = vassiliev_eval<LaurentPoly>(d, [](const Diagram& e) { return c1(e); });
  return r;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "components: " << r.components << '\n';
  out << "classical_crossings: " << r.classical_crossings << '\n';
  out << "double_points: " << r.double_points << '\n';
  if (r.z) {
    out << "z: " << to_string(*r.z) << '\n';
    out << "z_normalized: " << to_string(*r.z_normalized) << '\n';
  } else {
    out << "z: (singular diagram; values below are Vassiliev extensions)\n";
  }
  out << "conway: " << to_string(r.conway) << '\n';
  out << "c0: " << to_string(r.c0) << '\n';
  out << "c1: " << to_string(r.c1) << '\n';
  if (r.components > 1) out << "note: c1 is a Vassiliev invariant of order one only for knots\n";
  return out.str();
}

std::string to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["z"] = r.z ? nlohmann::ordered_json(to_string(*r.z)) : nlohmann::ordered_json(nullptr);
  j["z_normalized"] = r.z_normalized ? nlohmann::ordered_json(to_string(*r.z_normalized)) : nlohmann::ordered_json(nullptr);
  auto coeffs = nlohmann::ordered_json::array();
  for (const LaurentPoly& c : r.conway.coeffs()) coeffs.push_back(to_string(c));
  j["conway"] = coeffs;
  j["c0"] = to_string(r.c0);
  j["c1"] = to_string(r.c1);
  j["components"] = r.components;
  j["crossings"] = r.classical_crossings;
  j["double_points"] = r.double_points;
  return j.dump(2) + "\n";
}

}  // namespace vconway
