#include "vconway/conway_poly.hpp"

#include <algorithm>

namespace vconway {

ConwayPoly::ConwayPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
  for (const LaurentPoly& c : coeffs_)
    if (!c.is_y_only()) throw AlgebraError("Conway coefficient depends on x: " + to_string(c));
  trim();
}

void ConwayPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly ConwayPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : LaurentPoly();
}

ConwayPoly& ConwayPoly::operator+=(const ConwayPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ConwayPoly& ConwayPoly::operator-=(const ConwayPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ConwayPoly expand_conway(const LaurentPoly& p) {
  int max_x = 0;
  for (const Term& t : p.terms()) {
    if (t.exponent.x < 0) throw AlgebraError("not x-normalized");
    max_x = std::max(max_x, t.exponent.x);
  }
  if (p.is_zero()) return {};

  // x^i = (1 - z)^i = sum_k C(i, k) (-1)^k z^k
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(max_x) + 1);
  for (const Term& t : p.terms()) {
    const int i = t.exponent.x;
    Integer binom = 1;
    for (int k = 0; k <= i; ++k) {
      Integer c = t.coeff * binom;
      if (k % 2 == 1) c = -c;
      buckets[static_cast<std::size_t>(k)].push_back({Monomial{0, t.exponent.y}, std::move(c)});
      binom = binom * (i - k) / (k + 1);
    }
  }
  std::vector<LaurentPoly> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& b : buckets) coeffs.push_back(LaurentPoly::from_terms(std::move(b)));
  return ConwayPoly(std::move(coeffs));
}

LaurentPoly reconstruct(const ConwayPoly& c) {
  const LaurentPoly z = LaurentPoly::one() - LaurentPoly::x();
  LaurentPoly result;
  LaurentPoly zk = LaurentPoly::one();
  for (const LaurentPoly& ck : c.coeffs()) {
    result += ck * zk;
    zk *= z;
  }
  return result;
}

std::string to_string(const ConwayPoly& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    const LaurentPoly& ck = c.coeffs()[k];
    if (ck.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += '(' + to_string(ck) + ')';
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

}  // namespace vconway
