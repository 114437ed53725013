#include "vconway/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace vconway {

namespace {

// Sorts by exponent, merges duplicates and drops zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponent == acc.exponent; ++j) acc.coeff += terms[j].coeff;
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists with a sign on the second.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, subtract ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

LaurentPoly::LaurentPoly(Integer coeff, Monomial exponent) {
  if (coeff != 0) terms_.push_back({exponent, std::move(coeff)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Integer LaurentPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == m) return it->coeff;
  return 0;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly::is_y_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exponent.x == 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const LaurentPoly& mono = a.size() == 1 ? a : b;
    const LaurentPoly& other = a.size() == 1 ? b : a;
    const Term& t = mono.terms_[0];
    LaurentPoly out;
    out.terms_.reserve(other.size());
    for (const Term& s : other.terms_) out.terms_.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
    return out;  // shifting preserves the order
  }
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly operator-(LaurentPoly a) {
  for (Term& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const Integer& k) {
  if (k == 0) return {};
  std::vector<Term> terms = a.terms();
  for (Term& t : terms) t.coeff *= k;
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly shift(const LaurentPoly& p, Monomial m) {
  return p * LaurentPoly(Integer(1), m);
}

LaurentPoly unit_inverse(const LaurentPoly& u) {
  if (!u.is_unit()) throw AlgebraError("not a unit: " + to_string(u));
  const Term& t = u.terms()[0];
  return {t.coeff, Monomial{-t.exponent.x, -t.exponent.y}};
}

LaurentPoly pow(const LaurentPoly& p, int e) {
  if (e < 0) return pow(unit_inverse(p), -e);
  LaurentPoly result = LaurentPoly::one();
  LaurentPoly base = p;
  for (; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    const Term& t = b.terms()[0];
    std::vector<Term> q;
    q.reserve(a.size());
    for (const Term& s : a.terms()) {
      if (s.coeff % t.coeff != 0) throw AlgebraError("inexact division");
      q.push_back({s.exponent - t.exponent, s.coeff / t.coeff});
    }
    return LaurentPoly::from_terms(std::move(q));
  }

  // Leading-term division. An exact quotient has its exponents inside the
  // box spanned by the degree differences of a and b in each variable, and
  // lexicographically above low(a)/low(b); leaving either bound means b
  // does not divide a.
  const Term& lead_b = b.leading_term();
  const Monomial floor = a.lowest_term().exponent - b.lowest_term().exponent;
  auto y_range = [](const LaurentPoly& p) {
    auto [lo, hi] = std::minmax_element(p.terms().begin(), p.terms().end(), [](const Term& s, const Term& t) {
      return s.exponent.y < t.exponent.y;
    });
    return std::pair{lo->exponent.y, hi->exponent.y};
  };
  const auto [ay_lo, ay_hi] = y_range(a);
  const auto [by_lo, by_hi] = y_range(b);
  std::map<Monomial, Integer> rem;
  for (const Term& t : a.terms()) rem.emplace(t.exponent, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial qe = top->first - lead_b.exponent;
    if (qe < floor || qe.y < ay_lo - by_lo || qe.y > ay_hi - by_hi || top->second % lead_b.coeff != 0)
      throw AlgebraError("inexact division");
    const Integer qc = top->second / lead_b.coeff;
    for (const Term& t : b.terms()) {
      auto [it, inserted] = rem.try_emplace(t.exponent + qe, 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({qe, qc});
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

int lowest_x_exponent(const LaurentPoly& p) {
  if (p.is_zero()) throw AlgebraError("undefined exponent");
  return p.lowest_term().exponent.x;  // lexicographic order puts x first
}

LaurentPoly normalize_x(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  return shift(p, Monomial{-lowest_x_exponent(p), 0});
}

LaurentPoly eval_x1(const LaurentPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) terms.push_back({Monomial{0, t.exponent.y}, t.coeff});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly substitute_y_inverse(const LaurentPoly& p) {
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.exponent.y = -t.exponent.y;
  return LaurentPoly::from_terms(std::move(terms));
}

namespace {

void append_factor(std::string& out, char var, int e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) out += '*';
  out += var;
  if (e != 1) out += '^' + std::to_string(e);
  first_factor = false;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> order;
  for (const Term& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    const int da = a->exponent.x + a->exponent.y;
    const int db = b->exponent.x + b->exponent.y;
    if (da != db) return da < db;
    return a->exponent < b->exponent;
  });

  std::string out;
  bool first_term = true;
  for (const Term* t : order) {
    const bool negative = t->coeff < 0;
    const Integer mag = negative ? Integer(-t->coeff) : t->coeff;
    if (first_term) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first_term = false;

    const bool constant = t->exponent == Monomial{};
    bool first_factor = true;
    if (constant || mag != 1) {
      out += mag.str();
      first_factor = false;
    }
    append_factor(out, 'x', t->exponent.x, first_factor);
    append_factor(out, 'y', t->exponent.y, first_factor);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  Term term(bool negative) {
    skip_ws();
    Term t{Monomial{}, Integer(1)};
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = Integer(digits());
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') {
        if (negative) t.coeff = -t.coeff;
        return t;
      }
      get();
      skip_ws();
    }
    while (true) {
      if (at_end()) fail("expected variable");
      const char v = get();
      if (v != 'x' && v != 'y') fail("expected 'x' or 'y'");
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        get();
        skip_ws();
        bool neg = false;
        if (!at_end() && peek() == '-') {
          neg = true;
          get();
        }
        e = std::stoi(digits());
        if (neg) e = -e;
      }
      (v == 'x' ? t.exponent.x : t.exponent.y) += e;
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      skip_ws();
    }
    if (!have_factor) fail("empty term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
  [[nodiscard]] char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace vconway
