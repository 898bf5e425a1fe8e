#include "qhecke/exact.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qhecke {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int half_exp, Coeff c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(half_exp, c);
  return p;
}

LaurentPoly LaurentPoly::q_diff() { return from_terms({{1, 1}, {-1, -1}}); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (const auto& [k, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == k)
      p.terms_.back().second = checked_add(p.terms_.back().second, c);
    else
      p.terms_.emplace_back(k, c);
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Coeff LaurentPoly::coefficient(int half_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), half_exp,
                             [](const Term& t, int k) { return t.first < k; });
  return (it != terms_.end() && it->first == half_exp) ? it->second : 0;
}

Coeff LaurentPoly::specialize_at_one() const {
  Coeff s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.second);
  return s;
}

bool LaurentPoly::has_integer_q_powers() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

bool LaurentPoly::in_nonneg_poly_ring() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.second > 0 && t.first >= 0 && t.first % 2 == 0;
  });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Coeff c = checked_add(a->second, b->second);
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, -1);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  std::map<int, Coeff> acc;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Coeff& slot = acc[ka + kb];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  LaurentPoly r;
  for (const auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace_back(k, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(Coeff c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*q^(" << k << "/2)";
  }
  return os.str();
}

namespace {

std::string power_of_q(int k) {
  if (k == 0) return "";
  if (k == 2) return "q";
  if (k % 2 == 0) return "q^" + (k < 0 ? "(" + std::to_string(k / 2) + ")" : std::to_string(k / 2));
  return "q^(" + std::to_string(k) + "/2)";
}

}  // namespace

std::string LaurentPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    std::string qp = power_of_q(k);
    if (qp.empty())
      os << mag;
    else if (mag == 1)
      os << qp;
    else
      os << mag << "*" << qp;
  }
  return os.str();
}

// --------------------------------------------------------------------- Q1Poly

Q1Poly::Q1Poly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Q1Poly::Q1Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Q1Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff Q1Poly::coefficient(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
}

bool Q1Poly::has_nonneg_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

Q1Poly& Q1Poly::operator+=(const Q1Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

Q1Poly operator*(const Q1Poly& a, const Q1Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return Q1Poly(std::move(r));
}

Q1Poly Q1Poly::times_q1() const {
  if (is_zero()) return {};
  std::vector<Coeff> r(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), r.begin() + 1);
  return Q1Poly(std::move(r));
}

std::string Q1Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Coeff c = coeffs_[k];
    if (c == 0) continue;
    Coeff mag = c < 0 ? -c : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (k == 0)
      os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "q1";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

LaurentPoly q1_substitute(const Q1Poly& p) {
  // Horner in q1.
  const LaurentPoly q1 = LaurentPoly::q_diff();
  LaurentPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q1 + LaurentPoly(*it);
  return acc;
}

}  // namespace qhecke
