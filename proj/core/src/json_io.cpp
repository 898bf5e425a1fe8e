#include "qhecke/json_io.hpp"

#include <stdexcept>

namespace qhecke::json {

json encode(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(json::array({k, c}));
  return out;
}

json encode(const Q1Poly& p) { return json(p.coeffs()); }

json encode(const std::map<Permutation, LaurentPoly>& m) {
  json out = json::array();
  for (const auto& [w, c] : m) out.push_back({{"perm", w.to_string()}, {"poly", encode(c)}});
  return out;
}

json encode(const std::map<Permutation, Q1Poly>& m) {
  json out = json::array();
  for (const auto& [w, c] : m) out.push_back({{"perm", w.to_string()}, {"poly", encode(c)}});
  return out;
}

json encode(const HeckeElement& h) { return {{"n", h.n()}, {"coords", encode(h.coords())}}; }

json encode(const NCMonomial& m) {
  json out = json::array();
  for (const auto& [i, j] : m.factors) out.push_back(json::array({i, j}));
  return out;
}

json encode(const NCPolynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"monomial", encode(m)}, {"poly", encode(c)}});
  return out;
}

json encode(const PathFamily& pi) {
  return {{"mask", pi.mask_string()}, {"type", pi.type.to_string()}, {"cross", pi.cross}, {"dfct", pi.dfct}};
}

LaurentPoly decode_laurent(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("polynomial term must be [exponent, coeff]");
    terms.emplace_back(t[0].get<int>(), t[1].get<Coeff>());
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Q1Poly decode_q1(const json& j) { return Q1Poly(j.get<std::vector<Coeff>>()); }

std::map<Permutation, LaurentPoly> decode_perm_laurent(const json& j) {
  std::map<Permutation, LaurentPoly> out;
  for (const auto& e : j) out[Permutation::parse(e.at("perm").get<std::string>())] += decode_laurent(e.at("poly"));
  return out;
}

std::map<Permutation, Q1Poly> decode_perm_q1(const json& j) {
  std::map<Permutation, Q1Poly> out;
  for (const auto& e : j) out[Permutation::parse(e.at("perm").get<std::string>())] += decode_q1(e.at("poly"));
  return out;
}

HeckeElement decode_hecke(const json& j) {
  HeckeElement h(j.at("n").get<int>());
  for (const auto& [w, c] : decode_perm_laurent(j.at("coords"))) h.add(w, c);
  return h;
}

NCMonomial decode_monomial(const json& j) {
  NCMonomial m;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 2) throw std::invalid_argument("monomial factor must be [i, j]");
    m.factors.emplace_back(f[0].get<int>(), f[1].get<int>());
  }
  return m;
}

NCPolynomial decode_ncpoly(const json& j) {
  NCPolynomial p;
  for (const auto& e : j) p.add(decode_monomial(e.at("monomial")), decode_laurent(e.at("poly")));
  return p;
}

}  // namespace qhecke::json
