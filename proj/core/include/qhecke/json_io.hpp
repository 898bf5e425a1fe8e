#pragma once

// JSON encodings of the library's exact values. Every encoder has a
// matching decoder so reports can be read back losslessly.
//
//   LaurentPoly    [[half_exponent, coeff], ...]  ascending
//   Q1Poly         [c_0, c_1, ...]
//   HeckeElement   {"n": n, "coords": [{"perm": "213", "poly": ...}, ...]}
//   perm -> poly   [{"perm": "213", "poly": ...}, ...]
//   NCMonomial     [[i, j], ...]
//   NCPolynomial   [{"monomial": ..., "poly": ...}, ...]
//   PathFamily     {"mask": "101", "type": "213", "cross": c, "dfct": d}

#include <map>

#include <nlohmann/json.hpp>

#include "qhecke/exact.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/perm.hpp"
#include "qhecke/qmatrix.hpp"
#include "qhecke/wiring.hpp"

namespace qhecke::json {

using nlohmann::json;

json encode(const LaurentPoly& p);
json encode(const Q1Poly& p);
json encode(const HeckeElement& h);
json encode(const std::map<Permutation, LaurentPoly>& m);
json encode(const std::map<Permutation, Q1Poly>& m);
json encode(const NCMonomial& m);
json encode(const NCPolynomial& p);
json encode(const PathFamily& pi);

LaurentPoly decode_laurent(const json& j);
Q1Poly decode_q1(const json& j);
HeckeElement decode_hecke(const json& j);
std::map<Permutation, LaurentPoly> decode_perm_laurent(const json& j);
std::map<Permutation, Q1Poly> decode_perm_q1(const json& j);
NCMonomial decode_monomial(const json& j);
NCPolynomial decode_ncpoly(const json& j);

}  // namespace qhecke::json
