#pragma once

// Exact arithmetic in Z[q^{1/2}, q^{-1/2}] and Z[q1], q1 = q^{1/2} - q^{-1/2}.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qhecke {

using Coeff = std::int64_t;

// Overflow-checked integer helpers; throw std::overflow_error.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Laurent polynomial in q^{1/2} with integer coefficients.
///
/// Exponents are stored as integer counts of q^{1/2}, so q itself has stored
/// exponent 2. Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, Coeff>;  // (half-exponent, coefficient)

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  /// c * q^{half_exp/2}
  static LaurentPoly monomial(int half_exp, Coeff c = 1);
  /// q^{k/2}
  static LaurentPoly q_half(int k) { return monomial(k, 1); }
  static LaurentPoly q() { return monomial(2, 1); }
  /// q^{1/2} - q^{-1/2}
  static LaurentPoly q_diff();
  /// Builds from arbitrary (exponent, coeff) pairs; merges and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(int half_exp) const;

  /// Value at q^{1/2} = 1.
  Coeff specialize_at_one() const;
  /// True iff every stored exponent is even (an honest Laurent polynomial in q).
  bool has_integer_q_powers() const;
  /// True iff every coefficient is positive and every exponent is an even nonneg.
  bool in_nonneg_poly_ring() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  /// Multiplication by q^{k/2}.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(Coeff c) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical form: "c*q^(k/2)" terms joined by " + ", ascending; "0" if zero.
  std::string to_string() const;
  /// Human form, e.g. "q + q^2", "q^(1/2) - q^(-1/2)".
  std::string pretty() const;

 private:
  std::vector<Term> terms_;
};

/// Polynomial in the single variable q1 with integer coefficients.
class Q1Poly {
 public:
  Q1Poly() = default;
  Q1Poly(Coeff constant);  // NOLINT(google-explicit-constructor)
  explicit Q1Poly(std::vector<Coeff> coeffs);

  static Q1Poly q1() { return Q1Poly(std::vector<Coeff>{0, 1}); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int k) const;
  bool has_nonneg_coeffs() const;

  Q1Poly& operator+=(const Q1Poly& o);
  friend Q1Poly operator+(Q1Poly a, const Q1Poly& b) { return a += b; }
  friend Q1Poly operator*(const Q1Poly& a, const Q1Poly& b);
  /// Multiplication by q1.
  Q1Poly times_q1() const;
  friend bool operator==(const Q1Poly&, const Q1Poly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Evaluates p at q1 = q^{1/2} - q^{-1/2}.
LaurentPoly q1_substitute(const Q1Poly& p);

/// q_w = q^{len/2}
inline LaurentPoly q_length(int len) { return LaurentPoly::q_half(len); }

}  // namespace qhecke
