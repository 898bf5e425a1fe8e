#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qhecke/exact.hpp"

using namespace qhecke;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), exp(-6, 6), coeff(-5, 5);
  std::vector<LaurentPoly::Term> terms;
  for (int k = count(rng); k > 0; --k) terms.emplace_back(exp(rng), coeff(rng));
  return LaurentPoly::from_terms(terms);
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("canonical storage drops zeros and merges exponents") {
    auto p = LaurentPoly::from_terms({{2, 1}, {0, 3}, {2, -1}, {-1, 0}});
    CHECK(p == LaurentPoly(3));
    CHECK(p.terms().size() == 1);
    CHECK(LaurentPoly::from_terms({}).is_zero());
    CHECK(LaurentPoly(0).is_zero());
  }

  TEST_CASE("q1 squared") {
    // (q^{1/2} - q^{-1/2})^2 = q - 2 + q^{-1}
    auto q1 = LaurentPoly::q_diff();
    CHECK(q1 * q1 == LaurentPoly::from_terms({{2, 1}, {0, -2}, {-2, 1}}));
  }

  TEST_CASE("q^{1/2} q^{-1/2} = 1") { CHECK(LaurentPoly::q_half(1) * LaurentPoly::q_half(-1) == LaurentPoly(1)); }

  TEST_CASE("text forms") {
    auto p = LaurentPoly::q() + LaurentPoly::monomial(4);
    CHECK(p.pretty() == "q + q^2");
    CHECK(p.to_string() == "1*q^(2/2) + 1*q^(4/2)");
    CHECK(LaurentPoly::q_diff().pretty() == "-q^(-1/2) + q^(1/2)");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::from_terms({{0, -1}, {2, 1}}).pretty() == "-1 + q");
    CHECK(Q1Poly(std::vector<Coeff>{1, 0, 2}).to_string() == "1 + 2*q1^2");
  }

  TEST_CASE("ring laws at a numeric point") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == LaurentPoly());
      const long double x = 1.5L;
      CHECK(oracle::eval_at(a * b, x) == doctest::Approx(static_cast<double>(oracle::eval_at(a, x) * oracle::eval_at(b, x))));
      CHECK((a * b).specialize_at_one() == a.specialize_at_one() * b.specialize_at_one());
    }
  }

  TEST_CASE("shift and scale") {
    auto p = LaurentPoly::from_terms({{-1, 2}, {3, -1}});
    CHECK(p.shifted(2) == p * LaurentPoly::q());
    CHECK(p.scaled(-3) == p * LaurentPoly(-3));
    CHECK(-p == p.scaled(-1));
  }

  TEST_CASE("parity and positivity predicates") {
    CHECK(LaurentPoly::from_terms({{2, 1}, {4, 3}}).in_nonneg_poly_ring());
    CHECK_FALSE(LaurentPoly::from_terms({{2, 1}, {4, -3}}).in_nonneg_poly_ring());
    CHECK_FALSE(LaurentPoly::q_half(1).in_nonneg_poly_ring());
    CHECK_FALSE(LaurentPoly::q_half(-2).in_nonneg_poly_ring());
    CHECK(LaurentPoly::q_half(-2).has_integer_q_powers());
    CHECK_FALSE(LaurentPoly::q_diff().has_integer_q_powers());
  }

  TEST_CASE("q1 substitution is a ring map") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Coeff> a(deg(rng) + 1), b(deg(rng) + 1);
      for (auto& c : a) c = coeff(rng);
      for (auto& c : b) c = coeff(rng);
      Q1Poly pa(a), pb(b);
      CHECK(q1_substitute(pa * pb) == q1_substitute(pa) * q1_substitute(pb));
      CHECK(q1_substitute(pa + pb) == q1_substitute(pa) + q1_substitute(pb));
      CHECK(q1_substitute(pa.times_q1()) == q1_substitute(pa) * LaurentPoly::q_diff());
    }
    CHECK(q1_substitute(Q1Poly::q1()) == LaurentPoly::q_diff());
    CHECK(q1_substitute(Q1Poly()) == LaurentPoly());
  }

  TEST_CASE("q_length") { CHECK(q_length(3) == LaurentPoly::q_half(3)); }

  TEST_CASE("overflow is reported") {
    const Coeff big = std::numeric_limits<Coeff>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK_THROWS_AS(LaurentPoly(big) + LaurentPoly(1), std::overflow_error);
    CHECK_THROWS_AS(LaurentPoly(big) * LaurentPoly(2), std::overflow_error);
    CHECK(checked_add(-5, 3) == -2);
  }
}
