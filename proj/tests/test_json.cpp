#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "qhecke/json_io.hpp"
#include "qhecke/walks.hpp"

using namespace qhecke;
namespace qj = qhecke::json;

namespace {

template <class T, class Decode>
void round_trip(const T& x, Decode decode) {
  const auto text = qj::encode(x).dump();
  CHECK(decode(nlohmann::json::parse(text)) == x);
}

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("laurent polynomial layout") {
    const LaurentPoly p = LaurentPoly::q_half(1) + LaurentPoly::monomial(3, -2);
    CHECK(qj::encode(p).dump() == "[[1,1],[3,-2]]");
    CHECK(qj::encode(LaurentPoly()).dump() == "[]");
    round_trip(p, qj::decode_laurent);
    round_trip(LaurentPoly::monomial(-5, 7), qj::decode_laurent);
  }

  TEST_CASE("decoders reject malformed input") {
    CHECK_THROWS(qj::decode_laurent(nlohmann::json::parse(R"([[1]])")));
    CHECK_THROWS(qj::decode_laurent(nlohmann::json::parse(R"({"a":1})")));
    CHECK_THROWS(qj::decode_hecke(nlohmann::json::parse(R"({"n":3,"coords":[{"perm":"1134","poly":[]}]})")));
  }

  TEST_CASE("hecke expansions round-trip") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
      const auto word = oracle::random_word(rng, 4, 7);
      round_trip(product_one_plus_T(word), qj::decode_hecke);
      round_trip(sigma_dp(WiringDiagram(word), Permutation::identity(4)), qj::decode_perm_laurent);
    }
  }

  TEST_CASE("q1 polynomials round-trip") {
    const auto e = Permutation::identity(3);
    const auto w0 = Permutation::parse("321");
    for (const auto& v : all_permutations(3)) {
      const auto r = r_polys(w0, v, e);
      round_trip(r, qj::decode_perm_q1);
      for (const auto& [w, p] : r) round_trip(p, qj::decode_q1);
    }
  }

  TEST_CASE("noncommutative polynomials round-trip") {
    const auto m = NCMonomial::parse("x[2,2]x[1,1]x[3,3]");
    round_trip(m, qj::decode_monomial);
    round_trip(straighten(m), qj::decode_ncpoly);
    round_trip(qdet({1, 2, 3}), qj::decode_ncpoly);
  }

  TEST_CASE("path family encoding") {
    const WiringDiagram d(GeneratorWord(3, {1, 2, 1}));
    const auto j = qj::encode(family_from_mask(d, "101"));
    CHECK(j["mask"] == "101");
    CHECK(j["type"] == "123");
    CHECK(j["cross"] == 2);
  }
}
