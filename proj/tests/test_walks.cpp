#include <doctest.h>

#include <stdexcept>

#include "qhecke/qmatrix.hpp"
#include "qhecke/walks.hpp"

using namespace qhecke;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_SUITE("walks") {
  TEST_CASE("empty word") {
    const auto t = P("231");
    const GeneratorWord empty(3, {});
    CHECK(walk_enumerate(t, P("312"), t, P("312"), empty).size() == 1);
    CHECK(walk_enumerate(t, P("312"), t, P("132"), empty).empty());
    CHECK(p_poly(t, P("312"), t, P("312"), empty) == Q1Poly(1));
  }

  TEST_CASE("single letter") {
    const GeneratorWord s1(2, {1});
    const auto s = P("21"), e = P("12");
    auto down = walk_enumerate(s, s, e, e, s1);
    REQUIRE(down.size() == 1);
    CHECK(down[0].stays == 0);
    CHECK(down[0].to_string() == "21 -> 12");
    auto stay = walk_enumerate(s, s, e, s, s1);
    REQUIRE(stay.size() == 1);
    CHECK(stay[0].stays == 1);
    CHECK(stay[0].to_string() == "21 ~> 21");
    // from e the only allowed step is the ascent
    auto up = walk_enumerate(s, e, e, s, s1);
    REQUIRE(up.size() == 1);
    CHECK(up[0].stays == 0);
    CHECK(walk_enumerate(s, e, e, e, s1).empty());
  }

  TEST_CASE("p_{w,w,e,s} = q1 [ws < w]") {
    const auto e = Permutation::identity(4);
    for (const auto& w : all_permutations(4)) {
      const auto word = some_reduced_word(w);
      for (int i = 1; i < 4; ++i) {
        const auto s = e.left_gen(i);
        const Q1Poly expect = w.right_descent(i) ? Q1Poly::q1() : Q1Poly();
        CHECK(p_poly(w, w, e, s, word) == expect);
        CHECK(p_poly(w.right_gen(i), w, e, s, some_reduced_word(w.right_gen(i))) == Q1Poly(1));
      }
      CHECK(p_poly(w, w, e, e, word) == Q1Poly(1));
    }
  }

  TEST_CASE("enumeration, recursion and r agree; walks are well formed") {
    for (int n = 1; n <= 3; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& u : perms)
        for (const auto& t : perms) {
          if (!weak_leq(t, u)) continue;
          for (const auto& word : reduced_words(u * t.inverse())) {
            const GeneratorWord wd(n, word.letters);
            for (const auto& v : perms) {
              CHECK(p_polys(u, v, t, wd) == r_polys(u, v, t));
              for (const auto& w : perms) {
                const auto walks = walk_enumerate(u, v, t, w, wd);
                const Q1Poly p = p_poly(u, v, t, w, wd);
                CHECK(p == p_poly_recursive(u, v, t, w, wd));
                Q1Poly from_stays;
                for (const auto& walk : walks) {
                  REQUIRE(walk.steps.size() == wd.letters.size() + 1);
                  CHECK(walk.steps.front() == v);
                  CHECK(walk.steps.back() == w);
                  int stays = 0;
                  for (std::size_t j = 0; j < wd.letters.size(); ++j) {
                    const auto& a = walk.steps[j];
                    const auto& b = walk.steps[j + 1];
                    const int s = wd.letters[j];
                    if (a == b) {
                      ++stays;
                      CHECK(a.left_descent(s));
                    } else {
                      CHECK(b == a.left_gen(s));
                    }
                  }
                  CHECK(stays == walk.stays);
                  std::vector<Coeff> mono(stays + 1, 0);
                  mono[stays] = 1;
                  from_stays += Q1Poly(mono);
                }
                CHECK(from_stays == p);
              }
            }
          }
        }
    }
  }

  TEST_CASE("domain errors") {
    const auto u = P("321"), e = P("123");
    CHECK_THROWS_AS(walk_enumerate(u, e, e, e, GeneratorWord(3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(walk_enumerate(u, e, e, e, GeneratorWord(3, {1, 1, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(walk_enumerate(u, e, e, e, GeneratorWord(3, {1, 2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(p_poly(P("213"), e, P("132"), e, GeneratorWord(3, {})), std::invalid_argument);
    CHECK_NOTHROW(p_poly(u, e, e, e, GeneratorWord(3, {2, 1, 2})));
  }
}
