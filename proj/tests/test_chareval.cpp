#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qhecke/chareval.hpp"
#include "qhecke/hecke.hpp"

using namespace qhecke;

namespace {

WiringDiagram diagram(int n, std::vector<int> letters) { return WiringDiagram(GeneratorWord(n, std::move(letters))); }

const LaurentPoly q = LaurentPoly::q();
const LaurentPoly q2 = LaurentPoly::monomial(4);

bool in_young_subgroup(const Permutation& y, const OrderedSetPartition& I) {
  int start = 1;
  for (const auto& block : I.blocks) {
    const int end = start + static_cast<int>(block.size());
    for (int i = start; i < end; ++i)
      if (y(i) < start || y(i) >= end) return false;
    start = end;
  }
  return true;
}

}  // namespace

TEST_SUITE("chareval") {
  TEST_CASE("tableaux of s1 s2 s1, shape 21") {
    const auto tabs = enumerate_tableaux(diagram(3, {1, 2, 1}), {2, 1});
    REQUIRE(tabs.size() == 2);
    CHECK(tabs[0].family.mask_string() == "000");
    CHECK(tabs[0].incross == 1);
    CHECK(tabs[0].cross == 0);
    CHECK(tabs[0].columns.to_string() == "({1,3},{2})");
    CHECK(tabs[1].family.mask_string() == "101");
    CHECK(tabs[1].incross == 1);
    CHECK(tabs[1].cross == 2);
    CHECK(tabs[1].to_string() == "mask=101 columns=({2,3},{1}) incross=1 cross=2");
  }

  TEST_CASE("tableau counts") {
    const auto empty = enumerate_tableaux(diagram(3, {}), {2, 1});
    CHECK(empty.size() == 3);
    for (const auto& U : empty) CHECK((U.incross == 0 && U.cross == 0));
    CHECK(enumerate_tableaux(diagram(4, {3, 1, 2, 1}), {3, 1}).empty());
    CHECK(enumerate_tableaux(diagram(4, {3, 2, 1, 2}), {3, 1}).size() == 1);
    CHECK_THROWS_AS(enumerate_tableaux(diagram(3, {}), {1, 2}), std::invalid_argument);
  }

  TEST_CASE("worked evaluations under every method") {
    for (Method m : {Method::Tableaux, Method::Immanant, Method::Chartable}) {
      CAPTURE(method_name(m));
      CHECK(epsilon_eval(diagram(3, {1, 2, 1}), {2, 1}, m) == q + q2);
      CHECK(epsilon_eval(diagram(3, {2, 1, 2}), {2, 1}, m) == q + q2);
      CHECK(epsilon_eval(diagram(4, {3, 2, 1, 2}), {3, 1}, m) == q2);
      CHECK(epsilon_eval(diagram(4, {3, 1, 2, 1}), {3, 1}, m).is_zero());
      CHECK(epsilon_eval(diagram(2, {1}), {1, 1}, m) == LaurentPoly(1) + q);
    }
  }

  TEST_CASE("empty word") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& lambda : partitions_of(n)) {
        const LaurentPoly rank(static_cast<Coeff>(multinomial(lambda)));
        CHECK(epsilon_eval_tableaux(diagram(n, {}), lambda) == rank);
        CHECK(epsilon_eval_immanant(diagram(n, {}), lambda) == rank);
        CHECK(epsilon_eval_chartable(diagram(n, {}), lambda) == rank);
      }
  }

  TEST_CASE("three methods agree on every short word, n <= 3") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& word : oracle::all_words(n, 4)) {
        const WiringDiagram d(word);
        for (const auto& lambda : partitions_of(n)) {
          const LaurentPoly a = epsilon_eval_tableaux(d, lambda);
          CHECK(a == epsilon_eval_immanant(d, lambda));
          CHECK(a == epsilon_eval_chartable(d, lambda));
          CHECK((a.is_zero() || a.in_nonneg_poly_ring()));
        }
      }
  }

  TEST_CASE("classical character by cycle labelings") {
    CHECK(epsilon_classical(Permutation::parse("234167589"), {5, 4}) == -3);
    for (int n = 1; n <= 5; ++n)
      for (const auto& lambda : partitions_of(n)) {
        CHECK(epsilon_classical(Permutation::identity(n), lambda) == static_cast<Coeff>(multinomial(lambda)));
        for (const auto& w : all_permutations(n)) CHECK(epsilon_classical(w, lambda) == oracle::induced_sign(w, lambda));
      }
    const std::vector<std::pair<const char*, Coeff>> s3{{"123", 3}, {"213", -1}, {"132", -1},
                                                        {"312", 0},  {"231", 0},  {"321", -1}};
    for (const auto& [w, c] : s3) CHECK(epsilon_classical(Permutation::parse(w), {2, 1}) == c);
  }

  TEST_CASE("signed sums over column-closed tableaux collapse to the column-strict sum") {
    for (int n = 2; n <= 3; ++n)
      for (const auto& word : oracle::all_words(n, 5)) {
        const WiringDiagram d(word);
        const auto families = all_families(d);
        for (const auto& lambda : partitions_of(n))
          for (const auto& I : ordered_set_partitions(n, lambda)) {
            const Permutation u = u_of_I(I);
            const Permutation uinv = u.inverse();
            const std::vector<int> row_rank(uinv.oneline());  // one-row tableau U
            const std::vector<int> block = column_ranks(I);     // its image W
            LaurentPoly via_u, via_w, restricted;
            for (const auto& pi : families) {
              const Permutation y = u * pi.type * uinv;
              if (!in_young_subgroup(y, I)) continue;
              const int l = y.length();
              const int inc_u = inverted_noncrossings(pi, row_rank);
              const int inc_w = inverted_noncrossings(pi, block) + same_column_defective_noncrossings(pi, block);
              CHECK(inc_u == inc_w);
              const LaurentPoly sign(l % 2 == 0 ? 1 : -1);
              via_u += sign * LaurentPoly::q_half(pi.cross + 2 * inc_u - l);
              via_w += sign * LaurentPoly::q_half(pi.cross + 2 * inc_w - l);
              if (pi.type.is_identity() && columns_nonintersecting(pi, block))
                restricted += LaurentPoly::q_half(pi.cross + 2 * inverted_noncrossings(pi, block));
            }
            CHECK(via_u == restricted);
            CHECK(via_w == restricted);
          }
      }
  }

  TEST_CASE("Kazhdan-Lusztig evaluations for 321-hexagon-avoiding permutations") {
    CHECK_THROWS_AS(kl_eval_321hex(Permutation::parse("321"), {2, 1}), std::invalid_argument);
    CHECK(kl_eval_321hex(Permutation::parse("21"), {1, 1}) == LaurentPoly(1) + q);
    for (const auto& w : all_permutations(4)) {
      if (!is_321_hexagon_avoiding(w)) continue;
      for (const auto& lambda : partitions_of(4))
        CHECK(kl_eval_321hex(w, lambda) == epsilon_eval_chartable(WiringDiagram(some_reduced_word(w)), lambda));
    }
  }

  TEST_CASE("inv statistic on zig-zag networks") {
    CHECK(inv_statistic_check(diagram(4, {1, 3}), {2, 2}));
    CHECK(inv_statistic_check(diagram(4, {1, 3}), {2, 1, 1}));
    const auto w2143 = Permutation::parse("2143");
    for (const auto& word : reduced_words(w2143)) CHECK(inv_statistic_check(WiringDiagram(word), {3, 1}));
    CHECK_THROWS_AS(inv_statistic_check(diagram(3, {1, 2, 1}), {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(inv_statistic_check(diagram(3, {1, 1}), {2, 1}), std::invalid_argument);
  }

  TEST_CASE("method names") {
    CHECK(parse_method("immanant") == Method::Immanant);
    CHECK(method_name(Method::Chartable) == "chartable");
    CHECK_THROWS_AS(parse_method("magic"), std::invalid_argument);
  }
}
