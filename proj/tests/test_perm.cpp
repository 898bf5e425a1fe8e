#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "qhecke/perm.hpp"

using namespace qhecke;

TEST_SUITE("perm") {
  TEST_CASE("parsing and printing") {
    CHECK(Permutation::parse("2314").to_string() == "2314");
    CHECK(Permutation::parse("2,3,1").to_string() == "231");
    CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").to_string() == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(Permutation::parse("112"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("24"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1a"), std::invalid_argument);
    CHECK(GeneratorWord::parse(3, "1,2,1").letters == std::vector<int>{1, 2, 1});
    CHECK(GeneratorWord::parse(3, "").size() == 0);
    CHECK_THROWS_AS(GeneratorWord::parse(3, "1,3"), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorWord(2, {0}), std::invalid_argument);
  }

  TEST_CASE("product, inverse and generators against the defining formula") {
    for (int n = 1; n <= 4; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& x : perms) {
        CHECK(x * x.inverse() == Permutation::identity(n));
        CHECK(x.length() == oracle::inversions(x));
        for (const auto& y : perms) CHECK(x * y == oracle::compose(x, y));
        for (int i = 1; i < n; ++i) {
          const Permutation s = oracle::simple(n, i);
          CHECK(x.left_gen(i) == oracle::compose(s, x));
          CHECK(x.right_gen(i) == oracle::compose(x, s));
          CHECK(x.left_descent(i) == (x.left_gen(i).length() < x.length()));
          CHECK(x.right_descent(i) == (x.right_gen(i).length() < x.length()));
        }
      }
    }
  }

  TEST_CASE("word convention") {
    // s_1 s_2 with (xy)_i = y_{x_i}
    CHECK(perm_from_word(GeneratorWord(3, {1, 2})).to_string() == "312");
    CHECK(perm_from_word(GeneratorWord(3, {1, 2, 1})).to_string() == "321");
    CHECK(perm_from_word(GeneratorWord(4, {})).is_identity());
  }

  TEST_CASE("Bruhat order agrees with the subword property") {
    for (int n = 1; n <= 4; ++n) {
      const auto perms = all_permutations(n);
      for (const auto& v : perms) {
        const auto rw = some_reduced_word(v).letters;
        for (const auto& u : perms) CHECK(bruhat_leq(u, v) == oracle::bruhat_by_subwords(u, rw));
      }
    }
  }

  TEST_CASE("weak order agrees with reduced-word suffixes") {
    const auto perms = all_permutations(4);
    for (const auto& v : perms) {
      const auto words = reduced_words(v);
      for (const auto& u : perms) {
        bool suffix = false;
        for (const auto& w : words)
          for (std::size_t k = 0; k <= w.letters.size() && !suffix; ++k) {
            GeneratorWord tail(4, std::vector<int>(w.letters.begin() + k, w.letters.end()));
            suffix = perm_from_word(tail) == u;
          }
        CHECK(weak_leq(u, v) == suffix);
      }
    }
  }

  TEST_CASE("reduced words") {
    CHECK(reduced_words(Permutation::parse("321")).size() == 2);
    CHECK(reduced_words(Permutation::parse("4321")).size() == 16);
    CHECK(reduced_words(Permutation::identity(3)).size() == 1);
    for (const auto& w : all_permutations(4)) {
      const auto words = reduced_words(w);
      CHECK(std::is_sorted(words.begin(), words.end()));
      CHECK(some_reduced_word(w) == words.front());
      for (const auto& word : words) {
        CHECK(word.size() == w.length());
        CHECK(is_reduced(word));
        CHECK(perm_from_word(word) == w);
      }
    }
    CHECK_FALSE(is_reduced(GeneratorWord(3, {1, 1})));
    CHECK_FALSE(is_reduced(GeneratorWord(3, {1, 2, 1, 2})));
  }

  TEST_CASE("pattern avoidance") {
    auto count = [](int n, auto pred) {
      const auto perms = all_permutations(n);
      return std::count_if(perms.begin(), perms.end(), pred);
    };
    const auto p321 = Permutation::parse("321");
    CHECK(count(4, [&](const Permutation& w) { return !contains_pattern(w, p321); }) == 14);
    CHECK(count(4, [](const Permutation& w) { return is_321_3412_avoiding(w); }) == 13);
    CHECK(count(5, [](const Permutation& w) { return is_321_3412_avoiding(w); }) == 34);
    CHECK_FALSE(is_321_hexagon_avoiding(p321));
    CHECK(is_321_hexagon_avoiding(Permutation::parse("3412")));
    CHECK_FALSE(is_321_hexagon_avoiding(Permutation::parse("46718235")));
    CHECK(contains_pattern(Permutation::parse("234167589"), Permutation::parse("2341")));
  }

  TEST_CASE("enumeration and ranks") {
    const auto perms = all_permutations(4);
    CHECK(perms.size() == 24);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    for (std::size_t k = 0; k < perms.size(); ++k) CHECK(perm_rank(perms[k]) == k);
    CHECK(factorial(6) == 720);
  }

  TEST_CASE("partitions and set partitions") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({2, 2}) == 6);
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(partition_to_string({2, 1, 1}) == "2,1,1");
    CHECK_THROWS_AS(require_partition({1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(require_partition({2, 1}, 4), std::invalid_argument);
    CHECK_NOTHROW(require_composition({1, 2}, 3));

    for (const auto& lambda : partitions_of(4)) {
      const auto osp = ordered_set_partitions(4, lambda);
      CHECK(osp.size() == multinomial(lambda));
      for (const auto& I : osp) {
        CHECK(I.type() == lambda);
        const Permutation u = u_of_I(I);
        int pos = 0;
        for (const auto& block : I.blocks)
          for (int x : block) CHECK(u(++pos) == x);
      }
      std::uint64_t order = 1;
      for (int part : lambda) order *= factorial(part);
      CHECK(young_subgroup(lambda, 4).size() == order);
    }
    const auto I = ordered_set_partitions(3, {2, 1}).front();
    CHECK(I.to_string() == "({1,2},{3})");
    CHECK(I.block_of(3) == 1);
  }
}
