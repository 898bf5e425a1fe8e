#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qhecke/chareval.hpp"

using namespace qhecke;

// Exhaustive agreement of the three evaluation methods, kept apart from the
// quick suites because it walks every word up to length 8.
TEST_SUITE("sweep") {
  TEST_CASE("three methods agree on every word, n <= 4, m <= 8") {
    long compared = 0;
    for (int n = 1; n <= 4; ++n)
      for (const auto& word : oracle::all_words(n, 8)) {
        const WiringDiagram d(word);
        for (const auto& lambda : partitions_of(n)) {
          const LaurentPoly a = epsilon_eval_tableaux(d, lambda);
          const LaurentPoly b = epsilon_eval_immanant(d, lambda);
          const LaurentPoly c = epsilon_eval_chartable(d, lambda);
          if (a != b || a != c) {
            CAPTURE(word.to_string());
            CAPTURE(partition_to_string(lambda));
            CHECK(a == b);
            CHECK(a == c);
          }
          ++compared;
        }
      }
    MESSAGE(compared << " (word, lambda) pairs compared");
    CHECK(compared > 0);
  }

  TEST_CASE("random spot checks at n = 5, m <= 10") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 60; ++k) {
      const WiringDiagram d(oracle::random_word(rng, 5, 10));
      for (const auto& lambda : partitions_of(5)) {
        const LaurentPoly a = epsilon_eval_tableaux(d, lambda);
        CHECK(a == epsilon_eval_immanant(d, lambda));
        CHECK(a == epsilon_eval_chartable(d, lambda));
      }
    }
  }
}
