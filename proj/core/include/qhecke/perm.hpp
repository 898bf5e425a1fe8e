#pragma once

// Permutations of [n], generator words, Bruhat and weak orders, pattern
// avoidance, Young subgroups and ordered set partitions.
//
// Product convention: (x*y)_i = y_{x_i} on one-line notations. Hence
// s_j*w swaps the letters in positions j, j+1 of w, and w*s_j swaps the
// values j, j+1. A generator word (i_1,...,i_m) denotes s_{i_1}*...*s_{i_m}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qhecke {

class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `oneline` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  /// Digit string ("2314") or comma-separated list ("10,2,...").
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(w_.size()); }
  /// w_i, 1-based.
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& oneline() const { return w_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  /// s_i * w (swap positions i, i+1).
  Permutation left_gen(int i) const;
  /// w * s_i (swap values i, i+1).
  Permutation right_gen(int i) const;
  /// s_i * w < w
  bool left_descent(int i) const { return w_[i - 1] > w_[i]; }
  /// w * s_i < w
  bool right_descent(int i) const;

  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.w_ <=> b.w_; }

  /// Comma-free digits for n <= 9, comma-separated otherwise.
  std::string to_string() const;

 private:
  std::vector<int> w_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A word in the generators s_1..s_{n-1}.
struct GeneratorWord {
  int n = 1;
  std::vector<int> letters;

  GeneratorWord() = default;
  /// Throws std::invalid_argument if a letter is outside 1..n-1.
  GeneratorWord(int n, std::vector<int> letters);
  /// Comma-separated letters; empty text gives the empty word.
  static GeneratorWord parse(int n, std::string_view text);

  int size() const { return static_cast<int>(letters.size()); }
  std::string to_string() const;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
  friend auto operator<=>(const GeneratorWord& a, const GeneratorWord& b) { return a.letters <=> b.letters; }
};

Permutation perm_from_word(const GeneratorWord& word);
inline int length(const Permutation& w) { return w.length(); }

/// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);
/// Left weak order: some reduced expression for v ends with one for u.
bool weak_leq(const Permutation& u, const Permutation& v);

/// All reduced words, in lexicographic order of letters.
std::vector<GeneratorWord> reduced_words(const Permutation& w);
/// One reduced word (lexicographically first).
GeneratorWord some_reduced_word(const Permutation& w);
bool is_reduced(const GeneratorWord& word);

bool contains_pattern(const Permutation& w, const Permutation& pattern);
bool avoids_patterns(const Permutation& w, const std::vector<Permutation>& patterns);
bool is_321_hexagon_avoiding(const Permutation& w);
bool is_321_3412_avoiding(const Permutation& w);

/// All n! permutations, lexicographic by one-line notation.
std::vector<Permutation> all_permutations(int n);
/// Lexicographic rank in S_n (Lehmer code).
std::size_t perm_rank(const Permutation& w);
std::uint64_t factorial(int n);

// ----------------------------------------------------------- partitions

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& lambda);
/// Throws std::invalid_argument unless lambda is a partition of n.
void require_partition(const Partition& lambda, int n);
/// Throws std::invalid_argument unless lambda has positive parts summing to n.
void require_composition(const Partition& lambda, int n);
std::vector<Partition> partitions_of(int n);
std::uint64_t multinomial(const Partition& lambda);
Partition parse_partition(std::string_view text);
std::string partition_to_string(const Partition& lambda);

/// (I_1, ..., I_r): disjoint nonempty blocks, each sorted increasingly.
struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;

  Partition type() const;
  int n() const;
  /// Block index (0-based) containing element x.
  int block_of(int x) const;
  std::string to_string() const;
  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

/// All ordered set partitions of [n] whose block sizes are lambda, in order.
std::vector<OrderedSetPartition> ordered_set_partitions(int n, const Partition& lambda);
/// Concatenation of the blocks, each listed increasingly.
Permutation u_of_I(const OrderedSetPartition& I);
/// Elements of the Young subgroup S_lambda (permuting positions within blocks).
std::vector<Permutation> young_subgroup(const Partition& lambda, int n);

}  // namespace qhecke
