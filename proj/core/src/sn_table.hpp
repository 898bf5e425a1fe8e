#pragma once

// Dense indexing of S_n for dynamic programs over all permutations.

#include <cstddef>
#include <vector>

#include "qhecke/perm.hpp"

namespace qhecke::detail {

struct SnTable {
  int n = 0;
  std::vector<Permutation> perms;  // index = lexicographic rank
  std::vector<int> lengths;
  // right_gen[i][k] = rank of perms[k] * s_i; right_desc[i][k] = perms[k] * s_i < perms[k]
  std::vector<std::vector<std::size_t>> right_gen;
  std::vector<std::vector<char>> right_desc;

  std::size_t size() const { return perms.size(); }
};

/// Shared, lazily built table for S_n (n <= 8). Thread-safe.
const SnTable& sn_table(int n);

}  // namespace qhecke::detail
