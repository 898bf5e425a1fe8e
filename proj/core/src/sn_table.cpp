#include "sn_table.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qhecke::detail {

namespace {

SnTable build(int n) {
  SnTable t;
  t.n = n;
  t.perms = all_permutations(n);
  t.lengths.reserve(t.perms.size());
  for (const auto& p : t.perms) t.lengths.push_back(p.length());
  t.right_gen.assign(n, {});
  t.right_desc.assign(n, {});
  for (int i = 1; i < n; ++i) {
    t.right_gen[i].resize(t.perms.size());
    t.right_desc[i].resize(t.perms.size());
    for (std::size_t k = 0; k < t.perms.size(); ++k) {
      t.right_gen[i][k] = perm_rank(t.perms[k].right_gen(i));
      t.right_desc[i][k] = t.perms[k].right_descent(i) ? 1 : 0;
    }
  }
  return t;
}

}  // namespace

const SnTable& sn_table(int n) {
  constexpr int kMax = 8;
  if (n < 1 || n > kMax) throw std::domain_error("S_n tables support 1 <= n <= 8");
  static std::array<std::unique_ptr<SnTable>, kMax + 1> tables;
  static std::array<std::once_flag, kMax + 1> flags;
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<SnTable>(build(n)); });
  return *tables[n];
}

}  // namespace qhecke::detail
