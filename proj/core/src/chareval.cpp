#include "qhecke/chareval.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "qhecke/hecke.hpp"
#include "qhecke/qmatrix.hpp"

namespace qhecke {

std::string GTableau::to_string() const {
  return "mask=" + family.mask_string() + " columns=" + columns.to_string() + " incross=" + std::to_string(incross) +
         " cross=" + std::to_string(cross);
}

std::vector<int> column_ranks(const OrderedSetPartition& I) {
  std::vector<int> col(I.n());
  for (std::size_t k = 0; k < I.blocks.size(); ++k)
    for (int a : I.blocks[k]) col[a - 1] = static_cast<int>(k);
  return col;
}

int same_column_defective_noncrossings(const PathFamily& pi, const std::vector<int>& column_of) {
  int count = 0;
  for (const auto& x : pi.meetings)
    if (!x.crossing && x.defective && column_of[x.upper - 1] == column_of[x.lower - 1]) ++count;
  return count;
}

int inv_statistic(const PathFamily& pi, const std::vector<int>& column_of) {
  int count = 0;
  for (const auto& [a, b] : pi.intersecting_pairs())
    if (column_of[b - 1] < column_of[a - 1]) ++count;
  return count;
}

bool columns_nonintersecting(const PathFamily& pi, const std::vector<int>& column_of) {
  return std::none_of(pi.meetings.begin(), pi.meetings.end(),
                      [&](const Meeting& x) { return column_of[x.upper - 1] == column_of[x.lower - 1]; });
}

std::vector<GTableau> enumerate_tableaux(const WiringDiagram& d, const Partition& lambda) {
  require_partition(lambda, d.n());
  const auto partitions = ordered_set_partitions(d.n(), lambda);
  std::vector<std::vector<int>> ranks;
  ranks.reserve(partitions.size());
  for (const auto& I : partitions) ranks.push_back(column_ranks(I));

  std::vector<GTableau> out;
  for (const auto& pi : all_families(d)) {
    if (!pi.type.is_identity()) continue;
    for (std::size_t k = 0; k < partitions.size(); ++k) {
      if (!columns_nonintersecting(pi, ranks[k])) continue;
      out.push_back({pi, partitions[k], inverted_noncrossings(pi, ranks[k]), pi.cross});
    }
  }
  return out;
}

LaurentPoly epsilon_eval_tableaux(const WiringDiagram& d, const Partition& lambda) {
  LaurentPoly total;
  for (const auto& U : enumerate_tableaux(d, lambda)) total += LaurentPoly::q_half(2 * U.incross + U.cross);
  return total;
}

LaurentPoly epsilon_eval_immanant(const WiringDiagram& d, const Partition& lambda) {
  require_partition(lambda, d.n());
  const auto ys = young_subgroup(lambda, d.n());
  LaurentPoly total;
  for (const auto& I : ordered_set_partitions(d.n(), lambda)) {
    const Permutation u = u_of_I(I);
    const auto sigma = sigma_dp(d, u);
    for (const auto& y : ys) {
      auto it = sigma.find(y * u);
      if (it == sigma.end()) continue;
      const int l = y.length();
      LaurentPoly term = it->second.shifted(-l);
      total += (l % 2 == 0) ? term : -term;
    }
  }
  return total;
}

namespace {

const std::map<Permutation, LaurentPoly>& cached_char_table(const Partition& lambda, int n) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, std::map<Permutation, LaurentPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(lambda, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, epsilon_char_table(lambda, n)).first;
  return it->second;
}

}  // namespace

LaurentPoly epsilon_eval_chartable(const WiringDiagram& d, const Partition& lambda) {
  require_partition(lambda, d.n());
  const auto& table = cached_char_table(lambda, d.n());
  const HeckeElement h = product_one_plus_T(d.word);
  LaurentPoly total;
  for (const auto& [w, a] : h.coords()) {
    auto it = table.find(w);
    if (it != table.end()) total += a * it->second;
  }
  return total;
}

Method parse_method(std::string_view name) {
  if (name == "tableaux") return Method::Tableaux;
  if (name == "immanant") return Method::Immanant;
  if (name == "chartable") return Method::Chartable;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Tableaux: return "tableaux";
    case Method::Immanant: return "immanant";
    case Method::Chartable: return "chartable";
  }
  return "?";
}

LaurentPoly epsilon_eval(const WiringDiagram& d, const Partition& lambda, Method m) {
  switch (m) {
    case Method::Tableaux: return epsilon_eval_tableaux(d, lambda);
    case Method::Immanant: return epsilon_eval_immanant(d, lambda);
    case Method::Chartable: return epsilon_eval_chartable(d, lambda);
  }
  throw std::invalid_argument("unknown method");
}

// ------------------------------------------------------------- classical

namespace {

Coeff count_labelings(const std::vector<int>& cycles, std::size_t k, std::vector<int>& room) {
  if (k == cycles.size()) return 1;
  Coeff total = 0;
  for (auto& r : room) {
    if (r < cycles[k]) continue;
    r -= cycles[k];
    total = checked_add(total, count_labelings(cycles, k + 1, room));
    r += cycles[k];
  }
  return total;
}

}  // namespace

Coeff epsilon_classical(const Permutation& w, const Partition& lambda) {
  require_partition(lambda, w.n());
  std::vector<int> cycles;
  std::vector<char> seen(w.n() + 1, 0);
  for (int a = 1; a <= w.n(); ++a) {
    if (seen[a]) continue;
    int len = 0;
    for (int b = a; !seen[b]; b = w(b)) {
      seen[b] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  std::vector<int> room(lambda.begin(), lambda.end());
  const Coeff count = count_labelings(cycles, 0, room);
  return w.length() % 2 == 0 ? count : -count;
}

// ----------------------------------------------------- pattern-gated forms

LaurentPoly kl_eval_321hex(const Permutation& w, const Partition& lambda) {
  require_partition(lambda, w.n());
  if (!is_321_hexagon_avoiding(w)) throw std::invalid_argument(w.to_string() + " is not 321-hexagon-avoiding");
  auto words = reduced_words(w);
  if (words.size() > 1000) {
    std::mt19937_64 rng(0x5eed);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(10);
  }
  const LaurentPoly value = epsilon_eval_tableaux(WiringDiagram(words.front()), lambda);
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (epsilon_eval_tableaux(WiringDiagram(words[k]), lambda) != value)
      throw std::logic_error("reduced words of " + w.to_string() + " disagree");
  }
  return value;
}

bool inv_statistic_check(const WiringDiagram& d, const Partition& lambda) {
  if (!is_reduced(d.word)) throw std::invalid_argument("word is not reduced");
  const Permutation w = perm_from_word(d.word);
  if (!is_321_3412_avoiding(w)) throw std::invalid_argument(w.to_string() + " contains 321 or 3412");
  for (const auto& U : enumerate_tableaux(d, lambda)) {
    if (U.cross != 0) return false;
    if (U.incross != inv_statistic(U.family, column_ranks(U.columns))) return false;
  }
  return true;
}

}  // namespace qhecke
