#include "qhecke/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhecke {

namespace {

int parse_int(std::string_view s, const char* what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text, "permutation"));
  std::vector<int> w;
  for (char c : text) {
    if (c == ' ') continue;
    if (c < '1' || c > '9') throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<int>(i) + 1;
  Permutation p;
  p.w_ = std::move(inv);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::left_gen(int i) const {
  Permutation p = *this;
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Permutation Permutation::right_gen(int i) const {
  Permutation p = *this;
  for (int& x : p.w_) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return p;
}

bool Permutation::right_descent(int i) const {
  // value i+1 occurs before value i
  for (int x : w_) {
    if (x == i) return false;
    if (x == i + 1) return true;
  }
  return false;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("permutation sizes differ");
  Permutation p;
  p.w_.resize(x.w_.size());
  for (std::size_t i = 0; i < x.w_.size(); ++i) p.w_[i] = y.w_[x.w_[i] - 1];
  return p;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_.size() > 9 && i > 0) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.oneline()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

// -------------------------------------------------------------- GeneratorWord

GeneratorWord::GeneratorWord(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
  if (n < 1) throw std::invalid_argument("word: n must be positive");
  for (int i : letters)
    if (i < 1 || i > n - 1)
      throw std::invalid_argument("word: letter " + std::to_string(i) + " out of range 1.." + std::to_string(n - 1));
}

GeneratorWord GeneratorWord::parse(int n, std::string_view text) {
  return GeneratorWord(n, parse_int_list(text, "word letter"));
}

std::string GeneratorWord::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

Permutation perm_from_word(const GeneratorWord& word) {
  Permutation p = Permutation::identity(word.n);
  for (int i : word.letters) p = p.right_gen(i);
  return p;
}

// --------------------------------------------------------------------- orders

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("bruhat_leq: sizes differ");
  const int n = u.n();
  // r_w(i, j) = #{a <= i : w_a >= j}; u <= v iff r_u <= r_v entrywise.
  std::vector<int> ru(n + 2, 0), rv(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (u(i) >= j) ++ru[j];
      if (v(i) >= j) ++rv[j];
      if (ru[j] > rv[j]) return false;
    }
  }
  return true;
}

bool weak_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("weak_leq: sizes differ");
  return (v * u.inverse()).length() + u.length() == v.length();
}

namespace {

void reduced_words_rec(const Permutation& w, std::vector<int>& suffix, std::vector<GeneratorWord>& out) {
  if (w.is_identity()) {
    out.emplace_back(w.n(), std::vector<int>(suffix.rbegin(), suffix.rend()));
    return;
  }
  for (int i = 1; i < w.n(); ++i) {
    if (w.right_descent(i)) {
      suffix.push_back(i);
      reduced_words_rec(w.right_gen(i), suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<GeneratorWord> reduced_words(const Permutation& w) {
  std::vector<GeneratorWord> out;
  std::vector<int> suffix;
  reduced_words_rec(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorWord some_reduced_word(const Permutation& w) {
  // Peel the smallest left descent each time: lexicographically first word.
  std::vector<int> letters;
  Permutation p = w;
  while (!p.is_identity()) {
    for (int i = 1; i < p.n(); ++i) {
      if (p.left_descent(i)) {
        letters.push_back(i);
        p = p.left_gen(i);
        break;
      }
    }
  }
  return GeneratorWord(w.n(), std::move(letters));
}

bool is_reduced(const GeneratorWord& word) { return perm_from_word(word).length() == word.size(); }

// ------------------------------------------------------------------- patterns

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = w.n();
  const int k = pattern.n();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        if ((w.oneline()[idx[a]] < w.oneline()[idx[b]]) != (pattern.oneline()[a] < pattern.oneline()[b]))
          match = false;
    if (match) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool avoids_patterns(const Permutation& w, const std::vector<Permutation>& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& p) { return contains_pattern(w, p); });
}

bool is_321_hexagon_avoiding(const Permutation& w) {
  static const std::vector<Permutation> patterns = {
      Permutation::parse("321"),      Permutation::parse("56781234"), Permutation::parse("56718234"),
      Permutation::parse("46781235"), Permutation::parse("46718235"),
  };
  return avoids_patterns(w, patterns);
}

bool is_321_3412_avoiding(const Permutation& w) {
  static const std::vector<Permutation> patterns = {Permutation::parse("321"), Permutation::parse("3412")};
  return avoids_patterns(w, patterns);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::size_t perm_rank(const Permutation& w) {
  const auto& v = w.oneline();
  const int n = w.n();
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (v[j] < v[i]) ++smaller;
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

// ----------------------------------------------------------------- partitions

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) return false;
    if (i > 0 && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

void require_composition(const Partition& lambda, int n) {
  int sum = 0;
  for (int p : lambda) {
    if (p <= 0) throw std::invalid_argument("lambda: parts must be positive");
    sum += p;
  }
  if (sum != n)
    throw std::invalid_argument("lambda: parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
}

void require_partition(const Partition& lambda, int n) {
  require_composition(lambda, n);
  if (!is_partition(lambda)) throw std::invalid_argument("lambda: parts must be weakly decreasing");
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t multinomial(const Partition& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  std::uint64_t r = factorial(n);
  for (int p : lambda) r /= factorial(p);
  return r;
}

Partition parse_partition(std::string_view text) { return parse_int_list(text, "partition part"); }

std::string partition_to_string(const Partition& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[i]);
  }
  return s;
}

Partition OrderedSetPartition::type() const {
  Partition t;
  for (const auto& b : blocks) t.push_back(static_cast<int>(b.size()));
  return t;
}

int OrderedSetPartition::n() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

int OrderedSetPartition::block_of(int x) const {
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (std::binary_search(blocks[k].begin(), blocks[k].end(), x)) return static_cast<int>(k);
  throw std::out_of_range("element not in any block");
}

std::string OrderedSetPartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) os << ",";
    os << "{";
    for (std::size_t i = 0; i < blocks[k].size(); ++i) os << (i ? "," : "") << blocks[k][i];
    os << "}";
  }
  os << ")";
  return os.str();
}

namespace {

void osp_rec(int x, int n, const Partition& lambda, OrderedSetPartition& cur, std::vector<OrderedSetPartition>& out) {
  if (x > n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (static_cast<int>(cur.blocks[k].size()) < lambda[k]) {
      cur.blocks[k].push_back(x);
      osp_rec(x + 1, n, lambda, cur, out);
      cur.blocks[k].pop_back();
    }
  }
}

}  // namespace

std::vector<OrderedSetPartition> ordered_set_partitions(int n, const Partition& lambda) {
  require_composition(lambda, n);
  std::vector<OrderedSetPartition> out;
  OrderedSetPartition cur;
  cur.blocks.resize(lambda.size());
  osp_rec(1, n, lambda, cur, out);
  return out;
}

Permutation u_of_I(const OrderedSetPartition& I) {
  std::vector<int> w;
  for (auto b : I.blocks) {
    std::sort(b.begin(), b.end());
    w.insert(w.end(), b.begin(), b.end());
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> young_subgroup(const Partition& lambda, int n) {
  require_composition(lambda, n);
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    bool ok = true;
    int start = 1;
    for (int part : lambda) {
      for (int i = start; i < start + part && ok; ++i)
        if (w(i) < start || w(i) >= start + part) ok = false;
      start += part;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace qhecke
