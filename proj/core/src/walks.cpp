#include "qhecke/walks.hpp"

#include <stdexcept>

namespace qhecke {

std::string WeakWalk::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (j > 0) s += steps[j] == steps[j - 1] ? " ~> " : " -> ";
    s += steps[j].to_string();
  }
  return s;
}

void require_walk_domain(const Permutation& u, const Permutation& t, const GeneratorWord& word) {
  if (u.n() != t.n() || word.n != u.n()) throw std::invalid_argument("walk: size mismatch");
  if (!weak_leq(t, u)) throw std::invalid_argument("walk: t must lie weakly below u");
  if (!is_reduced(word)) throw std::invalid_argument("walk: word is not reduced");
  if (perm_from_word(word) != u * t.inverse()) throw std::invalid_argument("walk: word does not spell u t^{-1}");
}

namespace {

// target == nullptr collects walks to every end point.
void dfs(const GeneratorWord& word, std::size_t j, const Permutation* target, WeakWalk& cur,
         std::vector<WeakWalk>& out) {
  const Permutation pi = cur.steps.back();
  if (j == word.letters.size()) {
    if (!target || pi == *target) out.push_back(cur);
    return;
  }
  const int s = word.letters[j];
  cur.steps.push_back(pi.left_gen(s));
  dfs(word, j + 1, target, cur, out);
  cur.steps.pop_back();
  if (pi.left_descent(s)) {
    cur.steps.push_back(pi);
    ++cur.stays;
    dfs(word, j + 1, target, cur, out);
    --cur.stays;
    cur.steps.pop_back();
  }
}

void add_power(Q1Poly& p, int b) {
  std::vector<Coeff> c(b + 1, 0);
  c[b] = 1;
  p += Q1Poly(std::move(c));
}

}  // namespace

std::vector<WeakWalk> walk_enumerate(const Permutation& u, const Permutation& v, const Permutation& t,
                                     const Permutation& w, const GeneratorWord& word) {
  require_walk_domain(u, t, word);
  if (v.n() != u.n() || w.n() != u.n()) throw std::invalid_argument("walk: size mismatch");
  std::vector<WeakWalk> out;
  WeakWalk cur;
  cur.steps.push_back(v);
  dfs(word, 0, &w, cur, out);
  return out;
}

Q1Poly p_poly(const Permutation& u, const Permutation& v, const Permutation& t, const Permutation& w,
              const GeneratorWord& word) {
  Q1Poly p;
  for (const auto& walk : walk_enumerate(u, v, t, w, word)) add_power(p, walk.stays);
  return p;
}

std::map<Permutation, Q1Poly> p_polys(const Permutation& u, const Permutation& v, const Permutation& t,
                                      const GeneratorWord& word) {
  require_walk_domain(u, t, word);
  if (v.n() != u.n()) throw std::invalid_argument("walk: size mismatch");
  std::vector<WeakWalk> walks;
  WeakWalk cur;
  cur.steps.push_back(v);
  dfs(word, 0, nullptr, cur, walks);
  std::map<Permutation, Q1Poly> out;
  for (const auto& walk : walks) add_power(out[walk.steps.back()], walk.stays);
  return out;
}

namespace {

Q1Poly recurse(const std::vector<int>& letters, std::size_t j, const Permutation& v, const Permutation& w) {
  if (j == letters.size()) return v == w ? Q1Poly(1) : Q1Poly();
  const int s = letters[j];
  Q1Poly p = recurse(letters, j + 1, v.left_gen(s), w);
  if (v.left_descent(s)) p += recurse(letters, j + 1, v, w).times_q1();
  return p;
}

}  // namespace

Q1Poly p_poly_recursive(const Permutation& u, const Permutation& v, const Permutation& t, const Permutation& w,
                        const GeneratorWord& word) {
  require_walk_domain(u, t, word);
  if (v.n() != u.n() || w.n() != u.n()) throw std::invalid_argument("walk: size mismatch");
  return recurse(word.letters, 0, v, w);
}

}  // namespace qhecke
