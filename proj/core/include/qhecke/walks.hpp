#pragma once

// Walks in the left weak order along a reduced word, and the walk
// polynomials p_{u,v,t,w}(q1) they generate.
//
// A walk for (u, v, t, w) along a reduced word (i_1, ..., i_k) of u t^{-1}
// starts at v, ends at w, and at step j either moves to s_{i_j} pi or stays.
// Staying is only allowed when s_{i_j} pi < pi; each stay costs a factor q1.

#include <map>
#include <string>
#include <vector>

#include "qhecke/exact.hpp"
#include "qhecke/perm.hpp"

namespace qhecke {

struct WeakWalk {
  std::vector<Permutation> steps;  // pi^(0), ..., pi^(k)
  int stays = 0;

  /// "213 -> 123 ~> 123": '->' for a move, '~>' for a stay.
  std::string to_string() const;
  friend bool operator==(const WeakWalk&, const WeakWalk&) = default;
};

/// Throws std::invalid_argument unless t <=_W u and word is a reduced word for u t^{-1}.
void require_walk_domain(const Permutation& u, const Permutation& t, const GeneratorWord& word);

std::vector<WeakWalk> walk_enumerate(const Permutation& u, const Permutation& v, const Permutation& t,
                                     const Permutation& w, const GeneratorWord& word);

/// sum_b |C^b| q1^b by enumerating walks.
Q1Poly p_poly(const Permutation& u, const Permutation& v, const Permutation& t, const Permutation& w,
              const GeneratorWord& word);

/// Same value by peeling the first letter: p(u,v) = p(su,sv) + [sv<v] q1 p(su,v).
Q1Poly p_poly_recursive(const Permutation& u, const Permutation& v, const Permutation& t, const Permutation& w,
                        const GeneratorWord& word);

/// p_{u,v,t,w} for every end point w, by enumeration.
std::map<Permutation, Q1Poly> p_polys(const Permutation& u, const Permutation& v, const Permutation& t,
                                      const GeneratorWord& word);

}  // namespace qhecke
