#pragma once

// Induced sign characters eps_q^lambda evaluated at (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}).
//
// Three independent routes: a positive sum over G-tableaux, a signed sum of
// sigma_B values over Young subgroups, and pairing the natural-basis
// expansion with the character table read off the straightened immanant.

#include <string>
#include <string_view>
#include <vector>

#include "qhecke/exact.hpp"
#include "qhecke/perm.hpp"
#include "qhecke/wiring.hpp"

namespace qhecke {

/// A type-e covering family arranged column by column: column k holds the
/// paths whose sources lie in block k, bottom to top in increasing order.
struct GTableau {
  PathFamily family;
  OrderedSetPartition columns;
  int incross = 0;
  int cross = 0;

  std::string to_string() const;
};

/// column_of[a-1] = block index of path a.
std::vector<int> column_ranks(const OrderedSetPartition& I);

/// Defective noncrossings whose two paths share a column.
int same_column_defective_noncrossings(const PathFamily& pi, const std::vector<int>& column_of);
/// Intersecting pairs (a < b) with path b in a strictly earlier column than path a.
int inv_statistic(const PathFamily& pi, const std::vector<int>& column_of);
/// True iff no two paths in the same column meet at any vertex.
bool columns_nonintersecting(const PathFamily& pi, const std::vector<int>& column_of);

/// Column-strict tableaux of type e and shape lambda^T: every type-e family
/// together with every ordered set partition of type lambda whose blocks
/// hold pairwise nonintersecting paths.
std::vector<GTableau> enumerate_tableaux(const WiringDiagram& d, const Partition& lambda);

LaurentPoly epsilon_eval_tableaux(const WiringDiagram& d, const Partition& lambda);
LaurentPoly epsilon_eval_immanant(const WiringDiagram& d, const Partition& lambda);
LaurentPoly epsilon_eval_chartable(const WiringDiagram& d, const Partition& lambda);

enum class Method { Tableaux, Immanant, Chartable };
Method parse_method(std::string_view name);
std::string method_name(Method m);
LaurentPoly epsilon_eval(const WiringDiagram& d, const Partition& lambda, Method m);

/// Classical induced sign character at q = 1, by labeling cycles.
Coeff epsilon_classical(const Permutation& w, const Partition& lambda);

/// eps_q^lambda(q_w C'_w(q)) for 321-hexagon-avoiding w via the tableau
/// formula. Throws std::invalid_argument if w contains a forbidden pattern
/// and std::logic_error if two reduced words disagree.
LaurentPoly kl_eval_321hex(const Permutation& w, const Partition& lambda);

/// For a reduced word of a 321- and 3412-avoiding permutation: every
/// tableau has cross = 0 and incross = inv. Throws std::invalid_argument
/// if the word is not such a reduced word.
bool inv_statistic_check(const WiringDiagram& d, const Partition& lambda);

}  // namespace qhecke
