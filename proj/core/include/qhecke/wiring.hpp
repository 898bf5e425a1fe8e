#pragma once

// Wiring diagrams of generator words, their covering path families, and the
// evaluation map sigma_B on the zero-weight space.
//
// Wires, sources and sinks are numbered 1..n from bottom to top. Path a is
// the path leaving source a. Column j (1-based) holds the crossing vertex of
// the generator s_{i_j}, joining wires i_j and i_j + 1.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qhecke/exact.hpp"
#include "qhecke/perm.hpp"

namespace qhecke {

struct WiringDiagram {
  GeneratorWord word;

  WiringDiagram() = default;
  explicit WiringDiagram(GeneratorWord w) : word(std::move(w)) {}
  int n() const { return word.n; }
  int m() const { return word.size(); }
  /// Generator index at column j (1-based).
  int letter(int j) const { return word.letters[j - 1]; }
};

/// The two paths meeting at one column's central vertex.
struct Meeting {
  int lower = 0;  // path entering on wire i_j
  int upper = 0;  // path entering on wire i_j + 1
  bool crossing = false;
  bool defective = false;  // the two paths have crossed an odd number of times before
};

/// Maximum diagram length accepted by mask-based enumeration.
inline constexpr int kMaxMaskBits = 24;

/// A covering path family, selected by its crossing mask.
struct PathFamily {
  /// bit j-1 set iff column j is a crossing
  std::uint64_t mask = 0;
  int m = 0;
  Permutation type;  // path a ends at sink type(a)
  std::vector<Meeting> meetings;
  /// trajectory[j][a-1] = wire of path a after column j; trajectory[0] is the identity.
  std::vector<std::vector<int>> trajectory;
  int cross = 0;
  int dfct = 0;

  int defective_crossings() const;
  int defective_noncrossings() const;
  /// "101" style mask, column 1 first.
  std::string mask_string() const;
  /// Unordered pairs {a, b} (a < b) of paths meeting at some vertex.
  std::vector<std::pair<int, int>> intersecting_pairs() const;
};

/// Throws std::invalid_argument if mask has bits at or above m.
PathFamily family_from_mask(const WiringDiagram& d, std::uint64_t mask);
/// Mask given as a binary word, column 1 first; length must equal m.
PathFamily family_from_mask(const WiringDiagram& d, std::string_view mask);
/// All 2^m covering families in mask order. Refuses m > kMaxMaskBits.
std::vector<PathFamily> all_families(const WiringDiagram& d);

/// Number of noncrossings whose upper path sits in a strictly earlier column
/// than the lower path. column_of[a-1] is the column rank of path a.
int inverted_noncrossings(const PathFamily& pi, const std::vector<int>& column_of);

/// sigma over the one-column diagram of s_j at x^{u,v}.
LaurentPoly sigma_single_generator(int j, const Permutation& u, const Permutation& v);

/// sigma_B(x^{u,w}) for every w, by the prefix recursion over columns.
std::map<Permutation, LaurentPoly> sigma_dp(const WiringDiagram& d, const Permutation& u);

/// sigma_B(x^{u,w}) as a sum over covering families of type u^{-1}w of
/// q^{cross/2} q^{incross} on the one-row tableau with sources u, sinks w.
LaurentPoly sigma_direct(const WiringDiagram& d, const Permutation& u, const Permutation& w);
std::map<Permutation, LaurentPoly> sigma_direct_all(const WiringDiagram& d, const Permutation& u);

// ---- z-algebra oracle

/// Edge weight z_{wire, column, slot}; slot 1 enters the vertex, slot 2 leaves it.
struct ZVar {
  int wire = 0;
  int column = 0;
  int slot = 0;
  friend auto operator<=>(const ZVar&, const ZVar&) = default;
};
using ZMonomial = std::vector<ZVar>;

/// Sorts factors lexicographically. Returns the accumulated power of q^{1/2}
/// picked up from swapping quasicommuting pairs (same column and slot).
int normal_order(ZMonomial& z);

/// All paths from source i to sink j as ordered edge-weight words.
std::vector<ZMonomial> path_matrix_entry(const WiringDiagram& d, int i, int j);

/// [z_G] b_{rows(1),cols(1)} ... b_{rows(n),cols(n)}; factor order follows the sequence.
LaurentPoly zg_coefficient(const WiringDiagram& d, const Permutation& rows, const Permutation& cols);

/// sigma_B(x^{u,w}) through straightening onto {x^{e,v}} and the z-algebra.
LaurentPoly sigma_zalgebra(const WiringDiagram& d, const Permutation& u, const Permutation& w);

/// sum_w theta(w) * (number of covering families of type w).
Coeff classical_eval(const WiringDiagram& d, const std::map<Permutation, Coeff>& theta);

/// Text picture of the diagram, top wire first; with a mask, noncrossings are drawn as '='.
std::string render_ascii(const WiringDiagram& d);
std::string render_ascii(const WiringDiagram& d, const PathFamily& pi);

}  // namespace qhecke
