#pragma once

// Natural-basis arithmetic in the type A Hecke algebra H_n(q).

#include <map>
#include <string>

#include "qhecke/exact.hpp"
#include "qhecke/perm.hpp"

namespace qhecke {

/// Element sum_w c_w T_w, stored sparsely. Zero coordinates are never kept.
class HeckeElement {
 public:
  explicit HeckeElement(int n = 1) : n_(n) {}
  /// T_w
  static HeckeElement basis(const Permutation& w);

  int n() const { return n_; }
  const std::map<Permutation, LaurentPoly>& coords() const { return coords_; }
  LaurentPoly coefficient(const Permutation& w) const;
  void add(const Permutation& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Right multiplication by T_{s_i}:
  /// T_w T_s = T_{ws} if ws > w, else (q-1) T_w + q T_{ws}.
  HeckeElement times_generator(int i) const;

  /// Coefficients specialized at q^{1/2} = 1.
  std::map<Permutation, Coeff> specialize_at_one() const;

  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, LaurentPoly> coords_;
};

inline HeckeElement mul_by_generator(const HeckeElement& h, int i) { return h.times_generator(i); }

/// (1 + T_{s_{i_1}}) ... (1 + T_{s_{i_m}}), folded left to right.
HeckeElement product_one_plus_T(const GeneratorWord& word);

/// Same product assembled from the 2^m crossing masks, each contributing
/// q^{dfct} to T_{type}. Independent of the multiplication rule above.
HeckeElement mask_expansion_defects(const GeneratorWord& word);

/// (1 + s_{i_1}) ... (1 + s_{i_m}) in Z[S_n].
std::map<Permutation, Coeff> classical_product(const GeneratorWord& word);

}  // namespace qhecke
