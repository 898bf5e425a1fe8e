#pragma once

// Straightening in the quantum matrix bialgebra A(n;q), transition
// polynomials between zero-weight monomial bases, quantum determinants and
// the induced sign character table read off the epsilon immanant.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhecke/exact.hpp"
#include "qhecke/perm.hpp"

namespace qhecke {

/// Variable x_{row,col}. Lexicographic order by (row, col).
using XVar = std::pair<int, int>;

struct NCMonomial {
  std::vector<XVar> factors;

  NCMonomial() = default;
  explicit NCMonomial(std::vector<XVar> f) : factors(std::move(f)) {}
  /// "x[1,2] x[2,1]"; empty text is the unit.
  static NCMonomial parse(std::string_view text);

  int degree() const { return static_cast<int>(factors.size()); }
  bool is_sorted() const;
  NCMonomial operator*(const NCMonomial& o) const;
  std::string to_string() const;

  friend bool operator==(const NCMonomial&, const NCMonomial&) = default;
  friend auto operator<=>(const NCMonomial& a, const NCMonomial& b) { return a.factors <=> b.factors; }
};

class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(const NCMonomial& m, LaurentPoly c = LaurentPoly(1));

  const std::map<NCMonomial, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every monomial has its factors in lexicographic order.
  bool is_normalized() const;
  LaurentPoly coefficient(const NCMonomial& m) const;
  void add(const NCMonomial& m, const LaurentPoly& c);

  NCPolynomial& operator+=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  /// Free (concatenation) product; not straightened.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  std::string to_string() const;

 private:
  std::map<NCMonomial, LaurentPoly> terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Normal form of m in the lexicographic monomial basis of A(n;q).
NCPolynomial straighten(const NCMonomial& m, RewriteStrategy strategy = RewriteStrategy::Leftmost);
NCPolynomial straighten(const NCPolynomial& p, RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// x^{u,v} = x_{u_1,v_1} ... x_{u_n,v_n}
NCMonomial zero_weight_monomial(const Permutation& u, const Permutation& v);

/// Coefficients of x^{u,v} on the basis {x^{t,w} : w in S_n}.
std::map<Permutation, LaurentPoly> zero_weight_expand(const Permutation& u, const Permutation& v,
                                                      const Permutation& t);

/// Picks which left descent s_i of u t^{-1} the recursion peels next.
using DescentChooser = std::function<int(const Permutation& ut_inv)>;

/// Transition polynomials r_{u,v,t,w}(q1) for all w (zero entries omitted).
/// Requires t <=_W u; throws std::invalid_argument otherwise.
std::map<Permutation, Q1Poly> r_polys(const Permutation& u, const Permutation& v, const Permutation& t);
/// Same, with the descent used at each recursion step chosen by `choose`.
std::map<Permutation, Q1Poly> r_polys(const Permutation& u, const Permutation& v, const Permutation& t,
                                      const DescentChooser& choose);

/// Principal quantum minor on the index set I (sorted, nonempty):
/// sum over v in S_I of (-q^{-1/2})^{l(v)} x_{v(i_1),i_1} ... x_{v(i_k),i_k}.
NCPolynomial qdet(const std::vector<int>& I);

/// epsilon_q^lambda(T_w) for every w in S_n, from the straightened immanant.
std::map<Permutation, LaurentPoly> epsilon_char_table(const Partition& lambda, int n);

}  // namespace qhecke
