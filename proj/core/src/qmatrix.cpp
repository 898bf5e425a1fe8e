#include "qhecke/qmatrix.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <string>

namespace qhecke {

// --------------------------------------------------------------- monomials

NCMonomial NCMonomial::parse(std::string_view text) {
  static const std::regex token(R"(\s*x\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*)");
  NCMonomial m;
  std::string s(text);
  auto it = s.cbegin();
  std::smatch match;
  while (it != s.cend()) {
    if (!std::regex_search(it, s.cend(), match, token, std::regex_constants::match_continuous)) {
      if (std::all_of(it, s.cend(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) break;
      throw std::invalid_argument("cannot parse monomial: " + s);
    }
    const int i = std::stoi(match[1].str());
    const int j = std::stoi(match[2].str());
    if (i < 1 || j < 1) throw std::invalid_argument("monomial indices must be positive");
    m.factors.emplace_back(i, j);
    it = match[0].second;
  }
  return m;
}

bool NCMonomial::is_sorted() const { return std::is_sorted(factors.begin(), factors.end()); }

NCMonomial NCMonomial::operator*(const NCMonomial& o) const {
  NCMonomial r = *this;
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  return r;
}

std::string NCMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [i, j] : factors) {
    if (!s.empty()) s += ' ';
    s += "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return s;
}

// ------------------------------------------------------------- polynomials

NCPolynomial::NCPolynomial(const NCMonomial& m, LaurentPoly c) { add(m, c); }

bool NCPolynomial::is_normalized() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.is_sorted(); });
}

LaurentPoly NCPolynomial::coefficient(const NCMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void NCPolynomial::add(const NCMonomial& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
  return r;
}

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.pretty() + ")*" + m.to_string();
  }
  return s;
}

// ----------------------------------------------------------- straightening

namespace {

class Straightener {
 public:
  explicit Straightener(RewriteStrategy s) : strategy_(s) {}

  const NCPolynomial& run(const NCMonomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    NCPolynomial result;
    const int k = find_violation(m);
    if (k < 0) {
      result.add(m, LaurentPoly(1));
    } else {
      const auto [r1, c1] = m.factors[k];
      const auto [r2, c2] = m.factors[k + 1];
      NCMonomial swapped = m;
      std::swap(swapped.factors[k], swapped.factors[k + 1]);
      if (r1 == r2 || c1 == c2) {
        // same row or same column: quasicommute
        add_scaled(result, run(swapped), LaurentPoly::q_half(1));
      } else if (c1 < c2) {
        add_scaled(result, run(swapped), LaurentPoly(1));
      } else {
        add_scaled(result, run(swapped), LaurentPoly(1));
        NCMonomial corr = m;
        corr.factors[k] = {r2, c1};
        corr.factors[k + 1] = {r1, c2};
        add_scaled(result, run(corr), LaurentPoly::q_diff());
      }
    }
    return memo_.emplace(m, std::move(result)).first->second;
  }

 private:
  int find_violation(const NCMonomial& m) const {
    const int d = m.degree();
    if (strategy_ == RewriteStrategy::Leftmost) {
      for (int k = 0; k + 1 < d; ++k)
        if (m.factors[k + 1] < m.factors[k]) return k;
    } else {
      for (int k = d - 2; k >= 0; --k)
        if (m.factors[k + 1] < m.factors[k]) return k;
    }
    return -1;
  }

  static void add_scaled(NCPolynomial& acc, const NCPolynomial& p, const LaurentPoly& c) {
    for (const auto& [mono, coeff] : p.terms()) acc.add(mono, coeff * c);
  }

  RewriteStrategy strategy_;
  std::map<NCMonomial, NCPolynomial> memo_;
};

NCPolynomial straighten_with(Straightener& st, const NCPolynomial& p) {
  NCPolynomial out;
  for (const auto& [m, c] : p.terms())
    for (const auto& [mono, coeff] : st.run(m).terms()) out.add(mono, coeff * c);
  return out;
}

}  // namespace

NCPolynomial straighten(const NCMonomial& m, RewriteStrategy strategy) {
  Straightener st(strategy);
  return st.run(m);
}

NCPolynomial straighten(const NCPolynomial& p, RewriteStrategy strategy) {
  Straightener st(strategy);
  return straighten_with(st, p);
}

// -------------------------------------------------------------- zero weight

NCMonomial zero_weight_monomial(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("zero-weight monomial needs permutations of equal size");
  NCMonomial m;
  for (int k = 1; k <= u.n(); ++k) m.factors.emplace_back(u(k), v(k));
  return m;
}

namespace {

// Coefficients on the sorted basis {x^{e,w}}: the sorted zero-weight
// monomials are exactly x_{1,w_1} ... x_{n,w_n}.
std::map<Permutation, LaurentPoly> expand_on_e(Straightener& st, const Permutation& u, const Permutation& v) {
  std::map<Permutation, LaurentPoly> out;
  for (const auto& [m, c] : st.run(zero_weight_monomial(u, v)).terms()) {
    std::vector<int> cols;
    cols.reserve(m.factors.size());
    for (const auto& f : m.factors) cols.push_back(f.second);
    out.emplace(Permutation(std::move(cols)), c);
  }
  return out;
}

}  // namespace

std::map<Permutation, LaurentPoly> zero_weight_expand(const Permutation& u, const Permutation& v,
                                                      const Permutation& t) {
  if (t.n() != u.n()) throw std::invalid_argument("zero_weight_expand: size mismatch");
  Straightener st(RewriteStrategy::Leftmost);
  auto y = expand_on_e(st, u, v);
  if (t.is_identity()) return y;

  // x^{t,w} = x^{e,t^{-1}w} + (Bruhat-larger terms); peel off the shortest
  // remaining basis element until the residual vanishes.
  std::map<Permutation, LaurentPoly> c;
  auto by_length = [](const Permutation& a, const Permutation& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  };
  while (!y.empty()) {
    auto lead = std::min_element(y.begin(), y.end(),
                                 [&](const auto& a, const auto& b) { return by_length(a.first, b.first); });
    const Permutation wprime = lead->first;
    const LaurentPoly coeff = lead->second;
    const Permutation w = t * wprime;
    c[w] += coeff;
    for (const auto& [x, r] : expand_on_e(st, t, w)) {
      LaurentPoly& slot = y[x];
      slot -= coeff * r;
      if (slot.is_zero()) y.erase(x);
    }
  }
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  return c;
}

// ---------------------------------------------------------------- r_polys

namespace {

struct RSolver {
  Permutation t;
  Permutation t_inv;
  const DescentChooser* choose;
  std::map<std::pair<Permutation, Permutation>, std::map<Permutation, Q1Poly>> memo;

  const std::map<Permutation, Q1Poly>& get(const Permutation& u, const Permutation& v) {
    auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::map<Permutation, Q1Poly> out;
    if (u == t) {
      out.emplace(v, Q1Poly(1));
    } else {
      const Permutation x = u * t_inv;
      int s = 0;
      if (choose && *choose) {
        s = (*choose)(x);
        if (s < 1 || s >= x.n() || !x.left_descent(s))
          throw std::logic_error("descent chooser returned a non-descent");
      } else {
        for (int i = 1; i < x.n(); ++i)
          if (x.left_descent(i)) {
            s = i;
            break;
          }
      }
      const Permutation su = u.left_gen(s);
      const Permutation sv = v.left_gen(s);
      out = get(su, sv);
      if (v.left_descent(s)) {
        for (const auto& [w, p] : get(su, v)) {
          Q1Poly& slot = out[w];
          slot += p.times_q1();
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

std::map<Permutation, Q1Poly> r_polys(const Permutation& u, const Permutation& v, const Permutation& t,
                                      const DescentChooser& choose) {
  if (u.n() != v.n() || u.n() != t.n()) throw std::invalid_argument("r_polys: size mismatch");
  if (!weak_leq(t, u)) throw std::invalid_argument("r_polys: t must lie weakly below u");
  RSolver solver{t, t.inverse(), &choose, {}};
  return solver.get(u, v);
}

std::map<Permutation, Q1Poly> r_polys(const Permutation& u, const Permutation& v, const Permutation& t) {
  return r_polys(u, v, t, DescentChooser{});
}

// ------------------------------------------------------------ determinants

NCPolynomial qdet(const std::vector<int>& I) {
  if (I.empty()) throw std::invalid_argument("qdet: empty index set");
  if (!std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end())
    throw std::invalid_argument("qdet: index set must be strictly increasing");
  if (I.front() < 1) throw std::invalid_argument("qdet: indices must be positive");
  const int k = static_cast<int>(I.size());
  NCPolynomial out;
  const LaurentPoly minus_root = LaurentPoly::monomial(-1, -1);
  for (const auto& sigma : all_permutations(k)) {
    NCMonomial m;
    for (int a = 1; a <= k; ++a) m.factors.emplace_back(I[sigma(a) - 1], I[a - 1]);
    LaurentPoly c(1);
    for (int l = sigma.length(); l > 0; --l) c *= minus_root;
    out.add(m, c);
  }
  return out;
}

std::map<Permutation, LaurentPoly> epsilon_char_table(const Partition& lambda, int n) {
  require_partition(lambda, n);
  Straightener st(RewriteStrategy::Leftmost);
  NCPolynomial total;
  for (const auto& I : ordered_set_partitions(n, lambda)) {
    NCPolynomial prod(NCMonomial{}, LaurentPoly(1));
    for (const auto& block : I.blocks) prod = prod * qdet(block);
    total += straighten_with(st, prod);
  }
  std::map<Permutation, LaurentPoly> table;
  for (const auto& w : all_permutations(n)) {
    const LaurentPoly c = total.coefficient(zero_weight_monomial(Permutation::identity(n), w));
    if (!c.is_zero()) table.emplace(w, c.shifted(w.length()));
  }
  return table;
}

}  // namespace qhecke
