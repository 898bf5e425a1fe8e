#include "qhecke/hecke.hpp"

#include <stdexcept>

#include "qhecke/wiring.hpp"

namespace qhecke {

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement h(w.n());
  h.coords_.emplace(w, LaurentPoly(1));
  return h;
}

LaurentPoly HeckeElement::coefficient(const Permutation& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add(const Permutation& w, const LaurentPoly& c) {
  if (w.n() != n_) throw std::invalid_argument("HeckeElement: permutation size mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: rank mismatch");
  for (const auto& [w, c] : o.coords_) add(w, c);
  return *this;
}

HeckeElement HeckeElement::times_generator(int i) const {
  if (i < 1 || i >= n_) throw std::invalid_argument("generator index out of range");
  HeckeElement out(n_);
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - LaurentPoly(1);
  for (const auto& [w, c] : coords_) {
    Permutation ws = w.right_gen(i);
    if (!w.right_descent(i)) {
      out.add(ws, c);
    } else {
      out.add(w, c * qm1);
      out.add(ws, c * q);
    }
  }
  return out;
}

std::map<Permutation, Coeff> HeckeElement::specialize_at_one() const {
  std::map<Permutation, Coeff> out;
  for (const auto& [w, c] : coords_) {
    Coeff v = c.specialize_at_one();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : coords_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.pretty() + ")*T[" + w.to_string() + "]";
  }
  return s;
}

HeckeElement product_one_plus_T(const GeneratorWord& word) {
  HeckeElement h = HeckeElement::basis(Permutation::identity(word.n));
  for (int i : word.letters) h += h.times_generator(i);
  return h;
}

HeckeElement mask_expansion_defects(const GeneratorWord& word) {
  const WiringDiagram d(word);
  HeckeElement h(word.n);
  for (const auto& pi : all_families(d)) h.add(pi.type, LaurentPoly::q_half(2 * pi.dfct));
  return h;
}

std::map<Permutation, Coeff> classical_product(const GeneratorWord& word) {
  std::map<Permutation, Coeff> cur{{Permutation::identity(word.n), 1}};
  for (int i : word.letters) {
    std::map<Permutation, Coeff> next = cur;
    for (const auto& [w, c] : cur) {
      Coeff& slot = next[w.right_gen(i)];
      slot = checked_add(slot, c);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qhecke
