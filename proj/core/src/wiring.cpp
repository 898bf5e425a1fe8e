#include "qhecke/wiring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qhecke/qmatrix.hpp"
#include "sn_table.hpp"

namespace qhecke {

// ----------------------------------------------------------------- families

int PathFamily::defective_crossings() const {
  return static_cast<int>(
      std::count_if(meetings.begin(), meetings.end(), [](const Meeting& x) { return x.crossing && x.defective; }));
}

int PathFamily::defective_noncrossings() const {
  return static_cast<int>(
      std::count_if(meetings.begin(), meetings.end(), [](const Meeting& x) { return !x.crossing && x.defective; }));
}

std::string PathFamily::mask_string() const {
  std::string s;
  for (int j = 0; j < m; ++j) s += ((mask >> j) & 1u) ? '1' : '0';
  return s;
}

std::vector<std::pair<int, int>> PathFamily::intersecting_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& x : meetings) out.emplace_back(std::min(x.lower, x.upper), std::max(x.lower, x.upper));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PathFamily family_from_mask(const WiringDiagram& d, std::uint64_t mask) {
  const int n = d.n();
  const int m = d.m();
  if (m > 63 || (m < 64 && (mask >> m) != 0)) throw std::invalid_argument("mask length does not match the diagram");

  PathFamily pi;
  pi.mask = mask;
  pi.m = m;
  std::vector<int> pos(n);        // pos[a-1] = wire of path a
  std::vector<int> occupant(n);   // occupant[h-1] = path on wire h
  for (int a = 0; a < n; ++a) pos[a] = occupant[a] = a + 1;
  // crossing parity per unordered pair, running
  std::vector<char> parity(static_cast<std::size_t>(n) * n, 0);

  pi.trajectory.reserve(m + 1);
  pi.trajectory.push_back(pos);
  pi.meetings.reserve(m);
  for (int j = 1; j <= m; ++j) {
    const int i = d.letter(j);
    Meeting mt;
    mt.lower = occupant[i - 1];
    mt.upper = occupant[i];
    mt.crossing = ((mask >> (j - 1)) & 1u) != 0;
    const std::size_t key = static_cast<std::size_t>(std::min(mt.lower, mt.upper) - 1) * n +
                            static_cast<std::size_t>(std::max(mt.lower, mt.upper) - 1);
    mt.defective = parity[key] != 0;
    if (mt.crossing) {
      std::swap(occupant[i - 1], occupant[i]);
      pos[mt.lower - 1] = i + 1;
      pos[mt.upper - 1] = i;
      parity[key] ^= 1;
      ++pi.cross;
    }
    if (mt.defective) ++pi.dfct;
    pi.meetings.push_back(mt);
    pi.trajectory.push_back(pos);
  }
  pi.type = Permutation(pos);
  return pi;
}

PathFamily family_from_mask(const WiringDiagram& d, std::string_view mask) {
  if (static_cast<int>(mask.size()) != d.m()) throw std::invalid_argument("mask length does not match the diagram");
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (mask[j] == '1')
      bits |= (std::uint64_t{1} << j);
    else if (mask[j] != '0')
      throw std::invalid_argument("mask must be a binary word");
  }
  return family_from_mask(d, bits);
}

std::vector<PathFamily> all_families(const WiringDiagram& d) {
  if (d.m() > kMaxMaskBits) throw std::domain_error("refusing to enumerate more than 2^24 masks");
  std::vector<PathFamily> out;
  const std::uint64_t count = std::uint64_t{1} << d.m();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(family_from_mask(d, mask));
  return out;
}

int inverted_noncrossings(const PathFamily& pi, const std::vector<int>& column_of) {
  int count = 0;
  for (const auto& x : pi.meetings)
    if (!x.crossing && column_of[x.upper - 1] < column_of[x.lower - 1]) ++count;
  return count;
}

// ------------------------------------------------------------------- sigma

LaurentPoly sigma_single_generator(int j, const Permutation& u, const Permutation& v) {
  if (u == v.right_gen(j)) return LaurentPoly::q_half(1);
  if (u == v) return v.right_descent(j) ? LaurentPoly::q() : LaurentPoly(1);
  return {};
}

std::map<Permutation, LaurentPoly> sigma_dp(const WiringDiagram& d, const Permutation& u) {
  if (u.n() != d.n()) throw std::invalid_argument("sigma_dp: permutation size differs from diagram");
  const auto& tab = detail::sn_table(d.n());
  std::vector<LaurentPoly> cur(tab.size());
  cur[perm_rank(u)] = LaurentPoly(1);
  std::vector<LaurentPoly> next(tab.size());
  for (int j = 1; j <= d.m(); ++j) {
    const int s = d.letter(j);
    const auto& ws = tab.right_gen[s];
    const auto& desc = tab.right_desc[s];
    for (std::size_t w = 0; w < tab.size(); ++w) {
      // Only x^{ws,w} and x^{w,w} survive one column; their weights are
      // q^{1/2} and q or 1 (see sigma_single_generator).
      LaurentPoly acc = cur[ws[w]].shifted(1);
      acc += desc[w] ? cur[w].shifted(2) : cur[w];
      next[w] = std::move(acc);
    }
    std::swap(cur, next);
  }
  std::map<Permutation, LaurentPoly> out;
  for (std::size_t w = 0; w < tab.size(); ++w)
    if (!cur[w].is_zero()) out.emplace(tab.perms[w], std::move(cur[w]));
  return out;
}

std::map<Permutation, LaurentPoly> sigma_direct_all(const WiringDiagram& d, const Permutation& u) {
  if (u.n() != d.n()) throw std::invalid_argument("sigma_direct: permutation size differs from diagram");
  // One-row tableau: path u_k sits in column k.
  const Permutation uinv = u.inverse();
  std::vector<int> column_of(uinv.oneline());
  std::map<Permutation, LaurentPoly> out;
  for (const auto& pi : all_families(d)) {
    const Permutation w = u * pi.type;  // type = u^{-1} w
    const int half = pi.cross + 2 * inverted_noncrossings(pi, column_of);
    out[w] += LaurentPoly::q_half(half);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LaurentPoly sigma_direct(const WiringDiagram& d, const Permutation& u, const Permutation& w) {
  auto all = sigma_direct_all(d, u);
  auto it = all.find(w);
  return it == all.end() ? LaurentPoly{} : it->second;
}

// ---------------------------------------------------------------- z-algebra

int normal_order(ZMonomial& z) {
  int half = 0;
  // Plain bubble sort so every adjacent swap is accounted for.
  for (std::size_t pass = 0; pass < z.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
      if (z[k + 1] < z[k]) {
        if (z[k].column == z[k + 1].column && z[k].slot == z[k + 1].slot) ++half;
        std::swap(z[k], z[k + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return half;
}

namespace {

void paths_rec(const WiringDiagram& d, int column, int wire, int sink, ZMonomial& cur, std::vector<ZMonomial>& out) {
  if (column > d.m()) {
    if (wire == sink) out.push_back(cur);
    return;
  }
  const int i = d.letter(column);
  if (wire != i && wire != i + 1) {
    paths_rec(d, column + 1, wire, sink, cur, out);
    return;
  }
  for (int exit : {i, i + 1}) {
    cur.push_back({wire, column, 1});
    cur.push_back({exit, column, 2});
    paths_rec(d, column + 1, exit, sink, cur, out);
    cur.pop_back();
    cur.pop_back();
  }
}

int var_index(const WiringDiagram& d, const ZVar& z) {
  return 4 * (z.column - 1) + (z.wire == d.letter(z.column) ? 0 : 2) + (z.slot - 1);
}

struct ZgSearch {
  const WiringDiagram& d;
  std::vector<std::vector<ZMonomial>> entries;  // per factor
  std::vector<std::vector<std::uint64_t>> entry_bits;
  LaurentPoly result;
  ZMonomial word;

  void run(std::size_t f, std::uint64_t used) {
    if (f == entries.size()) {
      if (used != full()) return;
      ZMonomial z = word;
      result += LaurentPoly::q_half(normal_order(z));
      return;
    }
    for (std::size_t p = 0; p < entries[f].size(); ++p) {
      const std::uint64_t bits = entry_bits[f][p];
      if (bits & used) continue;  // repeated indeterminate: no z_G term
      const std::size_t before = word.size();
      word.insert(word.end(), entries[f][p].begin(), entries[f][p].end());
      run(f + 1, used | bits);
      word.resize(before);
    }
  }

  std::uint64_t full() const {
    return d.m() == 16 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (4 * d.m())) - 1);
  }
};

}  // namespace

std::vector<ZMonomial> path_matrix_entry(const WiringDiagram& d, int i, int j) {
  std::vector<ZMonomial> out;
  ZMonomial cur;
  paths_rec(d, 1, i, j, cur, out);
  return out;
}

LaurentPoly zg_coefficient(const WiringDiagram& d, const Permutation& rows, const Permutation& cols) {
  if (d.m() > 16) throw std::domain_error("z-algebra oracle supports at most 16 columns");
  ZgSearch search{d, {}, {}, {}, {}};
  for (int f = 1; f <= d.n(); ++f) {
    auto paths = path_matrix_entry(d, rows(f), cols(f));
    std::vector<std::uint64_t> bits;
    for (const auto& p : paths) {
      std::uint64_t b = 0;
      bool repeated = false;
      for (const auto& z : p) {
        const std::uint64_t bit = std::uint64_t{1} << var_index(d, z);
        if (b & bit) repeated = true;
        b |= bit;
      }
      bits.push_back(repeated ? ~std::uint64_t{0} : b);
    }
    search.entries.push_back(std::move(paths));
    search.entry_bits.push_back(std::move(bits));
  }
  search.run(0, 0);
  return search.result;
}

LaurentPoly sigma_zalgebra(const WiringDiagram& d, const Permutation& u, const Permutation& w) {
  const Permutation e = Permutation::identity(d.n());
  LaurentPoly total;
  for (const auto& [v, c] : zero_weight_expand(u, w, e)) total += c * zg_coefficient(d, e, v);
  return total;
}

Coeff classical_eval(const WiringDiagram& d, const std::map<Permutation, Coeff>& theta) {
  Coeff total = 0;
  for (const auto& pi : all_families(d)) {
    auto it = theta.find(pi.type);
    if (it != theta.end()) total = checked_add(total, it->second);
  }
  return total;
}

// ------------------------------------------------------------------ drawing

namespace {

std::string render(const WiringDiagram& d, const PathFamily* pi) {
  const int n = d.n();
  // Lines top to bottom: wire n, gap, wire n-1, ..., wire 1.
  std::vector<std::string> lines(2 * n - 1);
  for (int h = n; h >= 1; --h) lines[2 * (n - h)] = std::to_string(h) + " -";
  for (int g = 0; g + 1 < n; ++g) lines[2 * g + 1] = "   ";
  for (int j = 1; j <= d.m(); ++j) {
    const int i = d.letter(j);
    for (int h = n; h >= 1; --h) lines[2 * (n - h)] += (h == i || h == i + 1) ? "-+-" : "---";
    for (int g = 0; g + 1 < n; ++g) {
      const int below = n - g - 1;  // gap between wires below+1 and below
      std::string cell = "   ";
      if (below == i) cell = (pi && !pi->meetings[j - 1].crossing) ? " = " : " X ";
      lines[2 * g + 1] += cell;
    }
  }
  std::ostringstream os;
  for (const auto& l : lines) os << l << (l.front() == ' ' ? "" : "-") << "\n";
  return os.str();
}

}  // namespace

std::string render_ascii(const WiringDiagram& d) { return render(d, nullptr); }
std::string render_ascii(const WiringDiagram& d, const PathFamily& pi) { return render(d, &pi); }

}  // namespace qhecke
