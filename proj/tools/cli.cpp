#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qhecke/chareval.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/json_io.hpp"
#include "qhecke/qmatrix.hpp"
#include "qhecke/walks.hpp"
#include "qhecke/wiring.hpp"

namespace qhecke::cli {

using nlohmann::json;

namespace {

struct NamedCommand {
  Command command;
  const char* name;
  const char* help;
};

constexpr NamedCommand kCommands[] = {
    {Command::EvalEpsilon, "eval-epsilon", "Evaluate epsilon^lambda on the product of (1 + T_s) over a word"},
    {Command::ExpandHecke, "expand-hecke", "Expand the product of (1 + T_s) in the natural basis"},
    {Command::Sigma, "sigma", "Path-family generating function sigma(x^{u,w}) of a wiring diagram"},
    {Command::RPoly, "r-poly", "r_{u,v,t,w} polynomials in q1 by descent recursion"},
    {Command::PPoly, "p-poly", "p_{u,v,t,w} polynomials in q1 by counting weak walks"},
    {Command::Straighten, "straighten", "Rewrite a monomial of the quantum matrix algebra in sorted form"},
    {Command::ListTableaux, "list-tableaux", "List the G-tableaux of a shape on a wiring diagram"},
    {Command::Verify, "verify", "Run the seeded cross-checks between independent methods"},
};
}  // namespace

std::string command_name(Command c) {
  for (const auto& nc : kCommands)
    if (nc.command == c) return nc.name;
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& nc : kCommands)
    if (name == nc.name) return nc.command;
  throw ValidationError("command", "unknown command '" + name + "'");
}

std::string method_choice_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::Tableaux: return "tableaux";
    case MethodChoice::Immanant: return "immanant";
    case MethodChoice::Chartable: return "chartable";
    case MethodChoice::All: return "all";
  }
  return "?";
}

MethodChoice parse_method_choice(const std::string& name) {
  for (auto m : {MethodChoice::Tableaux, MethodChoice::Immanant, MethodChoice::Chartable, MethodChoice::All})
    if (name == method_choice_name(m)) return m;
  throw ValidationError("--method", "expected tableaux, immanant, chartable or all");
}

// ------------------------------------------------------------ validation

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ValidationError(field, what);
}

void require_perm(const std::optional<Permutation>& p, const char* field, int n) {
  require(p.has_value(), field, "required");
  require(p->n() == n, field, "permutation must have size n = " + std::to_string(n));
}

}  // namespace

void validate(const JobSpec& job) {
  require(job.max_m >= 0 && job.max_m <= kMaxMaskBits, "--max-m",
          "must lie in 0.." + std::to_string(kMaxMaskBits) + " (2^24 masks at most)");
  require(job.max_n >= 1 && job.max_n <= 8, "--max-n", "must lie in 1..8");
  if (job.command == Command::Straighten) {
    require(!job.monomial.empty(), "--monomial", "required");
    return;
  }
  if (job.command == Command::Verify) return;

  require(job.n >= 1, "--n", "required and positive");
  require(job.n <= job.max_n, "--n", "exceeds --max-n = " + std::to_string(job.max_n));

  const bool needs_word = job.command == Command::EvalEpsilon || job.command == Command::ExpandHecke ||
                          job.command == Command::Sigma || job.command == Command::ListTableaux;
  if (needs_word) require(job.word.has_value(), "--word", "required");
  if (job.word) {
    require(job.word->n == job.n, "--word", "letters must be generators of S_n");
    require(job.word->size() <= job.max_m, "--word", "longer than --max-m = " + std::to_string(job.max_m));
  }
  if (job.command == Command::EvalEpsilon || job.command == Command::ListTableaux) {
    require(job.lambda.has_value(), "--lambda", "required");
    try {
      require_partition(*job.lambda, job.n);
    } catch (const std::invalid_argument& e) {
      throw ValidationError("--lambda", e.what());
    }
  }
  if (job.command == Command::Sigma) require_perm(job.u, "--u", job.n);
  if (job.command == Command::RPoly || job.command == Command::PPoly) {
    require_perm(job.u, "--u", job.n);
    require_perm(job.v, "--v", job.n);
    require_perm(job.t, "--t", job.n);
    require(weak_leq(*job.t, *job.u), "--t", "must lie weakly below --u");
  }
  if (job.w) require(job.w->n() == job.n, "--w", "permutation must have size n = " + std::to_string(job.n));
}

// ------------------------------------------------------------------ jobs

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json job_json(const JobSpec& job) {
  json j{{"command", command_name(job.command)}, {"n", job.n}, {"method", method_choice_name(job.method)}};
  if (job.word) j["word"] = job.word->to_string();
  if (job.lambda) j["lambda"] = partition_to_string(*job.lambda);
  for (auto [name, p] : {std::pair{"u", &job.u}, {"v", &job.v}, {"t", &job.t}, {"w", &job.w}})
    if (*p) j[name] = (*p)->to_string();
  if (!job.monomial.empty()) j["monomial"] = job.monomial;
  if (job.command == Command::Verify) j["seed"] = job.seed;
  return j;
}

struct Context {
  const JobSpec& job;
  RunResult& result;
  std::ostringstream text;
  json timings = json::object();
};

void emit_poly(Context& ctx, const std::string& label, const LaurentPoly& p) {
  ctx.text << label << ": " << p.pretty();
  if (ctx.job.specialize) ctx.text << "   [q=1: " << p.specialize_at_one() << "]";
  ctx.text << "\n";
}

Method to_method(MethodChoice m) {
  switch (m) {
    case MethodChoice::Immanant: return Method::Immanant;
    case MethodChoice::Chartable: return Method::Chartable;
    default: return Method::Tableaux;
  }
}

void eval_epsilon(Context& ctx) {
  const WiringDiagram d(*ctx.job.word);
  std::vector<Method> methods;
  if (ctx.job.method == MethodChoice::All)
    methods = {Method::Tableaux, Method::Immanant, Method::Chartable};
  else
    methods = {to_method(ctx.job.method)};

  json results = json::object();
  std::vector<LaurentPoly> values;
  for (Method m : methods) {
    const auto start = Clock::now();
    LaurentPoly p = epsilon_eval(d, *ctx.job.lambda, m);
    ctx.timings[method_name(m)] = ms_since(start);
    results[method_name(m)] = qhecke::json::encode(p);
    if (ctx.job.specialize) results[method_name(m) + "@q=1"] = p.specialize_at_one();
    emit_poly(ctx, method_name(m), p);
    values.push_back(std::move(p));
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const auto& p) { return p == values.front(); });
  ctx.result.report[methods.size() > 1 ? "results" : "result"] =
      methods.size() > 1 ? results : results[method_name(methods.front())];
  ctx.result.report["agreement"] = agree;
  if (!agree) {
    json diff = json::object();
    for (std::size_t k = 0; k < methods.size(); ++k) diff[method_name(methods[k])] = values[k].to_string();
    ctx.result.report["diff"] = diff;
  }
  ctx.text << "agreement: " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void expand_hecke(Context& ctx) {
  auto start = Clock::now();
  const HeckeElement h = product_one_plus_T(*ctx.job.word);
  ctx.timings["product"] = ms_since(start);
  start = Clock::now();
  const HeckeElement masks = mask_expansion_defects(*ctx.job.word);
  ctx.timings["masks"] = ms_since(start);
  const bool agree = h == masks;

  ctx.result.report["result"] = qhecke::json::encode(h);
  ctx.result.report["agreement"] = agree;
  if (ctx.job.specialize) {
    json classical = json::array();
    for (const auto& [w, c] : h.specialize_at_one()) classical.push_back({{"perm", w.to_string()}, {"coeff", c}});
    ctx.result.report["classical"] = classical;
    ctx.text << "at q=1:";
    for (const auto& [w, c] : h.specialize_at_one()) ctx.text << "  " << c << "*" << w.to_string();
    ctx.text << "\n";
  } else {
    for (const auto& [w, c] : h.coords()) ctx.text << "T[" << w.to_string() << "]: " << c.pretty() << "\n";
  }
  ctx.text << "agreement (defect expansion): " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void sigma(Context& ctx) {
  const WiringDiagram d(*ctx.job.word);
  const Permutation& u = *ctx.job.u;
  auto start = Clock::now();
  const auto dp = sigma_dp(d, u);
  ctx.timings["dp"] = ms_since(start);
  start = Clock::now();
  const auto direct = sigma_direct_all(d, u);
  ctx.timings["direct"] = ms_since(start);

  auto pick = [&](const std::map<Permutation, LaurentPoly>& m, const Permutation& w) {
    auto it = m.find(w);
    return it == m.end() ? LaurentPoly{} : it->second;
  };
  std::vector<Permutation> targets;
  if (ctx.job.w)
    targets = {*ctx.job.w};
  else
    targets = all_permutations(d.n());

  const bool with_z = ctx.job.method == MethodChoice::All;
  bool agree = true;
  json rows = json::array();
  start = Clock::now();
  for (const auto& w : targets) {
    const LaurentPoly a = pick(dp, w);
    const LaurentPoly b = pick(direct, w);
    json row{{"perm", w.to_string()}, {"dp", qhecke::json::encode(a)}, {"direct", qhecke::json::encode(b)}};
    bool ok = a == b;
    if (with_z) {
      const LaurentPoly z = sigma_zalgebra(d, u, w);
      row["zalgebra"] = qhecke::json::encode(z);
      ok = ok && a == z;
    }
    agree = agree && ok;
    if (!a.is_zero() || !ok || ctx.job.w) {
      rows.push_back(row);
      emit_poly(ctx, "sigma(x^{" + u.to_string() + "," + w.to_string() + "})", a);
    }
  }
  if (with_z) ctx.timings["zalgebra"] = ms_since(start);
  ctx.result.report["result"] = rows;
  ctx.result.report["agreement"] = agree;
  ctx.text << "agreement: " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void emit_q1_map(Context& ctx, const std::map<Permutation, Q1Poly>& m) {
  for (const auto& [w, p] : m) {
    if (ctx.job.w && w != *ctx.job.w) continue;
    ctx.text << w.to_string() << ": " << p.to_string() << "\n";
  }
}

std::map<Permutation, Q1Poly> restrict_to_w(const JobSpec& job, std::map<Permutation, Q1Poly> m) {
  if (!job.w) return m;
  std::map<Permutation, Q1Poly> out;
  if (auto it = m.find(*job.w); it != m.end()) out.insert(*it);
  return out;
}

void r_poly(Context& ctx) {
  const auto& job = ctx.job;
  auto start = Clock::now();
  const auto r = restrict_to_w(job, r_polys(*job.u, *job.v, *job.t));
  ctx.timings["recursion"] = ms_since(start);
  start = Clock::now();
  std::map<Permutation, LaurentPoly> expanded = zero_weight_expand(*job.u, *job.v, *job.t);
  ctx.timings["straighten"] = ms_since(start);
  bool agree = true;
  for (const auto& w : all_permutations(job.n)) {
    if (job.w && w != *job.w) continue;
    auto it = r.find(w);
    const LaurentPoly lhs = it == r.end() ? LaurentPoly{} : q1_substitute(it->second);
    auto jt = expanded.find(w);
    const LaurentPoly rhs = jt == expanded.end() ? LaurentPoly{} : jt->second;
    agree = agree && lhs == rhs;
  }
  ctx.result.report["result"] = qhecke::json::encode(r);
  ctx.result.report["agreement"] = agree;
  emit_q1_map(ctx, r);
  ctx.text << "agreement (straightening): " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void p_poly_job(Context& ctx) {
  const auto& job = ctx.job;
  const Permutation x = *job.u * job.t->inverse();
  GeneratorWord word = job.word ? *job.word : some_reduced_word(x);
  if (word.n != job.n) word.n = job.n;
  try {
    require_walk_domain(*job.u, *job.t, word);
  } catch (const std::invalid_argument& e) {
    throw ValidationError("--word", e.what());
  }
  auto start = Clock::now();
  const auto p = restrict_to_w(job, p_polys(*job.u, *job.v, *job.t, word));
  ctx.timings["walks"] = ms_since(start);
  const auto r = restrict_to_w(job, r_polys(*job.u, *job.v, *job.t));
  const bool agree = p == r;
  ctx.result.report["word"] = word.to_string();
  ctx.result.report["result"] = qhecke::json::encode(p);
  ctx.result.report["agreement"] = agree;
  if (job.w) {
    json walks = json::array();
    for (const auto& wk : walk_enumerate(*job.u, *job.v, *job.t, *job.w, word)) {
      walks.push_back({{"walk", wk.to_string()}, {"stays", wk.stays}});
      ctx.text << "  " << wk.to_string() << "  (b=" << wk.stays << ")\n";
    }
    ctx.result.report["walks"] = walks;
  }
  emit_q1_map(ctx, p);
  ctx.text << "agreement (r-poly): " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void straighten_job(Context& ctx) {
  NCMonomial m;
  try {
    m = NCMonomial::parse(ctx.job.monomial);
  } catch (const std::invalid_argument& e) {
    throw ValidationError("--monomial", e.what());
  }
  auto start = Clock::now();
  const NCPolynomial left = straighten(m, RewriteStrategy::Leftmost);
  ctx.timings["leftmost"] = ms_since(start);
  start = Clock::now();
  const NCPolynomial right = straighten(m, RewriteStrategy::Rightmost);
  ctx.timings["rightmost"] = ms_since(start);
  const bool agree = left == right;
  ctx.result.report["result"] = qhecke::json::encode(left);
  ctx.result.report["agreement"] = agree;
  for (const auto& [mono, c] : left.terms()) ctx.text << "(" << c.pretty() << ") " << mono.to_string() << "\n";
  ctx.text << "agreement (rewrite order): " << (agree ? "yes" : "NO") << "\n";
  ctx.result.exit_code = agree ? 0 : 1;
}

void list_tableaux(Context& ctx) {
  const WiringDiagram d(*ctx.job.word);
  const auto start = Clock::now();
  const auto tabs = enumerate_tableaux(d, *ctx.job.lambda);
  ctx.timings["enumerate"] = ms_since(start);
  json rows = json::array();
  LaurentPoly total;
  for (const auto& U : tabs) {
    rows.push_back({{"family", qhecke::json::encode(U.family)},
                    {"columns", U.columns.to_string()},
                    {"incross", U.incross},
                    {"cross", U.cross}});
    ctx.text << U.to_string() << "\n";
    total += LaurentPoly::q_half(2 * U.incross + U.cross);
  }
  ctx.result.report["result"] = rows;
  ctx.result.report["sum"] = qhecke::json::encode(total);
  ctx.result.report["agreement"] = true;
  ctx.text << tabs.size() << " tableaux, sum " << total.pretty() << "\n";
}

// Randomized property sweep; deterministic for a fixed seed.
void verify(Context& ctx) {
  const auto& job = ctx.job;
  std::mt19937_64 rng(job.seed);
  const int top_n = std::min(job.max_n, 4);
  const int top_m = std::min(job.max_m, 8);
  auto random_word = [&](int n) {
    std::uniform_int_distribution<int> len(0, top_m), letter(1, std::max(1, n - 1));
    std::vector<int> letters(n > 1 ? len(rng) : 0);
    for (int& l : letters) l = letter(rng);
    return GeneratorWord(n, letters);
  };
  auto random_n = [&] { return std::uniform_int_distribution<int>(std::min(2, top_n), top_n)(rng); };

  json checks = json::array();
  bool all_ok = true;
  auto check = [&](const std::string& name, int trials, const std::function<std::string()>& trial) {
    const auto start = Clock::now();
    int failures = 0;
    std::string first;
    for (int k = 0; k < trials; ++k) {
      std::string why = trial();
      if (!why.empty()) {
        if (failures++ == 0) first = why;
      }
    }
    ctx.timings[name] = ms_since(start);
    json c{{"name", name}, {"trials", trials}, {"failures", failures}};
    if (failures) c["first_failure"] = first;
    checks.push_back(c);
    all_ok = all_ok && failures == 0;
    ctx.text << (failures ? "FAIL " : "ok   ") << name << " (" << trials << " trials)";
    if (failures) ctx.text << ": " << first;
    ctx.text << "\n";
  };

  check("defect-expansion", 40, [&]() -> std::string {
    const GeneratorWord word = random_word(random_n());
    return product_one_plus_T(word) == mask_expansion_defects(word) ? "" : "word " + word.to_string();
  });
  check("sigma-bridge", 40, [&]() -> std::string {
    const GeneratorWord word = random_word(random_n());
    const auto dp = sigma_dp(WiringDiagram(word), Permutation::identity(word.n));
    const HeckeElement h = product_one_plus_T(word);
    for (const auto& w : all_permutations(word.n)) {
      auto it = dp.find(w);
      const LaurentPoly lhs = it == dp.end() ? LaurentPoly{} : it->second;
      if (lhs != h.coefficient(w).shifted(w.length())) return "word " + word.to_string() + " at " + w.to_string();
    }
    return "";
  });
  check("sigma-dp-direct", 20, [&]() -> std::string {
    const GeneratorWord word = random_word(random_n());
    const WiringDiagram d(word);
    for (const auto& u : all_permutations(word.n))
      if (sigma_dp(d, u) != sigma_direct_all(d, u)) return "word " + word.to_string() + " u " + u.to_string();
    return "";
  });
  check("epsilon-methods", 20, [&]() -> std::string {
    const GeneratorWord word = random_word(random_n());
    const WiringDiagram d(word);
    for (const auto& lambda : partitions_of(word.n)) {
      const LaurentPoly a = epsilon_eval_tableaux(d, lambda);
      if (a != epsilon_eval_immanant(d, lambda) || a != epsilon_eval_chartable(d, lambda))
        return "word " + word.to_string() + " lambda " + partition_to_string(lambda);
      if (!a.in_nonneg_poly_ring() && !a.is_zero()) return "negative coefficient for word " + word.to_string();
    }
    return "";
  });
  check("classical-specialization", 20, [&]() -> std::string {
    const GeneratorWord word = random_word(random_n());
    const auto d_w = classical_product(word);
    for (const auto& lambda : partitions_of(word.n)) {
      Coeff expect = 0;
      for (const auto& [w, c] : d_w) expect += c * epsilon_classical(w, lambda);
      if (epsilon_eval_tableaux(WiringDiagram(word), lambda).specialize_at_one() != expect)
        return "word " + word.to_string() + " lambda " + partition_to_string(lambda);
    }
    return "";
  });
  check("r-equals-p", 20, [&]() -> std::string {
    const int n = std::min(random_n(), 4);
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    const Permutation u = perms[pick(rng)];
    const Permutation v = perms[pick(rng)];
    std::vector<Permutation> below;
    for (const auto& t : perms)
      if (weak_leq(t, u)) below.push_back(t);
    const Permutation t = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    for (const auto& word : reduced_words(u * t.inverse())) {
      GeneratorWord wd(n, word.letters);
      if (p_polys(u, v, t, wd) != r_polys(u, v, t))
        return "u " + u.to_string() + " v " + v.to_string() + " t " + t.to_string() + " word " + wd.to_string();
    }
    return "";
  });
  check("straighten-confluence", 50, [&]() -> std::string {
    std::uniform_int_distribution<int> idx(1, 3), deg(0, 5);
    NCMonomial m;
    for (int k = deg(rng); k > 0; --k) m.factors.emplace_back(idx(rng), idx(rng));
    const NCPolynomial a = straighten(m, RewriteStrategy::Leftmost);
    if (a != straighten(m, RewriteStrategy::Rightmost) || straighten(a) != a) return m.to_string();
    return "";
  });

  ctx.result.report["result"] = checks;
  ctx.result.report["agreement"] = all_ok;
  ctx.result.exit_code = all_ok ? 0 : 1;
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  result.report["job"] = job_json(job);
  Context ctx{job, result, {}, json::object()};
  const auto start = Clock::now();
  try {
    validate(job);
    switch (job.command) {
      case Command::EvalEpsilon: eval_epsilon(ctx); break;
      case Command::ExpandHecke: expand_hecke(ctx); break;
      case Command::Sigma: sigma(ctx); break;
      case Command::RPoly: r_poly(ctx); break;
      case Command::PPoly: p_poly_job(ctx); break;
      case Command::Straighten: straighten_job(ctx); break;
      case Command::ListTableaux: list_tableaux(ctx); break;
      case Command::Verify: verify(ctx); break;
    }
  } catch (const ValidationError& e) {
    result.exit_code = 2;
    result.report["error"] = {{"field", e.field()}, {"message", e.what()}};
    ctx.text << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    result.exit_code = 2;
    result.report["error"] = {{"field", ""}, {"message", e.what()}};
    ctx.text << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    result.exit_code = 2;
    result.report["error"] = {{"field", ""}, {"message", e.what()}};
    ctx.text << "error: " << e.what() << "\n";
  }
  ctx.timings["total"] = ms_since(start);
  result.report["timings"] = ctx.timings;
  if (!result.report.contains("agreement")) result.report["agreement"] = false;
  result.text = ctx.text.str();
  return result;
}

// ------------------------------------------------------------ arguments

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluations of induced sign characters of the type A Hecke algebra"};
  app.require_subcommand(1);

  struct Raw {
    int n = 0;
    std::string word, lambda, method = "tableaux", u, v, t, w, monomial, out;
    bool q1 = false, json = false;
    std::uint64_t seed = 1;
    int max_n = 5, max_m = 16;
  } raw;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", raw.n, "Rank of the symmetric group");
    sub->add_option("--word", raw.word, "Generator word, comma separated (e.g. 1,2,1)");
    sub->add_option("--lambda", raw.lambda, "Partition, comma separated (e.g. 2,1)");
    sub->add_option("--method", raw.method, "tableaux | immanant | chartable | all");
    sub->add_option("--u", raw.u, "Permutation in one-line notation");
    sub->add_option("--v", raw.v, "Permutation in one-line notation");
    sub->add_option("--t", raw.t, "Permutation in one-line notation");
    sub->add_option("--w", raw.w, "Permutation in one-line notation");
    sub->add_option("--monomial", raw.monomial, "Monomial such as 'x[2,2] x[1,1]'");
    sub->add_flag("--q1", raw.q1, "Also report values at q^{1/2} = 1");
    sub->add_flag("--json", raw.json, "Print the JSON report");
    sub->add_option("--seed", raw.seed, "Seed for randomized checks");
    sub->add_option("--max-n", raw.max_n, "Largest accepted n");
    sub->add_option("--max-m", raw.max_m, "Longest accepted word (at most 24)");
    sub->add_option("--out", raw.out, "Write the JSON report to this file");
  };
  for (const auto& nc : kCommands) add_common(app.add_subcommand(nc.name, nc.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  JobSpec job;
  try {
    job.command = parse_command(app.get_subcommands().front()->get_name());
    job.n = raw.n;
    job.max_n = raw.max_n;
    job.max_m = raw.max_m;
    job.seed = raw.seed;
    job.json = raw.json;
    job.specialize = raw.q1;
    job.monomial = raw.monomial;
    job.out = raw.out;
    job.method = parse_method_choice(raw.method);
    auto parse_field = [](const std::string& field, auto&& fn) {
      try {
        return fn();
      } catch (const ValidationError&) {
        throw;
      } catch (const std::exception& e) {
        throw ValidationError(field, e.what());
      }
    };
    if (!raw.word.empty() || app.get_subcommands().front()->count("--word"))
      job.word = parse_field("--word", [&] { return GeneratorWord::parse(raw.n, raw.word); });
    if (!raw.lambda.empty()) job.lambda = parse_field("--lambda", [&] { return parse_partition(raw.lambda); });
    for (auto [field, text, slot] : {std::tuple{"--u", &raw.u, &job.u}, std::tuple{"--v", &raw.v, &job.v},
                                     std::tuple{"--t", &raw.t, &job.t}, std::tuple{"--w", &raw.w, &job.w}})
      if (!text->empty()) *slot = parse_field(field, [&] { return Permutation::parse(*text); });
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    if (raw.json) out << json{{"error", {{"field", e.field()}, {"message", e.what()}}}, {"agreement", false}}.dump(2)
                      << "\n";
    return 2;
  }

  const RunResult result = run(job);
  if (job.json)
    out << result.report.dump(2) << "\n";
  else
    out << result.text;
  if (!job.out.empty()) {
    std::ofstream file(job.out);
    if (!file) {
      err << "error: cannot write " << job.out << "\n";
      return 2;
    }
    file << result.report.dump(2) << "\n";
  }
  return result.exit_code;
}

}  // namespace qhecke::cli
