#include "skein/bbm_system.hpp"

#include <chrono>
#include <future>
#include <random>
#include <set>
#include <stdexcept>

#include "skein/error.hpp"
#include "skein/invariant.hpp"
#include "skein/sqrt_lambda.hpp"

namespace skein {

std::string Equation::label() const {
  return monomial.str() + " | m=" + std::to_string(strand) + " | " + (sign > 0 ? "+" : "-");
}

RationalFn expected_bbm_scalar(int level, int sign) {
  return lambda().pow(level + (sign - 1) / 2) / RationalFn(LaurentPoly::z());
}

Equation equation_for(const SkeinMonomial& t, int strand, int sign, int p) {
  if (t.variant != LoopVariant::T || t.is_unit()) throw ValidationError("band move equations need a t-monomial");
  if (strand < 1 || strand > t.strands()) {
    throw ValidationError("strand must lie between 1 and " + std::to_string(t.strands()));
  }
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");

  BraidWord before = to_braid_word(t);
  BraidWord after = apply_move(before, Bbm{strand, sign, p});
  int de = after.sigma_exponent_sum() - before.sigma_exponent_sum();
  if ((de - sign) % 2 != 0) throw std::logic_error("band move changed the sigma exponent sum by " + std::to_string(de));
  SqrtLambdaScalar ratio = x_scalar(after.strands(), after.sigma_exponent_sum()) *
                           x_scalar(before.strands(), before.sigma_exponent_sum()).inverse();
  if (ratio.half_power() != 0) throw std::logic_error("odd power of sqrt(lambda) in a band move equation");
  if (!(ratio.coeff() == expected_bbm_scalar(t.level(), sign))) {
    throw std::logic_error("band move scalar disagrees with lambda^(k+(e-1)/2)/z");
  }

  Equation eq;
  eq.monomial = t;
  eq.strand = strand;
  eq.sign = sign;
  eq.p = p;
  eq.scalar = ratio.coeff();
  eq.form = LinearForm(markov_trace(before)) - LinearForm(markov_trace(after)) * eq.scalar;
  return eq;
}

EquationSystem generate_system(const SystemConfig& config) {
  for (int s : config.signs) {
    if (s != 1 && s != -1) throw ValidationError("sign must be +1 or -1");
  }
  if (config.jobs < 1) throw ValidationError("jobs must be at least 1");
  struct Job {
    SkeinMonomial t;
    int strand, sign;
  };
  std::vector<Job> jobs;
  for (const auto& t : enumerate_level(config.set, config.level, config.bounds, config.order)) {
    int last = config.policy == StrandPolicy::FirstOnly ? 1 : t.strands();
    for (int m = 1; m <= last; ++m) {
      for (int s : config.signs) jobs.push_back({t, m, s});
    }
  }

  EquationSystem sys;
  sys.config = config;
  sys.rows.resize(jobs.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < jobs.size(); i += stride) {
      sys.rows[i] = equation_for(jobs[i].t, jobs[i].strand, jobs[i].sign, config.p);
    }
  };
  std::size_t threads = std::min<std::size_t>(config.jobs, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::future<void>> pending;
  for (std::size_t k = 1; k < threads; ++k) pending.push_back(std::async(std::launch::async, work, k, threads));
  work(0, threads);
  for (auto& f : pending) f.get();

  std::set<SMonomial> unknowns;
  for (const auto& r : sys.rows) {
    for (const auto& [m, c] : r.form.terms()) unknowns.insert(m);
  }
  sys.unknowns.assign(unknowns.begin(), unknowns.end());
  return sys;
}

namespace {

Rational random_nonzero(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-60, 60), den(1, 29);
  Rational r;
  do {
    r = Rational(num(gen), den(gen));
    r.canonicalize();
  } while (r == 0);
  return r;
}

bool numeric_check(const LinearForm& target, const std::vector<LinearForm>& gens, const std::vector<RationalFn>& c,
                   unsigned long long seed) {
  std::mt19937_64 gen(seed);
  int done = 0;
  for (int attempt = 0; done < 3 && attempt < 50; ++attempt) {
    Rational q0 = random_nonzero(gen), z0 = random_nonzero(gen);
    try {
      std::map<SMonomial, Rational> lhs = target.evaluate(q0, z0);
      std::map<SMonomial, Rational> rhs;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Rational ci = c[i].evaluate(q0, z0);
        if (ci == 0) continue;
        for (const auto& [m, v] : gens[i].evaluate(q0, z0)) rhs[m] += ci * v;
      }
      std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
      if (lhs != rhs) return false;
      ++done;
    } catch (const DomainError&) {
      // pole of some coefficient; draw another point
    }
  }
  return done == 3;
}

}  // namespace

SpanCheck span_membership(const Equation& target, const std::vector<Equation>& generators, unsigned long long seed) {
  std::vector<LinearForm> cols;
  for (const auto& g : generators) cols.push_back(g.form);
  SpanResult r = solve_in_span(cols, target.form);
  SpanCheck out;
  out.residual = r.residual;
  out.coefficients = r.coefficients;
  if (r.coefficients) out.numeric_ok = numeric_check(target.form, cols, *r.coefficients, seed);
  return out;
}

bool TheoremReport::all_in_span() const {
  for (const auto& t : targets) {
    if (!t.check.coefficients || !t.check.numeric_ok) return false;
  }
  return true;
}

bool TheoremReport::all_strict() const {
  for (const auto& t : targets) {
    if (t.strict_check && (!t.strict_check->coefficients || !t.strict_check->numeric_ok)) return false;
  }
  return true;
}

TheoremReport verify_main_theorem(const SystemConfig& config) {
  auto start = std::chrono::steady_clock::now();
  SystemConfig targets_cfg = config;
  targets_cfg.set = BasisSet::Lambda;
  targets_cfg.policy = StrandPolicy::AllStrands;
  SystemConfig gens_cfg = config;
  gens_cfg.set = BasisSet::LambdaAug;
  gens_cfg.policy = StrandPolicy::FirstOnly;
  EquationSystem targets = generate_system(targets_cfg);
  EquationSystem gens = generate_system(gens_cfg);

  TheoremReport report;
  report.config = config;
  for (const auto& eq : targets.rows) {
    TargetReport tr;
    tr.target = eq;
    for (const auto& g : gens.rows) {
      auto c = compare(g.monomial, eq.monomial);
      if (c <= 0) tr.generators.push_back(g);
      if (c < 0) tr.strict_generators.push_back(g);
    }
    tr.check = span_membership(eq, tr.generators);
    if (eq.strand >= 2) tr.strict_check = span_membership(eq, tr.strict_generators);
    report.targets.push_back(std::move(tr));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace skein
