#include "skein/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>

#include "skein/bbm_system.hpp"
#include "skein/error.hpp"
#include "skein/hecke.hpp"
#include "skein/invariant.hpp"

namespace skein {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int n = 0;
  std::string variant = "t";
  std::string word;
  std::string other;
  std::string set = "lambda";
  int level = 3;
  bool positive = false;
  int max_index = 2;
  int exp_bound = 3;
  std::string strand_policy = "all";
  int strand = 1;
  std::string sign = "+";
  std::string signs = "+,-";
  int p = 1;
  unsigned long long seed = 20240917;
  int jobs = 1;
  std::string identity;
  int k = 1;
  bool derived = false;
  bool strict = false;
  std::string exponent_order = "increasing";
};

BraidWord parse_word(const std::string& text, int n) {
  if (n > 0) return BraidWord::parse(text, n);
  BraidWord wide = BraidWord::parse(text, 64);
  int top = 0;
  for (const auto& l : wide.letters()) top = std::max(top, l.gen);
  return BraidWord(top + 1, wide.letters());
}

LoopVariant parse_variant(const std::string& v) {
  if (v == "t") return LoopVariant::T;
  if (v == "tprime" || v == "u") return LoopVariant::TPrime;
  throw ValidationError("variant must be t or tprime");
}

BasisSet parse_set(const std::string& s) {
  if (s == "lambda") return BasisSet::Lambda;
  if (s == "lambda-prime") return BasisSet::LambdaPrime;
  if (s == "lambda-aug") return BasisSet::LambdaAug;
  throw ValidationError("set must be lambda, lambda-prime or lambda-aug");
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw ValidationError("sign must be + or -");
}

std::vector<int> parse_signs(const std::string& s) {
  if (s == "both") return {1, -1};
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int v = parse_sign(part);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ExponentOrder parse_order(const std::string& s) {
  if (s == "increasing") return ExponentOrder::Increasing;
  if (s == "decreasing") return ExponentOrder::Decreasing;
  throw ValidationError("exponent order must be increasing or decreasing");
}

EnumerationBounds bounds_of(const Options& o) {
  if (o.max_index < 0) throw ValidationError("max-index must be non-negative");
  if (o.exp_bound < 1) throw ValidationError("exp-bound must be positive");
  return {o.max_index, o.exp_bound, o.positive};
}

const char* sign_str(int s) { return s > 0 ? "+" : "-"; }

ordered_json coeffs_json(const LinearForm& f) {
  ordered_json j = ordered_json::object();
  for (const auto& [m, c] : f.terms()) j[m.str()] = c.compact_str();
  return j;
}

ordered_json combination_json(const MonomialCombination& c) {
  ordered_json j = ordered_json::array();
  for (const auto& [m, a] : c) j.push_back({{"monomial", m.str()}, {"coeff", a.compact_str()}});
  return j;
}

void print_combination(std::ostream& out, const MonomialCombination& c) {
  for (const auto& [m, a] : c) out << m.str() << ": " << a.compact_str() << "\n";
}

std::string order_name(std::strong_ordering c) {
  if (c < 0) return "LESS";
  if (c > 0) return "GREATER";
  return "EQUAL";
}

ordered_json equation_json(const Equation& e) {
  return {{"monomial", e.monomial.str()},
          {"strand", e.strand},
          {"sign", sign_str(e.sign)},
          {"p", e.p},
          {"coeffs", coeffs_json(e.form)}};
}

SystemConfig system_config(const Options& o) {
  SystemConfig c;
  c.set = parse_set(o.set);
  if (c.set == BasisSet::LambdaPrime) throw ValidationError("band move systems are built on lambda or lambda-aug");
  c.level = o.level;
  c.bounds = bounds_of(o);
  c.p = o.p;
  c.signs = parse_signs(o.signs);
  if (o.strand_policy == "first") {
    c.policy = StrandPolicy::FirstOnly;
  } else if (o.strand_policy == "all") {
    c.policy = StrandPolicy::AllStrands;
  } else {
    throw ValidationError("strand must be first or all");
  }
  c.order = parse_order(o.exponent_order);
  if (o.jobs < 1) throw ValidationError("jobs must be at least 1");
  c.jobs = o.jobs;
  return c;
}

ordered_json span_json(const SpanCheck& s, const std::vector<Equation>& gens) {
  ordered_json j;
  j["status"] = s.coefficients ? "IN_SPAN" : "NOT_IN_SPAN";
  if (s.coefficients) {
    j["numeric_check"] = s.numeric_ok;
    ordered_json w = ordered_json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((*s.coefficients)[i].is_zero()) continue;
      w.push_back({{"generator", gens[i].label()}, {"coeff", (*s.coefficients)[i].compact_str()}});
    }
    j["witness"] = w;
  } else {
    j["residual"] = coeffs_json(s.residual);
  }
  return j;
}

void print_span(std::ostream& out, const char* tag, const SpanCheck& s, const std::vector<Equation>& gens) {
  out << "  " << tag << ": " << (s.coefficients ? "IN_SPAN" : "NOT_IN_SPAN");
  if (s.coefficients) out << (s.numeric_ok ? " (numeric check ok)" : " (numeric check FAILED)");
  out << "\n";
  if (!s.coefficients) return;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if ((*s.coefficients)[i].is_zero()) continue;
    out << "    " << gens[i].label() << ": " << (*s.coefficients)[i].compact_str() << "\n";
  }
}

using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;

int cmd_nf(const Options& o, std::ostream& out, std::ostream&) {
  BraidWord w = parse_word(o.word, o.n);
  LoopVariant v = parse_variant(o.variant);
  HeckeElement e = normal_form(w, v);
  if (o.format == "json") {
    ordered_json terms = ordered_json::array();
    for (const auto& [b, c] : e.terms()) terms.push_back({{"basis", basis_word_str(b, v)}, {"coeff", c.compact_str()}});
    out << ordered_json{{"word", w.str()}, {"strands", w.strands()}, {"variant", o.variant}, {"normal_form", e.str()},
                        {"terms", terms}}
               .dump(2)
        << "\n";
  } else {
    out << e.str() << "\n";
  }
  return kOk;
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream&) {
  BraidWord w = parse_word(o.word, o.n);
  TraceValue t = markov_trace(w);
  if (o.format == "json") {
    out << ordered_json{{"word", w.str()}, {"strands", w.strands()}, {"trace", t.str()},
                        {"coeffs", coeffs_json(LinearForm(t))}}
               .dump(2)
        << "\n";
  } else {
    out << t.str() << "\n";
  }
  return kOk;
}

int cmd_x(const Options& o, std::ostream& out, std::ostream&) {
  BraidWord w = parse_word(o.word, o.n);
  XValue x = x_invariant(w);
  if (o.format == "json") {
    out << ordered_json{{"word", w.str()}, {"strands", w.strands()}, {"sqrt_lambda_power", x.half_power},
                        {"coeffs", coeffs_json(x.form)}}
               .dump(2)
        << "\n";
  } else {
    out << x.str() << "\n";
  }
  return kOk;
}

int cmd_bbm(const Options& o, std::ostream& out, std::ostream&) {
  Equation e = equation_for(SkeinMonomial::parse(o.word), o.strand, parse_sign(o.sign), o.p);
  if (o.format == "json") {
    ordered_json j = equation_json(e);
    j["scalar"] = e.scalar.compact_str();
    out << j.dump(2) << "\n";
  } else {
    out << "scalar: " << e.scalar.str() << "\n" << "form: " << e.form.str() << "\n";
  }
  return kOk;
}

int cmd_order(const Options& o, std::ostream& out, std::ostream&) {
  SkeinMonomial a = SkeinMonomial::parse(o.word), b = SkeinMonomial::parse(o.other);
  if (a.variant != b.variant) throw ValidationError("compared monomials must use the same loop letters");
  std::string r = order_name(compare(a, b));
  if (o.format == "json") {
    out << ordered_json{{"a", a.str()}, {"b", b.str()}, {"result", r}}.dump(2) << "\n";
  } else {
    out << r << "\n";
  }
  return kOk;
}

int cmd_enum(const Options& o, std::ostream& out, std::ostream&) {
  auto list = enumerate_level(parse_set(o.set), o.level, bounds_of(o), parse_order(o.exponent_order));
  if (o.format == "json") {
    ordered_json ms = ordered_json::array();
    for (const auto& m : list) ms.push_back(m.str());
    out << ordered_json{{"set", o.set}, {"level", o.level}, {"monomials", ms}}.dump(2) << "\n";
  } else {
    for (const auto& m : list) out << m.str() << "\n";
  }
  return kOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream&) {
  SkeinMonomial m = SkeinMonomial::parse(o.word);
  if (m.variant != LoopVariant::T) throw ValidationError("convert expects a t-monomial");
  auto c = convert_to_lambda_prime(m, parse_order(o.exponent_order));
  if (o.format == "json") {
    out << ordered_json{{"monomial", m.str()}, {"lambda_prime", combination_json(c)}}.dump(2) << "\n";
  } else {
    print_combination(out, c);
  }
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream&) {
  SkeinMonomial m = SkeinMonomial::parse(o.word);
  Decomposition d = decompose_to_lower(m);
  if (o.format == "json") {
    ordered_json v = ordered_json::array();
    for (const auto& t : d.violations) v.push_back(t.str());
    out << ordered_json{{"monomial", m.str()},        {"terms", combination_json(d.terms)},
                        {"closed_form", d.closed_form}, {"exact", d.exact},
                        {"strictly_lower", d.strictly_lower}, {"not_lower", v}}
               .dump(2)
        << "\n";
  } else {
    print_combination(out, d.terms);
    out << "exact: " << (d.exact ? "yes" : "no") << "\n";
    out << "strictly lower: " << (d.strictly_lower ? "yes" : "no") << "\n";
  }
  return d.strictly_lower ? kOk : kVerificationFailure;
}

int cmd_system(const Options& o, std::ostream& out, std::ostream&) {
  EquationSystem sys = generate_system(system_config(o));
  if (o.format == "json") {
    ordered_json unknowns = ordered_json::array();
    for (const auto& u : sys.unknowns) unknowns.push_back(u.str());
    ordered_json rows = ordered_json::array();
    for (const auto& r : sys.rows) rows.push_back(equation_json(r));
    ordered_json meta = {{"set", o.set},
                         {"level", o.level},
                         {"max_index", o.max_index},
                         {"exp_bound", o.exp_bound},
                         {"positive", o.positive},
                         {"p", o.p},
                         {"signs", o.signs},
                         {"strand", o.strand_policy}};
    out << ordered_json{{"metadata", meta}, {"unknowns", unknowns}, {"rows", rows}}.dump(2) << "\n";
  } else {
    out << sys.rows.size() << " equations in " << sys.unknowns.size() << " unknowns\n";
    for (const auto& r : sys.rows) out << r.label() << " : " << r.form.str() << " = 0\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  TheoremReport r = verify_main_theorem(system_config(o));
  bool ok = r.all_in_span() && (!o.strict || r.all_strict());
  if (o.format == "json") {
    ordered_json targets = ordered_json::array();
    for (const auto& t : r.targets) {
      ordered_json j = {{"target", t.target.label()}};
      j["lower_or_equal"] = span_json(t.check, t.generators);
      if (t.strict_check) j["strictly_lower"] = span_json(*t.strict_check, t.strict_generators);
      targets.push_back(j);
    }
    out << ordered_json{{"level", o.level},
                        {"p", o.p},
                        {"all_in_span", r.all_in_span()},
                        {"strict_all_in_span", r.all_strict()},
                        {"targets", targets}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& t : r.targets) {
      out << t.target.label() << "\n";
      print_span(out, "lower or equal", t.check, t.generators);
      if (t.strict_check) print_span(out, "strictly lower", *t.strict_check, t.strict_generators);
    }
    out << "all in span: " << (r.all_in_span() ? "yes" : "no") << "\n";
    out << "strictly lower generators suffice for strands >= 2: " << (r.all_strict() ? "yes" : "no") << "\n";
  }
  err << "verify-theorem: " << r.targets.size() << " targets in " << r.seconds << " s\n";
  return ok ? kOk : kVerificationFailure;
}

int cmd_identity(const Options& o, std::ostream& out, std::ostream&) {
  Identity id;
  if (o.identity == "eq5") {
    id = Identity::Eq5;
  } else if (o.identity == "lemma2i") {
    id = Identity::Lemma2i;
  } else if (o.identity == "lemma2ii") {
    id = Identity::Lemma2ii;
  } else {
    throw ValidationError("identity must be eq5, lemma2i or lemma2ii");
  }
  IdentityCheck c = verify_identity(id, o.n, o.k, o.derived);
  if (o.format == "json") {
    out << ordered_json{{"identity", o.identity}, {"n", o.n},           {"k", o.k},
                        {"derived", o.derived},   {"holds", c.holds},   {"lhs", c.lhs.str()},
                        {"rhs", c.rhs.str()}}
               .dump(2)
        << "\n";
  } else {
    out << (c.holds ? "holds" : "fails") << "\n" << "lhs: " << c.lhs.str() << "\n" << "rhs: " << c.rhs.str() << "\n";
  }
  return c.holds ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Skein module computations in the solid torus and band-move systems"};
  app.require_subcommand(1);
  std::map<CLI::App*, Handler> handlers;

  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    handlers[sub] = std::move(h);
    return sub;
  };
  auto word_cmd = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = add(name, help, std::move(h));
    sub->add_option("word", o.word, "braid word, e.g. \"t^2 g1 u2^-1\"")->required();
    sub->add_option("--n", o.n, "strand count (default: smallest that fits)");
    return sub;
  };
  auto bounded = [&](CLI::App* sub) {
    sub->add_option("--level", o.level, "exponent sum");
    sub->add_flag("--positive", o.positive, "positive exponents only");
    sub->add_option("--max-index", o.max_index, "largest loop index");
    sub->add_option("--exp-bound", o.exp_bound, "largest absolute exponent");
    sub->add_option("--exponent-order", o.exponent_order, "increasing or decreasing");
  };
  auto system_flags = [&](CLI::App* sub) {
    bounded(sub);
    sub->add_option("--p", o.p, "surgery coefficient");
    sub->add_option("--signs", o.signs, "band move signs: +, - or +,-");
    sub->add_option("--jobs", o.jobs, "worker threads for equation generation");
  };

  word_cmd("nf", "normal form in H_{1,n}", cmd_nf)->add_option("--variant", o.variant, "t or tprime");
  word_cmd("trace", "Markov trace", cmd_trace);
  word_cmd("x", "invariant X", cmd_x);

  CLI::App* bbm = add("bbm", "band move equation of a monomial", cmd_bbm);
  bbm->add_option("monomial", o.word, "loop monomial, e.g. \"t t1^2\"")->required();
  bbm->add_option("--strand", o.strand, "moving strand");
  bbm->add_option("--sign", o.sign, "+ or -");
  bbm->add_option("--p", o.p, "surgery coefficient");

  CLI::App* order = add("order", "compare two monomials", cmd_order);
  order->add_option("a", o.word)->required();
  order->add_option("b", o.other)->required();

  CLI::App* en = add("enum", "enumerate a level set", cmd_enum);
  en->add_option("--set", o.set, "lambda, lambda-prime or lambda-aug");
  bounded(en);

  CLI::App* conv = add("convert", "express tr of a t-monomial on Lambda'", cmd_convert);
  conv->add_option("monomial", o.word)->required();
  conv->add_option("--exponent-order", o.exponent_order, "increasing or decreasing");

  add("decompose", "rewrite a monomial through lower ones", cmd_decompose)->add_option("monomial", o.word)->required();

  CLI::App* sys = add("system", "band move equations of a level set", cmd_system);
  sys->add_option("--set", o.set, "lambda or lambda-aug");
  sys->add_option("--strand", o.strand_policy, "first or all");
  system_flags(sys);

  CLI::App* ver = add("verify-theorem", "check the first-strand reduction on a level set", cmd_verify);
  system_flags(ver);
  ver->add_option("--seed", o.seed, "seed for the numeric cross-check");
  ver->add_flag("--strict", o.strict, "also require strictly lower generators for strands >= 2");

  CLI::App* ident = add("check-identity", "check a rewriting identity", cmd_identity);
  ident->add_option("--identity", o.identity, "eq5, lemma2i or lemma2ii")->required();
  ident->add_option("--n", o.n, "index n")->required();
  ident->add_option("--k", o.k, "exponent k")->required();
  ident->add_flag("--derived", o.derived, "use the derived negative-exponent form");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    for (const auto& [sub, h] : handlers) {
      if (sub->parsed()) return h(o, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidationError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace skein
