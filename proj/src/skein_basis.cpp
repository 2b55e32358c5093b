#include "skein/skein_basis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>

#include "skein/error.hpp"
#include "skein/linear_solve.hpp"

namespace skein {

SkeinMonomial::SkeinMonomial(LoopVariant v, std::vector<int> ks) : variant(v), exponents(std::move(ks)) {
  if (std::find(exponents.begin(), exponents.end(), 0) != exponents.end()) {
    throw ValidationError("loop monomial exponents must be nonzero");
  }
}

int SkeinMonomial::level() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::string SkeinMonomial::str() const {
  if (exponents.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) out += ' ';
    if (i == 0) {
      out += 't';
    } else {
      out += variant == LoopVariant::T ? 't' : 'u';
      out += std::to_string(i);
    }
    if (exponents[i] != 1) out += '^' + std::to_string(exponents[i]);
  }
  return out;
}

SkeinMonomial SkeinMonomial::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos || pos - digits > 6) throw ParseError("malformed integer", start);
    int v = std::stoi(std::string(text.substr(digits, pos - digits)));
    return neg ? -v : v;
  };

  SkeinMonomial m;
  bool saw_u = false, saw_t = false;
  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("unexpected input after identity monomial", pos);
    return m;
  }
  while (skip(), pos < text.size()) {
    std::size_t start = pos;
    char c = text[pos++];
    if (c != 't' && c != 'u') throw ParseError("expected t or u", start);
    int index = 0;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) index = read_int(false);
    if (c == 'u') {
      if (index == 0) throw ParseError("u needs a positive index", start);
      saw_u = true;
    } else if (index > 0) {
      saw_t = true;
    }
    int e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = read_int(true);
    }
    if (index != static_cast<int>(m.exponents.size())) throw ParseError("loop indices must run 0, 1, 2, ..", start);
    if (e == 0) throw ParseError("loop exponent must be nonzero", start);
    m.exponents.push_back(e);
  }
  if (m.exponents.empty()) throw ParseError("empty monomial", 0);
  if (saw_u && saw_t) throw ParseError("cannot mix t_i and u_i letters", 0);
  if (saw_u) m.variant = LoopVariant::TPrime;
  return m;
}

bool is_member(const SkeinMonomial& m, BasisSet set, ExponentOrder order) {
  if (m.exponents.empty()) return false;
  if (set == BasisSet::LambdaAug) return m.variant == LoopVariant::T;
  if ((set == BasisSet::Lambda) != (m.variant == LoopVariant::T)) return false;
  for (std::size_t i = 0; i + 1 < m.exponents.size(); ++i) {
    int a = m.exponents[i], b = m.exponents[i + 1];
    if (order == ExponentOrder::Increasing ? a > b : a < b) return false;
  }
  return true;
}

std::strong_ordering compare(const SkeinMonomial& w, const SkeinMonomial& u) {
  if (auto c = w.level() <=> u.level(); c != 0) return c;
  if (auto c = w.index() <=> u.index(); c != 0) return c;
  if (auto c = w.exponents.size() <=> u.exponents.size(); c != 0) return c;
  for (std::size_t i = w.exponents.size(); i-- > 0;) {
    int k = w.exponents[i], l = u.exponents[i];
    if (k == l) continue;
    if (std::abs(k) != std::abs(l)) return std::abs(k) <=> std::abs(l);
    return k > l ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void sort_by_order(std::vector<SkeinMonomial>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
}

void sort_by_order(MonomialCombination& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
}

void extend(std::vector<int>& prefix, int remaining, int length, const EnumerationBounds& b,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  int left = length - static_cast<int>(prefix.size()) - 1;
  for (int k = b.positive_only ? 1 : -b.exp_bound; k <= b.exp_bound; ++k) {
    if (k == 0) continue;
    int rest = remaining - k;
    int lo = b.positive_only ? left : -left * b.exp_bound;
    if (rest < lo || rest > left * b.exp_bound) continue;
    prefix.push_back(k);
    extend(prefix, rest, length, b, out);
    prefix.pop_back();
  }
}

MonomialCombination from_map(const std::map<SkeinMonomial, RationalFn>& m) {
  MonomialCombination out;
  for (const auto& [mono, c] : m) {
    if (!c.is_zero()) out.emplace_back(mono, c);
  }
  sort_by_order(out);
  return out;
}

}  // namespace

std::vector<SkeinMonomial> enumerate_level(BasisSet set, int level, const EnumerationBounds& bounds,
                                           ExponentOrder order) {
  if (bounds.max_index < 0 || bounds.exp_bound < 1) throw ValidationError("enumeration bounds must be positive");
  LoopVariant variant = set == BasisSet::LambdaPrime ? LoopVariant::TPrime : LoopVariant::T;
  std::vector<SkeinMonomial> out;
  for (int length = 1; length <= bounds.max_index + 1; ++length) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> prefix;
    extend(prefix, level, length, bounds, seqs);
    for (auto& s : seqs) {
      SkeinMonomial m(variant, std::move(s));
      if (is_member(m, set, order)) out.push_back(std::move(m));
    }
  }
  sort_by_order(out);
  return out;
}

BraidWord to_braid_word(const SkeinMonomial& m) {
  int n = m.strands();
  BraidWord w(n);
  for (int i = 0; i < static_cast<int>(m.exponents.size()); ++i) w *= expand_loop(i, m.variant, m.exponents[i], n);
  return w;
}

TraceValue trace_of(const SkeinMonomial& m) { return markov_trace(to_braid_word(m)); }

MonomialCombination convert_to_lambda_prime(const SkeinMonomial& m, ExponentOrder order) {
  std::map<SkeinMonomial, RationalFn> acc;
  TraceValue tr = trace_of(m);
  for (const auto& [s, c] : tr.terms()) {
    std::vector<int> ks = s.factors;
    if (order == ExponentOrder::Decreasing) std::reverse(ks.begin(), ks.end());
    acc[SkeinMonomial(LoopVariant::TPrime, std::move(ks))] += RationalFn(c);
  }
  return from_map(acc);
}

LinearForm trace_of_combination(const MonomialCombination& c) {
  LinearForm f;
  for (const auto& [m, a] : c) f += LinearForm(trace_of(m)) * a;
  return f;
}

MonomialCombination top_pair_swap_formula(const SkeinMonomial& m) {
  if (m.index() < 1) throw ValidationError("swap formula needs index >= 1");
  std::vector<int> prefix(m.exponents.begin(), m.exponents.end() - 2);
  const int a = m.exponents[m.exponents.size() - 2];
  const int b = m.exponents.back();
  if (a < 1 || b < 1) throw ValidationError("swap formula needs positive top exponents");
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - LaurentPoly(1L);

  std::map<SkeinMonomial, RationalFn> acc;
  auto add = [&](std::vector<int> top, const LaurentPoly& c) {
    std::vector<int> ks = prefix;
    ks.insert(ks.end(), top.begin(), top.end());
    acc[SkeinMonomial(m.variant, std::move(ks))] += RationalFn(c);
  };
  add({b, a}, q.pow(b - a));
  add({a + b}, q.pow(b - 1) * qm1 * LaurentPoly::z() * LaurentPoly(static_cast<long>(b - a)));
  for (int j = 0; j <= b - 2; ++j) {
    for (int phi = 0; phi <= b - 2 - j; ++phi) add({a + 1 + j + phi, b - 1 - j - phi}, qm1 * qm1 * q.pow(j + phi));
  }
  for (int j = 0; j <= a - 2; ++j) {
    for (int phi = 0; phi <= j; ++phi) add({a + b - j - 1 + phi, j + 1 - phi}, -(qm1 * qm1 * q.pow(b - j - 2 + phi)));
  }
  return from_map(acc);
}

Decomposition decompose_to_lower(const SkeinMonomial& m) {
  if (m.index() < 1) throw ValidationError("decomposition needs a monomial of index at least 1");
  if (m.variant != LoopVariant::T) throw ValidationError("decomposition works on t-monomials");
  const int a = m.exponents[m.exponents.size() - 2];
  const int b = m.exponents.back();
  Decomposition d;
  LinearForm target(trace_of(m));

  if (a > 0 && b > 0) {
    d.closed_form = true;
    d.terms = top_pair_swap_formula(m);
    d.exact = trace_of_combination(d.terms) == target;
  } else {
    std::vector<int> prefix(m.exponents.begin(), m.exponents.end() - 2);
    const int sum = a + b;
    std::vector<SkeinMonomial> candidates;
    std::vector<int> merged = prefix;
    if (sum != 0) merged.push_back(sum);
    candidates.emplace_back(LoopVariant::T, merged);
    for (int y = -std::abs(b); y <= std::abs(b); ++y) {
      if (y == 0 || sum - y == 0) continue;
      std::vector<int> ks = prefix;
      ks.push_back(sum - y);
      ks.push_back(y);
      SkeinMonomial c(LoopVariant::T, std::move(ks));
      if (compare(c, m) < 0) candidates.push_back(std::move(c));
    }
    std::vector<LinearForm> columns;
    for (const auto& c : candidates) columns.emplace_back(trace_of(c));
    SpanResult r = solve_in_span(columns, target);
    if (r.coefficients) {
      std::map<SkeinMonomial, RationalFn> acc;
      for (std::size_t i = 0; i < candidates.size(); ++i) acc[candidates[i]] += (*r.coefficients)[i];
      d.terms = from_map(acc);
      d.exact = trace_of_combination(d.terms) == target;
    }
  }

  for (const auto& [t, c] : d.terms) {
    if (compare(t, m) >= 0) d.violations.push_back(t);
  }
  d.strictly_lower = d.exact && d.violations.empty();
  return d;
}

}  // namespace skein
