#include "skein/trace.hpp"

#include <algorithm>
#include <utility>

namespace skein {

SMonomial::SMonomial(std::vector<int> ks) : factors(std::move(ks)) {
  factors.erase(std::remove(factors.begin(), factors.end(), 0), factors.end());
  std::sort(factors.begin(), factors.end());
}

SMonomial SMonomial::times(int k) const {
  SMonomial r = *this;
  if (k != 0) r.factors.insert(std::upper_bound(r.factors.begin(), r.factors.end(), k), k);
  return r;
}

std::string SMonomial::str() const {
  if (factors.empty()) return "1";
  std::string out;
  for (int k : factors) {
    if (!out.empty()) out += '*';
    out += "s[" + std::to_string(k) + "]";
  }
  return out;
}

TraceValue TraceValue::monomial(const SMonomial& m, const LaurentPoly& c) {
  TraceValue v;
  v.add_term(m, c);
  return v;
}

LaurentPoly TraceValue::coeff(const SMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TraceValue::add_term(const SMonomial& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TraceValue& TraceValue::operator+=(const TraceValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TraceValue& TraceValue::operator-=(const TraceValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TraceValue& TraceValue::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TraceValue TraceValue::times_s(int k) const {
  TraceValue r;
  for (const auto& [m, c] : terms_) r.add_term(m.times(k), c);
  return r;
}

std::string render_term(const std::string& coeff, const std::string& body) {
  if (body == "1") return coeff;
  if (coeff == "1") return body;
  if (coeff == "-1") return "-" + body;
  return coeff + "*" + body;
}

void append_rendered(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

std::string TraceValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) append_rendered(out, render_term(c.factored_str(), m.str()));
  return out;
}

namespace {

TraceValue trace_of_basis(const BasisWord& bw, TraceStrategy strategy);

TraceValue trace_of_prime_element(const HeckeElement& x, TraceStrategy strategy) {
  TraceValue r;
  for (const auto& [b, c] : x.terms()) r += trace_of_basis(b, strategy) * c;
  return r;
}

// Peels off the top strand of t'_0^{b_0} .. t'_{N-1}^{b_{N-1}} T_w. With
// w = w' c, c = g_{N-1} c~ and w' fixing the top point:
//   c = 1:  tr(L t'^b T_w') = s_b tr(L T_w')
//   c != 1: tr(L t'^b T_w' g_{N-1} c~) = z tr(t'_{N-2}^b c~ L T_w')
// using t'_{N-1}^b g_{N-1} = g_{N-1} t'_{N-2}^b and cyclicity.
TraceValue trace_of_basis(const BasisWord& bw, TraceStrategy strategy) {
  int n = bw.strands();
  if (n == 1) return TraceValue::monomial(SMonomial({bw.loops[0]}));
  thread_local std::map<std::pair<BasisWord, TraceStrategy>, TraceValue> memo;
  auto key = std::make_pair(bw, strategy);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int top = n - 1;
  int pos = static_cast<int>(std::find(bw.perm.begin(), bw.perm.end(), top) - bw.perm.begin());
  BasisWord lower;
  lower.loops.assign(bw.loops.begin(), bw.loops.end() - 1);
  lower.perm = bw.perm;
  std::rotate(lower.perm.begin() + pos, lower.perm.begin() + pos + 1, lower.perm.end());
  lower.perm.pop_back();
  int b = bw.loops[top];

  TraceValue result;
  if (pos == top) {
    result = trace_of_basis(lower, strategy).times_s(b);
  } else {
    BraidWord tail(n - 1);
    if (b != 0) tail *= expand_loop(top - 1, LoopVariant::TPrime, b, n - 1);
    for (int i = top - 1; i >= pos + 1; --i) tail.append({i, 1});
    HeckeElement base = HeckeElement::basis(lower, LoopVariant::TPrime);
    HeckeElement reduced = strategy == TraceStrategy::MoveTailLeft
                               ? left_multiply(tail, base)
                               : multiply(base, normal_form(tail, LoopVariant::TPrime));
    result = trace_of_prime_element(reduced, strategy) * LaurentPoly::z();
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

TraceValue markov_trace(const HeckeElement& x, TraceStrategy strategy) {
  return trace_of_prime_element(normal_form(x, LoopVariant::TPrime), strategy);
}

TraceValue markov_trace(const BraidWord& w, TraceStrategy strategy) {
  return trace_of_prime_element(normal_form(w, LoopVariant::TPrime), strategy);
}

}  // namespace skein
