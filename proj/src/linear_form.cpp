#include "skein/linear_form.hpp"

namespace skein {

LinearForm::LinearForm(const TraceValue& t) {
  for (const auto& [m, c] : t.terms()) terms_.emplace(m, RationalFn(c));
}

RationalFn LinearForm::coeff(const SMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFn() : it->second;
}

void LinearForm::add_term(const SMonomial& m, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LinearForm& LinearForm::operator*=(const RationalFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::map<SMonomial, Rational> LinearForm::evaluate(const Rational& q0, const Rational& z0) const {
  std::map<SMonomial, Rational> r;
  for (const auto& [m, c] : terms_) {
    Rational v = c.evaluate(q0, z0);
    if (v != 0) r.emplace(m, v);
  }
  return r;
}

std::string coefficient_str(const RationalFn& c) {
  if (c.is_laurent()) return c.num().factored_str();
  std::string s = c.compact_str();
  return "(" + s + ")";
}

std::string LinearForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) append_rendered(out, render_term(coefficient_str(c), m.str()));
  return out;
}

}  // namespace skein
