#include "skein/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "skein/error.hpp"

namespace skein {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw ValidationError("strand count must be at least 1");
}

BraidWord::BraidWord(int strands, const std::vector<Letter>& letters) : BraidWord(strands) {
  for (const auto& l : letters) append(l);
}

void BraidWord::append(Letter l) {
  if (l.gen < 0 || l.gen > strands_ - 1) {
    throw ValidationError("generator index out of range: g" + std::to_string(l.gen) + " with n=" +
                          std::to_string(strands_));
  }
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
  if (o.strands_ != strands_) throw ValidationError("strand count mismatch in word product");
  for (const auto& l : o.letters_) append(l);
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(strands_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.append({it->gen, -it->exp});
  return r;
}

BraidWord BraidWord::embedded(int n) const {
  if (n < strands_) throw ValidationError("cannot embed into fewer strands");
  return BraidWord(n, letters_);
}

int BraidWord::sigma_exponent_sum() const {
  int e = 0;
  for (const auto& l : letters_) {
    if (l.gen > 0) e += l.exp;
  }
  return e;
}

int BraidWord::t_exponent_sum() const {
  int e = 0;
  for (const auto& l : letters_) {
    if (l.gen == 0) e += l.exp;
  }
  return e;
}

BraidWord BraidWord::shift_indices() const {
  BraidWord r(strands_ + 1);
  for (const auto& l : letters_) {
    if (l.gen == 0) {
      r *= expand_loop(1, LoopVariant::T, l.exp, strands_ + 1);
    } else {
      r.append({l.gen + 1, l.exp});
    }
  }
  return r;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen == 0 ? std::string("t") : "g" + std::to_string(l.gen);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

namespace {

BraidWord loop_power(int i, LoopVariant variant, int k, int n) {
  // g_i .. g_1 t^k g_1^{+-1} .. g_i^{+-1}; for T the positive form is only
  // valid for k = 1, so higher powers concatenate.
  BraidWord r(n);
  for (int j = i; j >= 1; --j) r.append({j, 1});
  r.append({0, k});
  int tail = variant == LoopVariant::T ? 1 : -1;
  for (int j = 1; j <= i; ++j) r.append({j, tail});
  return r;
}

}  // namespace

BraidWord expand_loop(int i, LoopVariant variant, int k, int strands) {
  if (i < 0 || i > strands - 1) {
    throw ValidationError("loop index out of range: " + std::to_string(i) + " with n=" +
                          std::to_string(strands));
  }
  if (k == 0 || i == 0) return BraidWord(strands, {{0, k}});
  if (variant == LoopVariant::TPrime) return loop_power(i, variant, k, strands);
  BraidWord one = loop_power(i, variant, 1, strands);
  if (k < 0) one = one.inverse();
  BraidWord r(strands);
  for (int j = 0; j < std::abs(k); ++j) r *= one;
  return r;
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  if (strands < 1) throw ValidationError("strand count must be at least 1");
  BraidWord w(strands);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos || pos - digits > 6) throw ParseError("malformed integer", start);
    long v = std::stol(std::string(text.substr(digits, pos - digits)));
    return neg ? -v : v;
  };
  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("unexpected input after identity word", pos);
    return w;
  }
  while (skip(), pos < text.size()) {
    std::size_t start = pos;
    char c = text[pos++];
    if (c != 't' && c != 'u' && c != 'g') throw ParseError("unknown token", start);
    bool has_index = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    if (!has_index && c != 't') throw ParseError("missing generator index", pos);
    int index = has_index ? static_cast<int>(read_int(false)) : 0;
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t at = pos;
      exp = static_cast<int>(read_int(true));
      if (exp == 0) throw ParseError("malformed exponent", at);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      char next = text[pos];
      if (next != 't' && next != 'u' && next != 'g') throw ParseError("unexpected character", pos);
    }
    if (c == 'g') {
      if (index < 1) throw ParseError("braid generators start at g1", start);
      if (index > strands - 1) throw ValidationError("generator g" + std::to_string(index) + " needs more strands");
      w.append({index, exp});
    } else {
      if (index > strands - 1) throw ValidationError("loop index " + std::to_string(index) + " needs more strands");
      w *= expand_loop(index, c == 't' ? LoopVariant::T : LoopVariant::TPrime, exp, strands);
    }
  }
  return w;
}

BraidWord apply_move(const BraidWord& w, const Move& move) {
  if (const auto* c = std::get_if<Conjugate>(&move)) {
    int n = std::max(w.strands(), c->by.strands());
    BraidWord v = c->by.embedded(n);
    return v.inverse() * w.embedded(n) * v;
  }
  if (const auto* s = std::get_if<Stabilize>(&move)) {
    if (s->sign != 1 && s->sign != -1) throw ValidationError("stabilization sign must be +1 or -1");
    BraidWord r = w.embedded(w.strands() + 1);
    r.append({w.strands(), s->sign});
    return r;
  }
  if (const auto* l = std::get_if<LoopConjugate>(&move)) {
    if (l->sign != 1 && l->sign != -1) throw ValidationError("loop conjugation sign must be +1 or -1");
    BraidWord r(w.strands(), {{0, l->sign}});
    r *= w;
    r.append({0, -l->sign});
    return r;
  }
  const auto& b = std::get<Bbm>(move);
  if (b.strand < 1) throw ValidationError("band move strand must be at least 1");
  if (b.sign != 1 && b.sign != -1) throw ValidationError("band move sign must be +1 or -1");
  int n = std::max(w.strands(), b.strand);
  BraidWord shifted = w.embedded(n).shift_indices();
  BraidWord r(n + 1, {{0, b.p}});
  r *= shifted;
  for (int j = b.strand; j >= 2; --j) r.append({j, 1});
  r.append({1, b.sign});
  for (int j = 2; j <= b.strand; ++j) r.append({j, -1});
  return r;
}

}  // namespace skein
