#pragma once

// Ordinals below epsilon_0 in Cantor normal form, with the exact arithmetic
// the interval machinery needs: comparison, (non-commutative) addition,
// left difference, fundamental sequences.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcslab {

struct OrdinalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeDifference : OrdinalError {
  NegativeDifference() : OrdinalError("ot_diff: first argument exceeds second") {}
};
struct NotOmegaLimit : OrdinalError {
  NotOmegaLimit() : OrdinalError("fundamental_seq: argument is not an omega-limit") {}
};
struct ParseError : OrdinalError {
  explicit ParseError(const std::string& m) : OrdinalError("ordinal parse: " + m) {}
};

enum class Cmp { LT, EQ, GT };

// CNF as parallel arrays: sum of w^exps_[i] * coeffs_[i], exponents strictly
// decreasing, coefficients >= 1. Empty arrays denote 0.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(std::uint64_t n) {  // NOLINT: naturals embed implicitly by design
    if (n) {
      exps_.emplace_back();
      coeffs_.push_back(n);
    }
  }

  static Ordinal omega() { return pow(1); }
  static Ordinal pow(Ordinal e) { return pow_times(std::move(e), 1); }
  static Ordinal pow_times(Ordinal e, std::uint64_t c) {
    Ordinal r;
    if (c) {
      r.exps_.push_back(std::move(e));
      r.coeffs_.push_back(c);
    }
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_natural() const { return coeffs_.empty() || (coeffs_.size() == 1 && exps_[0].is_zero()); }
  std::uint64_t natural() const {
    if (is_zero()) return 0;
    if (!is_natural()) throw OrdinalError("natural(): ordinal is infinite");
    return coeffs_[0];
  }
  bool is_successor() const { return !coeffs_.empty() && exps_.back().is_zero(); }
  bool is_limit() const { return !coeffs_.empty() && !exps_.back().is_zero(); }

  std::size_t term_count() const { return coeffs_.size(); }
  const Ordinal& exp_at(std::size_t i) const { return exps_[i]; }
  std::uint64_t coeff_at(std::size_t i) const { return coeffs_[i]; }

  friend Cmp ord_cmp(const Ordinal& a, const Ordinal& b);
  friend Ordinal ord_add(const Ordinal& a, const Ordinal& b);
  friend Ordinal ot_diff(const Ordinal& gamma, const Ordinal& alpha);

  bool operator==(const Ordinal& o) const;
  bool operator!=(const Ordinal& o) const { return !(*this == o); }
  bool operator<(const Ordinal& o) const;
  bool operator<=(const Ordinal& o) const;
  bool operator>(const Ordinal& o) const;
  bool operator>=(const Ordinal& o) const;
  Ordinal operator+(const Ordinal& o) const;

  Ordinal succ() const { return *this + Ordinal(1); }
  Ordinal pred() const {
    if (!is_successor()) throw OrdinalError("pred(): not a successor");
    Ordinal r = *this;
    if (--r.coeffs_.back() == 0) {
      r.coeffs_.pop_back();
      r.exps_.pop_back();
    }
    return r;
  }

  // greatest limit ordinal <= *this, or zero when none exists
  Ordinal limit_part() const {
    Ordinal head = *this;
    if (is_successor()) {
      head.coeffs_.pop_back();
      head.exps_.pop_back();
    }
    return head;
  }

  // least limit ordinal >= *this (0 maps to w)
  Ordinal round_up_to_limit() const {
    if (is_limit()) return *this;
    Ordinal head = *this;
    if (is_successor()) {
      head.coeffs_.pop_back();
      head.exps_.pop_back();
    }
    return head + omega();
  }

  std::string str() const;
  static Ordinal parse(std::string_view text);

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    hash_into(h);
    return h;
  }

 private:
  void hash_into(std::size_t& h) const {
    auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      exps_[i].hash_into(h);
      mix(coeffs_[i]);
    }
  }

  std::vector<Ordinal> exps_;
  std::vector<std::uint64_t> coeffs_;
};

inline Cmp ord_cmp(const Ordinal& a, const Ordinal& b) {
  for (std::size_t i = 0; i < a.term_count() && i < b.term_count(); ++i) {
    Cmp e = ord_cmp(a.exps_[i], b.exps_[i]);
    if (e != Cmp::EQ) return e;
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? Cmp::LT : Cmp::GT;
  }
  if (a.term_count() != b.term_count())
    return a.term_count() < b.term_count() ? Cmp::LT : Cmp::GT;
  return Cmp::EQ;
}

inline bool Ordinal::operator==(const Ordinal& o) const { return ord_cmp(*this, o) == Cmp::EQ; }
inline bool Ordinal::operator<(const Ordinal& o) const { return ord_cmp(*this, o) == Cmp::LT; }
inline bool Ordinal::operator<=(const Ordinal& o) const { return ord_cmp(*this, o) != Cmp::GT; }
inline bool Ordinal::operator>(const Ordinal& o) const { return ord_cmp(*this, o) == Cmp::GT; }
inline bool Ordinal::operator>=(const Ordinal& o) const { return ord_cmp(*this, o) != Cmp::LT; }

// standard CNF sum: terms of a below b's leading exponent are absorbed
inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  Ordinal r;
  const Ordinal& be = b.exps_[0];
  std::size_t i = 0;
  while (i < a.term_count() && ord_cmp(a.exps_[i], be) == Cmp::GT) {
    r.exps_.push_back(a.exps_[i]);
    r.coeffs_.push_back(a.coeffs_[i]);
    ++i;
  }
  std::uint64_t lead = b.coeffs_[0];
  if (i < a.term_count() && ord_cmp(a.exps_[i], be) == Cmp::EQ) lead += a.coeffs_[i];
  r.exps_.push_back(be);
  r.coeffs_.push_back(lead);
  for (std::size_t j = 1; j < b.term_count(); ++j) {
    r.exps_.push_back(b.exps_[j]);
    r.coeffs_.push_back(b.coeffs_[j]);
  }
  return r;
}

inline Ordinal Ordinal::operator+(const Ordinal& o) const { return ord_add(*this, o); }

// the unique xi with gamma + xi = alpha  (gamma <= alpha)
inline Ordinal ot_diff(const Ordinal& gamma, const Ordinal& alpha) {
  if (gamma > alpha) throw NegativeDifference();
  std::size_t i = 0;
  for (; i < gamma.term_count(); ++i) {
    if (i >= alpha.term_count()) throw NegativeDifference();
    Cmp e = ord_cmp(gamma.exps_[i], alpha.exps_[i]);
    if (e == Cmp::GT) throw NegativeDifference();
    if (e == Cmp::LT) {  // alpha's larger term absorbs the rest of gamma
      Ordinal r;
      r.exps_.assign(alpha.exps_.begin() + i, alpha.exps_.end());
      r.coeffs_.assign(alpha.coeffs_.begin() + i, alpha.coeffs_.end());
      return r;
    }
    if (gamma.coeffs_[i] != alpha.coeffs_[i]) {
      if (gamma.coeffs_[i] > alpha.coeffs_[i]) throw NegativeDifference();
      Ordinal r;
      r.exps_.push_back(alpha.exps_[i]);
      r.coeffs_.push_back(alpha.coeffs_[i] - gamma.coeffs_[i]);
      r.exps_.insert(r.exps_.end(), alpha.exps_.begin() + i + 1, alpha.exps_.end());
      r.coeffs_.insert(r.coeffs_.end(), alpha.coeffs_.begin() + i + 1, alpha.coeffs_.end());
      return r;
    }
  }
  Ordinal r;
  r.exps_.assign(alpha.exps_.begin() + i, alpha.exps_.end());
  r.coeffs_.assign(alpha.coeffs_.begin() + i, alpha.coeffs_.end());
  return r;
}

// strictly increasing, cofinal approximants of an omega-limit:
// a = rest + w^e*c  steps as  rest + w^e*(c-1) + step(e, n)
// with step(e'+1, n) = w^e'*n and step(e limit, n) = w^(e[n]).
inline Ordinal fundamental_seq(const Ordinal& a, std::uint64_t n) {
  if (!a.is_limit()) throw NotOmegaLimit();
  Ordinal head;
  for (std::size_t i = 0; i + 1 < a.term_count(); ++i)
    head = head + Ordinal::pow_times(a.exp_at(i), a.coeff_at(i));
  const Ordinal& e = a.exp_at(a.term_count() - 1);
  std::uint64_t c = a.coeff_at(a.term_count() - 1);
  if (c > 1) head = head + Ordinal::pow_times(e, c - 1);
  if (e.is_successor()) return head + Ordinal::pow_times(e.pred(), n);
  return head + Ordinal::pow(fundamental_seq(e, n));
}

inline std::string Ordinal::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < term_count(); ++i) {
    if (i) s += " + ";
    const Ordinal& e = exps_[i];
    std::uint64_t c = coeffs_[i];
    if (e.is_zero()) {
      s += std::to_string(c);
      continue;
    }
    s += "w";
    if (!(e == Ordinal(1))) {
      s += "^";
      bool atom = e.is_natural() || (e.term_count() == 1 && e.coeff_at(0) == 1 &&
                                     e.exp_at(0) == Ordinal(1));
      s += atom ? e.str() : "(" + e.str() + ")";
    }
    if (c != 1) s += "*" + std::to_string(c);
  }
  return s;
}

namespace detail {

class OrdParser {
 public:
  explicit OrdParser(std::string_view s) : s_(s) {}
  Ordinal run() {
    Ordinal r = sum();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
    return r;
  }

 private:
  Ordinal sum() {
    Ordinal r = term();
    Ordinal last_exp = trailing_exp(r);
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      Ordinal t = term();
      if (!(leading_exp(t) < last_exp))
        throw ParseError("terms not in strictly decreasing exponent order");
      last_exp = trailing_exp(t);
      r = r + t;
    }
    return r;
  }
  static Ordinal leading_exp(const Ordinal& o) { return o.is_zero() ? Ordinal() : o.exp_at(0); }
  static Ordinal trailing_exp(const Ordinal& o) {
    return o.is_zero() ? Ordinal() : o.exp_at(o.term_count() - 1);
  }
  Ordinal term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal e(1);
      if (eat('^')) e = factor();
      std::uint64_t c = 1;
      skip_ws();
      if (eat('*')) c = nat();
      if (c == 0) throw ParseError("zero coefficient");
      return Ordinal::pow_times(e, c);
    }
    return Ordinal(nat());
  }
  Ordinal factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal r = sum();
      skip_ws();
      if (!eat(')')) throw ParseError("expected ')'");
      return r;
    }
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal(nat());
  }
  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a number at '" + rest() + "'");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::string rest() { return std::string(s_.substr(pos_, 16)); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Ordinal Ordinal::parse(std::string_view text) { return detail::OrdParser(text).run(); }

struct OrdinalHash {
  std::size_t operator()(const Ordinal& o) const { return o.hash(); }
};

}  // namespace lcslab
