#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcl/exact.hpp"

namespace mcl {

// ---------------------------------------------------------------------------
// Monomials and orders
// ---------------------------------------------------------------------------

/// Exponent vector; the length equals the number of ring variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) deg_ += x;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }
  /// Quotient a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    m.deg_ = a.deg_ - b.deg_;
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      m.e_[i] = std::max(a.e_[i], b.e_[i]);
      m.deg_ += m.e_[i];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }  // storage order only

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

enum class OrderKind { Lex, Grlex, Grevlex, Block };

/// Block orders compare the first `block` variables by grevlex, then break
/// ties by grevlex on the remaining variables; they eliminate the first block.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grlex() { return {OrderKind::Grlex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::Block, k}; }

  std::string to_string() const {
    switch (kind) {
      case OrderKind::Lex: return "lex";
      case OrderKind::Grlex: return "grlex";
      case OrderKind::Grevlex: return "grevlex";
      case OrderKind::Block: return "block:" + std::to_string(block);
    }
    return "";
  }
  static MonomialOrder parse(std::string_view s) {
    if (s == "lex") return lex();
    if (s == "grlex") return grlex();
    if (s == "grevlex") return grevlex();
    if (s.substr(0, 6) == "block:") {
      std::size_t k = 0;
      for (char c : s.substr(6)) {
        if (c < '0' || c > '9') throw Error(Errc::InvalidArgument, "bad block size in '" + std::string(s) + "'");
        k = k * 10 + static_cast<std::size_t>(c - '0');
      }
      return elimination(k);
    }
    throw Error(Errc::InvalidArgument, "unknown monomial order '" + std::string(s) + "'");
  }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline int cmp_int(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return cmp_int(da, db);
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace detail

/// Polynomial ring Q[vars] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty()) throw Error(Errc::InvalidArgument, "empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw Error(Errc::InvalidArgument, "duplicate variable '" + vars_[i] + "'");
    }
    if (order_.kind == OrderKind::Block && order_.block > vars_.size())
      throw Error(Errc::InvalidArgument, "block larger than the variable list");
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  /// Three-way comparison of monomials in this ring's order.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
      case OrderKind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return detail::cmp_int(a[i], b[i]);
        return 0;
      case OrderKind::Grlex:
        if (a.degree() != b.degree()) return detail::cmp_int(a.degree(), b.degree());
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return detail::cmp_int(a[i], b[i]);
        return 0;
      case OrderKind::Grevlex:
        return detail::grevlex_range(a, b, 0, a.size());
      case OrderKind::Block: {
        int c = detail::grevlex_range(a, b, 0, order_.block);
        return c != 0 ? c : detail::grevlex_range(a, b, order_.block, a.size());
      }
    }
    return 0;
  }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const PolyRing>;

inline Ring make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing>(std::move(vars), order);
}

/// Q[X, Y, Z, W] with grevlex, the homogeneous coordinate ring of P^3.
inline Ring default_ring() {
  static const Ring r = make_ring({"X", "Y", "Z", "W"});
  return r;
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw Error(Errc::RingMismatch, "operands live in different rings");
}

/// Same variables, new order.
inline Ring with_order(const Ring& r, MonomialOrder order) {
  if (r->order() == order) return r;
  return make_ring(r->vars(), order);
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms are strictly decreasing in the ring order and
/// carry nonzero coefficients, so equal polynomials have equal term lists.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, const Rational& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->nvars())});
    return p;
  }
  static Polynomial variable(Ring ring, std::size_t index) {
    Polynomial p(ring);
    std::vector<int> e(ring->nvars(), 0);
    e.at(index) = 1;
    p.terms_.push_back({Rational(1), Monomial(std::move(e))});
    return p;
  }
  static Polynomial variable(Ring ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error(Errc::UnknownVariable, "no variable '" + std::string(name) + "' in ring");
    return variable(std::move(ring), *idx);
  }
  static Polynomial term(Ring ring, const Rational& c, Monomial m) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, std::move(m)});
    return p;
  }
  /// Sorts and merges arbitrary terms into canonical form.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const PolyRing& r = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.mono[var] != 0) return true;
    return false;
  }

  /// This polynomial without its leading term.
  Polynomial tail() const {
    Polynomial p(ring_);
    if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
  }
  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }
  /// c * m * this
  Polynomial mul_term(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
    return p;
  }

  Polynomial operator-() const { return scaled(Rational(-1)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> all;
    all.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) all.push_back({s.coeff * t.coeff, s.mono * t.mono});
    return from_terms(a.ring_, std::move(all));
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->nvars()) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
    Rational s = 0;
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < t.mono[i]; ++k) v *= point[i];
      s += v;
    }
    return s;
  }

  /// Re-expresses this polynomial in `target`, matching variables by name.
  /// Variables absent from `target` must not occur.
  Polynomial in_ring(const Ring& target) const {
    if (same_ring(ring_, target)) {
      Polynomial p = *this;
      p.ring_ = target;
      return p;
    }
    std::vector<std::size_t> map(ring_->nvars(), target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (auto j = target->index_of(ring_->vars()[i])) map[i] = *j;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::vector<int> e(target->nvars(), 0);
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (t.mono[i] == 0) continue;
        if (map[i] == target->nvars())
          throw Error(Errc::UnknownVariable, "variable '" + ring_->vars()[i] + "' missing from target ring");
        e[map[i]] = t.mono[i];
      }
      out.push_back({t.coeff, Monomial(std::move(e))});
    }
    return from_terms(target, std::move(out));
  }

  std::string to_string() const;

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial p(a.ring_);
    p.terms_.reserve(a.size() + b.size());
    const PolyRing& r = *a.ring_;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : (j == b.size() ? 1 : r.compare(a.terms_[i].mono, b.terms_[j].mono));
      if (c > 0) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        p.terms_.push_back(b.terms_[j++]);
        if (subtract) p.terms_.back().coeff = -p.terms_.back().coeff;
      } else {
        Rational s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) p.terms_.push_back({std::move(s), a.terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return p;
  }

  Ring ring_;
  std::vector<Term> terms_;
};

inline Polynomial poly_pow(const Polynomial& f, unsigned k) {
  Polynomial result = Polynomial::constant(f.ring(), Rational(1));
  Polynomial base = f;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

enum class PolyOp { Add, Sub, Mul };

inline Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  return Polynomial(f.ring());
}

namespace detail {

inline std::string monomial_string(const PolyRing& r, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += r.vars()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    bool neg = t.coeff.sign() < 0;
    if (k == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    Rational a = t.coeff.abs();
    if (t.mono.is_one()) {
      s += a.to_string();
    } else {
      if (!a.is_one()) s += a.to_string() + "*";
      s += detail::monomial_string(*ring_, t.mono);
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | primary ('^' nat)*
// primary:= rational | var | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(pos_), pos_);
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = primary();
    while (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
      base = poly_pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        BigInt num(std::string(s_.substr(start, save - start)));
        BigInt den(std::string(s_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
        return Polynomial::constant(ring_, Rational(num, den));
      }
      pos_ = save;
      return Polynomial::constant(ring_, Rational(BigInt(std::string(s_.substr(start, save - start)))));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (is_ident_start(s_[pos_]) || is_digit(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw Error(Errc::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start), start);
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const Ring& ring = default_ring()) {
  return detail::PolyParser(text, ring).parse_all();
}

// ---------------------------------------------------------------------------
// Substitution and division
// ---------------------------------------------------------------------------

/// Simultaneous substitution var -> image; unmapped variables stay fixed.
inline Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images) {
  const Ring& r = f.ring();
  std::vector<Polynomial> img;
  img.reserve(r->nvars());
  for (std::size_t i = 0; i < r->nvars(); ++i) img.push_back(Polynomial::variable(r, i));
  for (const auto& [name, p] : images) {
    auto idx = r->index_of(name);
    if (!idx) throw Error(Errc::UnknownVariable, "no variable '" + name + "' in ring");
    require_same_ring(r, p.ring());
    img[*idx] = p;
  }
  // Powers are cached per variable.
  std::vector<std::vector<Polynomial>> powers(r->nvars());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(r, Rational(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * img[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  Polynomial out(r);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(r, t.coeff);
    for (std::size_t i = 0; i < r->nvars(); ++i)
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    out += prod;
  }
  return out;
}

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r where no term of r is
/// divisible by any leading monomial LM(g_i). Divisors are tried in order.
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const Ring& r = f.ring();
  for (const auto& g : divisors) {
    require_same_ring(r, g.ring());
    if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  }
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(r)), Polynomial(r)};
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (!g.leading_monomial().divides(lt.mono)) continue;
      Rational c = lt.coeff / g.leading_coeff();
      Monomial m = lt.mono / g.leading_monomial();
      out.quotients[i] += Polynomial::term(r, c, m);
      p -= g.mul_term(c, m);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  out.remainder = Polynomial::from_terms(r, std::move(rem));
  return out;
}

}  // namespace mcl
