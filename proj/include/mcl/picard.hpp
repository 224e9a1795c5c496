#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcl/exact.hpp"

namespace mcl {

/// A Q-divisor class h*H + d*Delta on the rank-2 Picard lattice.
///
/// The Kontsevich space and the Hilbert component are isomorphic in
/// codimension two, so a single lattice serves both; anything that depends
/// on the space lives in cones.hpp.
struct DivisorClass {
  Rational h;
  Rational d;

  bool is_zero() const { return h.is_zero() && d.is_zero(); }

  DivisorClass operator-() const { return {-h, -d}; }
  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return {a.h + b.h, a.d + b.d}; }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return {a.h - b.h, a.d - b.d}; }
  friend DivisorClass operator*(const Rational& s, const DivisorClass& a) { return {s * a.h, s * a.d}; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  /// "a*H + b*D" with the coefficients in canonical rational form.
  std::string to_string() const {
    std::string out = h.to_string() + "*H ";
    out += d.sign() < 0 ? "- " + (-d).to_string() : "+ " + d.to_string();
    return out + "*D";
  }

  static DivisorClass parse(std::string_view text);
};

inline void to_json(nlohmann::json& j, const DivisorClass& c) {
  j = nlohmann::json{{"h", c.h.to_string()}, {"d", c.d.to_string()}};
}
inline void from_json(const nlohmann::json& j, DivisorClass& c) {
  c.h = Rational::parse(j.at("h").get<std::string>());
  c.d = Rational::parse(j.at("d").get<std::string>());
}

/// A curve class recorded by its intersection numbers with H and Delta.
struct CurveClass {
  std::string name;
  Rational deg_h;
  Rational deg_d;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

inline Rational pair(const DivisorClass& D, const CurveClass& C) { return D.h * C.deg_h + D.d * C.deg_d; }

namespace divisors {
inline DivisorClass H() { return {1, 0}; }
inline DivisorClass Delta() { return {0, 1}; }
inline DivisorClass T() { return {Rational(2, 3), Rational(2, 3)}; }
inline DivisorClass Ddeg() { return {Rational(2, 3), Rational(-1, 3)}; }
inline DivisorClass F() { return {Rational(5, 3), Rational(-1, 3)}; }
inline DivisorClass G() { return F(); }
}  // namespace divisors

namespace curves {
/// Pencil of lines attached to a plane conic at the base point.
inline CurveClass B1() { return {"B1", 1, -1}; }
/// Pencil of plane conics attached to a line at one of the four base points.
inline CurveClass B2() { return {"B2", 1, 2}; }
}  // namespace curves

/// Named divisors in a fixed order: H, Delta, T, Ddeg, F, G.
inline std::vector<std::pair<std::string, DivisorClass>> named_divisors() {
  return {{"H", divisors::H()},       {"Delta", divisors::Delta()}, {"T", divisors::T()},
          {"Ddeg", divisors::Ddeg()}, {"F", divisors::F()},         {"G", divisors::G()}};
}

inline std::optional<DivisorClass> named_divisor(std::string_view name) {
  for (auto& [n, c] : named_divisors())
    if (n == name) return c;
  return std::nullopt;
}

/// alpha in Q or the pure boundary direction (infinity).
class ExtendedAlpha {
 public:
  ExtendedAlpha(Rational a) : value_(std::move(a)) {}  // NOLINT(implicit)
  ExtendedAlpha(int a) : value_(Rational(a)) {}          // NOLINT(implicit)
  static ExtendedAlpha infinity() { return ExtendedAlpha(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  /// "inf", "infinity", "oo" or a rational literal.
  static ExtendedAlpha parse(std::string_view text) {
    auto t = detail::trim(text);
    if (t == "inf" || t == "infinity" || t == "oo" || t == "+inf") return infinity();
    return Rational::parse(t);
  }
  std::string to_string() const { return is_infinite() ? "inf" : value_->to_string(); }

  friend bool operator==(const ExtendedAlpha&, const ExtendedAlpha&) = default;
  friend std::strong_ordering operator<=>(const ExtendedAlpha& a, const ExtendedAlpha& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return a.value() <=> b.value();
  }

 private:
  ExtendedAlpha() = default;
  std::optional<Rational> value_;
};

struct AlphaForm {
  Rational scale;
  ExtendedAlpha alpha;
};

/// Writes D = scale * (H + alpha * Delta), or scale * Delta when h = 0.
inline AlphaForm to_alpha(const DivisorClass& D) {
  if (D.is_zero()) throw Error(Errc::ZeroClass, "zero divisor class has no alpha");
  if (D.h.is_zero()) return {D.d, ExtendedAlpha::infinity()};
  return {D.h, ExtendedAlpha(D.d / D.h)};
}

namespace detail {

// Rows (u_i, v_i) with targets t_i; returns (x, y) with u_i x + v_i y = t_i.
inline std::pair<Rational, Rational> solve_pairing_rows(const std::vector<std::pair<Rational, Rational>>& rows,
                                                        const std::vector<Rational>& targets) {
  if (rows.size() < 2) throw Error(Errc::UnderdeterminedCurves, "need at least two rows");
  RatMatrix a(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a(i, 0) = rows[i].first;
    a(i, 1) = rows[i].second;
  }
  try {
    auto x = solve(a, targets);
    return {x[0], x[1]};
  } catch (const Error& e) {
    if (e.code() == Errc::SingularInconsistent)
      throw Error(Errc::InconsistentData, "intersection data are contradictory");
    if (e.code() == Errc::SingularUnderdetermined)
      throw Error(Errc::UnderdeterminedCurves, "test data do not span the lattice");
    throw;
  }
}

}  // namespace detail

/// The unique divisor class with prescribed degrees on the given test curves.
inline DivisorClass solve_divisor_class(const std::vector<std::pair<CurveClass, Rational>>& data) {
  std::vector<std::pair<Rational, Rational>> rows;
  std::vector<Rational> targets;
  for (const auto& [c, t] : data) {
    rows.emplace_back(c.deg_h, c.deg_d);
    targets.push_back(t);
  }
  auto [h, d] = detail::solve_pairing_rows(rows, targets);
  return {h, d};
}

/// The unique curve class with prescribed degrees on the given divisors.
inline CurveClass solve_curve_class(const std::vector<std::pair<DivisorClass, Rational>>& data,
                                    std::string name = "") {
  std::vector<std::pair<Rational, Rational>> rows;
  std::vector<Rational> targets;
  for (const auto& [D, t] : data) {
    rows.emplace_back(D.h, D.d);
    targets.push_back(t);
  }
  auto [x, y] = detail::solve_pairing_rows(rows, targets);
  return {std::move(name), x, y};
}

inline DivisorClass DivisorClass::parse(std::string_view text) {
  // Grammar: [sign] coeff ['*'] ('H'|'D') [ (+|-) coeff ['*'] ('H'|'D') ]
  // A bare 'H' or '-D' means coefficient +-1; each basis symbol appears at most once.
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw Error(Errc::ParseError, "empty divisor class");
  DivisorClass out{0, 0};
  bool seen_h = false, seen_d = false;
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw Error(Errc::ParseError, "expected '+' or '-'", i);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != 'H' && s[j] != 'D') ++j;
    if (j == s.size()) throw Error(Errc::ParseError, "missing basis symbol H or D", j);
    std::string coeff = s.substr(i, j - i);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Rational c = coeff.empty() ? Rational(1) : Rational::parse(coeff);
    if (neg) c = -c;
    // "Delta" is accepted as a spelling of D.
    std::size_t next = j + 1;
    if (s.compare(j, 5, "Delta") == 0) next = j + 5;
    if (s[j] == 'H') {
      if (seen_h) throw Error(Errc::ParseError, "H given twice", j);
      seen_h = true;
      out.h = c;
    } else {
      if (seen_d) throw Error(Errc::ParseError, "D given twice", j);
      seen_d = true;
      out.d = c;
    }
    i = next;
  }
  return out;
}

}  // namespace mcl
