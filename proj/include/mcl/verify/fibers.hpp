#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mcl/ideals.hpp"

namespace mcl {

/// Curve types in the fibers of the Hilbert component over the Chow variety.
/// I-IV: double line on L2 = {X = Y = 0} plus the line L1 = {Y = Z = 0};
/// V-VII: triple lines on {X = Y = 0}.
enum class FiberCase { I, II, III, IV, V, VI, VII };

constexpr std::string_view to_string(FiberCase c) {
  switch (c) {
    case FiberCase::I: return "I";
    case FiberCase::II: return "II";
    case FiberCase::III: return "III";
    case FiberCase::IV: return "IV";
    case FiberCase::V: return "V";
    case FiberCase::VI: return "VI";
    case FiberCase::VII: return "VII";
  }
  return "";
}

inline FiberCase parse_fiber_case(std::string_view s) {
  for (auto c : {FiberCase::I, FiberCase::II, FiberCase::III, FiberCase::IV, FiberCase::V, FiberCase::VI, FiberCase::VII})
    if (to_string(c) == s) return c;
  throw Error(Errc::InvalidArgument, "unknown fiber case '" + std::string(s) + "'");
}

/// Parameters of a fiber curve. Cases I-IV use F = aZ + bW and G = cZ;
/// cases V-VII use the chart parameter t and [a, b, c].
struct FiberParams {
  Rational t = 0;
  Rational a = 0;
  Rational b = 0;
  Rational c = 0;

  std::string to_string() const {
    return "t=" + t.to_string() + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
  }
};

namespace detail {

inline Polynomial var(const Ring& r, std::string_view name) { return Polynomial::variable(r, name); }

inline void require(bool ok, FiberCase fc, const char* what) {
  if (!ok) throw Error(Errc::GenericityViolated, "case " + std::string(to_string(fc)) + " needs " + what);
}

}  // namespace detail

/// Checks the open/closed conditions that define each case.
inline void check_genericity(FiberCase fc, const FiberParams& p) {
  using detail::require;
  const bool a0 = p.a.is_zero(), b0 = p.b.is_zero(), c0 = p.c.is_zero();
  switch (fc) {
    case FiberCase::I: require(!b0 && !c0, fc, "b != 0 and c != 0"); break;
    case FiberCase::II: require(b0 && !c0, fc, "b = 0 and c != 0"); break;
    case FiberCase::III: require(!b0 && c0, fc, "b != 0 and c = 0"); break;
    case FiberCase::IV: require(b0 && c0 && !a0, fc, "b = c = 0 and a != 0"); break;
    case FiberCase::V: require(!c0 && !(a0 && b0), fc, "c != 0 and (a, b) != (0, 0)"); break;
    case FiberCase::VI: require(c0 && !(a0 && b0), fc, "c = 0 and (a, b) != (0, 0)"); break;
    case FiberCase::VII: require(a0 && b0 && !c0, fc, "a = b = 0 and c != 0"); break;
  }
}

/// Double line ((X, Y)^2, X*G - Y*F) with F = aZ + bW, G = cZ.
inline Ideal double_line_ideal(const Ring& r, const Rational& a, const Rational& b, const Rational& c) {
  auto X = detail::var(r, "X"), Y = detail::var(r, "Y"), Z = detail::var(r, "Z"), W = detail::var(r, "W");
  Polynomial F = Z.scaled(a) + W.scaled(b);
  Polynomial G = Z.scaled(c);
  return Ideal(r, {X * X, X * Y, Y * Y, X * G - Y * F});
}

/// Chart t: ((X - tY)^2, (X - tY)Y, Y^3, (aW + bZ)(X - tY) - cY^2).
inline Ideal triple_line_chart1(const Ring& r, const Rational& t, const Rational& a, const Rational& b, const Rational& c) {
  auto X = detail::var(r, "X"), Y = detail::var(r, "Y"), Z = detail::var(r, "Z"), W = detail::var(r, "W");
  Polynomial l = X - Y.scaled(t);
  Polynomial f = W.scaled(a) + Z.scaled(b);
  return Ideal(r, {l * l, l * Y, Y * Y * Y, f * l - (Y * Y).scaled(c)});
}

/// Chart s: ((sX - Y)^2, (sX - Y)X, X^3, (aW + bZ)(sX - Y) - cX^2).
inline Ideal triple_line_chart2(const Ring& r, const Rational& s, const Rational& a, const Rational& b, const Rational& c) {
  auto X = detail::var(r, "X"), Y = detail::var(r, "Y"), Z = detail::var(r, "Z"), W = detail::var(r, "W");
  Polynomial l = X.scaled(s) - Y;
  Polynomial f = W.scaled(a) + Z.scaled(b);
  return Ideal(r, {l * l, l * X, X * X * X, f * l - (X * X).scaled(c)});
}

/// Ideal of the fiber curve of the given case, in Q[X, Y, Z, W].
/// For I-IV this is the double line union L1, i.e. I_D ∩ (Y, Z).
inline Ideal fiber_ideal(FiberCase fc, const FiberParams& p, const Ring& r = default_ring()) {
  check_genericity(fc, p);
  switch (fc) {
    case FiberCase::I:
    case FiberCase::II:
    case FiberCase::III:
    case FiberCase::IV:
      return intersect(double_line_ideal(r, p.a, p.b, p.c), Ideal(r, {"Y", "Z"}));
    default:
      return triple_line_chart1(r, p.t, p.a, p.b, p.c);
  }
}

/// The decomposed form stated for the curve ideal of cases II, III and IV.
inline Ideal stated_decomposition(FiberCase fc, const FiberParams& p, const Ring& r = default_ring()) {
  check_genericity(fc, p);
  auto X = detail::var(r, "X"), Y = detail::var(r, "Y"), Z = detail::var(r, "Z"), W = detail::var(r, "W");
  Ideal YZ(r, {Y, Z});
  switch (fc) {
    case FiberCase::II:  // (Y, Z) ∩ (aY - cX, Y^2)
      return intersect(YZ, Ideal(r, {Y.scaled(p.a) - X.scaled(p.c), Y * Y}));
    case FiberCase::III:  // (X, Y, aZ + bW)^2 ∩ (Y, X^2) ∩ (Y, Z)
      return intersect(intersect(power(Ideal(r, {X, Y, Z.scaled(p.a) + W.scaled(p.b)}), 2), Ideal(r, {Y, X * X})), YZ);
    case FiberCase::IV:  // (Y, Z) ∩ (Y, X^2) ∩ (X, Y, Z)^2
      return intersect(intersect(YZ, Ideal(r, {Y, X * X})), power(Ideal(r, {X, Y, Z}), 2));
    default:
      throw Error(Errc::InvalidArgument, "no decomposition stated for case " + std::string(to_string(fc)));
  }
}

/// Point where the fiber curve carries an embedded point, when it has one:
/// III at [0, 0, -b, a]; IV at p = [0, 0, 0, 1]; VI at [0, 0, a, -b].
inline std::optional<std::vector<Rational>> embedded_point_location(FiberCase fc, const FiberParams& p) {
  switch (fc) {
    case FiberCase::III: return std::vector<Rational>{0, 0, -p.b, p.a};
    case FiberCase::IV: return std::vector<Rational>{0, 0, 0, 1};
    case FiberCase::VI: return std::vector<Rational>{0, 0, p.a, -p.b};
    default: return std::nullopt;
  }
}

/// Deterministic sampler of small nonzero rationals; the raw engine output is
/// mapped by hand so that samples do not depend on the standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  Rational nonzero() {
    for (;;) {
      long num = static_cast<long>(eng_() % 19) - 9;
      long den = static_cast<long>(eng_() % 4) + 1;
      if (num != 0) return Rational(num, den);
    }
  }

  /// Parameters satisfying the genericity conditions of `fc`.
  FiberParams params(FiberCase fc) {
    FiberParams p;
    switch (fc) {
      case FiberCase::I: p = {0, nonzero(), nonzero(), nonzero()}; break;
      case FiberCase::II: p = {0, nonzero(), 0, nonzero()}; break;
      case FiberCase::III: p = {0, nonzero(), nonzero(), 0}; break;
      case FiberCase::IV: p = {0, nonzero(), 0, 0}; break;
      case FiberCase::V: p = {nonzero(), nonzero(), nonzero(), nonzero()}; break;
      case FiberCase::VI: p = {nonzero(), nonzero(), nonzero(), 0}; break;
      case FiberCase::VII: p = {nonzero(), 0, 0, nonzero()}; break;
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mcl
