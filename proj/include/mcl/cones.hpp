#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcl/picard.hpp"

namespace mcl {

// ---------------------------------------------------------------------------
// Rays and cone membership in the (H, Delta)-plane
// ---------------------------------------------------------------------------

/// Primitive integer direction (p, q) = p*H + q*Delta of a half-line.
struct Ray {
  BigInt p;
  BigInt q;

  DivisorClass to_divisor() const { return {Rational(p), Rational(q)}; }
  std::string to_string() const { return "(" + p.get_str() + "," + q.get_str() + ")"; }
  friend bool operator==(const Ray&, const Ray&) = default;
};

inline Ray ray_of(const DivisorClass& D) {
  if (D.is_zero()) throw Error(Errc::ZeroClass, "zero class spans no ray");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), D.h.den().get_mpz_t(), D.d.den().get_mpz_t());
  BigInt p = D.h.num() * (l / D.h.den());
  BigInt q = D.d.num() * (l / D.d.den());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return {p / g, q / g};
}

namespace detail {
inline Rational det2(const DivisorClass& a, const DivisorClass& b) { return a.h * b.d - a.d * b.h; }
}  // namespace detail

enum class ConePosition { Interior, OnBoundary, Outside };

constexpr std::string_view to_string(ConePosition p) {
  switch (p) {
    case ConePosition::Interior: return "Interior";
    case ConePosition::OnBoundary: return "OnBoundary";
    case ConePosition::Outside: return "Outside";
  }
  return "";
}

/// Position of D in the closed cone {s*lo + t*hi : s, t >= 0}.
/// The coefficients are recovered by Cramer's rule, so only determinant
/// signs are inspected.
inline ConePosition cone_position(const DivisorClass& D, const Ray& lo, const Ray& hi) {
  auto a = lo.to_divisor();
  auto b = hi.to_divisor();
  Rational det = detail::det2(a, b);
  if (det.is_zero()) throw Error(Errc::DegenerateCone, "cone rays " + lo.to_string() + " and " + hi.to_string() + " are parallel");
  int s = detail::det2(D, b).sign() * det.sign();
  int t = detail::det2(a, D).sign() * det.sign();
  if (s < 0 || t < 0) return ConePosition::Outside;
  if (s == 0 || t == 0) return ConePosition::OnBoundary;
  return ConePosition::Interior;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

enum class Space { KontsevichSpace, HilbertComponent };

enum class BaseLocusLabel { Empty, BoundaryDelta, MultiImageM, DegenerateDdeg, NonreducedN, NotEffective };

enum class ModelLabel {
  Kontsevich,
  ChowVariety,
  HilbertComponent,
  NetsOfQuadricsH2,
  TwoStableMaps,
  OutsidePseudoeffective,
  UndeterminedWall,
};

constexpr std::string_view to_string(Space s) {
  return s == Space::KontsevichSpace ? "KontsevichSpace" : "HilbertComponent";
}

constexpr std::string_view to_string(BaseLocusLabel b) {
  switch (b) {
    case BaseLocusLabel::Empty: return "Empty";
    case BaseLocusLabel::BoundaryDelta: return "BoundaryDelta";
    case BaseLocusLabel::MultiImageM: return "MultiImageM";
    case BaseLocusLabel::DegenerateDdeg: return "DegenerateDdeg";
    case BaseLocusLabel::NonreducedN: return "NonreducedN";
    case BaseLocusLabel::NotEffective: return "NotEffective";
  }
  return "";
}

/// Short form used in chamber diagrams ("B=M").
constexpr std::string_view short_label(BaseLocusLabel b) {
  switch (b) {
    case BaseLocusLabel::Empty: return "empty";
    case BaseLocusLabel::BoundaryDelta: return "Delta";
    case BaseLocusLabel::MultiImageM: return "M";
    case BaseLocusLabel::DegenerateDdeg: return "Ddeg";
    case BaseLocusLabel::NonreducedN: return "N";
    case BaseLocusLabel::NotEffective: return "none";
  }
  return "";
}

constexpr std::string_view to_string(ModelLabel m) {
  switch (m) {
    case ModelLabel::Kontsevich: return "Kontsevich";
    case ModelLabel::ChowVariety: return "ChowVariety";
    case ModelLabel::HilbertComponent: return "HilbertComponent";
    case ModelLabel::NetsOfQuadricsH2: return "NetsOfQuadricsH2";
    case ModelLabel::TwoStableMaps: return "TwoStableMaps";
    case ModelLabel::OutsidePseudoeffective: return "OutsidePseudoeffective";
    case ModelLabel::UndeterminedWall: return "UndeterminedWall";
  }
  return "";
}

inline Space parse_space(std::string_view s) {
  if (s == "kontsevich" || s == "KontsevichSpace" || s == "M") return Space::KontsevichSpace;
  if (s == "hilbert" || s == "HilbertComponent" || s == "H") return Space::HilbertComponent;
  throw Error(Errc::InvalidArgument, "unknown space '" + std::string(s) + "' (kontsevich|hilbert)");
}

// ---------------------------------------------------------------------------
// Chamber tables
// ---------------------------------------------------------------------------

struct Wall {
  std::string name;
  DivisorClass divisor;
  ExtendedAlpha alpha;
  Ray ray() const { return ray_of(divisor); }
};

/// Walls of the effective cone in strictly decreasing alpha.
inline std::vector<Wall> walls() {
  return {
      {"Delta", divisors::Delta(), ExtendedAlpha::infinity()},
      {"T", divisors::T(), Rational(1)},
      {"H", divisors::H(), Rational(0)},
      {"F", divisors::F(), Rational(-1, 5)},
      {"Ddeg", divisors::Ddeg(), Rational(-1, 2)},
  };
}

/// Stable base locus of H + alpha*Delta (positive multiples).
inline BaseLocusLabel base_locus(const ExtendedAlpha& alpha, Space s) {
  if (alpha.is_infinite()) return BaseLocusLabel::BoundaryDelta;
  const Rational& a = alpha.value();
  const Rational fwall(-1, 5), dwall(-1, 2);
  if (a > 1) return BaseLocusLabel::BoundaryDelta;
  if (a < dwall) return BaseLocusLabel::NotEffective;
  if (a < fwall) return BaseLocusLabel::DegenerateDdeg;
  if (s == Space::KontsevichSpace) {
    // F wall belongs to the M chamber; H and T are base point free.
    return a < 0 ? BaseLocusLabel::MultiImageM : BaseLocusLabel::Empty;
  }
  // Nef cone of the Hilbert component is cone(F, H); T joins the N chamber.
  return a <= 0 ? BaseLocusLabel::Empty : BaseLocusLabel::NonreducedN;
}

/// Base locus of an arbitrary class. Negative multiples of effective rays
/// are not effective; the zero class has empty base locus.
inline BaseLocusLabel base_locus(const DivisorClass& D, Space s) {
  if (D.is_zero()) return BaseLocusLabel::Empty;
  auto [scale, alpha] = to_alpha(D);
  if (scale.sign() < 0) return BaseLocusLabel::NotEffective;
  return base_locus(alpha, s);
}

/// An interval of alpha values; {x} is the closed degenerate interval [x, x].
struct AlphaInterval {
  ExtendedAlpha lo;
  ExtendedAlpha hi;
  bool lo_closed;
  bool hi_closed;

  bool contains(const ExtendedAlpha& a) const {
    bool above = lo_closed ? lo <= a : lo < a;
    bool below = hi_closed ? a <= hi : a < hi;
    return above && below;
  }
  std::string to_string() const {
    if (lo == hi) return "{" + lo.to_string() + "}";
    return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() + (hi_closed ? "]" : ")");
  }
  friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;
};

/// Log canonical model of H + alpha*Delta.
inline ModelLabel log_model(const ExtendedAlpha& alpha) {
  if (alpha.is_infinite()) return ModelLabel::UndeterminedWall;
  const Rational& a = alpha.value();
  const Rational dwall(-1, 2), fwall(-1, 5);
  if (a < dwall) return ModelLabel::OutsidePseudoeffective;
  if (a == dwall) return ModelLabel::UndeterminedWall;
  if (a <= fwall) return ModelLabel::NetsOfQuadricsH2;
  if (a < 0) return ModelLabel::HilbertComponent;
  if (a == 0) return ModelLabel::ChowVariety;
  if (a < 1) return ModelLabel::Kontsevich;
  return ModelLabel::TwoStableMaps;
}

// ---------------------------------------------------------------------------
// The MMP walk
// ---------------------------------------------------------------------------

enum class TransitionKind { Isomorphism, SmallContraction, Flip, DivisorialContraction };

constexpr std::string_view to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::Isomorphism: return "Isomorphism";
    case TransitionKind::SmallContraction: return "SmallContraction";
    case TransitionKind::Flip: return "Flip";
    case TransitionKind::DivisorialContraction: return "DivisorialContraction";
  }
  return "";
}

struct Transition {
  TransitionKind kind;
  std::string locus;  // contracted or replaced locus
  std::string map;    // theta, f, g, h
  Rational wall;
  bool reversed = false;  // crossed against the direction of the morphism

  std::string to_string() const {
    std::string s = std::string(mcl::to_string(kind)) + "(" + locus + ") [" + map + (reversed ? "^-1" : "") +
                    "] at alpha=" + wall.to_string();
    return s;
  }
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct WalkStep {
  AlphaInterval interval;
  ModelLabel model;
  std::optional<Transition> next;
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

namespace detail {

struct ModelSegment {
  AlphaInterval interval;
  ModelLabel model;
};

// Models of (-1/2, inf) in decreasing alpha, and the transition that leads
// from segment i to segment i+1.
inline const std::vector<ModelSegment>& model_segments() {
  static const std::vector<ModelSegment> segs = {
      {{Rational(1), ExtendedAlpha::infinity(), true, false}, ModelLabel::TwoStableMaps},
      {{Rational(0), Rational(1), false, false}, ModelLabel::Kontsevich},
      {{Rational(0), Rational(0), true, true}, ModelLabel::ChowVariety},
      {{Rational(-1, 5), Rational(0), false, false}, ModelLabel::HilbertComponent},
      {{Rational(-1, 2), Rational(-1, 5), false, true}, ModelLabel::NetsOfQuadricsH2},
  };
  return segs;
}

inline const std::vector<Transition>& segment_transitions() {
  static const std::vector<Transition> ts = {
      {TransitionKind::DivisorialContraction, "Delta", "theta", Rational(1), true},
      {TransitionKind::SmallContraction, "M", "f", Rational(0), false},
      {TransitionKind::Flip, "M -> N", "g", Rational(0), false},
      {TransitionKind::DivisorialContraction, "Ddeg", "h", Rational(-1, 5), false},
  };
  return ts;
}

inline std::size_t segment_index(const Rational& a) {
  const auto& segs = model_segments();
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (segs[i].interval.contains(a)) return i;
  throw Error(Errc::OutOfRange, "alpha " + a.to_string() + " outside (-1/2, inf)");
}

}  // namespace detail

/// Chamber of alpha values on which log_model is constant, when it is one
/// of the five models of (-1/2, inf).
inline std::optional<AlphaInterval> model_interval(ModelLabel m) {
  for (const auto& s : detail::model_segments())
    if (s.model == m) return s.interval;
  return std::nullopt;
}

/// Models met while decreasing alpha from alpha_from to alpha_to.
inline std::vector<WalkStep> mmp_walk(const Rational& alpha_from, const Rational& alpha_to) {
  const Rational dwall(-1, 2);
  if (alpha_from <= dwall || alpha_to <= dwall)
    throw Error(Errc::OutOfRange, "walk endpoints must exceed -1/2");
  if (!(alpha_from > alpha_to)) throw Error(Errc::OutOfRange, "walk requires alpha_from > alpha_to");
  std::size_t i = detail::segment_index(alpha_from);
  std::size_t j = detail::segment_index(alpha_to);
  std::vector<WalkStep> out;
  for (std::size_t k = i; k <= j; ++k) {
    const auto& seg = detail::model_segments()[k];
    WalkStep step{seg.interval, seg.model, std::nullopt};
    if (k < j) step.next = detail::segment_transitions()[k];
    out.push_back(std::move(step));
  }
  return out;
}

inline std::string walk_to_string(const std::vector<WalkStep>& walk) {
  std::string s;
  for (const auto& st : walk) {
    s += std::string(to_string(st.model)) + " on " + st.interval.to_string();
    if (st.next) s += "\n  -- " + st.next->to_string() + " -->\n";
  }
  return s + "\n";
}

inline nlohmann::json walk_to_json(const std::vector<WalkStep>& walk) {
  auto arr = nlohmann::json::array();
  for (const auto& st : walk) {
    nlohmann::json j{{"interval", st.interval.to_string()}, {"model", std::string(to_string(st.model))}};
    if (st.next) {
      j["transition"] = {{"kind", std::string(to_string(st.next->kind))},
                         {"locus", st.next->locus},
                         {"map", st.next->map},
                         {"wall", st.next->wall.to_string()},
                         {"reversed", st.next->reversed}};
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Nef and effective cones
// ---------------------------------------------------------------------------

struct RayPair {
  Ray lo;
  Ray hi;
  friend bool operator==(const RayPair&, const RayPair&) = default;
};

inline RayPair nef_cone(Space s) {
  if (s == Space::KontsevichSpace) return {ray_of(divisors::H()), ray_of(divisors::T())};
  return {ray_of(divisors::F()), ray_of(divisors::H())};
}

inline RayPair effective_cone() { return {ray_of(divisors::Delta()), ray_of(divisors::Ddeg())}; }

struct CoveringCheck {
  bool shared_wall = false;  // the two cones meet along a common ray
  bool no_overlap = false;   // and only along that ray
  bool equals_target = false;
  std::optional<Ray> wall;
  bool ok() const { return shared_wall && no_overlap && equals_target; }
};

/// Decides whether cone(a) and cone(b) tile cone(target): they share exactly
/// one boundary ray, lie on opposite sides of it, and their outer rays are
/// the rays of target.
inline CoveringCheck check_cone_covering(const RayPair& a, const RayPair& b, const RayPair& target) {
  auto ccw = [](RayPair c) {
    Rational d = detail::det2(c.lo.to_divisor(), c.hi.to_divisor());
    if (d.is_zero()) throw Error(Errc::DegenerateCone, "degenerate cone");
    if (d.sign() < 0) std::swap(c.lo, c.hi);
    return c;
  };
  RayPair x = ccw(a), y = ccw(b), t = ccw(target);
  CoveringCheck out;
  if (x.lo == y.hi) std::swap(x, y);
  if (x.hi != y.lo) return out;
  out.shared_wall = true;
  out.wall = x.hi;
  // Union is the convex cone (x.lo, y.hi) iff it is strictly convex and the
  // shared ray lies strictly inside it; then the overlap is exactly that ray.
  Rational outer = detail::det2(x.lo.to_divisor(), y.hi.to_divisor());
  out.no_overlap = outer.sign() > 0 && cone_position(x.hi.to_divisor(), x.lo, y.hi) == ConePosition::Interior;
  out.equals_target = out.no_overlap && t.lo == x.lo && t.hi == y.hi;
  return out;
}

/// nef(Kontsevich) and nef(Hilbert) together fill cone(F, T).
inline CoveringCheck mori_dream_covering() {
  return check_cone_covering(nef_cone(Space::KontsevichSpace), nef_cone(Space::HilbertComponent),
                             {ray_of(divisors::F()), ray_of(divisors::T())});
}

// ---------------------------------------------------------------------------
// Chamber diagrams
// ---------------------------------------------------------------------------

struct Chamber {
  std::string upper;  // wall with the larger alpha
  std::string lower;
  AlphaInterval interval;
  BaseLocusLabel base_locus;
  ModelLabel model;
};

/// The four chambers of the effective cone, in decreasing alpha.
inline std::vector<Chamber> chambers(Space s) {
  auto ws = walls();
  std::vector<Chamber> out;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
    AlphaInterval iv{ws[i + 1].alpha, ws[i].alpha, false, false};
    // Interior sample: midpoint, or lower + 1 for the unbounded chamber.
    Rational lo = ws[i + 1].alpha.value();
    Rational mid = ws[i].alpha.is_infinite() ? lo + 1 : (lo + ws[i].alpha.value()) / 2;
    out.push_back({ws[i].name, ws[i + 1].name, iv, base_locus(mid, s), log_model(mid)});
  }
  return out;
}

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::pair<double, double> canvas_point(const Ray& r, double radius) {
  double x = r.p.get_d(), y = r.q.get_d();
  double len = std::hypot(x, y);
  return {300.0 + radius * x / len, 300.0 - radius * y / len};
}

inline std::string render_text(Space s) {
  std::ostringstream os;
  os << "space: " << to_string(s) << "\n";
  os << "walls (decreasing alpha):\n";
  for (const auto& w : walls()) {
    os << "  " << w.name << "  ray " << w.ray().to_string() << "  alpha " << w.alpha.to_string() << "  B="
       << short_label(base_locus(w.alpha, s)) << "  model=" << to_string(log_model(w.alpha)) << "\n";
  }
  os << "chambers:\n";
  for (const auto& c : chambers(s)) {
    os << "  " << c.upper << "-" << c.lower << "  alpha " << c.interval.to_string() << "  B="
       << short_label(c.base_locus) << "  model=" << to_string(c.model) << "\n";
  }
  return os.str();
}

inline std::string render_json(Space s) {
  nlohmann::json j;
  j["space"] = std::string(to_string(s));
  j["walls"] = nlohmann::json::array();
  j["rays"] = nlohmann::json::array();
  for (const auto& w : walls()) {
    j["walls"].push_back(w.name);
    auto r = w.ray();
    j["rays"].push_back({{"name", w.name},
                         {"ray", {r.p.get_str(), r.q.get_str()}},
                         {"alpha", w.alpha.to_string()},
                         {"base_locus", std::string(to_string(base_locus(w.alpha, s)))},
                         {"model", std::string(to_string(log_model(w.alpha)))}});
  }
  j["chambers"] = nlohmann::json::array();
  for (const auto& c : chambers(s)) {
    j["chambers"].push_back({{"between", {c.upper, c.lower}},
                             {"alpha", c.interval.to_string()},
                             {"base_locus", std::string(to_string(c.base_locus))},
                             {"model", std::string(to_string(c.model))}});
  }
  return j.dump(2) + "\n";
}

inline std::string render_svg(Space s) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "  <title>Effective cone chambers: " << to_string(s) << "</title>\n";
  os << "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  auto ws = walls();
  std::array<const char*, 4> fills{"#f4cccc", "#d9ead3", "#cfe2f3", "#fff2cc"};
  auto cs = chambers(s);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto [x1, y1] = canvas_point(ws[i].ray(), 260);
    auto [x2, y2] = canvas_point(ws[i + 1].ray(), 260);
    os << "  <polygon class=\"chamber\" data-between=\"" << cs[i].upper << "-" << cs[i].lower << "\" points=\"300,300 "
       << fmt2(x1) << "," << fmt2(y1) << " " << fmt2(x2) << "," << fmt2(y2) << "\" fill=\"" << fills[i]
       << "\" stroke=\"none\"/>\n";
    double mx = (x1 + x2 + 300.0) / 3.0, my = (y1 + y2 + 300.0) / 3.0;
    os << "  <text class=\"chamber-label\" x=\"" << fmt2(mx) << "\" y=\"" << fmt2(my)
       << "\" font-size=\"12\" text-anchor=\"middle\">B=" << short_label(cs[i].base_locus) << " / "
       << to_string(cs[i].model) << "</text>\n";
  }
  for (const auto& w : ws) {
    auto [x, y] = canvas_point(w.ray(), 260);
    auto [tx, ty] = canvas_point(w.ray(), 280);
    os << "  <line class=\"ray\" data-name=\"" << w.name << "\" x1=\"300\" y1=\"300\" x2=\"" << fmt2(x) << "\" y2=\""
       << fmt2(y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "  <text class=\"ray-label\" x=\"" << fmt2(tx) << "\" y=\"" << fmt2(ty)
       << "\" font-size=\"14\" text-anchor=\"middle\">" << w.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace detail

/// Renders the chamber decomposition as "text", "svg" or "json".
inline std::string render_diagram(Space s, std::string_view format) {
  if (format == "text") return detail::render_text(s);
  if (format == "json") return detail::render_json(s);
  if (format == "svg") return detail::render_svg(s);
  throw Error(Errc::UnknownFormat, "unknown diagram format '" + std::string(format) + "'");
}

}  // namespace mcl
