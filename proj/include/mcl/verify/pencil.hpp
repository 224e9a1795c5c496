#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcl/ideals.hpp"

namespace mcl {

using PlanePoint = std::vector<Rational>;

/// Q[X, Y, Z], homogeneous coordinates of a plane.
inline Ring plane_ring() {
  static const Ring r = make_ring({"X", "Y", "Z"});
  return r;
}

/// Pencil lambda*F + mu*G of plane cubics with a common node and five
/// further base points.
struct PencilSpec {
  Polynomial f{plane_ring()};
  Polynomial g{plane_ring()};
  PlanePoint node;
  std::vector<PlanePoint> base_points;
};

namespace detail {

inline std::string point_string(const PlanePoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s;
}

inline PlanePoint parse_point(std::string_view text) {
  PlanePoint p;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    p.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

inline Polynomial partial(const Polynomial& f, std::size_t var) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono[var] == 0) continue;
    auto e = t.mono.exponents();
    Rational c = t.coeff * Rational(e[var]);
    --e[var];
    out.push_back({c, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

inline bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return true;
  return a.scaled(b.leading_coeff()) == b.scaled(a.leading_coeff());
}

// Linear form of the line through two distinct plane points (cross product).
inline Polynomial line_through(const PlanePoint& p, const PlanePoint& q) {
  const Ring& r = plane_ring();
  Rational a = p[1] * q[2] - p[2] * q[1];
  Rational b = p[2] * q[0] - p[0] * q[2];
  Rational c = p[0] * q[1] - p[1] * q[0];
  Polynomial l = Polynomial::variable(r, 0).scaled(a) + Polynomial::variable(r, 1).scaled(b) +
                 Polynomial::variable(r, 2).scaled(c);
  if (l.is_zero()) throw Error(Errc::DegeneratePencil, "line through coincident points");
  return l.monic();
}

}  // namespace detail

inline bool singular_at(const Polynomial& f, const PlanePoint& p) {
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v)
    if (!detail::partial(f, v).evaluate(p).is_zero()) return false;
  return true;
}

/// Throws DegeneratePencil unless both cubics are independent, singular at
/// the node and vanish at every base point.
inline void validate(const PencilSpec& s) {
  if (s.node.size() != 3) throw Error(Errc::DegeneratePencil, "node must be a plane point");
  if (s.f.is_zero() || s.g.is_zero() || detail::proportional(s.f, s.g))
    throw Error(Errc::DegeneratePencil, "pencil generators are dependent");
  for (const auto* c : {&s.f, &s.g}) {
    if (!singular_at(*c, s.node)) throw Error(Errc::DegeneratePencil, c->to_string() + " is not singular at the node");
    for (const auto& b : s.base_points) {
      if (b.size() != 3) throw Error(Errc::DegeneratePencil, "base point must be a plane point");
      if (!c->evaluate(b).is_zero())
        throw Error(Errc::DegeneratePencil, c->to_string() + " misses base point " + detail::point_string(b));
    }
  }
}

/// Basis of the cubics singular at `node` through `base_points`, obtained
/// as the null space of the linear conditions on the ten coefficients.
inline std::vector<Polynomial> cubics_singular_at(const PlanePoint& node, const std::vector<PlanePoint>& base_points) {
  const Ring& r = plane_ring();
  std::vector<Monomial> monos;
  for (int i = 3; i >= 0; --i)
    for (int j = 3 - i; j >= 0; --j) monos.push_back(Monomial(std::vector<int>{i, j, 3 - i - j}));
  std::vector<std::vector<Rational>> rows;
  auto add_condition = [&](const std::function<Rational(const Polynomial&)>& eval) {
    std::vector<Rational> row;
    for (const auto& m : monos) row.push_back(eval(Polynomial::term(r, Rational(1), m)));
    rows.push_back(std::move(row));
  };
  for (std::size_t v = 0; v < 3; ++v)
    add_condition([&](const Polynomial& m) { return detail::partial(m, v).evaluate(node); });
  for (const auto& b : base_points) add_condition([&](const Polynomial& m) { return m.evaluate(b); });
  RatMatrix a(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) a(i, j) = rows[i][j];
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(a)) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < monos.size(); ++j) terms.push_back({v[j], monos[j]});
    out.push_back(Polynomial::from_terms(r, std::move(terms)));
  }
  return out;
}

struct SplitMember {
  Rational lambda;  // normalized so that the first nonzero of (lambda, mu) is 1
  Rational mu;
  Polynomial line;
};

/// Members lambda*F + mu*G divisible by one of `lines`. The remainder of
/// F and G modulo a line is linear in (lambda, mu), so each line yields a
/// small null space problem. Members are deduplicated by (lambda : mu).
inline std::vector<SplitMember> split_members(const Polynomial& f, const Polynomial& g, const std::vector<Polynomial>& lines) {
  if (detail::proportional(f, g)) throw Error(Errc::DegeneratePencil, "pencil generators are dependent");
  std::vector<SplitMember> out;
  for (const auto& l : lines) {
    auto rf = divide(f, {l}).remainder;
    auto rg = divide(g, {l}).remainder;
    std::vector<Monomial> monos;
    for (const auto* rem : {&rf, &rg})
      for (const auto& t : rem->terms())
        if (std::find(monos.begin(), monos.end(), t.mono) == monos.end()) monos.push_back(t.mono);
    RatMatrix a(monos.size(), 2);
    auto coeff = [](const Polynomial& p, const Monomial& m) {
      for (const auto& t : p.terms())
        if (t.mono == m) return t.coeff;
      return Rational(0);
    };
    for (std::size_t i = 0; i < monos.size(); ++i) {
      a(i, 0) = coeff(rf, monos[i]);
      a(i, 1) = coeff(rg, monos[i]);
    }
    auto ns = nullspace(a);
    if (ns.size() == 2) throw Error(Errc::DegeneratePencil, "every member contains the line " + l.to_string());
    if (ns.empty()) continue;
    Rational lam = ns[0][0], mu = ns[0][1];
    Rational lead = lam.is_zero() ? mu : lam;
    lam /= lead;
    mu /= lead;
    bool seen = std::any_of(out.begin(), out.end(), [&](const SplitMember& m) { return m.lambda == lam && m.mu == mu; });
    if (!seen) out.push_back({lam, mu, l});
  }
  return out;
}

struct PencilCount {
  std::size_t count;
  std::vector<SplitMember> members;
};

/// Reducible members of a nodal cubic pencil: each is the line through the
/// node and one base point together with the conic through the node and the
/// four remaining base points.
inline PencilCount count_reducible_members(const PencilSpec& s) {
  validate(s);
  std::vector<Polynomial> lines;
  for (const auto& b : s.base_points) lines.push_back(detail::line_through(s.node, b));
  auto members = split_members(s.f, s.g, lines);
  return {members.size(), std::move(members)};
}

struct EulerLedger {
  long chi_surface;
  long reducible_fibers;
  friend bool operator==(const EulerLedger&, const EulerLedger&) = default;
};

/// Blowing up k points of P^2 gives chi = 3 + k; a rational fibration over
/// P^1 has chi = 2 * 2 + (number of reducible fibers).
inline EulerLedger euler_ledger(long k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative number of blown-up points");
  long chi = 3 + k;
  return {chi, chi - 4};
}

// ---------------------------------------------------------------------------
// Pencil file format
// ---------------------------------------------------------------------------

/// Parses "key: value" lines (F, G, node, base; '#' comments).
inline PencilSpec parse_pencil_spec(std::string_view text) {
  PencilSpec s;
  bool have_f = false, have_g = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::ParseError, "expected 'key: value' in '" + std::string(line) + "'");
    auto key = detail::trim(line.substr(0, colon));
    auto value = detail::trim(line.substr(colon + 1));
    if (key == "F") {
      s.f = parse_poly(value, plane_ring());
      have_f = true;
    } else if (key == "G") {
      s.g = parse_poly(value, plane_ring());
      have_g = true;
    } else if (key == "node") {
      s.node = detail::parse_point(value);
    } else if (key == "base") {
      s.base_points.push_back(detail::parse_point(value));
    } else if (key == "version") {
      if (value != "1") throw Error(Errc::ParseError, "unsupported pencil spec version " + std::string(value));
    } else if (key != "vars") {
      throw Error(Errc::ParseError, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_f || !have_g || s.node.empty()) throw Error(Errc::ParseError, "pencil spec needs F, G and node");
  return s;
}

inline std::string format_pencil_spec(const PencilSpec& s) {
  std::string out = "version: 1\nvars: X,Y,Z\n";
  out += "F: " + s.f.to_string() + "\n";
  out += "G: " + s.g.to_string() + "\n";
  out += "node: " + detail::point_string(s.node) + "\n";
  for (const auto& b : s.base_points) out += "base: " + detail::point_string(b) + "\n";
  return out;
}

/// Throws DegeneratePencil if three of the points are collinear or all of
/// them lie on one conic.
inline void check_general_position(const std::vector<PlanePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        RatMatrix m{{pts[i][0], pts[i][1], pts[i][2]}, {pts[j][0], pts[j][1], pts[j][2]}, {pts[k][0], pts[k][1], pts[k][2]}};
        if (rank(m) < 3)
          throw Error(Errc::DegeneratePencil, "collinear points " + detail::point_string(pts[i]) + ", " +
                                                  detail::point_string(pts[j]) + ", " + detail::point_string(pts[k]));
      }
  if (pts.size() >= 6) {
    RatMatrix m(pts.size(), 6);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& p = pts[i];
      RatVector row{p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]};
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    if (rank(m) < 6) throw Error(Errc::DegeneratePencil, "points lie on a conic");
  }
}

/// The shipped pencil: node [0, 0, 1], five small base points in general
/// position, generators spanning the cubics singular at the node through them.
inline PencilSpec shipped_pencil() {
  PencilSpec s;
  s.node = {0, 0, 1};
  s.base_points = {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {-2, -1, 1}, {-1, -2, 1}};
  auto all = s.base_points;
  all.push_back(s.node);
  check_general_position(all);
  auto basis = cubics_singular_at(s.node, s.base_points);
  if (basis.size() != 2) throw Error(Errc::DegeneratePencil, "expected a pencil, got dimension " + std::to_string(basis.size()));
  s.f = basis[0];
  s.g = basis[1];
  return s;
}

}  // namespace mcl
