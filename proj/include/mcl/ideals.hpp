#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcl/poly.hpp"

namespace mcl {

/// Finitely generated ideal; zero generators are dropped, so an empty list
/// is the zero ideal.
class Ideal {
 public:
  explicit Ideal(Ring ring) : ring_(std::move(ring)) {}
  Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  Ideal(Ring ring, std::initializer_list<std::string_view> gens) : ring_(std::move(ring)) {
    for (auto g : gens) {
      auto p = parse_poly(g, ring_);
      if (!p.is_zero()) gens_.push_back(std::move(p));
    }
  }

  static Ideal unit(const Ring& r) { return Ideal(r, {Polynomial::constant(r, Rational(1))}); }

  /// "(f1, f2, ...)"; the parentheses are optional.
  static Ideal parse(std::string_view text, const Ring& ring = default_ring());
  /// One polynomial per line; '#' starts a comment.
  static Ideal parse_lines(std::string_view text, const Ring& ring = default_ring());

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

inline Ideal Ideal::parse(std::string_view text, const Ring& ring) {
  auto s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // Strip only when the outer parentheses enclose the whole list.
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : (s[i] == ')' ? -1 : 0);
      if (depth == 0 && i + 1 < s.size()) encloses = false;
    }
    if (encloses) s = s.substr(1, s.size() - 2);
  }
  std::vector<Polynomial> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      auto piece = detail::trim(s.substr(start, i - start));
      if (!piece.empty()) gens.push_back(parse_poly(piece, ring));
      else if (i < s.size()) throw Error(Errc::SyntaxError, "empty generator", i);
      start = i + 1;
    }
  }
  return Ideal(ring, std::move(gens));
}

inline Ideal Ideal::parse_lines(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (!line.empty()) gens.push_back(parse_poly(line, ring));
    start = end + 1;
  }
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Groebner bases
// ---------------------------------------------------------------------------

/// Reduced Groebner basis: monic, sorted by increasing leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> basis;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Full reduction of f modulo G (every term, not only the leading one).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  const Ring& r = f.ring();
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* red = nullptr;
    for (const auto& g : G)
      if (g.leading_monomial().divides(lt.mono)) {
        red = &g;
        break;
      }
    if (red) {
      p -= red->mul_term(lt.coeff / red->leading_coeff(), lt.mono / red->leading_monomial());
    } else {
      rem.push_back(lt);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(r, std::move(rem));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(f.leading_coeff().inverse(), l / f.leading_monomial()) -
         g.mul_term(g.leading_coeff().inverse(), l / g.leading_monomial());
}

namespace detail {

// Drops non-minimal elements, tail-reduces, makes monic and sorts.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G) {
  const Ring r = G.empty() ? Ring{} : G.front().ring();
  std::sort(G.begin(), G.end(), [&r](const Polynomial& a, const Polynomial& b) {
    return r->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&g](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(normal_form(minimal[i], others).monic());
  }
  return out;
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, ties broken by pair indices), the coprime leading monomial
/// criterion and the chain criterion. Returns the reduced basis.
inline GroebnerBasis groebner(const Ideal& I, std::optional<MonomialOrder> order = std::nullopt) {
  Ring r = order ? with_order(I.ring(), *order) : I.ring();
  std::vector<Polynomial> G;
  for (const auto& g : I.generators()) {
    auto p = g.in_ring(r).monic();
    if (std::find(G.begin(), G.end(), p) == G.end()) G.push_back(std::move(p));
  }
  for (const auto& g : G)
    if (g.is_constant()) return {r, {Polynomial::constant(r, Rational(1))}};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lcm_of = [&G](std::size_t i, std::size_t j) {
    return Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial());
  };
  auto is_pending = [&pending](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    int best_deg = lcm_of(best->first, best->second).degree();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      int d = lcm_of(it->first, it->second).degree();
      if (d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const auto& li = G[i].leading_monomial();
    const auto& lj = G[j].leading_monomial();
    if (li.coprime(lj)) continue;
    Monomial l = lcm_of(i, j);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = G[k].leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {r, {Polynomial::constant(r, Rational(1))}};
    G.push_back(h.monic());
    std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }
  return {r, detail::reduce_basis(std::move(G))};
}

inline void require_same_ring(const Ideal& I, const Ideal& J) { require_same_ring(I.ring(), J.ring()); }

inline Ideal to_ideal(const GroebnerBasis& gb, const Ring& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : gb.basis) gens.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(gens));
}

/// The ideal generated by its reduced Groebner basis in the ring's own order.
inline Ideal reduced(const Ideal& I) { return to_ideal(groebner(I), I.ring()); }

inline bool contains(const GroebnerBasis& gb, const Polynomial& f) {
  return normal_form(f.in_ring(gb.ring), gb.basis).is_zero();
}

inline bool contains(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  return contains(groebner(I), f);
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return groebner(I).basis == groebner(J).basis;
}

/// I is contained in J.
inline bool ideal_subset(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  auto gb = groebner(J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&gb](const Polynomial& f) { return contains(gb, f); });
}

// ---------------------------------------------------------------------------
// Ideal operations
// ---------------------------------------------------------------------------

inline Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) {
      auto p = f * g;
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal power(const Ideal& I, unsigned k) {
  Ideal out = Ideal::unit(I.ring());
  for (unsigned i = 0; i < k; ++i) out = product(out, I);
  return out;
}

namespace detail {

inline std::string fresh_name(const PolyRing& r, std::string base) {
  while (r.index_of(base)) base += "_";
  return base;
}

// Ring with `front` prepended as an elimination block.
inline Ring elimination_ring(const Ring& r, const std::vector<std::string>& front) {
  std::vector<std::string> vars = front;
  for (const auto& v : r->vars())
    if (std::find(front.begin(), front.end(), v) == front.end()) vars.push_back(v);
  return make_ring(std::move(vars), MonomialOrder::elimination(front.size()));
}

// Basis elements of `gb` free of the first k variables, moved to `target`.
inline Ideal keep_block_free(const GroebnerBasis& gb, std::size_t k, const Ring& target) {
  std::vector<Polynomial> kept;
  for (const auto& g : gb.basis) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.in_ring(target));
  }
  return reduced(Ideal(target, std::move(kept)));
}

}  // namespace detail

/// I intersected with the subring not containing `vars`, via a block order.
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars) {
  for (const auto& v : vars)
    if (!I.ring()->index_of(v)) throw Error(Errc::UnknownVariable, "no variable '" + v + "' in ring");
  if (vars.empty()) return I;
  Ring er = detail::elimination_ring(I.ring(), vars);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.in_ring(er));
  auto gb = groebner(Ideal(er, std::move(gens)));
  return detail::keep_block_free(gb, vars.size(), I.ring());
}

/// I ∩ J as the t-free part of t*I + (1 - t)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const Ring& r = I.ring();
  std::string t = detail::fresh_name(*r, "_t");
  Ring er = detail::elimination_ring(r, {t});
  Polynomial tv = Polynomial::variable(er, 0);
  Polynomial one_minus_t = Polynomial::constant(er, Rational(1)) - tv;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(tv * f.in_ring(er));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.in_ring(er));
  auto gb = groebner(Ideal(er, std::move(gens)));
  return detail::keep_block_free(gb, 1, r);
}

/// I : (f), computed as (I ∩ (f)) / f.
inline Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) return Ideal::unit(I.ring());
  Ideal both = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : both.generators()) {
    auto d = divide(g, {f});
    if (!d.remainder.is_zero())
      throw Error(Errc::DivisionInconsistency, "generator " + g.to_string() + " of I ∩ (f) not divisible by f");
    gens.push_back(std::move(d.quotients[0]));
  }
  return reduced(Ideal(I.ring(), std::move(gens)));
}

/// I : J = intersection of I : f over the generators f of J.
inline Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::optional<Ideal> acc;
  for (const auto& f : J.generators()) {
    Ideal q = quotient(I, f);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(I.ring());
}

struct Saturation {
  Ideal ideal;
  unsigned exponent;  // least k with I : J^k = I : J^(k+1)
};

/// I : J^infinity by iterated quotients.
inline Saturation saturate(const Ideal& I, const Ideal& J, unsigned cap = 50) {
  Ideal cur = reduced(I);
  unsigned k = 0;
  for (;;) {
    Ideal next = quotient(cur, J);
    if (ideal_equal(next, cur)) return {cur, k};
    if (++k > cap) throw Error(Errc::SaturationCapExceeded, "saturation did not stabilize within " + std::to_string(cap) + " steps");
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Hilbert functions and polynomials
// ---------------------------------------------------------------------------

/// Degree cap for Hilbert polynomial fitting; MCL_DEGREE_CAP overrides 12.
inline int default_degree_cap() {
  if (const char* env = std::getenv("MCL_DEGREE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 12;
}

namespace detail {

inline void require_homogeneous(const Ideal& I) {
  if (!I.is_homogeneous()) throw Error(Errc::NotHomogeneous, "ideal has inhomogeneous generators");
}

// Number of degree-d monomials in n variables outside the monomial ideal
// generated by `lms`, by direct enumeration.
inline long standard_monomial_count(const std::vector<Monomial>& lms, std::size_t n, int d) {
  std::vector<int> e(n, 0);
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m(e);
      bool in = std::any_of(lms.begin(), lms.end(), [&m](const Monomial& l) { return l.divides(m); });
      if (!in) ++count;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) return d == 0 && lms.empty() ? 1 : 0;
  rec(rec, 0, d);
  return count;
}

inline std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb.basis) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace detail

/// dim_Q (R/I)_d for a homogeneous ideal.
inline long hilbert_function(const Ideal& I, int d) {
  detail::require_homogeneous(I);
  if (d < 0) return 0;
  auto gb = groebner(I);
  return detail::standard_monomial_count(detail::leading_monomials(gb), I.ring()->nvars(), d);
}

/// dim_Q I_d = C(d + n - 1, n - 1) - dim (R/I)_d.
inline long ideal_dimension_in_degree(const Ideal& I, int d) {
  return detail::standard_monomial_count({}, I.ring()->nvars(), d) - hilbert_function(I, d);
}

struct HilbertData {
  std::map<int, long> values;           // d -> dim (R/I)_d over the computed window
  std::vector<Rational> coefficients;   // HP(t) = sum c_k t^k, ascending
  int stabilization = 0;                // values(d) = HP(d) for all computed d >= this

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Rational evaluate(const Rational& t) const {
    Rational acc = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * t + coefficients[k];
    return acc;
  }
  std::string to_string() const {
    if (coefficients.empty()) return "0";
    std::string s;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
      const Rational& c = coefficients[k];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      Rational a = c.abs();
      if (k == 0) s += a.to_string();
      else {
        if (!a.is_one()) s += a.to_string();
        s += k == 1 ? "t" : "t^" + std::to_string(k);
      }
    }
    return s.empty() ? "0" : s;
  }
};

namespace detail {

// Coefficients (ascending) of the degree-k polynomial through
// (x0, v[x0]), ..., (x0 + k, v[x0 + k]).
inline std::vector<Rational> interpolate(const std::map<int, long>& v, int x0, int k) {
  RatMatrix a(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1));
  RatVector b(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) {
    Rational x = x0 + i, p = 1;
    for (int j = 0; j <= k; ++j) {
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p;
      p *= x;
    }
    b[static_cast<std::size_t>(i)] = Rational(v.at(x0 + i));
  }
  auto c = lin_solve(a, b);
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

}  // namespace detail

/// Hilbert polynomial by enumeration and interpolation: the first window
/// start d0 <= cap and lowest degree whose interpolant matches every
/// enumerated value from d0 through cap + n + 3 wins.
inline HilbertData hilbert_polynomial(const Ideal& I, int cap = default_degree_cap()) {
  detail::require_homogeneous(I);
  const std::size_t n = I.ring()->nvars();
  const int kmax = n == 0 ? 0 : static_cast<int>(n) - 1;
  const int last = cap + kmax + 4;
  auto lms = detail::leading_monomials(groebner(I));
  HilbertData hd;
  for (int d = 0; d <= last; ++d) hd.values[d] = detail::standard_monomial_count(lms, n, d);

  for (int d0 = 0; d0 <= cap; ++d0) {
    for (int k = 0; k <= kmax; ++k) {
      auto c = detail::interpolate(hd.values, d0, k);
      HilbertData trial;
      trial.coefficients = c;
      bool ok = true;
      for (int d = d0 + k + 1; d <= last && ok; ++d) ok = trial.evaluate(d) == Rational(hd.values.at(d));
      if (!ok) continue;
      hd.coefficients = std::move(c);
      int stab = last + 1;
      while (stab > 0 && hd.evaluate(stab - 1) == Rational(hd.values.at(stab - 1))) --stab;
      hd.stabilization = stab;
      return hd;
    }
  }
  throw Error(Errc::NotEventuallyLinear, "Hilbert function did not stabilize within degree cap " + std::to_string(cap));
}

struct DegreeGenus {
  long degree;
  long genus;
  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

/// For HP(t) = c1 t + c0: degree c1 and arithmetic genus 1 - c0.
inline DegreeGenus degree_genus(const HilbertData& hd) {
  if (hd.coefficients.size() != 2) throw Error(Errc::NonLinearHP, "Hilbert polynomial " + hd.to_string() + " is not linear");
  const auto& c1 = hd.coefficients[1];
  const auto& c0 = hd.coefficients[0];
  if (!c1.is_integer() || !c0.is_integer()) throw Error(Errc::NonLinearHP, "non-integral Hilbert polynomial");
  return {c1.num().get_si(), 1 - c0.num().get_si()};
}

// ---------------------------------------------------------------------------
// Geometric predicates
// ---------------------------------------------------------------------------

/// Ideal of the point p: n-1 independent linear forms vanishing at p, read
/// off the null space of the row vector p.
inline Ideal point_ideal(const Ring& ring, const std::vector<Rational>& p) {
  if (p.size() != ring->nvars()) throw Error(Errc::InvalidPoint, "point has wrong number of coordinates");
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); }))
    throw Error(Errc::InvalidPoint, "the zero vector is not a projective point");
  RatMatrix row(1, p.size());
  for (std::size_t i = 0; i < p.size(); ++i) row(0, i) = p[i];
  std::vector<Polynomial> forms;
  for (const auto& v : nullspace(row)) {
    Polynomial f(ring);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) f += Polynomial::variable(ring, i).scaled(v[i]);
    forms.push_back(std::move(f));
  }
  return Ideal(ring, std::move(forms));
}

/// True iff I has a primary component supported at the point p, i.e. the
/// saturation of I at the point ideal is strictly larger than I.
inline bool point_component_at(const Ideal& I, const std::vector<Rational>& p) {
  detail::require_homogeneous(I);
  auto mp = point_ideal(I.ring(), p);
  return !ideal_equal(saturate(I, mp).ideal, I);
}

/// True iff the ideal contains a nonzero linear form (dim I_1 >= 1).
inline bool contains_linear_form(const Ideal& I) {
  detail::require_homogeneous(I);
  return hilbert_function(I, 1) < static_cast<long>(I.ring()->nvars());
}

}  // namespace mcl
