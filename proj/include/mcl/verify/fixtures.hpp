#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcl/cones.hpp"
#include "mcl/verify/fibers.hpp"
#include "mcl/verify/pencil.hpp"

namespace mcl {

/// Where an expected value comes from: stated verbatim in the source
/// material, produced by an independent oracle, or immediate.
enum class Origin { Stated, Derived, Trivial };

constexpr std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::Stated: return "stated";
    case Origin::Derived: return "derived";
    case Origin::Trivial: return "trivial";
  }
  return "";
}

inline Origin parse_origin(std::string_view s) {
  if (s == "stated") return Origin::Stated;
  if (s == "derived") return Origin::Derived;
  if (s == "trivial") return Origin::Trivial;
  throw Error(Errc::ParseError, "unknown origin '" + std::string(s) + "'");
}

/// Seed handed to each fixture; fixtures that sample derive their own
/// stream from it and their id.
using FixtureSeed = std::uint64_t;

struct Fixture {
  std::string id;
  std::string description;
  std::string source;  // where the value is stated, or which oracle derives it
  Origin origin;
  std::string inputs;
  std::string expected;
  std::function<std::string(FixtureSeed)> compute;
};

inline constexpr FixtureSeed kDefaultSeed = 20240611;

/// Curve families whose pairings are data rather than computations.
namespace families {
inline CurveClass E12() { return {"E12", 0, 3}; }
inline CurveClass E12_fiber() { return {"E12_fiber", 0, 4}; }
inline CurveClass E3() { return {"E3", 0, 8}; }
inline CurveClass R() { return {"R", 1, 5}; }
}  // namespace families

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string alpha_form_string(const DivisorClass& D) {
  auto f = to_alpha(D);
  return "(" + f.scale.to_string() + ", " + f.alpha.to_string() + ")";
}

inline std::string bool_string(bool b) { return b ? "true" : "false"; }

inline std::string ray_pair_string(const RayPair& r) { return r.lo.to_string() + " " + r.hi.to_string(); }

inline std::string curve_string(const CurveClass& c) {
  return "(" + c.deg_h.to_string() + ", " + c.deg_d.to_string() + ")";
}

inline std::string classify_string(const ExtendedAlpha& a) {
  return "kontsevich=" + std::string(to_string(base_locus(a, Space::KontsevichSpace))) +
         " hilbert=" + std::string(to_string(base_locus(a, Space::HilbertComponent))) +
         " model=" + std::string(to_string(log_model(a)));
}

inline std::string walk_summary(const std::vector<WalkStep>& walk) {
  std::string s;
  for (const auto& st : walk) {
    s += std::string(to_string(st.model));
    if (st.next) {
      s += " -" + st.next->map + (st.next->reversed ? "^-1" : "") + " " + std::string(to_string(st.next->kind)) + "(" +
           st.next->locus + ")-> ";
    }
  }
  return s;
}

/// Runs `pred` on `n` sampled parameter sets of `fc`; reports the first
/// failing sample, or "holds on n samples".
inline std::string over_samples(FixtureSeed seed, FiberCase fc, int n,
                                const std::function<bool(const FiberParams&)>& pred) {
  Sampler s(seed);
  for (int i = 0; i < n; ++i) {
    auto p = s.params(fc);
    if (!pred(p)) return "fails at " + p.to_string();
  }
  return "holds on " + std::to_string(n) + " samples";
}

/// Common Hilbert polynomial of `n` sampled curves of case `fc`.
inline std::string sampled_hilbert(FixtureSeed seed, FiberCase fc, int n) {
  Sampler s(seed);
  std::string first;
  for (int i = 0; i < n; ++i) {
    auto p = s.params(fc);
    auto hp = hilbert_polynomial(fiber_ideal(fc, p)).to_string();
    if (i == 0) first = hp;
    else if (hp != first) return "differs at " + p.to_string() + ": " + hp + " vs " + first;
  }
  return first;
}

inline Ideal twisted_cubic() { return Ideal(default_ring(), {"X*Z - Y^2", "Y*W - Z^2", "X*W - Y*Z"}); }

}  // namespace detail

/// Every fixture, in id order.
inline const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> reg = [] {
    using namespace detail;
    namespace dv = divisors;
    std::vector<Fixture> v;
    auto add = [&](std::string id, std::string desc, std::string source, Origin o, std::string inputs,
                   std::string expected, std::function<std::string(FixtureSeed)> f) {
      v.push_back({std::move(id), std::move(desc), std::move(source), o, std::move(inputs), std::move(expected),
                   std::move(f)});
    };

    // Divisor classes from test curves.
    auto fg_data = std::vector<std::pair<CurveClass, Rational>>{{curves::B1(), 2}, {curves::B2(), 1}};
    add("divisor-F-solve", "F from its test-curve pairings", "F.B1 = 2, F.B2 = 1", Origin::Stated, "B1=2, B2=1",
        "5/3*H - 1/3*D", [=](FixtureSeed) { return solve_divisor_class(fg_data).to_string(); });
    add("divisor-F-alpha", "F as a multiple of H + alpha*Delta", "F = 5/3 (H - Delta/5)", Origin::Stated, "F",
        "(5/3, -1/5)", [=](FixtureSeed) { return alpha_form_string(solve_divisor_class(fg_data)); });
    add("divisor-G-solve", "G from its test-curve pairings", "G.B1 = 2, G.B2 = 1", Origin::Stated, "B1=2, B2=1",
        "5/3*H - 1/3*D", [=](FixtureSeed) { return solve_divisor_class(fg_data).to_string(); });
    add("divisor-G-equals-F", "G and F coincide as classes", "same pairings with B1, B2", Origin::Stated, "G, F",
        "true", [=](FixtureSeed) { return bool_string(solve_divisor_class(fg_data) == dv::F()); });
    add("divisor-T-alpha", "T on the alpha line", "T = 2/3 (H + Delta)", Origin::Derived, "T", "(2/3, 1)",
        [](FixtureSeed) { return alpha_form_string(dv::T()); });
    add("divisor-Ddeg-alpha", "Ddeg on the alpha line", "Ddeg = 2/3 (H - Delta/2)", Origin::Derived, "Ddeg",
        "(2/3, -1/2)", [](FixtureSeed) { return alpha_form_string(dv::Ddeg()); });

    // Intersection table.
    struct Row {
      const char* div;
      DivisorClass cls;
      const char* b1;
      const char* b2;
      Origin origin;
    };
    for (const auto& r : {Row{"H", dv::H(), "1", "1", Origin::Stated}, Row{"Delta", dv::Delta(), "-1", "2", Origin::Stated},
                          Row{"F", dv::F(), "2", "1", Origin::Stated}, Row{"G", dv::G(), "2", "1", Origin::Stated},
                          Row{"T", dv::T(), "0", "2", Origin::Stated}}) {
      for (int k = 0; k < 2; ++k) {
        CurveClass c = k == 0 ? curves::B1() : curves::B2();
        std::string id = std::string("table-") + r.div + "-" + c.name;
        Origin o = (std::string(r.div) == "T" && k == 1) ? Origin::Derived : r.origin;
        add(id, std::string(r.div) + "." + c.name, "intersection table of the test curves", o,
            std::string(r.div) + ", " + c.name, k == 0 ? r.b1 : r.b2,
            [cls = r.cls, c](FixtureSeed) { return pair(cls, c).to_string(); });
      }
    }

    // Chamber sweep.
    struct Sweep {
      const char* alpha;
      const char* expected;
    };
    for (const auto& s : {
             Sweep{"-3/5", "kontsevich=NotEffective hilbert=NotEffective model=OutsidePseudoeffective"},
             Sweep{"-1/2", "kontsevich=DegenerateDdeg hilbert=DegenerateDdeg model=UndeterminedWall"},
             Sweep{"-3/10", "kontsevich=DegenerateDdeg hilbert=DegenerateDdeg model=NetsOfQuadricsH2"},
             Sweep{"-1/5", "kontsevich=MultiImageM hilbert=Empty model=NetsOfQuadricsH2"},
             Sweep{"-1/10", "kontsevich=MultiImageM hilbert=Empty model=HilbertComponent"},
             Sweep{"0", "kontsevich=Empty hilbert=Empty model=ChowVariety"},
             Sweep{"1/2", "kontsevich=Empty hilbert=NonreducedN model=Kontsevich"},
             Sweep{"1", "kontsevich=Empty hilbert=NonreducedN model=TwoStableMaps"},
             Sweep{"2", "kontsevich=BoundaryDelta hilbert=BoundaryDelta model=TwoStableMaps"},
             Sweep{"inf", "kontsevich=BoundaryDelta hilbert=BoundaryDelta model=UndeterminedWall"},
         }) {
      std::string a = s.alpha;
      add("chamber-alpha=" + a, "base loci and model of H + alpha*Delta", "base-locus and model tables",
          Origin::Stated, "alpha=" + a, s.expected,
          [a](FixtureSeed) { return classify_string(ExtendedAlpha::parse(a)); });
    }

    // MMP walks.
    add("walk-kontsevich-to-nets", "models crossed from alpha 9/10 down to -3/10", "diagram of models",
        Origin::Stated, "from=9/10, to=-3/10",
        "Kontsevich -f SmallContraction(M)-> ChowVariety -g Flip(M -> N)-> HilbertComponent -h "
        "DivisorialContraction(Ddeg)-> NetsOfQuadricsH2",
        [](FixtureSeed) { return walk_summary(mmp_walk(Rational(9, 10), Rational(-3, 10))); });
    add("walk-within-kontsevich", "no wall between 1/2 and 2/5", "walk inside one chamber", Origin::Trivial,
        "from=1/2, to=2/5", "Kontsevich",
        [](FixtureSeed) { return walk_summary(mmp_walk(Rational(1, 2), Rational(2, 5))); });
    add("walk-two-stable-to-kontsevich", "boundary contraction crossed in reverse", "model for alpha >= 1",
        Origin::Stated, "from=3/2, to=1/2", "TwoStableMaps -theta^-1 DivisorialContraction(Delta)-> Kontsevich",
        [](FixtureSeed) { return walk_summary(mmp_walk(Rational(3, 2), Rational(1, 2))); });

    // Cones.
    add("nef-kontsevich", "nef cone of the Kontsevich space", "generated by H and T", Origin::Stated, "",
        "(1,0) (1,1)", [](FixtureSeed) { return ray_pair_string(nef_cone(Space::KontsevichSpace)); });
    add("nef-hilbert", "nef cone of the Hilbert component", "generated by H and F", Origin::Stated, "",
        "(5,-1) (1,0)", [](FixtureSeed) { return ray_pair_string(nef_cone(Space::HilbertComponent)); });
    add("effective-cone", "effective cone", "generated by Delta and Ddeg", Origin::Stated, "", "(0,1) (2,-1)",
        [](FixtureSeed) { return ray_pair_string(effective_cone()); });
    add("mori-dream-covering", "cone(H,T) and cone(F,H) tile cone(F,T)", "Mori dream space property of the moduli space",
        Origin::Stated, "", "wall=(1,0) no_overlap=true equals_target=true", [](FixtureSeed) {
          auto c = mori_dream_covering();
          return "wall=" + (c.wall ? c.wall->to_string() : std::string("none")) +
                 " no_overlap=" + bool_string(c.no_overlap) + " equals_target=" + bool_string(c.equals_target);
        });

    // Fiber curves.
    const char* roman[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
    for (const char* name : roman) {
      FiberCase fc = parse_fiber_case(name);
      add(std::string("case-") + name + "-hilbert", std::string("Hilbert polynomial of a case ") + name + " curve",
          "twisted-cubic degeneration has Hilbert polynomial 3t + 1", Origin::Derived, "5 sampled specializations",
          "3t + 1", [fc](FixtureSeed s) { return sampled_hilbert(s, fc, 5); });
    }
    add("case-II-identity", "case II curve ideal equals its stated decomposition", "(Y,Z) meet (aY - cX, Y^2)",
        Origin::Stated, "5 sampled specializations, b = 0", "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::II, 5, [](const FiberParams& p) {
            return ideal_equal(fiber_ideal(FiberCase::II, p), stated_decomposition(FiberCase::II, p));
          });
        });
    add("case-II-no-embedded-point", "case II curve has no embedded point at [0,0,0,1]",
        "case II carries no embedded point", Origin::Stated, "5 sampled specializations, b = 0",
        "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::II, 5, [](const FiberParams& p) {
            return !point_component_at(fiber_ideal(FiberCase::II, p), {0, 0, 0, 1});
          });
        });
    add("case-II-no-linear-form", "case II curve lies on no plane", "L1 not on the plane of D", Origin::Stated,
        "5 sampled specializations, b = 0", "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::II, 5,
                              [](const FiberParams& p) { return !contains_linear_form(fiber_ideal(FiberCase::II, p)); });
        });
    add("case-III-identity", "case III curve ideal equals its stated decomposition",
        "(X,Y,aZ+bW)^2 meet (Y,X^2) meet (Y,Z)", Origin::Stated, "5 sampled specializations, c = 0",
        "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::III, 5, [](const FiberParams& p) {
            return ideal_equal(fiber_ideal(FiberCase::III, p), stated_decomposition(FiberCase::III, p));
          });
        });
    add("case-III-embedded-point", "case III curve has an embedded point at [0,0,-b,a]",
        "embedded point of the case III curve", Origin::Stated, "5 sampled specializations", "holds on 5 samples",
        [](FixtureSeed s) {
          return over_samples(s, FiberCase::III, 5, [](const FiberParams& p) {
            return point_component_at(fiber_ideal(FiberCase::III, p), *embedded_point_location(FiberCase::III, p));
          });
        });
    add("case-IV-identity", "case IV curve ideal equals its stated decomposition",
        "(Y,Z) meet (Y,X^2) meet (X,Y,Z)^2", Origin::Stated, "5 sampled specializations, b = c = 0",
        "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::IV, 5, [](const FiberParams& p) {
            return ideal_equal(fiber_ideal(FiberCase::IV, p), stated_decomposition(FiberCase::IV, p));
          });
        });
    add("case-IV-generators", "case IV curve ideal in generator form", "((X,Y)^2, YZ) meet (Y,Z)", Origin::Stated,
        "5 sampled specializations, b = c = 0", "holds on 5 samples", [](FixtureSeed s) {
          const auto& r = default_ring();
          return over_samples(s, FiberCase::IV, 5, [&](const FiberParams& p) {
            auto stated = intersect(Ideal(r, {"X^2", "X*Y", "Y^2", "Y*Z"}), Ideal(r, {"Y", "Z"}));
            return ideal_equal(fiber_ideal(FiberCase::IV, p), stated);
          });
        });
    add("case-IV-embedded-point", "case IV curve has an embedded point at p = [0,0,0,1]",
        "embedded point of the case IV curve", Origin::Stated, "5 sampled specializations", "holds on 5 samples",
        [](FixtureSeed s) {
          return over_samples(s, FiberCase::IV, 5, [](const FiberParams& p) {
            return point_component_at(fiber_ideal(FiberCase::IV, p), {0, 0, 0, 1});
          });
        });
    add("case-VI-embedded-point", "case VI triple line has an embedded point at [0,0,a,-b]",
        "saturation at the point ideal", Origin::Derived, "5 sampled specializations, c = 0", "holds on 5 samples",
        [](FixtureSeed s) {
          return over_samples(s, FiberCase::VI, 5, [](const FiberParams& p) {
            return point_component_at(fiber_ideal(FiberCase::VI, p), *embedded_point_location(FiberCase::VI, p));
          });
        });
    add("case-VI-no-linear-form", "case VI triple line spans P^3", "graded piece of degree 1", Origin::Derived,
        "5 sampled specializations", "holds on 5 samples", [](FixtureSeed s) {
          return over_samples(s, FiberCase::VI, 5,
                              [](const FiberParams& p) { return !contains_linear_form(fiber_ideal(FiberCase::VI, p)); });
        });
    add("case-VII-square", "case VII triple line ideal is (X,Y)^2", "always equal to (X,Y)^2", Origin::Stated,
        "5 sampled specializations, a = b = 0, plus t = 0", "holds on 5 samples", [](FixtureSeed s) {
          const auto& r = default_ring();
          Ideal sq = power(Ideal(r, {"X", "Y"}), 2);
          if (!ideal_equal(fiber_ideal(FiberCase::VII, {0, 0, 0, 1}), sq)) return std::string("fails at t=0 c=1");
          return over_samples(s, FiberCase::VII, 5,
                              [&](const FiberParams& p) { return ideal_equal(fiber_ideal(FiberCase::VII, p), sq); });
        });
    add("triple-line-not-in-Ddeg", "(X,Y)^2 contains no linear form", "triple lines are not degenerate",
        Origin::Stated, "(X,Y)^2", "false", [](FixtureSeed) {
          return bool_string(contains_linear_form(power(Ideal(default_ring(), {"X", "Y"}), 2)));
        });
    add("triple-line-chart-change", "chart t=2 ideal equals chart s=1/2 ideal with c/8",
        "coordinate change between the two triple-line charts", Origin::Stated, "3 sampled (a,b,c)",
        "holds on 3 samples", [](FixtureSeed s) {
          const auto& r = default_ring();
          return over_samples(s, FiberCase::V, 3, [&](const FiberParams& p) {
            return ideal_equal(triple_line_chart1(r, 2, p.a, p.b, p.c),
                               triple_line_chart2(r, Rational(1, 2), p.a, p.b, p.c / Rational(8)));
          });
        });

    // Twisted cubic.
    add("twisted-cubic-gb", "reduced grevlex basis of the twisted cubic", "Buchberger oracle", Origin::Derived,
        "(X*Z - Y^2, Y*W - Z^2, X*W - Y*Z)", "(Z^2 - Y*W, Y*Z - X*W, Y^2 - X*Z)",
        [](FixtureSeed) { return reduced(twisted_cubic()).to_string(); });
    add("twisted-cubic-hilbert", "Hilbert polynomial of the twisted cubic", "degree 3, genus 0", Origin::Stated,
        "(X*Z - Y^2, Y*W - Z^2, X*W - Y*Z)", "3t + 1",
        [](FixtureSeed) { return hilbert_polynomial(twisted_cubic()).to_string(); });
    add("twisted-cubic-quadrics", "quadrics through the twisted cubic", "h0(I_C(2)) = 3", Origin::Stated,
        "(X*Z - Y^2, Y*W - Z^2, X*W - Y*Z)", "3",
        [](FixtureSeed) { return std::to_string(ideal_dimension_in_degree(twisted_cubic(), 2)); });
    add("twisted-cubic-eliminate-W", "projection of the twisted cubic from [0,0,0,1]", "elimination oracle",
        Origin::Derived, "eliminate W", "(Y^2 - X*Z)",
        [](FixtureSeed) { return reduced(eliminate(twisted_cubic(), {"W"})).to_string(); });

    // Families of test curves.
    auto pairings = [](const CurveClass& c) {
      return "H=" + pair(dv::H(), c).to_string() + " Delta=" + pair(dv::Delta(), c).to_string();
    };
    add("family-E12", "pencil family E12 with a fixed conic", "E12.H = 0, E12.Delta = 3", Origin::Stated, "E12",
        "H=0 Delta=3", [=](FixtureSeed) { return pairings(families::E12()); });
    add("family-E12-fiber", "E12 as the fiber pencil, 4 reducible members", "K-degree 4 alpha", Origin::Stated,
        "E12_fiber", "H=0 Delta=4", [=](FixtureSeed) { return pairings(families::E12_fiber()); });
    add("family-E3", "pencil of plane cubics", "E3.Delta = 8", Origin::Stated, "E3", "H=0 Delta=8",
        [=](FixtureSeed) { return pairings(families::E3()); });
    add("family-E3-sign", "E3 is negative on H + alpha*Delta for alpha = -1/10", "8 alpha < 0", Origin::Derived,
        "alpha=-1/10", "-4/5", [](FixtureSeed) {
          return pair(dv::H() + Rational(-1, 10) * dv::Delta(), families::E3()).to_string();
        });
    add("family-R", "pencil of nodal cubics with a fixed node", "R.H = 1, R.Delta = 5", Origin::Stated, "R",
        "H=1 Delta=5", [=](FixtureSeed) { return pairings(families::R()); });
    add("family-R-F", "F is trivial on R", "pair(F, R) = 0", Origin::Derived, "F, R", "0",
        [](FixtureSeed) { return pair(dv::F(), families::R()).to_string(); });
    add("family-Rg-solve", "fiber line from (H.Rg, Ddeg.Rg) = (0, 1)", "linear solve on the two pairings",
        Origin::Derived, "H=0, Ddeg=1", "(0, -3)", [](FixtureSeed) {
          return curve_string(solve_curve_class({{dv::H(), 0}, {dv::Ddeg(), 1}}, "Rg"));
        });
    add("family-Rg-F", "F is positive on the fiber line", "pair(F, Rg) = 1 > 0", Origin::Derived, "F, Rg", "1",
        [](FixtureSeed) {
          return pair(dv::F(), solve_curve_class({{dv::H(), 0}, {dv::Ddeg(), 1}}, "Rg")).to_string();
        });

    // Pencil and Euler characteristic.
    add("pencil-valid", "shipped pencil is nodal at p and passes through the base points",
        "construction-time validation", Origin::Derived, "shipped pencil", "true", [](FixtureSeed) {
          validate(shipped_pencil());
          return std::string("true");
        });
    add("pencil-count", "reducible members of the nodal cubic pencil", "five reducible curves in this pencil",
        Origin::Stated, "shipped pencil", "5",
        [](FixtureSeed) { return std::to_string(count_reducible_members(shipped_pencil()).count); });
    add("euler-ledger", "Euler characteristic of P^2 blown up at 6 points", "chi(S) = chi(P^2) + 6 = 9",
        Origin::Stated, "k=6", "(9, 5)", [](FixtureSeed) {
          auto e = euler_ledger(6);
          return "(" + std::to_string(e.chi_surface) + ", " + std::to_string(e.reducible_fibers) + ")";
        });
    add("pencil-euler-agreement", "pencil count equals the Euler ledger count", "two routes to the same number",
        Origin::Derived, "shipped pencil, k=6", "5 = 5", [](FixtureSeed) {
          return std::to_string(count_reducible_members(shipped_pencil()).count) + " = " +
                 std::to_string(euler_ledger(6).reducible_fibers);
        });

    std::sort(v.begin(), v.end(), [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
    return v;
  }();
  return reg;
}

/// Documented constants shown in reports; not recomputed.
inline const std::vector<std::pair<std::string, std::string>>& documented_constants() {
  static const std::vector<std::pair<std::string, std::string>> c{
      {"dim N", "9"},       {"dim M12", "9"},         {"dim M3", "8"},
      {"dim H", "12"},      {"dim H(2)", "15"},       {"Picard number of H", "2"},
      {"Picard number of H(2)", "1"},
  };
  return c;
}

// ---------------------------------------------------------------------------
// Fixture file
// ---------------------------------------------------------------------------

struct FixtureEntry {
  std::string id;
  std::string description;
  std::string source;
  Origin origin = Origin::Stated;
  std::string inputs;
  std::string expected;
};

struct FixtureFile {
  int version = 1;
  FixtureSeed seed = kDefaultSeed;
  std::vector<FixtureEntry> entries;
};

inline constexpr int kFixtureFormatVersion = 1;

/// Stanzas "[id]" followed by "key: value" lines; header lines "version: N"
/// and "seed: N" precede the first stanza.
inline std::string format_fixture_file(const FixtureFile& f) {
  std::string out = "# mcl fixtures\nversion: " + std::to_string(f.version) + "\nseed: " + std::to_string(f.seed) + "\n";
  for (const auto& e : f.entries) {
    out += "\n[" + e.id + "]\n";
    out += "description: " + e.description + "\n";
    out += "source: " + e.source + "\n";
    out += "origin: " + std::string(to_string(e.origin)) + "\n";
    out += "inputs: " + e.inputs + "\n";
    out += "expected: " + e.expected + "\n";
  }
  return out;
}

inline FixtureFile registry_fixture_file(FixtureSeed seed = kDefaultSeed) {
  FixtureFile f;
  f.seed = seed;
  for (const auto& fx : fixture_registry())
    f.entries.push_back({fx.id, fx.description, fx.source, fx.origin, fx.inputs, fx.expected});
  return f;
}

inline FixtureFile parse_fixture_file(std::string_view text) {
  FixtureFile f;
  bool have_version = false;
  FixtureEntry* cur = nullptr;
  std::size_t start = 0, lineno = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& msg) {
      return Error(Errc::ParseError, "fixture file line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw fail("malformed stanza header");
      f.entries.push_back({});
      cur = &f.entries.back();
      cur->id = std::string(line.substr(1, line.size() - 2));
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw fail("expected 'key: value'");
    auto key = detail::trim(line.substr(0, colon));
    std::string value(detail::trim(line.substr(colon + 1)));
    if (!cur) {
      if (key == "version") {
        f.version = std::stoi(value);
        have_version = true;
      } else if (key == "seed") {
        f.seed = std::stoull(value);
      } else {
        throw fail("unknown header key '" + std::string(key) + "'");
      }
      continue;
    }
    if (key == "description") cur->description = value;
    else if (key == "source") cur->source = value;
    else if (key == "origin") cur->origin = parse_origin(value);
    else if (key == "inputs") cur->inputs = value;
    else if (key == "expected") cur->expected = value;
    else throw fail("unknown key '" + std::string(key) + "'");
  }
  if (!have_version) throw Error(Errc::ParseError, "fixture file has no version line");
  if (f.version != kFixtureFormatVersion)
    throw Error(Errc::ParseError, "unsupported fixture file version " + std::to_string(f.version));
  return f;
}

}  // namespace mcl
