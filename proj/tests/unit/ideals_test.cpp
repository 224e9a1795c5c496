#include <gtest/gtest.h>

#include <cstdlib>

#include "mcl/ideals.hpp"
#include "support/oracles.hpp"

using namespace mcl;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mcl::Error thrown";
  return Errc::InvalidArgument;
}

Polynomial P(std::string_view s, const Ring& r = default_ring()) { return parse_poly(s, r); }
Ideal I(std::string_view s, const Ring& r = default_ring()) { return Ideal::parse(s, r); }

Ideal twisted_cubic() { return I("(X*Z - Y^2, Y*W - Z^2, X*W - Y*Z)"); }

std::string gb_string(const Ideal& J) { return reduced(J).to_string(); }

Ring xyz() {
  static const Ring r = make_ring({"X", "Y", "Z"});
  return r;
}

Ideal random_ideal(oracle::Gen& g, const Ring& r, bool homogeneous, long min_gens = 1) {
  std::vector<Polynomial> gens;
  for (long k = 0, n = g.int_in(min_gens, 3); k < n; ++k)
    gens.push_back(g.nonzero_poly(r, static_cast<int>(g.int_in(1, 3)), static_cast<int>(g.int_in(2, 4)), homogeneous));
  return Ideal(r, std::move(gens));
}

bool is_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (gb.basis[i].leading_coeff() != Rational(1)) return false;
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.basis[i].terms())
        if (gb.basis[j].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

// Sets an environment variable for the lifetime of the object.
struct EnvGuard {
  std::string name;
  EnvGuard(std::string n, const char* v) : name(std::move(n)) { setenv(name.c_str(), v, 1); }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST(Groebner, Examples) {
  EXPECT_EQ(gb_string(I("(X^2, X*Y, Y^2, Y*Z)")), "(Y*Z, Y^2, X*Y, X^2)");
  auto tc = groebner(twisted_cubic());
  EXPECT_EQ(tc.basis.size(), 3u);
  EXPECT_EQ(to_ideal(tc, default_ring()).to_string(), "(Z^2 - Y*W, Y*Z - X*W, Y^2 - X*Z)");
  EXPECT_EQ(gb_string(I("(X + Y, Y)")), "(Y, X)");
  EXPECT_TRUE(groebner(Ideal(default_ring())).basis.empty());
  EXPECT_TRUE(groebner(I("(X - 1, X)")).is_unit());
}

TEST(Groebner, TwistedCubicSPairsByHand) {
  // Hand-expanded S-pairs of the generators, each an explicit combination.
  auto f1 = P("X*Z - Y^2"), f2 = P("Y*W - Z^2"), f3 = P("X*W - Y*Z");
  // W*f1 - Z*f3 = -Y^2*W + Y*Z^2 = -Y*f2
  EXPECT_EQ(P("W") * f1 - P("Z") * f3, -(P("Y") * f2));
  // Y*f3 - X*f2 = X*Z^2 - Y^2*Z = Z*f1
  EXPECT_EQ(P("Y") * f3 - P("X") * f2, P("Z") * f1);
}

TEST(GroebnerProperty, UniqueReducedAndSPairsVanish) {
  oracle::Gen g(51);
  int non_unit = 0, not_already_gb = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto J = random_ideal(g, xyz(), trial % 2 == 0, 2);
    auto gb = groebner(J);
    non_unit += gb.is_unit() ? 0 : 1;
    const auto& gs = J.generators();
    bool closed = true;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        closed = closed && normal_form(s_polynomial(gs[i], gs[j]), gs).is_zero();
    not_already_gb += closed ? 0 : 1;
    ASSERT_TRUE(is_reduced_basis(gb)) << J.to_string();
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
        ASSERT_TRUE(normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb.basis).is_zero()) << J.to_string();
    for (const auto& gen : J.generators()) ASSERT_TRUE(contains(gb, gen));
    auto gens = J.generators();
    std::reverse(gens.begin(), gens.end());
    if (gens.size() > 2) std::swap(gens[0], gens[1]);
    ASSERT_EQ(groebner(Ideal(xyz(), gens)).basis, gb.basis) << J.to_string();
    // Redundant generators do not change the basis either.
    gens.push_back(gens[0] * gens.back() + gens.back());
    ASSERT_EQ(groebner(Ideal(xyz(), gens)).basis, gb.basis) << J.to_string();
  }
  EXPECT_GE(non_unit, 80);
  EXPECT_GE(not_already_gb, 60);
}

TEST(Contains, Examples) {
  auto tc = twisted_cubic();
  EXPECT_TRUE(contains(tc, P("X*W - Y*Z")));
  auto comb = P("Z") * P("X*Z - Y^2") + P("X") * P("Y*W - Z^2") - P("Y") * P("X*W - Y*Z");
  EXPECT_TRUE(contains(tc, comb));
  EXPECT_TRUE(oracle::member_bounded(tc, comb, 3));
  EXPECT_FALSE(contains(I("(X^2)"), P("X")));
  EXPECT_FALSE(contains(tc, P("X*Y")));
  EXPECT_EQ(code_of([] { contains(I("(X)"), parse_poly("X", xyz())); }), Errc::RingMismatch);
}

TEST(ContainsProperty, MatchesCofactorOracle) {
  oracle::Gen g(52);
  int members = 0, non_members = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto J = random_ideal(g, xyz(), true);
    int d = static_cast<int>(g.int_in(3, 4));
    // A member built from homogeneous cofactors, and a random form.
    Polynomial m(xyz());
    for (const auto& gen : J.generators()) {
      int k = d - gen.total_degree();
      if (k >= 0) m += g.poly(xyz(), k, 3, true) * gen;
    }
    auto f = g.nonzero_poly(xyz(), d, 4, true);
    for (const auto& h : {m, f, m + f}) {
      bool ours = contains(J, h);
      bool theirs = oracle::member_bounded(J, h, h.is_zero() ? 0 : h.total_degree());
      ASSERT_EQ(ours, theirs) << J.to_string() << " f=" << h.to_string();
      (ours ? members : non_members)++;
    }
  }
  EXPECT_GT(members, 100);
  EXPECT_GT(non_members, 50);
}

TEST(IdealEqual, Examples) {
  EXPECT_TRUE(ideal_equal(I("(X, Y)"), I("(X + Y, Y)")));
  EXPECT_FALSE(ideal_equal(I("(X, Y)"), I("(X, Y^2)")));
  // Case IV chain, both sides by intersection.
  auto lhs = intersect(I("(X^2, X*Y, Y^2, Y*Z)"), I("(Y, Z)"));
  auto rhs = intersect(intersect(I("(Y, Z)"), I("(Y, X^2)")), power(I("(X, Y, Z)"), 2));
  EXPECT_TRUE(ideal_equal(lhs, rhs));
  // Case II at a = c = 1.
  auto c2 = intersect(I("(X^2, X*Y, Y^2, Z*(Y - X))"), I("(Y, Z)"));
  EXPECT_TRUE(ideal_equal(c2, intersect(I("(Y, Z)"), I("(Y - X, Y^2)"))));
  EXPECT_EQ(code_of([] { ideal_equal(I("(X)"), Ideal::parse("(X)", xyz())); }), Errc::RingMismatch);
}

TEST(Constructions, SumProductPower) {
  EXPECT_EQ(power(I("(X, Y)"), 2).to_string(), "(X^2, X*Y, Y^2)");
  auto tc = twisted_cubic();
  EXPECT_TRUE(ideal_equal(sum(tc, Ideal(default_ring())), tc));
  EXPECT_TRUE(ideal_equal(product(I("(X)"), I("(Y)")), I("(X*Y)")));
  EXPECT_TRUE(ideal_equal(power(tc, 0), Ideal::unit(default_ring())));
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(I("(X)"), I("(Y)")).to_string(), "(X*Y)");
  auto a = intersect(I("(Y, Z)"), I("(Y, X^2)"));
  EXPECT_TRUE(ideal_equal(a, I("(Y, X^2*Z)")));
  auto b = intersect(I("(X^2, X*Y, Y^2, Y*Z)"), I("(Y, Z)"));
  EXPECT_TRUE(ideal_equal(b, I("(X*Y, Y^2, Y*Z, X^2*Z)")));
  // Oracle: graded pieces of the intersection equal the intersections of
  // the graded pieces, via rank counts.
  for (int d = 0; d <= 4; ++d) {
    auto basis = oracle::monomials_of_degree(4, d);
    for (const auto& m : basis) {
      auto mono = Polynomial::term(default_ring(), 1, m);
      bool both = oracle::member_bounded(I("(Y, Z)"), mono, d) && oracle::member_bounded(I("(Y, X^2)"), mono, d);
      ASSERT_EQ(contains(a, mono), both) << mono.to_string();
    }
  }
}

TEST(IntersectProperty, MembershipOfBoth) {
  oracle::Gen g(53);
  for (int trial = 0; trial < 25; ++trial) {
    auto A = random_ideal(g, xyz(), true), B = random_ideal(g, xyz(), true);
    auto C = intersect(A, B);
    for (const auto& c : C.generators()) {
      ASSERT_TRUE(contains(A, c));
      ASSERT_TRUE(contains(B, c));
    }
    // Products land in the intersection; random forms agree with the conjunction.
    for (const auto& a : A.generators())
      for (const auto& b : B.generators()) ASSERT_TRUE(contains(C, a * b));
    for (int k = 0; k < 5; ++k) {
      auto f = g.nonzero_poly(xyz(), static_cast<int>(g.int_in(1, 4)), 3, true);
      ASSERT_EQ(contains(C, f), contains(A, f) && contains(B, f));
    }
  }
}

TEST(Quotient, Examples) {
  EXPECT_TRUE(ideal_equal(quotient(I("(X*Y)"), I("(X)")), I("(Y)")));
  EXPECT_TRUE(ideal_equal(quotient(I("(X^2, X*Y)"), I("(X)")), I("(X, Y)")));
  EXPECT_TRUE(ideal_equal(quotient(I("(X)"), Ideal(default_ring())), Ideal::unit(default_ring())));
  // Case III with a = b = 1, at the point [0, 0, -1, 1].
  auto c3 = intersect(I("(X^2, X*Y, Y^2, X*0 - Y*(Z + W))"), I("(Y, Z)"));
  auto mp = point_ideal(default_ring(), {0, 0, -1, 1});
  auto q = quotient(c3, mp);
  EXPECT_TRUE(ideal_subset(c3, q));
  EXPECT_FALSE(ideal_equal(q, c3));
}

TEST(Saturate, Examples) {
  auto s = saturate(I("(X^2*Y)"), I("(Y)"));
  EXPECT_TRUE(ideal_equal(s.ideal, I("(X^2)")));
  EXPECT_EQ(s.exponent, 1u);
  auto c3 = intersect(I("(X^2, X*Y, Y^2, -Y*(Z + W))"), I("(Y, Z)"));
  auto sat = saturate(c3, point_ideal(default_ring(), {0, 0, -1, 1}));
  EXPECT_FALSE(ideal_equal(sat.ideal, c3));
  EXPECT_TRUE(ideal_subset(c3, sat.ideal));
  // A point on the twisted cubic: [s^3, s^2 u, s u^2, u^3] at s = 2, u = -1.
  auto tc = twisted_cubic();
  EXPECT_TRUE(ideal_equal(saturate(tc, point_ideal(default_ring(), {8, -4, 2, -1})).ideal, tc));
  EXPECT_EQ(saturate(tc, point_ideal(default_ring(), {8, -4, 2, -1})).exponent, 0u);
}

TEST(Saturate, CapExceeded) {
  // (X^k) : (X) grows for k steps before stabilizing at the unit ideal.
  EXPECT_EQ(code_of([] { saturate(I("(X^5)"), I("(X)"), 2); }), Errc::SaturationCapExceeded);
  EXPECT_EQ(saturate(I("(X^5)"), I("(X)"), 5).exponent, 5u);
}

TEST(SaturateProperty, Idempotent) {
  oracle::Gen g(54);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_ideal(g, xyz(), true);
    auto B = random_ideal(g, xyz(), true);
    auto s1 = saturate(A, B).ideal;
    auto s2 = saturate(s1, B);
    ASSERT_TRUE(ideal_equal(s2.ideal, s1)) << A.to_string() << " : " << B.to_string();
    ASSERT_EQ(s2.exponent, 0u);
    ASSERT_TRUE(ideal_subset(A, s1));
  }
}

TEST(Eliminate, Examples) {
  auto tc = twisted_cubic();
  EXPECT_TRUE(ideal_equal(eliminate(tc, {}), tc));
  auto e = eliminate(tc, {"W"});
  EXPECT_EQ(e.to_string(), "(Y^2 - X*Z)");
  // Oracle: the surviving generator lies in the ideal and is W-free.
  for (const auto& gen : e.generators()) {
    EXPECT_TRUE(contains(tc, gen));
    EXPECT_FALSE(gen.involves(3));
  }
  auto r = make_ring({"T", "X", "Y", "Z", "W"});
  auto cross = Ideal::parse("(T*X, (1 - T)*Y)", r);
  auto xy = eliminate(cross, {"T"});
  EXPECT_EQ(xy.to_string(), "(X*Y)");
  EXPECT_EQ(code_of([&] { eliminate(tc, {"V"}); }), Errc::UnknownVariable);
}

TEST(EliminateProperty, DegreeWiseOracle) {
  // eliminate(I, {Z}) in degree d equals the Z-free part of I_d.
  oracle::Gen g(55);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_ideal(g, xyz(), true);
    auto E = eliminate(A, {"Z"});
    for (const auto& e : E.generators()) {
      ASSERT_FALSE(e.involves(2));
      ASSERT_TRUE(contains(A, e));
    }
    for (int k = 0; k < 5; ++k) {
      auto f = g.nonzero_poly(make_ring({"X", "Y"}), static_cast<int>(g.int_in(1, 4)), 3, true).in_ring(xyz());
      ASSERT_EQ(contains(E, f), contains(A, f)) << f.to_string();
    }
  }
}

TEST(Hilbert, FunctionExamples) {
  EXPECT_EQ(hilbert_function(Ideal(default_ring()), 2), 10);
  EXPECT_EQ(hilbert_function(twisted_cubic(), 2), 7);
  EXPECT_EQ(ideal_dimension_in_degree(twisted_cubic(), 2), 3);
  EXPECT_EQ(ideal_dimension_in_degree(I("(X*Y, Y^2, Y*Z, X^2*Z)"), 2), 3);
  EXPECT_EQ(hilbert_function(twisted_cubic(), -1), 0);
  EXPECT_EQ(code_of([] { hilbert_function(I("(X - 1)"), 2); }), Errc::NotHomogeneous);
}

TEST(HilbertProperty, MatchesRankOracle) {
  oracle::Gen g(56);
  for (int trial = 0; trial < 30; ++trial) {
    auto A = random_ideal(g, xyz(), true);
    for (int d = 0; d <= 5; ++d) ASSERT_EQ(hilbert_function(A, d), oracle::quotient_dimension(A, d)) << A.to_string();
  }
  for (int d = 0; d <= 6; ++d) ASSERT_EQ(hilbert_function(twisted_cubic(), d), oracle::quotient_dimension(twisted_cubic(), d));
}

TEST(Hilbert, PolynomialExamples) {
  auto tc = hilbert_polynomial(twisted_cubic());
  EXPECT_EQ(tc.to_string(), "3t + 1");
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(tc.values.at(d), 3 * d + 1);
  EXPECT_EQ(hilbert_polynomial(I("(X, Y)")).to_string(), "t + 1");
  EXPECT_EQ(hilbert_polynomial(I("(W, X*Z - Y^2)")).to_string(), "2t + 1");
  auto case1 = intersect(I("(X^2, X*Y, Y^2, X*Z - Y*(Z + W))"), I("(Y, Z)"));
  EXPECT_EQ(hilbert_polynomial(case1).to_string(), "3t + 1");
  // Points and the empty scheme.
  EXPECT_EQ(hilbert_polynomial(I("(X, Y, Z)")).to_string(), "1");
  EXPECT_EQ(hilbert_polynomial(I("(X, Y, Z, W)")).to_string(), "0");
  EXPECT_EQ(hilbert_polynomial(Ideal(default_ring())).to_string(), "1/6t^3 + t^2 + 11/6t + 1");
}

TEST(Hilbert, StabilizationIndex) {
  auto hd = hilbert_polynomial(I("(X, Y, Z^3)"));
  EXPECT_EQ(hd.to_string(), "3");
  EXPECT_EQ(hd.stabilization, 2);
  for (const auto& [d, v] : hd.values)
    if (d >= hd.stabilization) ASSERT_EQ(hd.evaluate(d), Rational(v));
}

TEST(Hilbert, DegreeCapFromEnvironment) {
  auto late = I("(X, Y, Z^9)");  // constant 9 only from degree 8 on
  EXPECT_EQ(hilbert_polynomial(late).to_string(), "9");
  {
    EnvGuard env("MCL_DEGREE_CAP", "3");
    EXPECT_EQ(default_degree_cap(), 3);
    EXPECT_EQ(code_of([&] { hilbert_polynomial(late); }), Errc::NotEventuallyLinear);
  }
  {
    EnvGuard env("MCL_DEGREE_CAP", "junk");
    EXPECT_EQ(default_degree_cap(), 12);
  }
  EXPECT_EQ(code_of([] { hilbert_polynomial(I("(X + 1)")); }), Errc::NotHomogeneous);
}

TEST(DegreeGenus, Examples) {
  auto dg = [](std::vector<Rational> c) {
    HilbertData hd;
    hd.coefficients = std::move(c);
    return degree_genus(hd);
  };
  EXPECT_EQ(dg({1, 3}), (DegreeGenus{3, 0}));
  EXPECT_EQ(dg({1, 1}), (DegreeGenus{1, 0}));
  EXPECT_EQ(dg({1, 2}), (DegreeGenus{2, 0}));
  EXPECT_EQ(dg({0, 3}), (DegreeGenus{3, 1}));  // plane cubic
  EXPECT_EQ(code_of([&] { dg({1, 0, 1}); }), Errc::NonLinearHP);
  EXPECT_EQ(code_of([&] { dg({3}); }), Errc::NonLinearHP);
  EXPECT_EQ(degree_genus(hilbert_polynomial(twisted_cubic())), (DegreeGenus{3, 0}));
}

TEST(PointComponent, Examples) {
  auto c3 = intersect(I("(X^2, X*Y, Y^2, -Y*(Z + W))"), I("(Y, Z)"));
  EXPECT_TRUE(point_component_at(c3, {0, 0, -1, 1}));
  auto c2 = intersect(I("(X^2, X*Y, Y^2, X*Z - Y*Z)"), I("(Y, Z)"));
  EXPECT_FALSE(point_component_at(c2, {0, 0, 0, 1}));
  EXPECT_FALSE(point_component_at(twisted_cubic(), {1, 1, 1, 1}));
  // Oracle for the twisted cubic point: membership of the point's forms
  // times generators is unchanged, i.e. I : m_p adds nothing in degree 2.
  EXPECT_EQ(hilbert_function(quotient(twisted_cubic(), point_ideal(default_ring(), {1, 1, 1, 1})), 2),
            hilbert_function(twisted_cubic(), 2));
  EXPECT_EQ(code_of([] { point_component_at(I("(X)"), {0, 0, 0, 0}); }), Errc::InvalidPoint);
  EXPECT_EQ(code_of([] { point_component_at(I("(X)"), {1, 0, 0}); }), Errc::InvalidPoint);
}

TEST(PointIdeal, VanishesAtThePoint) {
  oracle::Gen g(57);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> p{g.rational(), g.rational(), g.rational(), g.nonzero_rational()};
    auto mp = point_ideal(default_ring(), p);
    ASSERT_EQ(mp.generators().size(), 3u);
    for (const auto& f : mp.generators()) ASSERT_TRUE(f.evaluate(p).is_zero());
    ASSERT_EQ(hilbert_polynomial(mp).to_string(), "1");
  }
}

TEST(LinearForm, Examples) {
  EXPECT_FALSE(contains_linear_form(power(I("(X, Y)"), 2)));
  EXPECT_TRUE(contains_linear_form(I("(Y, X^2)")));
  auto c2 = intersect(I("(X^2, X*Y, Y^2, X*Z - Y*Z)"), I("(Y, Z)"));
  EXPECT_FALSE(contains_linear_form(c2));
  EXPECT_EQ(code_of([] { contains_linear_form(I("(X - 1)")); }), Errc::NotHomogeneous);
}

TEST(IdealText, ParseForms) {
  EXPECT_EQ(I("X, Y").to_string(), "(X, Y)");
  EXPECT_EQ(I("()").to_string(), "()");
  EXPECT_EQ(I("(X, 0)").to_string(), "(X)");
  auto lines = Ideal::parse_lines("# twisted cubic\nX*Z - Y^2\n\nY*W - Z^2  # second\nX*W - Y*Z\n");
  EXPECT_TRUE(ideal_equal(lines, twisted_cubic()));
  EXPECT_EQ(code_of([] { I("(X, Y"); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([] { I("(X,, Y)"); }), Errc::SyntaxError);
}
