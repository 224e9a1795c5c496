#include <gtest/gtest.h>

#include "mcl/exact.hpp"
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

}  // namespace

TEST(Rational, AddsFractions) { EXPECT_EQ(rat_arith(Rational(1, 2), Rational(1, 3), ArithOp::Add), Rational(5, 6)); }

TEST(Rational, MultipliesToInteger) {
  auto r = rat_arith(Rational(5, 3), Rational(3), ArithOp::Mul);
  EXPECT_EQ(r, Rational(5));
  EXPECT_TRUE(r.is_integer());
  EXPECT_EQ(r.to_string(), "5");
}

TEST(Rational, Canonicalizes) {
  Rational r(2, -4);
  EXPECT_EQ(r.to_string(), "-1/2");
  EXPECT_EQ(r.num(), -1);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7).to_string(), "0");
  EXPECT_EQ(Rational(0, -7).den(), 1);
}

TEST(Rational, DivisionByZero) {
  EXPECT_EQ(code_of([] { rat_arith(Rational(1), Rational(0), ArithOp::Div); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(1, 0); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(0).inverse(); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational::parse("3/0"); }), Errc::DivisionByZero);
}

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(Rational::parse(" -6/4 ").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("+7").to_string(), "7");
  EXPECT_EQ(Rational::parse("4/-8").to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/5").to_string(), "24691357802469135780246913578");
  for (const char* bad : {"", "1/", "/2", "1.5", "x", "1//2", "--1"})
    EXPECT_EQ(code_of([&] { Rational::parse(bad); }), Errc::ParseError) << bad;
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(Rational(6, 9) <=> Rational(2, 3), std::strong_ordering::equal);
}

TEST(Rational, BigValuesStayExact) {
  Rational a = 1;
  for (int i = 0; i < 200; ++i) a *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) a /= Rational(3, 2);
  EXPECT_EQ(a, Rational(1));
}

TEST(RationalProperty, MatchesSmallFractionOracle) {
  oracle::Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    long an = g.int_in(-50, 50), ad = g.int_in(1, 40), bn = g.int_in(-50, 50), bd = g.int_in(1, 40);
    Rational a(an, ad), b(bn, bd);
    auto fa = oracle::Frac::make(an, ad), fb = oracle::Frac::make(bn, bd);
    ASSERT_EQ((a + b).to_string(), (fa + fb).to_string());
    ASSERT_EQ((a - b).to_string(), (fa - fb).to_string());
    ASSERT_EQ((a * b).to_string(), (fa * fb).to_string());
    if (bn != 0) ASSERT_EQ((a / b).to_string(), (fa / fb).to_string());
  }
}

TEST(RationalProperty, FieldAxioms) {
  oracle::Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    Rational a = g.rational(99, 50), b = g.rational(99, 50), c = g.rational(99, 50);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Rational(0));
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Rational(1));
    ASSERT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(LinSolve, TestCurveSystem) {
  RatMatrix a{{1, -1}, {1, 2}};
  auto x = lin_solve(a, {2, 1});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0], Rational(5, 3));
  EXPECT_EQ(x[1], Rational(-1, 3));
}

TEST(LinSolve, Identity) {
  RatVector b{Rational(3, 7), Rational(-2), Rational(0)};
  EXPECT_EQ(lin_solve(RatMatrix::identity(3), b), b);
}

TEST(LinSolve, DistinguishesSingularCases) {
  EXPECT_EQ(code_of([] { lin_solve(RatMatrix{{1, 1}, {2, 2}}, {1, 3}); }), Errc::SingularInconsistent);
  EXPECT_EQ(code_of([] { lin_solve(RatMatrix{{1, 1}, {2, 2}}, {1, 2}); }), Errc::SingularUnderdetermined);
  EXPECT_EQ(code_of([] { lin_solve(RatMatrix{{1, 1, 1}, {2, 2, 2}}, {1, 2}); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([] { lin_solve(RatMatrix{{1, 0}, {0, 1}}, {1, 2, 3}); }), Errc::DimensionMismatch);
}

TEST(LinSolveProperty, RoundTrip) {
  oracle::Gen g(13);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto n = static_cast<std::size_t>(g.int_in(1, 6));
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g.rational(9, 4);
    if (rank(a) < n) continue;
    RatVector x0(n);
    for (auto& v : x0) v = g.rational(20, 7);
    ASSERT_EQ(lin_solve(a, a * x0), x0);
    ++solved;
  }
  EXPECT_GT(solved, 200);
}

TEST(Nullspace, SpansKernel) {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(a);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(a * v, (RatVector{0, 0}));
  EXPECT_EQ(rank(a), 1u);
}

TEST(Rref, PivotsAndForm) {
  auto [r, piv] = rref(RatMatrix{{0, 2, 4}, {1, 1, 1}});
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r, (RatMatrix{{1, 0, -1}, {0, 1, 2}}));
}
