#include <gtest/gtest.h>

#include <regex>

#include "mcl/cones.hpp"
#include "support/oracles.hpp"

using namespace mcl;
namespace dv = mcl::divisors;

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

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

const Space kK = Space::KontsevichSpace;
const Space kH = Space::HilbertComponent;

}  // namespace

TEST(RayOf, Examples) {
  EXPECT_EQ(ray_of(dv::F()), (Ray{5, -1}));
  EXPECT_EQ(ray_of(dv::T()), (Ray{1, 1}));
  EXPECT_EQ(ray_of({0, 7}), (Ray{0, 1}));
  EXPECT_EQ(ray_of({Rational(-4, 6), Rational(2, 9)}), (Ray{-3, 1}));
  EXPECT_EQ(code_of([] { ray_of({0, 0}); }), Errc::ZeroClass);
}

TEST(ConePosition, Examples) {
  Ray h = ray_of(dv::H()), t = ray_of(dv::T());
  EXPECT_EQ(cone_position(dv::H() + Rational(1, 2) * dv::Delta(), h, t), ConePosition::Interior);
  EXPECT_EQ(cone_position(dv::T(), h, t), ConePosition::OnBoundary);
  EXPECT_EQ(cone_position(dv::Ddeg(), h, t), ConePosition::Outside);
  EXPECT_EQ(code_of([&] { cone_position(dv::H(), h, Ray{2, 0}); }), Errc::DegenerateCone);
}

// D is built as s*lo + t*hi with known signs of (s, t); independent rays make
// that representation unique, so the signs alone give the expected position.
TEST(ConePosition, AgreesWithConstructedCombinations) {
  oracle::Gen g(31);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    Ray lo{g.int_in(-6, 6), g.int_in(-6, 6)}, hi{g.int_in(-6, 6), g.int_in(-6, 6)};
    if (lo.p * hi.q - lo.q * hi.p == 0) continue;
    Rational s = g.rational(8, 6), t = g.rational(8, 6);
    DivisorClass D = s * lo.to_divisor() + t * hi.to_divisor();
    if (D.is_zero()) continue;
    ConePosition want = (s.sign() < 0 || t.sign() < 0)  ? ConePosition::Outside
                        : (s.is_zero() || t.is_zero()) ? ConePosition::OnBoundary
                                                        : ConePosition::Interior;
    ASSERT_EQ(cone_position(D, lo, hi), want) << D.to_string() << " in " << lo.to_string() << " " << hi.to_string();
    // Symmetric in the order of the rays and invariant under positive scaling.
    ASSERT_EQ(cone_position(D, hi, lo), want);
    ASSERT_EQ(cone_position(Rational(7, 3) * D, lo, hi), want);
    ++checked;
  }
  EXPECT_GT(checked, 2000);
}

TEST(BaseLocus, Examples) {
  EXPECT_EQ(base_locus(Rational(1, 2), kK), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(Rational(-1, 10), kK), BaseLocusLabel::MultiImageM);
  EXPECT_EQ(base_locus(Rational(-1, 10), kH), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(2, kH), BaseLocusLabel::BoundaryDelta);
}

TEST(BaseLocus, WallConventions) {
  // Kontsevich: both nef walls empty, F in the M chamber, Ddeg in its own chamber.
  EXPECT_EQ(base_locus(1, kK), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(0, kK), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(Rational(-1, 5), kK), BaseLocusLabel::MultiImageM);
  EXPECT_EQ(base_locus(Rational(-1, 2), kK), BaseLocusLabel::DegenerateDdeg);
  EXPECT_EQ(base_locus(ExtendedAlpha::infinity(), kK), BaseLocusLabel::BoundaryDelta);
  // Hilbert: nef cone is [F, H]; T joins N.
  EXPECT_EQ(base_locus(Rational(-1, 5), kH), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(0, kH), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(1, kH), BaseLocusLabel::NonreducedN);
  EXPECT_EQ(base_locus(Rational(-1, 2), kH), BaseLocusLabel::DegenerateDdeg);
  EXPECT_EQ(base_locus(Rational(-51, 100), kH), BaseLocusLabel::NotEffective);
}

TEST(BaseLocus, ClassOverload) {
  EXPECT_EQ(base_locus(dv::F(), kK), BaseLocusLabel::MultiImageM);
  EXPECT_EQ(base_locus(dv::F(), kH), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(dv::Delta(), kH), BaseLocusLabel::BoundaryDelta);
  EXPECT_EQ(base_locus(-dv::H(), kK), BaseLocusLabel::NotEffective);
  EXPECT_EQ(base_locus(DivisorClass{0, 0}, kK), BaseLocusLabel::Empty);
  EXPECT_EQ(base_locus(Rational(3) * dv::T(), kH), BaseLocusLabel::NonreducedN);
}

// Brute-force table reading: the label of alpha is determined by which
// interval between walls it falls in, written out independently here.
TEST(BaseLocus, PartitionIsLocallyConstant) {
  std::vector<Rational> walls_at{Rational(-1, 2), Rational(-1, 5), 0, 1};
  oracle::Gen g(32);
  for (Space s : {kK, kH}) {
    for (int i = 0; i < 2000; ++i) {
      Rational a = Rational(g.int_in(-700, 3000), 1000);
      if (std::find(walls_at.begin(), walls_at.end(), a) != walls_at.end()) continue;
      std::size_t slot = 0;
      while (slot < walls_at.size() && walls_at[slot] < a) ++slot;
      // Nudge to a different point of the same open interval.
      Rational lo = slot == 0 ? a - 1 : walls_at[slot - 1];
      Rational hi = slot == walls_at.size() ? a + 1 : walls_at[slot];
      Rational b = (a + (g.coin() ? lo : hi)) / 2;
      if (b == lo || b == hi) continue;
      ASSERT_EQ(base_locus(a, s), base_locus(b, s)) << a << " vs " << b;
      ASSERT_EQ(log_model(a), log_model(b)) << a << " vs " << b;
    }
  }
}

TEST(LogModel, Examples) {
  EXPECT_EQ(log_model(0), ModelLabel::ChowVariety);
  EXPECT_EQ(log_model(Rational(-1, 4)), ModelLabel::NetsOfQuadricsH2);
  EXPECT_EQ(log_model(3), ModelLabel::TwoStableMaps);
  EXPECT_EQ(log_model(Rational(1, 2)), ModelLabel::Kontsevich);
  EXPECT_EQ(log_model(Rational(-1, 10)), ModelLabel::HilbertComponent);
  EXPECT_EQ(log_model(Rational(-1, 5)), ModelLabel::NetsOfQuadricsH2);
  EXPECT_EQ(log_model(1), ModelLabel::TwoStableMaps);
  EXPECT_EQ(log_model(Rational(-1, 2)), ModelLabel::UndeterminedWall);
  EXPECT_EQ(log_model(ExtendedAlpha::infinity()), ModelLabel::UndeterminedWall);
  EXPECT_EQ(log_model(Rational(-3, 5)), ModelLabel::OutsidePseudoeffective);
}

TEST(LogModel, IntervalsMatchModels) {
  EXPECT_EQ(model_interval(ModelLabel::Kontsevich)->to_string(), "(0, 1)");
  EXPECT_EQ(model_interval(ModelLabel::ChowVariety)->to_string(), "{0}");
  EXPECT_EQ(model_interval(ModelLabel::HilbertComponent)->to_string(), "(-1/5, 0)");
  EXPECT_EQ(model_interval(ModelLabel::NetsOfQuadricsH2)->to_string(), "(-1/2, -1/5]");
  EXPECT_EQ(model_interval(ModelLabel::TwoStableMaps)->to_string(), "[1, inf)");
  EXPECT_FALSE(model_interval(ModelLabel::UndeterminedWall).has_value());
}

TEST(MmpWalk, KontsevichToNets) {
  auto w = mmp_walk(Rational(9, 10), Rational(-3, 10));
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0].model, ModelLabel::Kontsevich);
  EXPECT_EQ(w[0].next->kind, TransitionKind::SmallContraction);
  EXPECT_EQ(w[0].next->locus, "M");
  EXPECT_EQ(w[0].next->map, "f");
  EXPECT_EQ(w[1].model, ModelLabel::ChowVariety);
  EXPECT_EQ(w[1].next->kind, TransitionKind::Flip);
  EXPECT_EQ(w[1].next->map, "g");
  EXPECT_EQ(w[2].model, ModelLabel::HilbertComponent);
  EXPECT_EQ(w[2].next->kind, TransitionKind::DivisorialContraction);
  EXPECT_EQ(w[2].next->locus, "Ddeg");
  EXPECT_EQ(w[2].next->wall, Rational(-1, 5));
  EXPECT_EQ(w[3].model, ModelLabel::NetsOfQuadricsH2);
  EXPECT_FALSE(w[3].next.has_value());
}

TEST(MmpWalk, SingleSegment) {
  auto w = mmp_walk(Rational(1, 2), Rational(2, 5));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].model, ModelLabel::Kontsevich);
  EXPECT_FALSE(w[0].next.has_value());
}

TEST(MmpWalk, ReverseBoundaryContraction) {
  auto w = mmp_walk(Rational(3, 2), Rational(1, 2));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].model, ModelLabel::TwoStableMaps);
  EXPECT_EQ(w[0].next->kind, TransitionKind::DivisorialContraction);
  EXPECT_EQ(w[0].next->locus, "Delta");
  EXPECT_TRUE(w[0].next->reversed);
  EXPECT_EQ(w[1].model, ModelLabel::Kontsevich);
}

TEST(MmpWalk, Errors) {
  EXPECT_EQ(code_of([] { mmp_walk(Rational(1, 2), Rational(-1, 2)); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { mmp_walk(Rational(1, 10), Rational(1, 2)); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { mmp_walk(Rational(1, 2), Rational(1, 2)); }), Errc::OutOfRange);
}

// walk(a, c) is walk(a, b) followed by walk(b, c), with the segment holding b
// appearing once.
TEST(MmpWalk, Concatenates) {
  std::vector<Rational> walls_at{Rational(-1, 5), 0, 1};
  oracle::Gen g(33);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<Rational> v{Rational(g.int_in(-499, 3000), 1000), Rational(g.int_in(-499, 3000), 1000),
                            Rational(g.int_in(-499, 3000), 1000)};
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v[0] == v[1] || v[1] == v[2]) continue;
    if (std::find(walls_at.begin(), walls_at.end(), v[1]) != walls_at.end()) continue;
    auto ac = mmp_walk(v[0], v[2]);
    auto ab = mmp_walk(v[0], v[1]);
    auto bc = mmp_walk(v[1], v[2]);
    ASSERT_EQ(ab.back().model, bc.front().model);
    ab.back().next = bc.front().next;
    ab.insert(ab.end(), bc.begin() + 1, bc.end());
    ASSERT_EQ(ab, ac);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(MmpWalk, Renderings) {
  auto w = mmp_walk(Rational(9, 10), Rational(-3, 10));
  auto text = walk_to_string(w);
  EXPECT_NE(text.find("SmallContraction(M) [f] at alpha=0"), std::string::npos) << text;
  EXPECT_NE(text.find("Flip(M -> N) [g] at alpha=0"), std::string::npos) << text;
  auto j = walk_to_json(w);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[2]["transition"]["map"], "h");
  EXPECT_EQ(j[3]["interval"], "(-1/2, -1/5]");
}

TEST(Cones, NefAndEffective) {
  EXPECT_EQ(nef_cone(kK), (RayPair{{1, 0}, {1, 1}}));
  EXPECT_EQ(nef_cone(kH), (RayPair{{5, -1}, {1, 0}}));
  EXPECT_EQ(effective_cone(), (RayPair{{0, 1}, {2, -1}}));
}

TEST(Cones, MoriDreamCovering) {
  auto c = mori_dream_covering();
  EXPECT_TRUE(c.shared_wall);
  EXPECT_TRUE(c.no_overlap);
  EXPECT_TRUE(c.equals_target);
  EXPECT_EQ(c.wall, (Ray{1, 0}));
  EXPECT_TRUE(c.ok());
}

TEST(Cones, CoveringRejectsGapsAndOverlaps) {
  Ray h{1, 0}, t{1, 1}, f{5, -1}, d{0, 1};
  // Gap: cones share no ray.
  EXPECT_FALSE(check_cone_covering({h, t}, {f, Ray{2, -1}}, {f, t}).ok());
  // Overlap: cone(F, T) against cone(H, T).
  EXPECT_FALSE(check_cone_covering({f, t}, {h, t}, {f, t}).ok());
  // Tiles a different cone.
  EXPECT_FALSE(check_cone_covering({h, t}, {f, h}, {f, d}).ok());
  // Independent of ray order inside each pair.
  EXPECT_TRUE(check_cone_covering({t, h}, {h, f}, {t, f}).ok());
}

// Every interior sample of cone(F, T) lies in exactly one of the two nef
// cones or on the shared ray.
TEST(Cones, CoveringBySampling) {
  Ray h{1, 0}, t{1, 1}, f{5, -1};
  oracle::Gen g(34);
  for (int i = 0; i < 1000; ++i) {
    Rational s = Rational(g.int_in(1, 50), g.int_in(1, 9)), u = Rational(g.int_in(1, 50), g.int_in(1, 9));
    DivisorClass D = s * f.to_divisor() + u * t.to_divisor();
    auto a = cone_position(D, h, t), b = cone_position(D, f, h);
    bool in_a = a != ConePosition::Outside, in_b = b != ConePosition::Outside;
    ASSERT_TRUE(in_a || in_b);
    if (in_a && in_b) ASSERT_EQ(ray_of(D), h);
  }
}

TEST(Chambers, Tables) {
  auto k = chambers(kK);
  ASSERT_EQ(k.size(), 4u);
  EXPECT_EQ(k[0].upper, "Delta");
  EXPECT_EQ(k[0].base_locus, BaseLocusLabel::BoundaryDelta);
  EXPECT_EQ(k[1].base_locus, BaseLocusLabel::Empty);
  EXPECT_EQ(k[2].base_locus, BaseLocusLabel::MultiImageM);
  EXPECT_EQ(k[3].base_locus, BaseLocusLabel::DegenerateDdeg);
  auto h = chambers(kH);
  EXPECT_EQ(h[1].base_locus, BaseLocusLabel::NonreducedN);
  EXPECT_EQ(h[2].base_locus, BaseLocusLabel::Empty);
}

TEST(Diagram, JsonWallOrder) {
  auto j = nlohmann::json::parse(render_diagram(kK, "json"));
  EXPECT_EQ(j["walls"], nlohmann::json({"Delta", "T", "H", "F", "Ddeg"}));
  EXPECT_EQ(j["chambers"].size(), 4u);
}

TEST(Diagram, SvgStructure) {
  for (Space s : {kK, kH}) {
    auto svg = render_diagram(s, "svg");
    EXPECT_EQ(count_of(svg, "<line class=\"ray\""), 5u);
    EXPECT_EQ(count_of(svg, "<polygon class=\"chamber\""), 4u);
    EXPECT_NE(svg.find("width=\"600\" height=\"600\""), std::string::npos);
  }
}

TEST(Diagram, TextLabelsHilbertNChamber) {
  auto text = render_diagram(kH, "text");
  EXPECT_TRUE(std::regex_search(text, std::regex("T-H +alpha \\(0, 1\\) +B=N ")));
  EXPECT_EQ(code_of([] { render_diagram(kK, "png"); }), Errc::UnknownFormat);
}

TEST(Diagram, Deterministic) {
  for (const char* fmt : {"text", "json", "svg"}) EXPECT_EQ(render_diagram(kH, fmt), render_diagram(kH, fmt));
}

TEST(ParseSpace, Names) {
  EXPECT_EQ(parse_space("kontsevich"), kK);
  EXPECT_EQ(parse_space("hilbert"), kH);
  EXPECT_EQ(code_of([] { parse_space("chow"); }), Errc::InvalidArgument);
}
