#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mqs/fairness.hpp"
#include "mqs/spline.hpp"
#include "oracles.hpp"

using namespace mqs;

namespace {
const std::vector<Point2> kSet1{{0, 0}, {1, 3}, {2, 1}, {3, 2}};
const std::vector<Point2> kSet2{{0, 0}, {0, 3}, {3, 3}, {3, 0}};

void expect_vec(const Vector2& a, const Vector2& b, double tol) {
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
}
}  // namespace

TEST(TangentCatmullRom, ChordSlope) {
  EXPECT_EQ(tangent_catmull_rom({0, 0}, {2, 0}, 0, 2), Vector2(1, 0));
  EXPECT_EQ(tangent_catmull_rom({0, 0}, {3, 3}, 1, 3), Vector2(1.5, 1.5));
}

TEST(TangentCardinal, TensionScaling) {
  EXPECT_EQ(tangent_cardinal({0, 0}, {2, 0}, 0, 2, 0.5), Vector2(0.5, 0));
  EXPECT_EQ(tangent_cardinal({0, 0}, {2, 5}, 0, 2, 1.0), Vector2(0, 0));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 100; ++i) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double t0 = u(rng), t1 = t0 + 1 + std::abs(u(rng));
    EXPECT_EQ(tangent_cardinal(a, b, t0, t1, 0.0), tangent_catmull_rom(a, b, t0, t1));
  }
}

TEST(TangentKochanekBartels, Examples) {
  EXPECT_EQ(tangent_kochanek_bartels({0, 0}, {1, 3}, {2, 1}, 0, 0.5, 0), Vector2(1, 1.75));
  EXPECT_EQ(tangent_kochanek_bartels({0, 0}, {1, 3}, {2, 1}, 1, 0.3, -0.2), Vector2(0, 0));
  const Vector2 plain = tangent_kochanek_bartels({0, 0}, {1, 3}, {2, 1}, 0, 0, 0);
  EXPECT_EQ(plain, tangent_catmull_rom({0, 0}, {2, 1}, 0, 2));
}

TEST(TangentMinEnergy, WorkedExample) {
  expect_vec(tangent_min_energy({0, 0}, {0.5, 1}, {1, 0}, 0, 2), {0.5, 0}, 1e-12);
}

TEST(TangentMinEnergy, SymmetricTripleMatchesCatmullRom) {
  expect_vec(tangent_min_energy({0, 0}, {0, 3}, {3, 3}, 0, 2), tangent_catmull_rom({0, 0}, {3, 3}, 0, 2), 1e-12);
}

TEST(TangentMinEnergy, ConsistentWithQuadratic) {
  const auto sol = build_solution({0, 0}, {1, 3}, {2, 1});
  const Vector2 d = (sol.curve.a1 * (2 * sol.T) + sol.curve.a2) / 2.0;
  expect_vec(tangent_min_energy({0, 0}, {1, 3}, {2, 1}, 0, 2), d, 1e-12);
}

TEST(TangentMinEnergy, CollinearThrows) {
  try {
    tangent_min_energy({0, 0}, {1, 1}, {2, 2}, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CollinearPoints);
  }
}

TEST(HermiteEval, BasisProperties) {
  const Point2 pa{1, 2}, pb{4, -1};
  const Vector2 va{3, 1}, vb{-2, 5};
  EXPECT_EQ(hermite_eval(pa, pb, va, vb, 0.0), pa);
  EXPECT_EQ(hermite_eval(pa, pb, va, vb, 1.0), pb);
  expect_vec(hermite_derivative(pa, pb, va, vb, 0.0, 1), va, 1e-15);
  expect_vec(hermite_derivative(pa, pb, va, vb, 1.0, 1), vb, 1e-15);
  EXPECT_EQ(hermite_eval({0, 0}, {1, 0}, {1, 0}, {1, 0}, 0.5), Point2(0.5, 0));
}

TEST(HermiteEval, DerivativesMatchFiniteDifferences) {
  const Point2 pa{1, 2}, pb{4, -1};
  const Vector2 va{3, 1}, vb{-2, 5};
  for (double t : {0.2, 0.5, 0.8}) {
    for (int k = 1; k <= 3; ++k) {
      const auto f = [&](double s) {
        return k == 1 ? hermite_eval(pa, pb, va, vb, s).x : hermite_derivative(pa, pb, va, vb, s, k - 1).x;
      };
      EXPECT_NEAR(hermite_derivative(pa, pb, va, vb, t, k).x, oracle::central_difference(f, t, 1e-5), 1e-6);
    }
  }
}

TEST(KnotVector, Validation) {
  EXPECT_THROW(KnotVector({0, 1, 1}), Error);
  EXPECT_THROW(KnotVector({0, 2, 1}), Error);
  EXPECT_THROW(KnotVector({0, NAN}), Error);
  EXPECT_EQ(KnotVector::uniform(4).values(), (std::vector<double>{0, 1, 2, 3}));
  const std::vector<Point2> pts{{0, 0}, {3, 4}, {3, 5}};
  EXPECT_EQ(KnotVector::chord_length(pts).values(), (std::vector<double>{0, 5, 6}));
  const std::vector<Point2> repeated{{0, 0}, {0, 0}, {1, 0}};
  EXPECT_THROW(KnotVector::chord_length(repeated), Error);
}

TEST(BuildSpline, SymmetricSetMatchesCatmullRomInterior) {
  const auto me = build_spline(kSet2, MinEnergyQuad{});
  const auto cr = build_spline(kSet2, CatmullRom{});
  expect_vec(me.tangents()[1], cr.tangents()[1], 1e-12);
  expect_vec(me.tangents()[2], cr.tangents()[2], 1e-12);
  expect_vec(me.tangents()[1], {1.5, 1.5}, 1e-12);
}

TEST(BuildSpline, CollinearSetIsStraight) {
  const std::vector<Point2> line{{0, 0}, {1, 2}, {2, 4}, {3, 6}};
  for (const TangentMethod& m : table1_methods()) {
    const auto s = build_spline(line, m);
    for (std::size_t i = 0; i < s.segment_count(); ++i) {
      const auto seg = s.segment(i);
      EXPECT_NEAR(segment_energy(seg, seg.t_start, seg.t_end()), 0.0, 1e-20) << method_name(m);
      EXPECT_NEAR(segment_variation(seg, seg.t_start, seg.t_end()), 0.0, 1e-20) << method_name(m);
    }
  }
}

TEST(BuildSpline, CollinearTripleFallsBackToChord) {
  // Middle triple collinear, outer triples not.
  const std::vector<Point2> pts{{0, 1}, {1, 0}, {2, 0}, {3, 0}, {4, 1}};
  const auto s = build_spline(pts, MinEnergyQuad{});
  EXPECT_EQ(s.tangents()[2], tangent_catmull_rom(pts[1], pts[3], 1, 3));
}

TEST(BuildSpline, PublishedSet1Energy) {
  const auto seg = build_spline(kSet1, MinEnergyQuad{}).segment(1);
  EXPECT_NEAR(segment_energy(seg, 1, 2), 6.83, 0.05 * 6.83);
}

TEST(BuildSpline, EndpointPolicy) {
  const KnotVector knots({0, 1, 3, 4});
  const auto cr = build_spline(kSet1, knots, CatmullRom{});
  EXPECT_EQ(cr.tangents().front(), Vector2(1, 3));
  EXPECT_EQ(cr.tangents().back(), Vector2(1, 1));
  const auto me = build_spline(kSet1, knots, MinEnergyQuad{});
  const auto first = build_solution(kSet1[0], kSet1[1], kSet1[2]);
  const auto last = build_solution(kSet1[1], kSet1[2], kSet1[3]);
  expect_vec(me.tangents().front(), first.curve.a2 / 3.0, 1e-12);
  expect_vec(me.tangents().back(), (last.curve.a1 * 2.0 + last.curve.a2) / 3.0, 1e-12);
}

TEST(BuildSpline, TwoPointsIsALine) {
  const std::vector<Point2> pts{{0, 0}, {2, 1}};
  const auto s = build_spline(pts, MinEnergyQuad{});
  EXPECT_EQ(s.tangents()[0], Vector2(2, 1));
  EXPECT_EQ(s.tangents()[1], Vector2(2, 1));
}

TEST(BuildSpline, Errors) {
  const std::vector<Point2> one{{0, 0}};
  try {
    build_spline(one, CatmullRom{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewPoints);
  }
  EXPECT_THROW(build_spline(kSet1, KnotVector::uniform(3), CatmullRom{}), Error);
  EXPECT_THROW(build_spline(kSet1, Cardinal{NAN}), Error);
}

TEST(SegmentEvaluator, KnotValuesAndDerivatives) {
  const KnotVector knots({0, 0.5, 2, 2.25});
  const auto s = build_spline(kSet1, knots, MinEnergyQuad{});
  for (std::size_t i = 0; i < s.segment_count(); ++i) {
    const auto seg = spline_segment_evaluator(s, i);
    EXPECT_EQ(seg.position(knots[i]), kSet1[i]);
    expect_vec(seg.position(knots[i + 1]) - kSet1[i + 1], {0, 0}, 1e-12);
    expect_vec(seg.first(knots[i]), s.tangents()[i], 1e-12);
    expect_vec(seg.first(knots[i + 1]), s.tangents()[i + 1], 1e-12);
  }
  EXPECT_THROW(spline_segment_evaluator(s, 3), Error);
}

TEST(SegmentEvaluator, CurvatureMatchesPositionSamples) {
  const KnotVector knots({0, 0.5, 2, 2.25});
  const auto s = build_spline(kSet1, knots, MinEnergyQuad{});
  const auto seg = s.segment(1);
  for (double t : {0.7, 1.0, 1.6}) {
    const double fd = oracle::curvature_from_positions([&](double x) { return seg.position(x); }, t, 1e-4);
    EXPECT_NEAR(curvature(seg, t), fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(HermiteSpline, EvaluateClampsAndLocates) {
  const auto s = build_spline(kSet1, CatmullRom{});
  EXPECT_EQ(s.evaluate(-1.0), kSet1.front());
  EXPECT_EQ(s.evaluate(10.0), kSet1.back());
  for (std::size_t i = 0; i < kSet1.size(); ++i) EXPECT_EQ(s.evaluate(static_cast<double>(i)), kSet1[i]);
  const auto mid = s.segment(1).position(1.5);
  EXPECT_EQ(s.evaluate(1.5), mid);
}

TEST(TangentMethod, NamesAndPresets) {
  EXPECT_EQ(method_name(MinEnergyQuad{}), "min-energy");
  EXPECT_EQ(method_params(Cardinal{0.5}), "tau=0.5");
  EXPECT_EQ(method_params(KochanekBartels{0, -0.5, 0}), "tau=0;beta=-0.5;gamma=0");
  EXPECT_EQ(std::get<Cardinal>(figure_cardinal()).tension, 0.5);
  const auto kb = std::get<KochanekBartels>(figure_kochanek_bartels());
  EXPECT_EQ(kb.tension, 0.0);
  EXPECT_EQ(kb.bias, 0.5);
  EXPECT_EQ(kb.continuity, 0.0);
  EXPECT_EQ(table1_methods().size(), 6u);
}
