#include <gtest/gtest.h>

#include <random>

#include "mqs/geometry.hpp"
#include "oracles.hpp"

using namespace mqs;

TEST(Cross2, BasisVectors) { EXPECT_EQ(cross2({1, 0}, {0, 1}), 1.0); }

TEST(Cross2, ParallelVectorsGiveZero) { EXPECT_EQ(cross2({2, 3}, {4, 6}), 0.0); }

TEST(Cross2, SignedResult) { EXPECT_EQ(cross2({0.5, 1}, {1, 0}), -1.0); }

TEST(NormalizeTriple, CanonicalInputIsIdentity) {
  const auto f = normalize_triple({0, 0}, {0.5, 1}, {1, 0});
  EXPECT_EQ(f.q2, Point2(0.5, 1));
  EXPECT_EQ(f.scale, 1.0);
  EXPECT_EQ(f.rotation.c, 1.0);
  EXPECT_EQ(f.rotation.s, 0.0);
}

TEST(NormalizeTriple, QuarterTurn) {
  // p3 = (0, 1) must be rotated by -90 degrees onto (1, 0).
  const auto f = normalize_triple({0, 0}, {-1, 0.5}, {0, 1});
  EXPECT_NEAR(f.q2.x, 0.5, 1e-15);
  EXPECT_NEAR(f.q2.y, 1.0, 1e-15);
  EXPECT_EQ(f.scale, 1.0);
  const Vector2 r = f.rotation.apply({0, 1});
  EXPECT_NEAR(r.x, 1.0, 1e-15);
  EXPECT_NEAR(r.y, 0.0, 1e-15);
  const Vector2 x = f.rotation.apply({1, 0});
  EXPECT_NEAR(x.x, 0.0, 1e-15);
  EXPECT_NEAR(x.y, -1.0, 1e-15);
}

TEST(NormalizeTriple, CollinearRejected) {
  try {
    normalize_triple({0, 0}, {1, 0}, {2, 0});
    FAIL() << "expected CollinearPoints";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CollinearPoints);
  }
}

TEST(NormalizeTriple, CoincidentEndpointsRejected) {
  try {
    normalize_triple({1, 1}, {2, 5}, {1, 1});
    FAIL() << "expected CoincidentEndpoints";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidentEndpoints);
  }
  EXPECT_THROW(normalize_triple({1e6, 1e6}, {0, 0}, {1e6, 1e6 + 1e-8}), Error);
}

TEST(NormalizeTriple, CollinearThresholdIsScaleInvariant) {
  // Offsets just below/above 1e-9 of the chord, at two scales.
  for (double s : {1e-3, 1.0, 1e4}) {
    EXPECT_THROW(normalize_triple({0, 0}, {0.5 * s, 0.5e-9 * s}, {s, 0}), Error);
    EXPECT_NO_THROW(normalize_triple({0, 0}, {0.5 * s, 2e-9 * s}, {s, 0}));
  }
}

TEST(NormalizeTriple, NonFiniteRejected) {
  EXPECT_THROW(normalize_triple({0, 0}, {NAN, 1}, {1, 0}), Error);
  EXPECT_THROW(normalize_triple({0, 0}, {1, 1}, {INFINITY, 0}), Error);
}

TEST(NormalizeTriple, RoundTripAndFrameInvariants) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto [p1, p2, p3] = oracle::random_triple(rng);
    const auto f = normalize_triple(p1, p2, p3);
    EXPECT_GT(f.scale, 0.0);
    EXPECT_NEAR(f.rotation.determinant(), 1.0, 1e-12);
    EXPECT_GT(std::abs(f.q2.y), 0.0);

    const Point2 q1 = f.to_canonical(p1);
    const Point2 q3 = f.to_canonical(p3);
    EXPECT_NEAR(q1.x, 0.0, 1e-12);
    EXPECT_NEAR(q1.y, 0.0, 1e-12);
    EXPECT_NEAR(q3.x, 1.0, 1e-12);
    EXPECT_NEAR(q3.y, 0.0, 1e-12);

    for (const Point2& p : {p1, p2, p3}) {
      const Point2 back = f.from_canonical(f.to_canonical(p));
      EXPECT_NEAR(back.x, p.x, 1e-12 * f.scale + 1e-12 * std::abs(p.x));
      EXPECT_NEAR(back.y, p.y, 1e-12 * f.scale + 1e-12 * std::abs(p.y));
    }
  }
}

TEST(NormalizeTriple, SimilarityInvariantQ2) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto [p1, p2, p3] = oracle::random_triple(rng);
    const auto S = oracle::random_similarity(rng);
    const auto a = normalize_triple(p1, p2, p3);
    const auto b = normalize_triple(S(p1), S(p2), S(p3));
    EXPECT_NEAR(a.q2.x, b.q2.x, 1e-9);
    EXPECT_NEAR(a.q2.y, b.q2.y, 1e-9);
  }
}
