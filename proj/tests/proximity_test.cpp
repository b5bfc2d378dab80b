#include "proxtopo/proximity.hpp"

#include <random>

#include <gtest/gtest.h>

#include "proxtopo/error.hpp"
#include "test_spaces.hpp"

using namespace proxtopo;
using namespace proxtopo::testing;

namespace {

const ProximityKind kStrongKinds[] = {ProximityKind::intersection(), ProximityKind::interior_overlap(),
                                      ProximityKind::mixed()};

}  // namespace

TEST(Near, ClosureLodatoExamples) {
  const auto lodato = ProximityKind::closure_lodato();
  EXPECT_TRUE(near(make_s3(), lodato, Subset{A}, Subset{C}));  // cl{a} = X
  EXPECT_FALSE(near(discrete_space(3), lodato, Subset{A}, Subset{C}));
}

TEST(Near, EmptySetIsNearNothing) {
  const FiniteSpace s3 = make_s3();
  const FiniteSpace line = make_d4_line();
  for (const ProximityKind& k : {ProximityKind::intersection(), ProximityKind::interior_overlap(),
                                 ProximityKind::mixed(), ProximityKind::closure_lodato()}) {
    for_each_subset(3, [&](Subset b) {
      EXPECT_FALSE(near(s3, k, Subset{}, b));
      EXPECT_FALSE(near(s3, k, b, Subset{}));
    });
  }
  for_each_subset(4, [&](Subset b) { EXPECT_FALSE(near(line, ProximityKind::metric_gap(100), Subset{}, b)); });
}

TEST(Near, MetricNeedsCoordinates) {
  try {
    near(discrete_space(2), ProximityKind::metric_gap(), Subset{A}, Subset{B});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingCoordinates);
  }
}

TEST(Near, MetricTolerance) {
  const FiniteSpace line = make_d4_line();  // 0, 1, 5/2, 4
  EXPECT_FALSE(near(line, ProximityKind::metric_gap(0), Subset{A}, Subset{B}));
  EXPECT_TRUE(near(line, ProximityKind::metric_gap(1), Subset{A}, Subset{B}));
  EXPECT_FALSE(near(line, ProximityKind::metric_gap(Rational(3, 2) - Rational(1, 100)), Subset{B}, Subset{C}));
  EXPECT_TRUE(near(line, ProximityKind::metric_gap(Rational(3, 2)), Subset{B}, Subset{C}));
}

TEST(StronglyNear, InteriorOverlapExamples) {
  const FiniteSpace s3 = make_s3();
  const auto ex2 = ProximityKind::interior_overlap();
  EXPECT_FALSE(strongly_near(s3, ex2, Subset{A, B}, Subset{B, C}));
  EXPECT_TRUE(strongly_near(s3, ex2, Subset{A}, Subset{A, B}));
  // {b} is not open, so b ∉ int{b,c} = ∅ even though b ∈ {b,c}
  EXPECT_FALSE(strongly_near(s3, ex2, Subset{B}, Subset{B, C}));
  EXPECT_TRUE(strongly_near(s3, ex2, Subset{B}, Subset{B}));
  EXPECT_FALSE(strongly_near(s3, ex2, Subset{B}, Subset{C}));
}

TEST(StronglyNear, MixedIsSymmetrized) {
  const FiniteSpace s3 = make_s3();
  const auto ex3 = ProximityKind::mixed();
  // {a,c} ∩ int{a,b} = {a}; reverse order must agree
  EXPECT_TRUE(strongly_near(s3, ex3, Subset{A, C}, Subset{A, B}));
  EXPECT_TRUE(strongly_near(s3, ex3, Subset{A, B}, Subset{A, C}));
  EXPECT_FALSE(strongly_near(s3, ex3, Subset{B, C}, Subset{B, C}));
}

TEST(StronglyNear, RejectsClassicalKinds) {
  const FiniteSpace s3 = make_s3();
  for (const auto& k : {ProximityKind::closure_lodato(), ProximityKind::metric_gap()}) {
    try {
      strongly_near(s3, k, Subset{A}, Subset{A});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedKind);
    }
  }
}

TEST(StronglyNear, DiscreteSpacesCollapseToIntersection) {
  for (unsigned n = 1; n <= 4; ++n) {
    const FiniteSpace d = discrete_space(n);
    for (const auto& k : kStrongKinds)
      for_each_subset(n, [&](Subset a) {
        for_each_subset(n, [&](Subset b) { EXPECT_EQ(strongly_near(d, k, a, b), a.intersects(b)); });
      });
  }
}

TEST(Gap, Examples) {
  MetricPoints pts;
  pts.coordinates = {{0, 0}, {3, 4}, {1, 0}, {9, 9}};
  const Gap g = gap(Subset{0}, Subset{1}, pts);
  ASSERT_TRUE(g.exact());
  EXPECT_EQ(*g.exact(), 5);
  EXPECT_TRUE(gap(Subset{}, Subset{1}, pts).infinite);
  EXPECT_TRUE(gap(Subset{0, 2}, Subset{2, 3}, pts).is_zero());
  // sqrt(2) is irrational; the squared value stays exact
  MetricPoints diag;
  diag.coordinates = {{0, 0}, {1, 1}};
  const Gap d = gap(Subset{0}, Subset{1}, diag);
  EXPECT_EQ(d.squared, 2);
  EXPECT_FALSE(d.exact());
}

TEST(StrongInclusion, Examples) {
  const auto lodato = ProximityKind::closure_lodato();
  const FiniteSpace d3 = discrete_space(3);
  EXPECT_TRUE(strong_inclusion(d3, lodato, Subset{A}, Subset{A, B}));
  EXPECT_FALSE(strong_inclusion(d3, lodato, Subset{A, C}, Subset{A, B}));
  EXPECT_FALSE(strong_inclusion(make_s3(), lodato, Subset{A}, Subset{A, B}));
}

TEST(EfBetween, Examples) {
  const auto lodato = ProximityKind::closure_lodato();
  const FiniteSpace d3 = discrete_space(3);
  EXPECT_EQ(ef_between(d3, lodato, Subset{A}, Subset{A, B}), (Subset{A}));
  EXPECT_EQ(ef_between(d3, lodato, Subset{A}, Subset{A}), (Subset{A}));
  try {
    ef_between(make_s3(), lodato, Subset{C}, Subset{B, C});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(ProximityKind, ParseNames) {
  EXPECT_EQ(parse_proximity_kind("ex1"), ProximityKind::intersection());
  EXPECT_EQ(parse_proximity_kind("ex2"), ProximityKind::interior_overlap());
  EXPECT_EQ(parse_proximity_kind("ex3"), ProximityKind::mixed());
  EXPECT_EQ(parse_proximity_kind("lodato"), ProximityKind::closure_lodato());
  EXPECT_EQ(parse_proximity_kind("metric:1/2"), ProximityKind::metric_gap(Rational(1, 2)));
  EXPECT_EQ(parse_proximity_kind("metric:0.5"), ProximityKind::metric_gap(Rational(1, 2)));
  EXPECT_EQ(to_string(ProximityKind::metric_gap(Rational(1, 2))), "metric:1/2");
  for (const char* bad : {"ex4", "metric:", "metric:-1", "Lodato"}) {
    try {
      parse_proximity_kind(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownKind);
    }
  }
}

// Symmetry, N2 containment and monotonicity over every topology on <= 3 points.
TEST(ProximityProperties, SymmetryContainmentMonotonicity) {
  for (unsigned n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const FiniteSpace& sp) {
      for_each_subset(n, [&](Subset a) {
        for_each_subset(n, [&](Subset b) {
          for (const auto& k : kStrongKinds) {
            const bool sn = strongly_near(sp, k, a, b);
            EXPECT_EQ(sn, strongly_near(sp, k, b, a));
            if (sn) EXPECT_TRUE(a.intersects(b));
          }
          const auto lodato = ProximityKind::closure_lodato();
          EXPECT_EQ(near(sp, lodato, a, b), near(sp, lodato, b, a));
          EXPECT_EQ(strong_inclusion(sp, lodato, a, b), !near(sp, lodato, a, b.complement(n)));
          for_each_subset(n, [&](Subset extra) {
            const Subset bigger = a | extra;
            for (const auto& k : {ProximityKind::intersection(), lodato})
              if (near(sp, k, a, b)) EXPECT_TRUE(near(sp, k, bigger, b));
          });
        });
      });
    });
  }
}

// gap = 0 iff the sets share a point, for distinct random coordinates.
TEST(ProximityProperties, GapZeroIffIntersect) {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    MetricPoints pts;
    while (pts.coordinates.size() < 5) {
      Vec2 v{Rational(coord(rng), 4), Rational(coord(rng), 4)};
      if (std::find(pts.coordinates.begin(), pts.coordinates.end(), v) == pts.coordinates.end())
        pts.coordinates.push_back(v);
    }
    const FiniteSpace sp = discrete_space(5).with_metric(pts);
    for_each_subset(5, [&](Subset a) {
      for_each_subset(5, [&](Subset b) {
        EXPECT_EQ(gap(a, b, pts).is_zero(), a.intersects(b));
        EXPECT_EQ(near(sp, ProximityKind::metric_gap(), a, b), near(sp, ProximityKind::metric_gap(), b, a));
      });
    });
  }
}
