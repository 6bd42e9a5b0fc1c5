#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "latinv/error.hpp"
#include "latinv/projection.hpp"
#include "support.hpp"

using namespace latinv;
using latinv::testing::Rng;

TEST(QuotientTriangle, Examples) {
  auto p = qt_project(2, 2, 2);
  EXPECT_NEAR(p.x, 0, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 3, 1e-15);
  p = qt_project(0, 1, 1);
  EXPECT_EQ(p.x, 0);
  EXPECT_EQ(p.y, 0);
  p = qt_project(1, 2, 3);
  EXPECT_NEAR(p.x, 1.0 / 12, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 6, 1e-15);
  EXPECT_EQ(p.kind, TriangleKind::qt);
}

TEST(QuotientTriangle, Errors) {
  EXPECT_THROW(qt_project(0, 0, 0), DegenerateError);
  EXPECT_THROW(qt_project(2, 1, 3), UsageError);
  EXPECT_THROW(qt_project(-1, 1, 3), PreconditionError);
}

TEST(FullTriangle, Examples) {
  auto p = ft_project(3, 3, 3);
  EXPECT_NEAR(p.x, 0, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 3, 1e-15);
  p = ft_project(1, 0, 0);
  EXPECT_EQ(p.x, 0);
  EXPECT_EQ(p.y, 1);
  p = ft_project(1, 2, 3);
  EXPECT_NEAR(p.x, 1.0 / 12, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 6, 1e-15);
  EXPECT_THROW(ft_project(0, 0, 0), DegenerateError);
}

TEST(ProjectRootForm, BodyCentredAllOnes) {
  auto p = project_root_form({{1, 1, 1, 1, 1, 1}, false});
  ASSERT_TRUE(p.qt && p.ft);
  EXPECT_NEAR(p.qt->y, 1.0 / 3, 1e-15);
  EXPECT_NEAR(p.ft->y, 1.0 / 3, 1e-15);
  EXPECT_NEAR(p.qt->x, 0, 1e-15);
  EXPECT_NEAR(p.ft->x, 0, 1e-15);
}

TEST(ProjectRootForm, ZeroTopRowIsDegenerate) {
  auto p = project_root_form({{0, 0, 0, 1, 2, 3}, false});
  EXPECT_FALSE(p.qt);
  ASSERT_TRUE(p.ft);
  EXPECT_NEAR(p.ft->x, 1.0 / 12, 1e-15);
  EXPECT_NEAR(p.ft->y, 1.0 / 6, 1e-15);
}

TEST(ProjectRootForm, OrientedTopRowIsSorted) {
  auto p = project_root_form({{1, 3, 2, 1, 1, 1}, true});
  ASSERT_TRUE(p.qt);
  EXPECT_NEAR(p.qt->x, 1.0 / 12, 1e-15);
}

TEST(ProjectRootForm, BoundsAndScaleInvariance) {
  Rng rng(5);
  for (int n = 0; n < 2000; ++n) {
    Coform c;
    for (auto& p : c.p) p = latinv::testing::uniform(rng, 0, 5);
    for (bool oriented : {false, true}) {
      RootForm rf = root_form(c, oriented);
      auto p = project_root_form(rf);
      ASSERT_TRUE(p.qt && p.ft);
      EXPECT_TRUE(within_bounds(*p.qt));
      EXPECT_TRUE(within_bounds(*p.ft));
      double s = latinv::testing::uniform(rng, 0.01, 100);
      RootForm scaled = rf;
      for (auto& r : scaled.r) r *= s;
      auto q = project_root_form(scaled);
      EXPECT_NEAR(q.qt->x, p.qt->x, 1e-12);
      EXPECT_NEAR(q.qt->y, p.qt->y, 1e-12);
      EXPECT_NEAR(q.ft->x, p.ft->x, 1e-12);
      EXPECT_NEAR(q.ft->y, p.ft->y, 1e-12);
    }
  }
}

TEST(Orthorhombic, Examples) {
  auto p = orthorhombic_project(2, 2, 2);
  EXPECT_NEAR(p.x, 0, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 3, 1e-15);
  p = orthorhombic_project(1, 1, 2);
  EXPECT_NEAR(p.x, 1.0 / 8, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 4, 1e-15);
  p = orthorhombic_project(1, 2, 3);
  EXPECT_NEAR(p.x, 1.0 / 12, 1e-15);
  EXPECT_NEAR(p.y, 1.0 / 6, 1e-15);
  EXPECT_THROW(orthorhombic_project(2, 1, 3), UsageError);
  EXPECT_THROW(orthorhombic_project(0, 1, 3), UsageError);
}

TEST(Density, EmptyGrid) {
  DensityGrid g = accumulate_density({}, 200, TriangleKind::qt);
  EXPECT_EQ(g.total(), 0);
  EXPECT_EQ(g.counts.size(), 200u);
  EXPECT_EQ(g.counts[0].size(), 200u);
}

TEST(Density, TopVertexLandsInLastRow) {
  std::vector<TrianglePoint> pts{qt_project(1, 1, 1)};
  DensityGrid g = accumulate_density(pts, 200, TriangleKind::qt);
  EXPECT_EQ(g.at(0, 199), 1);
  EXPECT_EQ(g.total(), 1);
}

TEST(Density, CornersStayInside) {
  std::vector<TrianglePoint> pts{{0.5, 0, TriangleKind::qt}, {0, 0, TriangleKind::qt}};
  DensityGrid g = accumulate_density(pts, 10, TriangleKind::qt);
  EXPECT_EQ(g.at(9, 0), 1);
  EXPECT_EQ(g.at(0, 0), 1);
  std::vector<TrianglePoint> ft{{-0.5, 0, TriangleKind::ft}, {0.5, 0, TriangleKind::ft},
                                {0, 1, TriangleKind::ft}};
  DensityGrid h = accumulate_density(ft, 10, TriangleKind::ft);
  EXPECT_EQ(h.at(0, 0), 1);
  EXPECT_EQ(h.at(9, 0), 1);
  EXPECT_EQ(h.at(5, 9), 1);
}

TEST(Density, ConservationAndOrderIndependence) {
  Rng rng(7);
  std::vector<TrianglePoint> pts;
  for (int n = 0; n < 5000; ++n) {
    double a = latinv::testing::uniform(rng, 0, 1), b = latinv::testing::uniform(rng, 0, 1),
           c = latinv::testing::uniform(rng, 0, 1);
    std::array<double, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    pts.push_back(qt_project(t[0], t[1], t[2]));
  }
  for (int res : {1, 7, 200}) {
    DensityGrid g = accumulate_density(pts, res, TriangleKind::qt);
    EXPECT_EQ(g.total(), 5000);
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(accumulate_density(shuffled, res, TriangleKind::qt).counts, g.counts);
  }
}

TEST(Density, Errors) {
  std::vector<TrianglePoint> mixed{{0, 0, TriangleKind::qt}, {0, 0, TriangleKind::ft}};
  EXPECT_THROW(accumulate_density(mixed, 10, TriangleKind::qt), UsageError);
  EXPECT_THROW(accumulate_density({}, 0, TriangleKind::qt), PreconditionError);
  std::vector<TrianglePoint> outside{{0.9, 0, TriangleKind::qt}};
  EXPECT_THROW(accumulate_density(outside, 10, TriangleKind::qt), PreconditionError);
}

TEST(BinIndex, ClosedLastBin) {
  EXPECT_EQ(bin_index(0, 0, 1, 4), 0);
  EXPECT_EQ(bin_index(0.25, 0, 1, 4), 1);
  EXPECT_EQ(bin_index(1, 0, 1, 4), 3);
  EXPECT_EQ(bin_index(0.999, 0, 1, 4), 3);
}
