#include <gtest/gtest.h>

#include <cmath>

#include "latinv/error.hpp"
#include "latinv/forms.hpp"
#include "latinv/reconstruct.hpp"
#include "support.hpp"

using namespace latinv;
using latinv::testing::Rng;

namespace {

void expect_conorms_match(const Superbase& sb, const RootForm& rf, double tol) {
  Coform c = conorms_of(sb);
  for (int t = 0; t < 6; ++t) EXPECT_NEAR(c.p[t], rf.r[t] * rf.r[t], tol) << "slot " << t;
}

}  // namespace

TEST(Reconstruct, Orthorhombic) {
  RootForm rf{{0, 0, 0, 1, 2, 3}, false};
  Superbase sb = reconstruct_superbase(rf);
  expect_conorms_match(sb, rf, 1e-12);
  EXPECT_NEAR(sb[1].length(), 1, 1e-12);
  EXPECT_NEAR(sb[2].length(), 2, 1e-12);
  EXPECT_NEAR(sb[3].length(), 3, 1e-12);
  EXPECT_NEAR(sb[0].length(), std::sqrt(14.0), 1e-12);
  Superbase reference = basis_to_superbase(Basis({1, 0, 0}, {0, 2, 0}, {0, 0, 3}));
  EXPECT_LE(superbase_distance(reference, sb), 1e-9);
}

TEST(Reconstruct, FrameConvention) {
  RootForm rf{{1, std::sqrt(2.0), std::sqrt(3.0), 2, std::sqrt(5.0), std::sqrt(6.0)}, true};
  Superbase sb = reconstruct_superbase(rf);
  EXPECT_GT(sb[0].x, 0);
  EXPECT_EQ(sb[0].y, 0);
  EXPECT_EQ(sb[0].z, 0);
  EXPECT_GE(sb[1].y, 0);
  EXPECT_EQ(sb[1].z, 0);
  EXPECT_EQ(sb.orientation(), 1);
  EXPECT_EQ(sb[0] + sb[1] + sb[2] + sb[3], (Vec3{0, 0, 0}));
}

TEST(Reconstruct, RoundTripRandomForms) {
  Rng rng(3);
  for (int n = 0; n < 1000; ++n) {
    Superbase source = latinv::testing::random_obtuse_superbase(rng);
    for (bool oriented : {false, true}) {
      RootForm rf = root_form(source, oriented);
      Superbase sb = reconstruct_superbase(rf);
      RootForm back = root_form(conorms_of(sb), oriented, sb.orientation());
      EXPECT_LE(latinv::testing::max_abs_diff(back.r, rf.r), 1e-8 * rf.max());
      double vmax = voform_of(sb).max();
      EXPECT_GE(conorms_of(sb).min(), -1e-9 * vmax);
      // same lattice up to isometry as the source
      EXPECT_LE(superbase_distance(reconstruct_superbase(root_form(source)),
                                   reconstruct_superbase(root_form(sb))),
                1e-8 * source.max_length());
    }
  }
}

TEST(Reconstruct, OrientedFlagGivesMirror) {
  RootForm plus{{1, std::sqrt(2.0), std::sqrt(3.0), 2, std::sqrt(5.0), std::sqrt(6.0)}, true};
  RootForm plain = plus;
  plain.oriented = false;
  Superbase a = reconstruct_superbase(plus), b = reconstruct_superbase(plain);
  EXPECT_EQ(a.orientation(), -b.orientation());
  EXPECT_LE(superbase_distance(a, b), 1e-12);
  EXPECT_GT(superbase_distance(a, b, true), 1e-3);
  RootForm pa = root_form(a, true), pb = root_form(b, true);
  EXPECT_GT(latinv::testing::max_abs_diff(pa.r, pb.r), 1e-3);
  EXPECT_NE(lattice_sign(pa), lattice_sign(pb));
}

TEST(Reconstruct, Deterministic) {
  RootForm rf{{0.5, 1, 1.5, 2, 2.5, 3}, false};
  Superbase a = reconstruct_superbase(rf), b = reconstruct_superbase(rf);
  EXPECT_EQ(a.vectors(), b.vectors());
}

TEST(Reconstruct, RejectsZeroLength) {
  EXPECT_THROW(reconstruct_superbase(RootForm{{0, 0, 0, 1, 2, 0}, false}), DegenerateError);
  EXPECT_THROW(reconstruct_superbase(RootForm{{0, 0, 0, 0, 0, 0}, false}), DegenerateError);
}

TEST(Reconstruct, RejectsNonRealizable) {
  // all conorms of the top row zero with a single bottom entry is collinear
  EXPECT_THROW(reconstruct_superbase(RootForm{{0, 0, 1, 1, 0, 0}, false}), InputError);
  EXPECT_THROW(reconstruct_superbase(RootForm{{0, 0, 0, -1, 2, 3}, false}), NonRealizableError);
  EXPECT_THROW(reconstruct_superbase(RootForm{{0, 0, 0, NAN, 2, 3}, false}), NonRealizableError);
}
