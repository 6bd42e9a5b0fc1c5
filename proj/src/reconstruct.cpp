#include "latinv/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latinv/error.hpp"

namespace latinv {

namespace {

double clamped_cosine(double c, const char* what) {
  if (!std::isfinite(c) || c < -1 - kReconstructTol || c > 1 + kReconstructTol)
    throw NonRealizableError(std::string("cosine of angle ") + what + " = " +
                             std::to_string(c) + " lies outside [-1, 1]");
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

Superbase reconstruct_superbase(const RootForm& rf) {
  for (double r : rf.r)
    if (!std::isfinite(r) || r < 0)
      throw NonRealizableError("root products must be finite and non-negative");
  Coform cf = rf.squared();
  Voform vf = coform_to_voform(cf);
  double scale = vf.max();
  for (int i = 0; i < 4; ++i)
    if (!(vf.vertex(i) > kReconstructTol * scale) || !(scale > 0))
      throw DegenerateError("superbase vector v" + std::to_string(i) + " has zero length");

  const double l0 = std::sqrt(vf.vertex(0));
  const double l1 = std::sqrt(vf.vertex(1));
  const double l2 = std::sqrt(vf.vertex(2));

  double c01 = clamped_cosine(-cf(0, 1) / (l0 * l1), "v0,v1");
  double c02 = clamped_cosine(-cf(0, 2) / (l0 * l2), "v0,v2");
  // the angle v1,v2 only needs to lie in range; its cosine enters via y2
  clamped_cosine(-cf(1, 2) / (l1 * l2), "v1,v2");

  Vec3 v0{l0, 0, 0};
  double s01 = std::sqrt(std::max(0.0, 1 - c01 * c01));
  if (!(s01 > kReconstructTol))
    throw DegenerateError("v0 and v1 are collinear; the form spans no lattice");
  Vec3 v1{l1 * c01, l1 * s01, 0};

  double x2 = l2 * c02;
  double y2 = (-cf(1, 2) - v1.x * x2) / v1.y;
  double z2sq = vf.vertex(2) - x2 * x2 - y2 * y2;
  if (z2sq < -kReconstructTol * scale)
    throw NonRealizableError("angles between v0, v1, v2 do not close up in 3D");
  double z2 = std::sqrt(std::max(0.0, z2sq));
  // det(v1,v2,v3) = -det(v0,v1,v2) = -l0 * v1.y * z2
  if (rf.oriented) z2 = -z2;
  Vec3 v2{x2, y2, z2};
  Vec3 v3 = -(v0 + v1 + v2);
  return Superbase(v0, v1, v2, v3);
}

}  // namespace latinv
