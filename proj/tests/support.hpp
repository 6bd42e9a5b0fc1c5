// Shared test helpers: seeded generators and reference computations that do
// not go through the library's permutation tables.

#ifndef LATINV_TESTS_SUPPORT_HPP_
#define LATINV_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "latinv/forms.hpp"
#include "latinv/lattice.hpp"
#include "latinv/reduction.hpp"

namespace latinv::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_vec(Rng& rng, double lo, double hi) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

// Entries in [-5, 5]; rejects bases whose volume is tiny next to the
// product of the lengths.
inline Basis random_basis(Rng& rng, double half_width = 5) {
  for (;;) {
    Vec3 a = random_vec(rng, -half_width, half_width);
    Vec3 b = random_vec(rng, -half_width, half_width);
    Vec3 c = random_vec(rng, -half_width, half_width);
    double vol = std::abs(a.dot(b.cross(c)));
    if (vol > 0.05 * a.length() * b.length() * c.length()) return Basis(a, b, c);
  }
}

// Uniform rotation from a random unit quaternion.
inline Mat3 random_rotation(Rng& rng) {
  std::normal_distribution<double> n(0, 1);
  double w = n(rng), x = n(rng), y = n(rng), z = n(rng);
  double s = std::sqrt(w * w + x * x + y * y + z * z);
  w /= s, x /= s, y /= s, z /= s;
  return {{{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
            {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
            {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}}};
}

inline Superbase random_obtuse_superbase(Rng& rng) {
  return reduce_to_obtuse(basis_to_superbase(random_basis(rng))).superbase;
}

inline Superbase superbase_of(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3) {
  return Superbase(v0, v1, v2, v3);
}

// Reference canonical form.  Relabels the four vectors themselves
// (u_i = v_perm[i]), reads the six products straight from dot products in
// the order 23,13,12,01,02,03 and keeps the lexicographic minimum.  In
// oriented mode only labellings with det(u1,u2,u3) > 0 take part; when the
// positive and negative labellings reach the same minimum, or the special
// configurations appear, the form is the overall minimum.
struct ReferenceForm {
  std::array<double, 6> r;
  bool neutral;
};

inline ReferenceForm reference_root_form(const Superbase& sb, bool oriented) {
  static constexpr int kPairs[6][2] = {{2, 3}, {1, 3}, {1, 2}, {0, 1}, {0, 2}, {0, 3}};
  const double big = 1e300;
  std::array<double, 6> best_pos, best_neg, best_all;
  best_pos.fill(big);
  best_neg.fill(big);
  best_all.fill(big);
  double scale = 0;
  for (int i = 0; i < 4; ++i) scale = std::max(scale, sb[i].length_sq());
  const double clamp = 1e-9 * 2 * scale;
  auto less = [](const std::array<double, 6>& a, const std::array<double, 6>& b) {
    for (int t = 0; t < 6; ++t) {
      double eps = 1e-12 * std::max({a[t], b[t], 1e-300});
      if (a[t] < b[t] - eps) return true;
      if (a[t] > b[t] + eps) return false;
    }
    return false;
  };
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    std::array<Vec3, 4> u;
    for (int i = 0; i < 4; ++i) u[i] = sb[perm[i]];
    std::array<double, 6> r;
    for (int t = 0; t < 6; ++t) {
      double p = -u[kPairs[t][0]].dot(u[kPairs[t][1]]);
      r[t] = p <= clamp ? 0.0 : std::sqrt(p);
    }
    bool positive = u[1].dot(u[2].cross(u[3])) > 0;
    auto& side = positive ? best_pos : best_neg;
    if (less(r, side)) side = r;
    if (less(r, best_all)) best_all = r;
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto sq_eq = [&](double a, double b) { return std::abs(a * a - b * b) <= 1e-9 * 2 * scale; };
  auto special = [&](const std::array<double, 6>& s) {
    int zeros = (s[0] * s[0] <= 1e-9 * 2 * scale) + (s[1] * s[1] <= 1e-9 * 2 * scale) +
                (s[2] * s[2] <= 1e-9 * 2 * scale);
    bool rows = sq_eq(s[0], s[3]) && sq_eq(s[1], s[4]) && sq_eq(s[2], s[5]);
    bool cols = (sq_eq(s[0], s[1]) && sq_eq(s[3], s[4])) ||
                (sq_eq(s[0], s[2]) && sq_eq(s[3], s[5])) ||
                (sq_eq(s[1], s[2]) && sq_eq(s[4], s[5]));
    return zeros >= 2 || rows || cols;
  };
  bool same = true;
  for (int t = 0; t < 6; ++t) same = same && sq_eq(best_pos[t], best_neg[t]);
  bool neutral = same || special(best_pos) || special(best_neg);
  if (!oriented || neutral) return {best_all, neutral};
  return {best_pos, false};
}

inline double max_abs_diff(const std::array<double, 6>& a, const std::array<double, 6>& b) {
  double m = 0;
  for (int t = 0; t < 6; ++t) m = std::max(m, std::abs(a[t] - b[t]));
  return m;
}

inline double max_entry(const std::array<double, 6>& a) {
  return *std::max_element(a.begin(), a.end());
}

}  // namespace latinv::testing

#endif  // LATINV_TESTS_SUPPORT_HPP_
