#include "latinv/lattice.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "latinv/error.hpp"

namespace latinv {

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
  return r;
}

Mat3 Mat3::transposed() const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = m[j][i];
  return r;
}

double Mat3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::int64_t determinant(const IntMat3& u) {
  return u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) -
         u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0]) +
         u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0]);
}

Basis::Basis(const Vec3& a, const Vec3& b, const Vec3& c) : v1(a), v2(b), v3(c) {
  if (!a.is_finite() || !b.is_finite() || !c.is_finite())
    throw DegenerateError("basis has non-finite coordinates");
  double scale = std::max({a.length(), b.length(), c.length()});
  if (scale == 0 || std::abs(volume()) <= 1e-12 * scale * scale * scale)
    throw DegenerateError("basis vectors are linearly dependent");
}

Basis Basis::transformed(const IntMat3& u) const {
  std::array<Vec3, 3> w;
  for (int r = 0; r < 3; ++r)
    w[r] = double(u[r][0]) * v1 + double(u[r][1]) * v2 + double(u[r][2]) * v3;
  return Basis(w[0], w[1], w[2]);
}

UnitCell UnitCell::from_degrees(double a, double b, double c,
                                double alpha, double beta, double gamma) {
  constexpr double deg = std::numbers::pi / 180.0;
  return {a, b, c, alpha * deg, beta * deg, gamma * deg};
}

double UnitCell::normalized_gram_determinant() const {
  double ca = std::cos(alpha), cb = std::cos(beta), cg = std::cos(gamma);
  return 1 - ca * ca - cb * cb - cg * cg + 2 * ca * cb * cg;
}

void UnitCell::validate() const {
  for (double len : {a, b, c})
    if (!(len > 0) || !std::isfinite(len))
      throw InvalidCellError("cell lengths must be positive and finite");
  for (double ang : {alpha, beta, gamma})
    if (!(ang > 0 && ang < std::numbers::pi))
      throw InvalidCellError("cell angles must lie strictly between 0 and 180 degrees");
  if (!(normalized_gram_determinant() > 1e-12))
    throw InvalidCellError("cell angles do not describe a 3D cell (Gram determinant <= 0)");
}

Basis unit_cell_to_basis(const UnitCell& cell) {
  cell.validate();
  double ca = std::cos(cell.alpha), cb = std::cos(cell.beta);
  double cg = std::cos(cell.gamma), sg = std::sin(cell.gamma);
  double cy = (ca - cb * cg) / sg;
  double cz = std::sqrt(cell.normalized_gram_determinant()) / sg;
  return Basis({cell.a, 0, 0},
               {cell.b * cg, cell.b * sg, 0},
               {cell.c * cb, cell.c * cy, cell.c * cz});
}

UnitCell basis_to_unit_cell(const Basis& b) {
  double a = b.v1.length(), bl = b.v2.length(), c = b.v3.length();
  auto angle = [](const Vec3& x, const Vec3& y) {
    double cosine = x.dot(y) / (x.length() * y.length());
    return std::acos(std::clamp(cosine, -1.0, 1.0));
  };
  return {a, bl, c, angle(b.v2, b.v3), angle(b.v1, b.v3), angle(b.v1, b.v2)};
}

Superbase::Superbase(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3,
                     double rel_tol)
    : v_{v0, v1, v2, v3} {
  double scale = max_length();
  Vec3 sum = v0 + v1 + v2 + v3;
  if (!sum.is_finite() || sum.length() > rel_tol * scale)
    throw PreconditionError("superbase vectors do not sum to zero");
  (void)basis();  // volume check
}

double Superbase::max_length() const {
  double l = 0;
  for (const Vec3& v : v_) l = std::max(l, v.length());
  return l;
}

Superbase basis_to_superbase(const Basis& b) {
  return Superbase(-(b.v1 + b.v2 + b.v3), b.v1, b.v2, b.v3);
}

PartialSums partial_sums(const Superbase& sb) {
  return {{sb[0], sb[1], sb[2], sb[3], sb[0] + sb[1], sb[0] + sb[2], sb[0] + sb[3]}};
}

std::array<double, 7> PartialSums::vonorms() const {
  std::array<double, 7> out;
  for (int i = 0; i < 7; ++i) out[i] = v[i].length_sq();
  return out;
}

Superbase apply_orthogonal(const Superbase& sb, const Mat3& q, double rel_tol) {
  Mat3 qtq = q.transposed() * q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(qtq(i, j) - (i == j ? 1.0 : 0.0)) > rel_tol)
        throw PreconditionError("matrix is not orthogonal");
  return Superbase(q * sb[0], q * sb[1], q * sb[2], q * sb[3]);
}

IntMat3 random_unimodular(std::uint64_t seed, int bound) {
  if (bound < 1) throw PreconditionError("unimodular bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> row(0, 2), sign(0, 1);
  IntMat3 u{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  constexpr int kSteps = 24;
  for (int step = 0; step < kSteps; ++step) {
    int r = row(rng), s = row(rng);
    if (r == s) {
      // occasional sign flip keeps both determinant signs reachable
      if (sign(rng))
        for (auto& e : u[r]) e = -e;
      continue;
    }
    std::int64_t f = sign(rng) ? 1 : -1;
    std::array<std::int64_t, 3> next;
    bool fits = true;
    for (int c = 0; c < 3; ++c) {
      next[c] = u[r][c] + f * u[s][c];
      fits = fits && std::abs(next[c]) <= bound;
    }
    if (fits) u[r] = next;
  }
  return u;
}

double superbase_distance(const Superbase& a, const Superbase& b, bool proper_only) {
  // Kabsch: maximise sum v_i . R u_i via the SVD of sum v_i u_i^T.
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector3d v(a[i].x, a[i].y, a[i].z), u(b[i].x, b[i].y, b[i].z);
    h += v * u.transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  if (proper_only && (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0)
    d(2, 2) = -1;
  Eigen::Matrix3d r = svd.matrixU() * d * svd.matrixV().transpose();
  double worst = 0;
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector3d v(a[i].x, a[i].y, a[i].z), u(b[i].x, b[i].y, b[i].z);
    worst = std::max(worst, (r * u - v).norm());
  }
  return worst;
}

Mat3 rotation(const Vec3& axis, double angle) {
  Vec3 k = axis * (1.0 / axis.length());
  double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
  return {{{{t * k.x * k.x + c, t * k.x * k.y - s * k.z, t * k.x * k.z + s * k.y},
            {t * k.x * k.y + s * k.z, t * k.y * k.y + c, t * k.y * k.z - s * k.x},
            {t * k.x * k.z - s * k.y, t * k.y * k.z + s * k.x, t * k.z * k.z + c}}}};
}

}  // namespace latinv
