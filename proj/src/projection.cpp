#include "latinv/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latinv/error.hpp"

namespace latinv {

namespace {

constexpr double kOrderTol = 1e-12;

double positive_sum(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || a < 0 || b < 0 || c < 0)
    throw PreconditionError("triangle projection needs finite non-negative entries");
  double s = a + b + c;
  if (!(s > 0)) throw DegenerateError("cannot project a triple with zero sum");
  return s;
}

}  // namespace

std::string_view to_string(TriangleKind k) { return k == TriangleKind::qt ? "qt" : "ft"; }

Bounds bounds_of(TriangleKind k) {
  if (k == TriangleKind::qt) return {0, 0.5, 0, 1.0 / 3};
  return {-0.5, 0.5, 0, 1};
}

bool within_bounds(const TrianglePoint& p, double tol) {
  Bounds b = bounds_of(p.kind);
  return p.x >= b.x_min - tol && p.x <= b.x_max + tol && p.y >= b.y_min - tol &&
         p.y <= b.y_max + tol;
}

TrianglePoint qt_project(double smallest, double middle, double largest) {
  double s = positive_sum(smallest, middle, largest);
  double tol = kOrderTol * largest;
  if (smallest > middle + tol || middle > largest + tol)
    throw UsageError("quotient triangle needs an ordered triple a <= b <= c");
  return {(largest / s - middle / s) / 2, smallest / s, TriangleKind::qt};
}

TrianglePoint ft_project(double r01, double r02, double r03) {
  double s = positive_sum(r01, r02, r03);
  return {(r03 / s - r02 / s) / 2, r01 / s, TriangleKind::ft};
}

ProjectedForm project_root_form(const RootForm& rf) {
  ProjectedForm out;
  std::array<double, 3> top{rf.r[0], rf.r[1], rf.r[2]};
  std::sort(top.begin(), top.end());
  if (top[0] + top[1] + top[2] > 0) out.qt = qt_project(top[0], top[1], top[2]);
  if (rf.r[3] + rf.r[4] + rf.r[5] > 0) out.ft = ft_project(rf.r[3], rf.r[4], rf.r[5]);
  return out;
}

TrianglePoint orthorhombic_project(double a, double b, double c) {
  if (!(a > 0) || !(a <= b) || !(b <= c))
    throw UsageError("orthorhombic projection needs 0 < a <= b <= c");
  return qt_project(a, b, c);
}

std::int64_t DensityGrid::total() const {
  std::int64_t t = 0;
  for (const auto& row : counts)
    for (auto c : row) t += c;
  return t;
}

std::int64_t DensityGrid::max_count() const {
  std::int64_t m = 0;
  for (const auto& row : counts)
    for (auto c : row) m = std::max(m, c);
  return m;
}

int bin_index(double v, double lo, double hi, int n) {
  int i = static_cast<int>(std::floor((v - lo) / (hi - lo) * n));
  return std::clamp(i, 0, n - 1);
}

DensityGrid accumulate_density(std::span<const TrianglePoint> points, int resolution,
                               TriangleKind kind) {
  if (resolution < 1) throw PreconditionError("grid resolution must be >= 1");
  DensityGrid g;
  g.kind = kind;
  g.resolution = resolution;
  g.counts.assign(resolution, std::vector<std::int64_t>(resolution, 0));
  Bounds b = bounds_of(kind);
  for (std::size_t n = 0; n < points.size(); ++n) {
    const TrianglePoint& p = points[n];
    if (p.kind != kind)
      throw UsageError("point " + std::to_string(n) + " is a " + std::string(to_string(p.kind)) +
                       " point in a " + std::string(to_string(kind)) + " grid");
    if (!within_bounds(p, 1e-9))
      throw PreconditionError("point " + std::to_string(n) + " lies outside the triangle bounds");
    int ix = bin_index(p.x, b.x_min, b.x_max, resolution);
    int iy = bin_index(p.y, b.y_min, b.y_max, resolution);
    ++g.counts[iy][ix];
  }
  return g;
}

}  // namespace latinv
