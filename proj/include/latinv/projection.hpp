// Projective triangle coordinates of root-product triples and density grids.
//
// A triple is scaled to unit sum.  The quotient triangle takes an ordered
// triple a <= b <= c to ((c - b) / 2, a); the full triangle takes an
// unordered bottom row (r01, r02, r03) to ((r03 - r02) / 2, r01).

#ifndef LATINV_PROJECTION_HPP_
#define LATINV_PROJECTION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "latinv/forms.hpp"

namespace latinv {

enum class TriangleKind { qt, ft };
std::string_view to_string(TriangleKind k);

struct TrianglePoint {
  double x = 0, y = 0;
  TriangleKind kind = TriangleKind::qt;
};

struct Bounds {
  double x_min, x_max, y_min, y_max;
};
// QT: [0,1/2] x [0,1/3]; FT: [-1/2,1/2] x [0,1].
Bounds bounds_of(TriangleKind k);
bool within_bounds(const TrianglePoint& p, double tol = 1e-12);

// Throws DegenerateError for a zero sum and UsageError unless
// smallest <= middle <= largest (to a relative 1e-12).
TrianglePoint qt_project(double smallest, double middle, double largest);
TrianglePoint ft_project(double r01, double r02, double r03);

// A zero row has no projective scale; its point is left empty.
struct ProjectedForm {
  std::optional<TrianglePoint> qt, ft;
};

// Oriented forms may carry an unordered top row; it is sorted first.
ProjectedForm project_root_form(const RootForm& rf);

// Side lengths 0 < a <= b <= c; UsageError otherwise.
TrianglePoint orthorhombic_project(double a, double b, double c);

struct DensityGrid {
  TriangleKind kind = TriangleKind::qt;
  int resolution = 0;
  // counts[iy][ix]; iy grows with y, ix with x.
  std::vector<std::vector<std::int64_t>> counts;

  std::int64_t total() const;
  std::int64_t max_count() const;
  std::int64_t at(int ix, int iy) const { return counts[iy][ix]; }
};

// Bin index of a coordinate on [lo, hi] split into n bins; the closing edge
// belongs to the last bin.
int bin_index(double v, double lo, double hi, int n);

// Uniform binning over the bounding rectangle of `kind`.  Throws UsageError
// when a point of another kind is present and PreconditionError for
// resolution < 1 or a point outside the bounds.
DensityGrid accumulate_density(std::span<const TrianglePoint> points, int resolution,
                               TriangleKind kind);

}  // namespace latinv

#endif  // LATINV_PROJECTION_HPP_
