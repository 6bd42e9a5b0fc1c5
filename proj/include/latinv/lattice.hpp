// Geometric foundations: vectors, bases, unit cells and superbases.
//
// A superbase of a 3D lattice is a basis v1,v2,v3 extended by
// v0 = -(v1+v2+v3), so that the four vectors sum to zero.  Index 0..3 is used
// throughout; pairs {i,j} of these indices label conorms and partial sums.

#ifndef LATINV_LATTICE_HPP_
#define LATINV_LATTICE_HPP_

#include <array>
#include <cmath>
#include <cstdint>

namespace latinv {

inline constexpr double kDefaultRelTol = 1e-9;

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr double operator[](int i) const { return i == 0 ? x : i == 1 ? y : z; }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double length_sq() const { return dot(*this); }
  double length() const { return std::sqrt(length_sq()); }
  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Row-major 3x3 real matrix.  Rows are the natural unit: a Basis is stored as
// three rows, and Mat3 * Vec3 is the usual matrix-vector product.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Mat3 identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
  static constexpr Mat3 diagonal(double a, double b, double c) {
    return {{{{a, 0, 0}, {0, b, 0}, {0, 0, c}}}};
  }

  constexpr double operator()(int r, int c) const { return m[r][c]; }
  constexpr double& operator()(int r, int c) { return m[r][c]; }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Mat3 operator*(const Mat3& o) const;
  Mat3 transposed() const;
  double determinant() const;
};

using IntMat3 = std::array<std::array<std::int64_t, 3>, 3>;

std::int64_t determinant(const IntMat3& u);

struct Basis {
  Vec3 v1, v2, v3;

  // Throws DegenerateError on zero volume or non-finite coordinates.
  Basis(const Vec3& a, const Vec3& b, const Vec3& c);

  // Signed volume det(v1, v2, v3).
  double volume() const { return v1.dot(v2.cross(v3)); }
  const Vec3& operator[](int i) const { return i == 0 ? v1 : i == 1 ? v2 : v3; }

  // Rows of u combine the rows of this basis: w_r = sum_c u[r][c] * v_c.
  Basis transformed(const IntMat3& u) const;
};

// Cell parameters; angles are stored in radians.
struct UnitCell {
  double a, b, c;
  double alpha, beta, gamma;

  static UnitCell from_degrees(double a, double b, double c,
                               double alpha, double beta, double gamma);
  // Throws InvalidCellError if lengths/angles are out of range or the Gram
  // determinant is not positive.
  void validate() const;
  // det(G) / (a b c)^2 = 1 - cos^2 a - cos^2 b - cos^2 g + 2 cos a cos b cos g
  double normalized_gram_determinant() const;
};

UnitCell basis_to_unit_cell(const Basis& b);

// Conventional frame: v1 along +x, v2 in the xy-plane, v3 with z > 0.
Basis unit_cell_to_basis(const UnitCell& cell);

class Superbase {
 public:
  // Validates sum-to-zero (relative to the longest vector) and non-zero volume.
  Superbase(const Vec3& v0, const Vec3& v1, const Vec3& v2, const Vec3& v3,
            double rel_tol = kDefaultRelTol);
  Superbase(const std::array<Vec3, 4>& v, double rel_tol = kDefaultRelTol)
      : Superbase(v[0], v[1], v[2], v[3], rel_tol) {}

  const Vec3& operator[](int i) const { return v_[i]; }
  const std::array<Vec3, 4>& vectors() const { return v_; }
  Basis basis() const { return Basis(v_[1], v_[2], v_[3]); }

  double max_length() const;
  // Sign of det(v1, v2, v3).
  int orientation() const { return basis().volume() > 0 ? 1 : -1; }
  // -v_i . v_j
  double conorm(int i, int j) const { return -v_[i].dot(v_[j]); }

 private:
  std::array<Vec3, 4> v_;
};

Superbase basis_to_superbase(const Basis& b);

// The seven partial sums in the order v0, v1, v2, v3, v01, v02, v03.
struct PartialSums {
  std::array<Vec3, 7> v;

  static constexpr std::array<const char*, 7> labels = {"v0", "v1", "v2", "v3",
                                                       "v01", "v02", "v03"};
  // Squared lengths (vonorms) in the same order.
  std::array<double, 7> vonorms() const;
};

PartialSums partial_sums(const Superbase& sb);

// Throws PreconditionError unless q^T q = I to rel_tol.
Superbase apply_orthogonal(const Superbase& sb, const Mat3& q,
                           double rel_tol = kDefaultRelTol);

// Integer matrix with determinant +1 or -1 built from a seeded walk of
// elementary row operations that keep every entry within [-bound, bound].
IntMat3 random_unimodular(std::uint64_t seed, int bound);

// max_i |R u_i - v_i| for the orthogonal R from least-squares (Kabsch)
// alignment of the quadruple u onto v.  This is an upper bound on the exact
// Chebyshev distance minimised over O(3).  With proper_only = true, R is
// restricted to rotations.
double superbase_distance(const Superbase& a, const Superbase& b,
                          bool proper_only = false);

// Rotation by angle (radians) about a unit axis.
Mat3 rotation(const Vec3& axis, double angle);

}  // namespace latinv

#endif  // LATINV_LATTICE_HPP_
