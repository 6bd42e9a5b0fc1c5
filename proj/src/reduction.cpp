#include "latinv/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latinv {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairsLex = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<int, 2> complement(int i, int j) {
  std::array<int, 2> kl{};
  int n = 0;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) kl[n++] = m;
  return kl;
}

// Integer coordinates of the four superbase vectors in the input basis.
using Coeffs = std::array<std::array<std::int64_t, 3>, 4>;

template <typename T, typename Add, typename Neg>
std::array<T, 4> step_vectors(const std::array<T, 4>& v, int i, int j, Add add, Neg neg) {
  auto [k, l] = complement(i, j);
  std::array<T, 4> u = v;
  u[i] = neg(v[i]);
  u[j] = v[j];
  u[k] = add(v[i], v[k]);
  u[l] = add(v[i], v[l]);
  return u;
}

}  // namespace

double vonorm_sum(const Superbase& sb) {
  auto vn = partial_sums(sb).vonorms();
  return std::accumulate(vn.begin(), vn.end(), 0.0);
}

Superbase reduction_step(const Superbase& sb, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw PreconditionError("reduction needs two distinct indices in 0..3");
  double eps = sb[i].dot(sb[j]);
  if (!(eps > 0))
    throw PreconditionError("conorm p" + std::to_string(std::min(i, j)) +
                            std::to_string(std::max(i, j)) +
                            " is not negative; no reduction needed");
  auto u = step_vectors(
      sb.vectors(), i, j, [](const Vec3& a, const Vec3& b) { return a + b; },
      [](const Vec3& a) { return -a; });
  // re-close so the zero sum holds to rounding of a single addition
  u[0] = -(u[1] + u[2] + u[3]);
  return Superbase(u);
}

ReductionResult reduce_to_obtuse(const Superbase& input, double rel_tol, int max_iter) {
  if (!(rel_tol > 0)) throw PreconditionError("rel_tol must be positive");
  if (max_iter < 1) throw PreconditionError("max_iter must be >= 1");

  Superbase sb = input;
  Coeffs c{{{-1, -1, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  ReductionTrace trace;
  for (;;) {
    auto vn = partial_sums(sb).vonorms();
    double threshold = -rel_tol * *std::max_element(vn.begin(), vn.end());
    int bi = -1, bj = -1;
    double most = threshold;
    for (auto [i, j] : kPairsLex) {
      double p = sb.conorm(i, j);
      if (p < most) {
        most = p;
        bi = i;
        bj = j;
      }
    }
    if (bi < 0) break;
    if (trace.iterations() >= max_iter)
      throw NonTerminationError(
          "reduction did not finish within " + std::to_string(max_iter) + " steps",
          std::move(trace));
    trace.steps.push_back({bi, bj, -most, std::accumulate(vn.begin(), vn.end(), 0.0)});
    sb = reduction_step(sb, bi, bj);
    using Row = std::array<std::int64_t, 3>;
    c = step_vectors(
        c, bi, bj,
        [](const Row& a, const Row& b) { return Row{a[0] + b[0], a[1] + b[1], a[2] + b[2]}; },
        [](const Row& a) { return Row{-a[0], -a[1], -a[2]}; });
  }
  return {sb, std::move(trace), IntMat3{c[1], c[2], c[3]}};
}

}  // namespace latinv
