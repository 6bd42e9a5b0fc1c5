// Reduction of an arbitrary superbase to an obtuse one (all conorms >= 0).
//
// One step on a pair (i,j) with p_ij = -eps < 0 replaces the superbase by
//   u_i = -v_i,  u_j = v_j,  u_k = v_i + v_k,  u_l = v_i + v_l
// which keeps six vonorms (possibly swapping places) and shortens v_ij^2 by
// 4 eps.  The sum of the seven vonorms therefore strictly decreases, which
// bounds the number of steps.

#ifndef LATINV_REDUCTION_HPP_
#define LATINV_REDUCTION_HPP_

#include <array>
#include <vector>

#include "latinv/error.hpp"
#include "latinv/lattice.hpp"

namespace latinv {

inline constexpr int kDefaultMaxIter = 1000;

struct ReductionStep {
  int i, j;
  double epsilon;            // v_i . v_j > 0 before the step
  double vonorm_sum_before;  // sum of the seven vonorms before the step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  int iterations() const { return static_cast<int>(steps.size()); }
};

struct ReductionResult {
  Superbase superbase;
  ReductionTrace trace;
  // Rows give the reduced v1, v2, v3 as integer combinations of the input
  // v1, v2, v3; determinant is +1 or -1.
  IntMat3 transform;
};

struct NonTerminationError : NumericalError {
  NonTerminationError(const std::string& what, ReductionTrace t)
      : NumericalError(what), trace(std::move(t)) {}
  ReductionTrace trace;
};

double vonorm_sum(const Superbase& sb);

// Throws PreconditionError unless i != j and p_ij < 0.
Superbase reduction_step(const Superbase& sb, int i, int j);

// Repeatedly reduces the most negative conorm (ties: smallest (i,j) in
// lexicographic order) until every conorm is >= -rel_tol * max vonorm.
ReductionResult reduce_to_obtuse(const Superbase& sb, double rel_tol = kDefaultRelTol,
                                 int max_iter = kDefaultMaxIter);

}  // namespace latinv

#endif  // LATINV_REDUCTION_HPP_
