// Distances between lattices.
//
// Root metrics minimise a base distance on 6-vectors over the index
// permutations acting on a root form.  DC7 compares sorted lengths of the
// seven partial sums; it is invariant but not complete, and
// find_dc7_collisions produces explicit non-isometric pairs it cannot
// separate.

#ifndef LATINV_METRICS_HPP_
#define LATINV_METRICS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "latinv/forms.hpp"
#include "latinv/lattice.hpp"

namespace latinv {

// Minkowski L_q for q in [1, inf], or a caller-supplied metric on R^6.
class BaseDistance {
 public:
  using Fn = std::function<double(const std::array<double, 6>&, const std::array<double, 6>&)>;

  static BaseDistance minkowski(double q);
  static BaseDistance chebyshev() { return minkowski(std::numeric_limits<double>::infinity()); }
  static BaseDistance custom(Fn fn);

  double operator()(const std::array<double, 6>& a, const std::array<double, 6>& b) const;
  double q() const { return q_; }

 private:
  double q_ = 2;
  Fn fn_;
};

// min over sigma of d(rfA, sigma(rfB)); sigma ranges over the even
// permutations when both forms are oriented.  Mixed flags are a UsageError.
double root_metric(const RootForm& a, const RootForm& b, const BaseDistance& d);

// Root form of the lattice spanned by a basis: superbase, reduction, conorms,
// canonical form.
RootForm lattice_root_form(const Basis& b, bool oriented = false,
                           double rel_tol = kDefaultRelTol);

double lattice_distance(const Basis& a, const Basis& b, double q, bool oriented = false);

// 6^(1/q) sqrt(2 l delta), the factor being 1 for q = inf.
double continuity_bound(double l, double delta, double q);

using Dc7Vector = std::array<double, 7>;

// Sorted partial-sum lengths of an obtuse superbase (NotObtuseError otherwise).
Dc7Vector dc7_vector(const Superbase& sb, double rel_tol = kDefaultRelTol);
// Same vector straight from an obtuse coform, without building vectors.
Dc7Vector dc7_vector(const Coform& cf, double rel_tol = kDefaultRelTol);
double dc7_distance(const Dc7Vector& a, const Dc7Vector& b);

// Integer coform in the 2x3 layout p23 p13 p12 p01 p02 p03.
using IntCoform = std::array<std::int64_t, 6>;
using IntVoform = std::array<std::int64_t, 7>;

IntVoform int_voform(const IntCoform& p);
Coform to_coform(const IntCoform& p);

struct Dc7Collision {
  IntCoform a, b;  // both in canonical (lexicographically minimal) labelling
};

// Brute force over integer coforms with every conorm in [1, max_conorm].
// Returns all pairs of non-isomorphic coforms whose seven vonorms agree as
// multisets, sorted lexicographically by (a, b).  Zero conorms are excluded:
// a lattice with a zero conorm can have obtuse superbases whose coforms are
// not isomorphic, which would report one lattice as a "pair".
std::vector<Dc7Collision> find_dc7_collisions(int max_conorm);

// Conorm-wise sum.  Throws PreconditionError unless q is obtuse.
Coform shift_coform(const Coform& cf, const Coform& q);
IntCoform shift_coform(const IntCoform& cf, const IntCoform& q);

// True when the vonorm multisets of two integer coforms agree.
bool same_vonorm_multiset(const IntCoform& a, const IntCoform& b);

// The degenerate shift hyperplane q23 + q01 = q12 + q03.
bool on_degenerate_shift_plane(const IntCoform& q);

// Relabels b by the permutation that makes the most vonorms of a and b agree
// position by position.  Shifts q keep the pair colliding exactly when the
// vonorms of q are unchanged by the remaining mismatch of positions.
IntCoform align_collision(const IntCoform& a, const IntCoform& b);

}  // namespace latinv

#endif  // LATINV_METRICS_HPP_
