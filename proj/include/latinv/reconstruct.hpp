// Obtuse superbase from a root form.
//
// The squared root products are the conorms, which fix every vonorm and hence
// every length and angle of the superbase.  The frame is fixed by placing v0
// on +x and v1 in the upper half of the xy-plane; v2 then has two mirror
// positions, and the oriented flag picks the one with det(v1,v2,v3) > 0.

#ifndef LATINV_RECONSTRUCT_HPP_
#define LATINV_RECONSTRUCT_HPP_

#include "latinv/forms.hpp"
#include "latinv/lattice.hpp"

namespace latinv {

// Tolerance for cosines just outside [-1, 1] and for small negative squared
// heights; beyond it the form is not realizable.
inline constexpr double kReconstructTol = 1e-9;

// Throws DegenerateError for a zero-length superbase vector and
// NonRealizableError when the implied lengths and angles admit no triangle.
// Non-oriented forms get z >= 0 for v2, which gives det(v1,v2,v3) <= 0.
Superbase reconstruct_superbase(const RootForm& rf);

}  // namespace latinv

#endif  // LATINV_RECONSTRUCT_HPP_
