// Vonorms, conorms and root forms of superbases.
//
// Six conorms p_ij = -v_i . v_j are stored in the 2x3 layout
//
//     [ p23  p13  p12 ]
//     [ p01  p02  p03 ]
//
// so column c holds the two conorms of complementary index pairs.  Index
// permutations of {0,1,2,3} act on this layout by permuting columns and
// flipping an even number of them; even permutations permute columns
// cyclically only.
//
// Root forms are canonical 6-vectors of root products r_ij = sqrt(p_ij):
// the lexicographically smallest image (top row first) over all 24
// permutations, or over the 12 even ones for oriented forms.

#ifndef LATINV_FORMS_HPP_
#define LATINV_FORMS_HPP_

#include <array>
#include <string>
#include <string_view>

#include "latinv/lattice.hpp"

namespace latinv {

// Position of the unordered pair {i,j} in the 2x3 layout (row-major).
int pair_slot(int i, int j);
// Inverse of pair_slot.
std::array<int, 2> slot_pair(int slot);

struct Coform {
  std::array<double, 6> p{};  // p23 p13 p12 p01 p02 p03

  double operator()(int i, int j) const { return p[pair_slot(i, j)]; }
  double& operator()(int i, int j) { return p[pair_slot(i, j)]; }
  bool is_obtuse(double abs_tol = 0) const;
  double min() const;
  bool operator==(const Coform&) const = default;
};

// Seven vonorms ordered v0^2, v1^2, v2^2, v3^2, v01^2, v02^2, v03^2.
struct Voform {
  std::array<double, 7> vn{};

  double vertex(int i) const { return vn[i]; }
  // v_ij^2 for i != j; v_ij = -v_kl so the value is shared with the complement.
  double pair(int i, int j) const;
  double max() const;
};

class PermutationS4 {
 public:
  constexpr PermutationS4() : img_{0, 1, 2, 3} {}
  // Throws PreconditionError if images is not a bijection of {0,1,2,3}.
  explicit PermutationS4(std::array<int, 4> images);

  static PermutationS4 transposition(int a, int b);
  int operator()(int i) const { return img_[i]; }
  const std::array<int, 4>& images() const { return img_; }
  bool is_even() const;
  PermutationS4 compose(const PermutationS4& inner) const;  // (this o inner)

  static const std::array<PermutationS4, 24>& all();
  static const std::array<PermutationS4, 12>& even();

 private:
  std::array<int, 4> img_;
};

enum class LatticeSign { positive, negative, neutral };
std::string_view to_string(LatticeSign s);

struct RootForm {
  std::array<double, 6> r{};  // r23 r13 r12 r01 r02 r03
  bool oriented = false;

  double operator()(int i, int j) const { return r[pair_slot(i, j)]; }
  double max() const;
  Coform squared() const;
};

Coform conorms_of(const Superbase& sb);
Voform coform_to_voform(const Coform& cf);
// Throws InvalidVoformError when the linear relation
// v0^2+v1^2+v2^2+v3^2 = v01^2+v02^2+v03^2 fails beyond rel_tol * max vonorm.
Coform voform_to_coform(const Voform& vf, double rel_tol = kDefaultRelTol);
// 4 p0 = v0^2+v1^2+v2^2+v3^2 - v01^2 - v02^2 - v03^2; zero for true voforms.
double zero_conorm_residual(const Voform& vf);
Voform voform_of(const Superbase& sb);

// Entry at {i,j} becomes p_{sigma(i) sigma(j)}.
Coform permute_coform(const Coform& cf, const PermutationS4& sigma);
RootForm permute_root_form(const RootForm& rf, const PermutationS4& sigma);

struct RootFormOptions {
  // Conorms within rel_tol * max vonorm of 0 are set to 0, which keeps
  // rounding noise from turning into root products of order sqrt(noise).
  // More negative conorms are an error.
  double rel_tol = kDefaultRelTol;
  // Ordering ties: values within tie_tol * max root product compare equal.
  double tie_tol = 1e-12;
};

// Canonical root form of an obtuse coform.  In oriented mode the coform is
// taken in the handedness given by orientation_sign (det(v1,v2,v3) of the
// superbase it came from); a negative sign applies an odd relabelling first.
// Neutral (mirror-symmetric) lattices get the non-oriented form in both modes.
// Throws NotObtuseError for a conorm below the clamping tolerance.
RootForm root_form(const Coform& cf, bool oriented = false, int orientation_sign = 1,
                   const RootFormOptions& opt = {});
RootForm root_form(const Superbase& sb, bool oriented = false,
                   const RootFormOptions& opt = {});

// Canonical image of the mirror lattice: odd relabelling, then the even-group
// minimum.  For non-oriented forms the mirror form equals the form itself.
RootForm mirror_root_form(const RootForm& rf, const RootFormOptions& opt = {});

// Checks the ordering clauses a canonical root form must satisfy: global
// minimum top left, r13 minimal in columns 2 and 3, and the tie-break rules
// (non-oriented); for oriented forms column 2 is lexicographically ordered
// top over bottom.  Independent of the enumeration used to build the form.
bool satisfies_root_form_conditions(const RootForm& rf, double tie_tol = 1e-12);

struct SpecialFlags {
  bool mirror_columns = false;  // two identical columns
  bool of_rows = false;         // both rows coincide
  bool two_top_zeros = false;   // at least two zeros in the top row
  bool any() const { return mirror_columns || of_rows || two_top_zeros; }
};

// Equalities are tested on squared root products (conorms) to
// rel_tol * max conorm, which tolerates the square-root amplification of
// round-off near zero.
SpecialFlags detect_special(const RootForm& rf, double rel_tol = kDefaultRelTol);

// Chirality from an oriented root form.  Neutral when a special configuration
// is present or the form equals its own mirror image.  Otherwise the sign is
// read from the top row (r13 < r12 positive, r13 > r12 negative, ties broken
// by r02 < r03); if that reading does not distinguish the form from its
// mirror, the lexicographically smaller of the two is called positive.
LatticeSign lattice_sign(const RootForm& rf, double rel_tol = kDefaultRelTol);

}  // namespace latinv

#endif  // LATINV_FORMS_HPP_
