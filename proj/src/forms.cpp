#include "latinv/forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latinv/error.hpp"

namespace latinv {

namespace {

constexpr std::array<std::array<int, 2>, 6> kSlotPairs = {
    {{2, 3}, {1, 3}, {1, 2}, {0, 1}, {0, 2}, {0, 3}}};

using Vec6 = std::array<double, 6>;

// Lexicographic order where entries within eps count as equal.
bool lex_less(const Vec6& a, const Vec6& b, double eps) {
  for (int t = 0; t < 6; ++t) {
    if (a[t] < b[t] - eps) return true;
    if (a[t] > b[t] + eps) return false;
  }
  return false;
}

Vec6 permuted(const Vec6& x, const PermutationS4& s) {
  Vec6 out;
  for (int slot = 0; slot < 6; ++slot) {
    auto [i, j] = kSlotPairs[slot];
    out[slot] = x[pair_slot(s(i), s(j))];
  }
  return out;
}

template <std::size_t N>
Vec6 group_min(const Vec6& x, const std::array<PermutationS4, N>& group, double eps) {
  Vec6 best = x;
  for (const auto& s : group) {
    Vec6 cand = permuted(x, s);
    if (lex_less(cand, best, eps)) best = cand;
  }
  return best;
}

double max_of(const Vec6& x) { return *std::max_element(x.begin(), x.end()); }

// Agreement of two root-product vectors at the conorm level.
bool squares_close(const Vec6& a, const Vec6& b, double rel_tol) {
  double scale = std::max(max_of(a), max_of(b));
  double tol = rel_tol * scale * scale;
  for (int t = 0; t < 6; ++t)
    if (std::abs(a[t] * a[t] - b[t] * b[t]) > tol) return false;
  return true;
}

const PermutationS4 kOddRelabel = PermutationS4::transposition(2, 3);

// A form and its mirror image describe a mirror-symmetric lattice when either
// shows a special configuration or the two coincide.
bool neutral_pair(const RootForm& form, const RootForm& mirror, double rel_tol) {
  return detect_special(form, rel_tol).any() || detect_special(mirror, rel_tol).any() ||
         squares_close(form.r, mirror.r, rel_tol);
}

}  // namespace

int pair_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 3 || i == j) throw PreconditionError("invalid index pair");
  if (i == 0) return 2 + j;  // 01 -> 3, 02 -> 4, 03 -> 5
  return 3 - (i + j - 2);    // 23 -> 0, 13 -> 1, 12 -> 2
}

std::array<int, 2> slot_pair(int slot) { return kSlotPairs.at(slot); }

bool Coform::is_obtuse(double abs_tol) const { return min() >= -abs_tol; }

double Coform::min() const { return *std::min_element(p.begin(), p.end()); }

double Voform::pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0) return vn[3 + j];
  return vn[3 + (6 - i - j)];  // v_ij = -v_0k for the third index k
}

double Voform::max() const { return *std::max_element(vn.begin(), vn.end()); }

PermutationS4::PermutationS4(std::array<int, 4> images) : img_(images) {
  std::array<bool, 4> seen{};
  for (int v : images) {
    if (v < 0 || v > 3 || seen[v]) throw PreconditionError("not a permutation of {0,1,2,3}");
    seen[v] = true;
  }
}

PermutationS4 PermutationS4::transposition(int a, int b) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::swap(img[a], img[b]);
  return PermutationS4(img);
}

bool PermutationS4::is_even() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (img_[i] > img_[j]) ++inversions;
  return inversions % 2 == 0;
}

PermutationS4 PermutationS4::compose(const PermutationS4& inner) const {
  return PermutationS4({img_[inner(0)], img_[inner(1)], img_[inner(2)], img_[inner(3)]});
}

const std::array<PermutationS4, 24>& PermutationS4::all() {
  static const auto perms = [] {
    std::array<PermutationS4, 24> out;
    std::array<int, 4> img{0, 1, 2, 3};
    int n = 0;
    do {
      out[n++] = PermutationS4(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

const std::array<PermutationS4, 12>& PermutationS4::even() {
  static const auto perms = [] {
    std::array<PermutationS4, 12> out;
    int n = 0;
    for (const auto& s : all())
      if (s.is_even()) out[n++] = s;
    return out;
  }();
  return perms;
}

std::string_view to_string(LatticeSign s) {
  switch (s) {
    case LatticeSign::positive: return "positive";
    case LatticeSign::negative: return "negative";
    case LatticeSign::neutral: return "neutral";
  }
  return "neutral";
}

double RootForm::max() const { return max_of(r); }

Coform RootForm::squared() const {
  Coform cf;
  for (int t = 0; t < 6; ++t) cf.p[t] = r[t] * r[t];
  return cf;
}

Coform conorms_of(const Superbase& sb) {
  Coform cf;
  for (int slot = 0; slot < 6; ++slot) {
    auto [i, j] = kSlotPairs[slot];
    cf.p[slot] = sb.conorm(i, j);
  }
  return cf;
}

Voform coform_to_voform(const Coform& cf) {
  Voform vf;
  for (int i = 0; i < 4; ++i) {
    double s = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) s += cf(i, j);
    vf.vn[i] = s;
  }
  // v_0j^2 = p_0k + p_0l + p_jk + p_jl with {k,l} the remaining indices
  for (int j = 1; j <= 3; ++j) {
    int k = j == 1 ? 2 : 1;
    int l = 6 - j - k;
    vf.vn[3 + j] = cf(0, k) + cf(0, l) + cf(j, k) + cf(j, l);
  }
  return vf;
}

double zero_conorm_residual(const Voform& vf) {
  const auto& v = vf.vn;
  return v[0] + v[1] + v[2] + v[3] - v[4] - v[5] - v[6];
}

Coform voform_to_coform(const Voform& vf, double rel_tol) {
  double scale = std::max(std::abs(vf.max()), 1e-300);
  if (std::abs(zero_conorm_residual(vf)) > rel_tol * scale)
    throw InvalidVoformError("vonorms violate v0^2+v1^2+v2^2+v3^2 = v01^2+v02^2+v03^2");
  Coform cf;
  for (int slot = 0; slot < 6; ++slot) {
    auto [i, j] = kSlotPairs[slot];
    int k = 0;
    while (k == i || k == j) ++k;
    int l = 6 - i - j - k;
    // 4 p_ij = v_i^2 + v_j^2 + v_ik^2 + v_jk^2 - v_ij^2 - v_k^2 - v_l^2
    cf.p[slot] = (vf.vertex(i) + vf.vertex(j) + vf.pair(i, k) + vf.pair(j, k) -
                  vf.pair(i, j) - vf.vertex(k) - vf.vertex(l)) / 4;
  }
  return cf;
}

Voform voform_of(const Superbase& sb) { return {partial_sums(sb).vonorms()}; }

Coform permute_coform(const Coform& cf, const PermutationS4& sigma) {
  return {permuted(cf.p, sigma)};
}

RootForm permute_root_form(const RootForm& rf, const PermutationS4& sigma) {
  return {permuted(rf.r, sigma), rf.oriented};
}

RootForm root_form(const Coform& cf, bool oriented, int orientation_sign,
                   const RootFormOptions& opt) {
  double clamp_tol = opt.rel_tol * std::max(coform_to_voform(cf).max(), 0.0);
  Vec6 r;
  for (int t = 0; t < 6; ++t) {
    double p = cf.p[t];
    if (!std::isfinite(p)) throw NotObtuseError("non-finite conorm");
    if (p < -clamp_tol)
      throw NotObtuseError("conorm " + std::to_string(p) + " is negative; reduce the superbase first");
    r[t] = p <= clamp_tol ? 0.0 : std::sqrt(p);
  }
  double eps = opt.tie_tol * max_of(r);
  if (!oriented) return {group_min(r, PermutationS4::all(), eps), false};

  if (orientation_sign < 0) r = permuted(r, kOddRelabel);
  RootForm even_min{group_min(r, PermutationS4::even(), eps), true};
  RootForm mirror{group_min(permuted(even_min.r, kOddRelabel), PermutationS4::even(), eps),
                  true};
  if (neutral_pair(even_min, mirror, opt.rel_tol))
    return {group_min(r, PermutationS4::all(), eps), true};
  return even_min;
}

RootForm root_form(const Superbase& sb, bool oriented, const RootFormOptions& opt) {
  return root_form(conorms_of(sb), oriented, sb.orientation(), opt);
}

RootForm mirror_root_form(const RootForm& rf, const RootFormOptions& opt) {
  if (!rf.oriented) return rf;
  double eps = opt.tie_tol * rf.max();
  return {group_min(permuted(rf.r, kOddRelabel), PermutationS4::even(), eps), true};
}

bool satisfies_root_form_conditions(const RootForm& rf, double tie_tol) {
  const Vec6& r = rf.r;
  double eps = tie_tol * max_of(r);
  auto le = [eps](double a, double b) { return a <= b + eps; };
  auto eq = [eps](double a, double b) { return std::abs(a - b) <= eps; };
  const double r23 = r[0], r13 = r[1], r12 = r[2], r01 = r[3], r02 = r[4], r03 = r[5];

  for (int t = 1; t < 6; ++t)
    if (!le(r23, r[t])) return false;
  // all three top entries at the minimum: bottom-left is the smallest remaining
  if (eq(r23, r13) && eq(r13, r12) && !(le(r01, r02) && le(r01, r03))) return false;

  if (rf.oriented) {
    // column 2 read as (top, top-right) vs (bottom, bottom-right)
    return r13 < r02 - eps || (eq(r13, r02) && le(r12, r03));
  }
  if (!le(r13, r12) || !le(r13, r02) || !le(r13, r03)) return false;
  if (eq(r23, r13) && !le(r01, r02)) return false;
  if (eq(r13, r12) && !le(r02, r03)) return false;
  return true;
}

SpecialFlags detect_special(const RootForm& rf, double rel_tol) {
  Vec6 s;
  for (int t = 0; t < 6; ++t) s[t] = rf.r[t] * rf.r[t];
  double tol = rel_tol * max_of(s);
  auto eq = [tol](double a, double b) { return std::abs(a - b) <= tol; };

  SpecialFlags f;
  int zeros = 0;
  for (int c = 0; c < 3; ++c)
    if (s[c] <= tol) ++zeros;
  f.two_top_zeros = zeros >= 2;
  f.of_rows = eq(s[0], s[3]) && eq(s[1], s[4]) && eq(s[2], s[5]);
  for (int c = 0; c < 3 && !f.mirror_columns; ++c)
    for (int d = c + 1; d < 3; ++d)
      if (eq(s[c], s[d]) && eq(s[c + 3], s[d + 3])) f.mirror_columns = true;
  return f;
}

LatticeSign lattice_sign(const RootForm& rf, double rel_tol) {
  if (!rf.oriented) throw PreconditionError("lattice_sign needs an oriented root form");
  RootForm mirror = mirror_root_form(rf);
  if (neutral_pair(rf, mirror, rel_tol)) return LatticeSign::neutral;

  double scale = std::max(rf.max(), mirror.max());
  double tol = rel_tol * scale * scale;
  auto reading = [tol](const Vec6& r) {
    auto cmp = [tol](double a, double b) {
      double d = a * a - b * b;
      return d < -tol ? 1 : d > tol ? -1 : 0;
    };
    int top = cmp(r[1], r[2]);
    return top != 0 ? top : cmp(r[4], r[5]);
  };
  int own = reading(rf.r), other = reading(mirror.r);
  if (own != 0 && own == -other)
    return own > 0 ? LatticeSign::positive : LatticeSign::negative;
  return lex_less(rf.r, mirror.r, 0) ? LatticeSign::positive : LatticeSign::negative;
}

}  // namespace latinv
