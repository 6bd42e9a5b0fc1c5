#include "latinv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "latinv/error.hpp"
#include "latinv/reduction.hpp"

namespace latinv {

BaseDistance BaseDistance::minkowski(double q) {
  if (!(q >= 1)) throw PreconditionError("Minkowski exponent q must be >= 1");
  BaseDistance d;
  d.q_ = q;
  return d;
}

BaseDistance BaseDistance::custom(Fn fn) {
  BaseDistance d;
  d.q_ = std::numeric_limits<double>::quiet_NaN();
  d.fn_ = std::move(fn);
  return d;
}

double BaseDistance::operator()(const std::array<double, 6>& a,
                                const std::array<double, 6>& b) const {
  if (fn_) return fn_(a, b);
  if (std::isinf(q_)) {
    double m = 0;
    for (int t = 0; t < 6; ++t) m = std::max(m, std::abs(a[t] - b[t]));
    return m;
  }
  if (q_ == 1) {
    double s = 0;
    for (int t = 0; t < 6; ++t) s += std::abs(a[t] - b[t]);
    return s;
  }
  if (q_ == 2) {
    double s = 0;
    for (int t = 0; t < 6; ++t) s += (a[t] - b[t]) * (a[t] - b[t]);
    return std::sqrt(s);
  }
  double s = 0;
  for (int t = 0; t < 6; ++t) s += std::pow(std::abs(a[t] - b[t]), q_);
  return std::pow(s, 1.0 / q_);
}

double root_metric(const RootForm& a, const RootForm& b, const BaseDistance& d) {
  if (a.oriented != b.oriented)
    throw UsageError("root_metric: cannot compare an oriented with a non-oriented root form");
  double best = std::numeric_limits<double>::infinity();
  auto scan = [&](const auto& group) {
    for (const auto& s : group) best = std::min(best, d(a.r, permute_root_form(b, s).r));
  };
  if (a.oriented)
    scan(PermutationS4::even());
  else
    scan(PermutationS4::all());
  return best;
}

RootForm lattice_root_form(const Basis& b, bool oriented, double rel_tol) {
  auto reduced = reduce_to_obtuse(basis_to_superbase(b), rel_tol);
  return root_form(reduced.superbase, oriented, {rel_tol});
}

double lattice_distance(const Basis& a, const Basis& b, double q, bool oriented) {
  return root_metric(lattice_root_form(a, oriented), lattice_root_form(b, oriented),
                     BaseDistance::minkowski(q));
}

double continuity_bound(double l, double delta, double q) {
  if (l < 0 || delta < 0) throw PreconditionError("l and delta must be non-negative");
  if (!(q >= 1)) throw PreconditionError("q must be >= 1");
  double factor = std::isinf(q) ? 1.0 : std::pow(6.0, 1.0 / q);
  return factor * std::sqrt(2 * l * delta);
}

Dc7Vector dc7_vector(const Superbase& sb, double rel_tol) {
  PartialSums ps = partial_sums(sb);
  auto vn = ps.vonorms();
  double tol = rel_tol * *std::max_element(vn.begin(), vn.end());
  if (!conorms_of(sb).is_obtuse(tol))
    throw NotObtuseError("DC7 needs an obtuse superbase; reduce first");
  Dc7Vector out;
  for (int t = 0; t < 7; ++t) out[t] = std::sqrt(vn[t]);
  std::sort(out.begin(), out.end());
  return out;
}

Dc7Vector dc7_vector(const Coform& cf, double rel_tol) {
  Voform vf = coform_to_voform(cf);
  if (!cf.is_obtuse(rel_tol * vf.max()))
    throw NotObtuseError("DC7 needs an obtuse coform");
  Dc7Vector out;
  for (int t = 0; t < 7; ++t) out[t] = std::sqrt(std::max(vf.vn[t], 0.0));
  std::sort(out.begin(), out.end());
  return out;
}

double dc7_distance(const Dc7Vector& a, const Dc7Vector& b) {
  double s = 0;
  for (int t = 0; t < 7; ++t) s += (a[t] - b[t]) * (a[t] - b[t]);
  return std::sqrt(s);
}

namespace {

IntCoform permuted(const IntCoform& p, const PermutationS4& s) {
  IntCoform out;
  for (int slot = 0; slot < 6; ++slot) {
    auto [i, j] = slot_pair(slot);
    out[slot] = p[pair_slot(s(i), s(j))];
  }
  return out;
}

bool is_canonical(const IntCoform& p) {
  for (const auto& s : PermutationS4::all())
    if (permuted(p, s) < p) return false;
  return true;
}

IntVoform sorted_voform(const IntCoform& p) {
  IntVoform v = int_voform(p);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

IntVoform int_voform(const IntCoform& p) {
  Voform vf = coform_to_voform(to_coform(p));
  IntVoform out;
  // exact: each vonorm is a sum of at most four small integers
  for (int t = 0; t < 7; ++t) out[t] = static_cast<std::int64_t>(std::llround(vf.vn[t]));
  return out;
}

Coform to_coform(const IntCoform& p) {
  Coform cf;
  for (int t = 0; t < 6; ++t) cf.p[t] = static_cast<double>(p[t]);
  return cf;
}

std::vector<Dc7Collision> find_dc7_collisions(int max_conorm) {
  if (max_conorm < 1) throw PreconditionError("max_conorm must be >= 1");
  // Entries of a canonical coform: the minimum sits top left, so p23 is the
  // smallest value and the search can start every other entry from it.
  std::map<IntVoform, std::vector<IntCoform>> groups;
  IntCoform p;
  for (p[0] = 1; p[0] <= max_conorm; ++p[0])
    for (p[1] = p[0]; p[1] <= max_conorm; ++p[1])
      for (p[2] = p[1]; p[2] <= max_conorm; ++p[2])
        for (p[3] = p[0]; p[3] <= max_conorm; ++p[3])
          for (p[4] = p[0]; p[4] <= max_conorm; ++p[4])
            for (p[5] = p[0]; p[5] <= max_conorm; ++p[5])
              if (is_canonical(p)) groups[sorted_voform(p)].push_back(p);

  std::vector<Dc7Collision> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        out.push_back({members[x], members[y]});
  }
  std::sort(out.begin(), out.end(), [](const Dc7Collision& l, const Dc7Collision& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  });
  return out;
}

Coform shift_coform(const Coform& cf, const Coform& q) {
  if (!q.is_obtuse()) throw PreconditionError("shift coform must have non-negative conorms");
  Coform out;
  for (int t = 0; t < 6; ++t) out.p[t] = cf.p[t] + q.p[t];
  return out;
}

IntCoform shift_coform(const IntCoform& cf, const IntCoform& q) {
  IntCoform out;
  for (int t = 0; t < 6; ++t) {
    if (q[t] < 0) throw PreconditionError("shift coform must have non-negative conorms");
    out[t] = cf[t] + q[t];
  }
  return out;
}

bool same_vonorm_multiset(const IntCoform& a, const IntCoform& b) {
  return sorted_voform(a) == sorted_voform(b);
}

bool on_degenerate_shift_plane(const IntCoform& q) {
  // slots: 0 = q23, 2 = q12, 3 = q01, 5 = q03
  return q[0] + q[3] == q[2] + q[5];
}

IntCoform align_collision(const IntCoform& a, const IntCoform& b) {
  IntVoform va = int_voform(a);
  IntCoform best = b;
  int best_matches = -1;
  for (const auto& s : PermutationS4::all()) {
    IntCoform cand = permuted(b, s);
    IntVoform vb = int_voform(cand);
    int matches = 0;
    for (int t = 0; t < 7; ++t) matches += va[t] == vb[t];
    if (matches > best_matches) {
      best_matches = matches;
      best = cand;
    }
  }
  return best;
}

}  // namespace latinv
