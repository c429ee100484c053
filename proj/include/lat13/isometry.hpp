// Enumeration of potential isometries between nearly identical lattices.
//
// For Minkowski reduced forms the rows of any basis change g relating two
// nearly equal forms are confined to short Voronoi vectors modulo 3, and the
// rows of g^{-1} to the fixed set Psi_3 below. candidate_isometries builds
// that finite list; match_isometry filters it by the stable-inequality
// condition and picks the best residual. exact_isometries solves the exact
// problem g S1 g^T = S2 by backtracking over norm-matched rows.

#pragma once

#include "lat13/embedding.hpp"

#include <optional>

namespace lat13 {

struct PsiSets {
  std::vector<Vec3i> psi1, psi2, psi3; // psi1 == psi2, 18 vectors; psi3 adds +-(e1-e2)
};

inline const PsiSets& psi_sets() {
  static const PsiSets sets = [] {
    const std::vector<Vec3i> base = {
        Vec3i(1, 0, 0),  Vec3i(0, 1, 0),  Vec3i(0, 0, 1),
        Vec3i(1, 1, 0),  Vec3i(1, 0, 1),  Vec3i(0, 1, 1),
        Vec3i(1, 0, -1), Vec3i(1, 1, 1),  Vec3i(1, -1, -1)};
    PsiSets s;
    for (const auto& v : base) {
      s.psi1.push_back(v);
      s.psi1.push_back(-v);
    }
    s.psi2 = s.psi1;
    s.psi3 = s.psi1;
    s.psi3.push_back(Vec3i(1, -1, 0));
    s.psi3.push_back(Vec3i(-1, 1, 0));
    return s;
  }();
  return sets;
}

inline bool in_psi3(const Vec3i& v) {
  const auto& p = psi_sets().psi3;
  return std::find(p.begin(), p.end(), v) != p.end();
}

// v1 << v2 ("stably less"): the form gap is at least the first minimum, so
// the strict inequality survives small perturbations of S
template <class S>
bool stably_less(const Sym3<S>& s, const Vec3i& v1, const Vec3i& v2) {
  const S gap = S(quadratic_form(s, v2) - quadratic_form(s, v1));
  return geq(gap, first_minimum<S, 3>(s));
}

template <class S>
struct IsometryOptions {
  bool inclusive = false;   // use <= in the row-norm bound instead of <
  bool auto_reduce = true;  // Minkowski reduce non-reduced inputs
};

namespace detail {

template <class S>
struct ReducedInput {
  Sym3<S> form;
  Mat3i to_reduced; // form = to_reduced * input * to_reduced^T
};

template <class S>
ReducedInput<S> ensure_minkowski(const Sym3<S>& s, bool auto_reduce) {
  if (is_minkowski_reduced(s)) return {s, Mat3i::Identity()};
  if (!auto_reduce) throw NotReduced("input form is not Minkowski reduced");
  const auto red = minkowski_reduce(s);
  return {red.reduced, red.transform};
}

} // namespace detail

// All g in GL_3(Z) whose rows are Voronoi vectors modulo 3 of S with
// q(row_j) < lambda_j + lambda_1 and whose inverse has every row in Psi_3.
// Output is sorted lexicographically on the flattened matrix.
template <class S>
std::vector<Mat3i> candidate_isometries(const Sym3<S>& s,
                                        const IsometryOptions<S>& opt = {}) {
  const auto in = detail::ensure_minkowski(s, opt.auto_reduce);
  const Sym3<S>& red = in.form;
  const PhiSet<3> phi = voronoi_vectors<S, 3>(red, 3);
  const std::array<S, 3> lambda{red(0, 0), red(1, 1), red(2, 2)};
  const S lambda1 = red(0, 0);

  std::array<std::vector<Vec3i>, 3> pools;
  for (int j = 0; j < 3; ++j) {
    for (const auto& v : phi.vectors) {
      const S q = quadratic_form(red, v);
      const S cap = S(lambda[j] + lambda1);
      if (opt.inclusive ? leq(q, cap) : lt(q, cap)) pools[j].push_back(v);
    }
  }

  std::vector<Mat3i> out;
  Mat3i g;
  for (const auto& r0 : pools[0]) {
    g.row(0) = r0.transpose();
    for (const auto& r1 : pools[1]) {
      g.row(1) = r1.transpose();
      for (const auto& r2 : pools[2]) {
        g.row(2) = r2.transpose();
        if (!is_unimodular<3>(g)) continue;
        const Mat3i inv = unimodular_inverse<3>(g);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          ok = in_psi3(Vec3i(inv.row(i).transpose()));
        if (ok) out.push_back(g);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Mat3i& a, const Mat3i& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    return false;
  });
  return out;
}

// Exact equivalence g S1 g^T = S2: rows are backtracked over vectors whose
// norms match the diagonal of S2, cross products checked along the way.
template <class S>
std::vector<Mat3i> exact_isometries(const Sym3<S>& s1, const Sym3<S>& s2) {
  require_positive_definite(s1);
  require_positive_definite(s2);
  std::vector<Mat3i> out;
  if (!ScalarOps<S>::eq(s1.determinant(), s2.determinant())) return out;

  const LatticeEnumerator<S, 3> engine(s1);
  S bound = s2(0, 0);
  for (int i = 1; i < 3; ++i)
    if (lt(bound, s2(i, i))) bound = s2(i, i);
  const auto ball = engine.ball(bound);

  std::array<std::vector<Vec3i>, 3> rows;
  for (int i = 0; i < 3; ++i)
    for (const auto& [v, q] : ball)
      if (ScalarOps<S>::eq(q, s2(i, i))) rows[i].push_back(v);

  Mat3i g;
  const auto consistent = [&](int level) {
    const Vec3i cur = g.row(level).transpose();
    for (int k = 0; k < level; ++k) {
      const Vec3i prev = g.row(k).transpose();
      if (!ScalarOps<S>::eq(bilinear_form(s1, prev, cur), s2(k, level))) return false;
    }
    return true;
  };
  const std::function<void(int)> dfs = [&](int level) {
    if (level == 3) {
      if (is_unimodular<3>(g)) out.push_back(g);
      return;
    }
    for (const auto& v : rows[level]) {
      g.row(level) = v.transpose();
      if (consistent(level)) dfs(level + 1);
    }
  };
  dfs(0);
  return out;
}

template <class S>
struct IsometryCandidate {
  Mat3i g;
  S residual;
};

// Best candidate g with ||g T1 g^T - T2||_inf <= tol, filtered by the
// near-equivalence condition: e_i << g^T e_i and e_i << g^{-T} e_i must both
// fail for every i. Inputs are Minkowski reduced (or auto-reduced).
template <class S>
std::optional<IsometryCandidate<S>> match_isometry(const Sym3<S>& t1_obs,
                                                   const Sym3<S>& t2_obs,
                                                   const S& tol,
                                                   const IsometryOptions<S>& opt = {}) {
  const auto in1 = detail::ensure_minkowski(t1_obs, opt.auto_reduce);
  const auto in2 = detail::ensure_minkowski(t2_obs, opt.auto_reduce);
  const Sym3<S>&t1 = in1.form, &t2 = in2.form;

  const S lambda1_t1 = t1(0, 0), lambda1_t2 = t2(0, 0);
  const auto stably_under = [](const Sym3<S>& s, const S& lambda1, const Vec3i& v1,
                               const Vec3i& v2) {
    const S gap = S(quadratic_form(s, v2) - quadratic_form(s, v1));
    return geq(gap, lambda1);
  };

  std::optional<IsometryCandidate<S>> best;
  for (const auto& g : candidate_isometries(t1, opt)) {
    const Mat3i inv = unimodular_inverse<3>(g);
    bool rejected = false;
    for (int i = 0; i < 3 && !rejected; ++i) {
      const Vec3i gi = g.row(i).transpose();      // g^T e_i
      const Vec3i hi = inv.row(i).transpose();    // g^{-T} e_i
      const Vec3i ei = Vec3i::Unit(i);
      if (stably_under(t1, lambda1_t1, ei, gi)) rejected = true;
      if (!rejected && stably_under(t2, lambda1_t2, ei, hi)) rejected = true;
    }
    if (rejected) continue;
    const Sym3<S> image = apply_unimodular(g, t1);
    S residual(0);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const S d = abs_value<S>(S(image(i, j) - t2(i, j)));
        if (lt(residual, d)) residual = d;
      }
    if (leq(residual, tol) && (!best || lt(residual, best->residual)))
      best = IsometryCandidate<S>{g, residual};
  }
  if (best) {
    // express the result in the original (unreduced) coordinates
    const Mat3i back = unimodular_inverse<3>(in2.to_reduced) * best->g * in1.to_reduced;
    best->g = back;
  }
  return best;
}

} // namespace lat13
