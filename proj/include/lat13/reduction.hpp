// Lattice-basis reduction for ranks 2 and 3.
//
// Selling reduction works on the superbase v_1..v_{n+1} (sum zero) and
// iterates the classical exchange step until no pairwise inner product is
// positive (Selling 1874; see also Conway & Sloane's treatment of vonorms
// and conorms). Minkowski reduction for rank 3 is obtained from a Selling
// reduced superbase via the Balashov-Ursell case transforms, followed by a
// permutation/sign normalization into the standard inequality domain:
//
//   s11 <= s22 <= s33,  0 <= -2 s12 <= s11,  2|s13| <= s11,
//   0 <= -2 s23 <= s22, -2 (s12 + s13 + s23) <= s11 + s22.

#pragma once

#include "lat13/types.hpp"

#include <algorithm>
#include <numeric>

namespace lat13 {

template <class S, int N>
struct ReductionResult {
  Sym<S, N> reduced;
  MatI<N> transform; // reduced == transform * input * transform^T
};

namespace detail {

// rows of w are the n+1 superbase vectors (in input coordinates, sum zero)
template <int N>
using SuperbaseRows = Eigen::Matrix<std::int64_t, N + 1, N>;

template <int N>
SuperbaseRows<N> identity_superbase() {
  SuperbaseRows<N> w;
  w.template topRows<N>() = MatI<N>::Identity();
  w.row(N) = -VecI<N>::Ones().transpose();
  return w;
}

template <class S, int N>
Eigen::Matrix<S, N + 1, N + 1> superbase_gram(const Sym<S, N>& s,
                                              const SuperbaseRows<N>& w) {
  Eigen::Matrix<S, N + 1, N + 1> t;
  for (int i = 0; i <= N; ++i) {
    const VecI<N> vi = w.row(i).transpose();
    t(i, i) = quadratic_form(s, vi);
    for (int j = i + 1; j <= N; ++j) {
      const VecI<N> vj = w.row(j).transpose();
      t(i, j) = t(j, i) = bilinear_form(s, vi, vj);
    }
  }
  return t;
}

template <class S, int N>
std::size_t selling_iteration_cap(const Sym<S, N>& s) {
  std::size_t bits = 0;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) bits += bit_size(s(i, j));
  return 10 * std::max<std::size_t>(bits, 16);
}

// One exchange on the positive pair (i,j): v_i flips sign and is added to
// every other superbase vector so the sum stays zero (twice, for n = 2).
template <int N>
void selling_exchange(SuperbaseRows<N>& w, int i, int j) {
  const Eigen::Matrix<std::int64_t, 1, N> vi = w.row(i);
  for (int k = 0; k <= N; ++k) {
    if (k == i || k == j) continue;
    w.row(k) += (N == 2 ? 2 : 1) * vi;
  }
  w.row(i) = -vi;
}

} // namespace detail

// tilde(S): the (n+1)x(n+1) Gram matrix of the identity superbase
template <class S, int N>
Eigen::Matrix<S, N + 1, N + 1> superbase_gram(const Sym<S, N>& s) {
  return detail::superbase_gram(s, detail::identity_superbase<N>());
}

template <class S, int N>
bool is_selling_reduced(const Sym<S, N>& s) {
  require_positive_definite(s);
  const auto t = superbase_gram(s);
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (ScalarOps<S>::sign(t(i, j)) > 0) return false;
  return true;
}

// Exchanges strictly decrease sum of the superbase norms, so this terminates
// in exact mode; the iteration cap only guards float-mode cycling.
template <class S, int N>
ReductionResult<S, N> selling_reduce(const Sym<S, N>& s) {
  require_positive_definite(s);
  auto w = detail::identity_superbase<N>();
  const std::size_t cap = detail::selling_iteration_cap(s);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > cap)
      throw NonTermination("Selling reduction exceeded its iteration cap");
    const auto t = detail::superbase_gram(s, w);
    int bi = -1, bj = -1;
    S best(0);
    for (int i = 0; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        if (ScalarOps<S>::sign(t(i, j)) > 0 && (bi < 0 || gt(t(i, j), best))) {
          best = t(i, j);
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    detail::selling_exchange<N>(w, bi, bj);
  }
  MatI<N> g = w.template topRows<N>();
  return {apply_unimodular(g, s), g};
}

// rank-2 reduced form: 0 <= -2 s12 <= s11 <= s22
template <class S>
bool is_reduced_2d(const Sym2<S>& s) {
  const S m12 = S(S(-2) * s(0, 1));
  return ScalarOps<S>::sign(s(0, 1)) <= 0 && leq(m12, s(0, 0)) &&
         leq(s(0, 0), s(1, 1));
}

// The two shortest superbase vectors of a Selling reduced superbase already
// satisfy the rank-2 inequalities; ties keep superbase order.
template <class S>
ReductionResult<S, 2> reduce_2d(const Sym2<S>& s) {
  auto sel = selling_reduce(s);
  detail::SuperbaseRows<2> w;
  w.template topRows<2>() = sel.transform;
  w.row(2) = -(w.row(0) + w.row(1));
  std::array<int, 3> order{0, 1, 2};
  std::array<S, 3> norm;
  for (int i = 0; i < 3; ++i)
    norm[i] = quadratic_form<S, 2>(s, w.row(i).transpose());
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lt(norm[a], norm[b]); });
  Mat2i g;
  g.row(0) = w.row(order[0]);
  g.row(1) = w.row(order[1]);
  return {apply_unimodular(g, s), g};
}

template <class S>
bool is_minkowski_reduced(const Sym3<S>& s) {
  const S two(2);
  const S m12 = S(-two * s(0, 1)), m23 = S(-two * s(1, 2));
  const S a13 = S(two * abs_value<S>(s(0, 2)));
  const S boundary = S(-two * (s(0, 1) + s(0, 2) + s(1, 2)));
  const S d12 = S(s(0, 0) + s(1, 1));
  return leq(s(0, 0), s(1, 1)) && leq(s(1, 1), s(2, 2)) &&
         ScalarOps<S>::sign(s(0, 1)) <= 0 && leq(m12, s(0, 0)) &&
         leq(a13, s(0, 0)) && ScalarOps<S>::sign(s(1, 2)) <= 0 &&
         leq(m23, s(1, 1)) && leq(boundary, d12);
}

namespace detail {

// sign flips d (d_1 = 1) making s12 <= 0 and s23 <= 0
template <class S>
Mat3i normalizing_flips(const Sym3<S>& s) {
  const int d2 = ScalarOps<S>::sign(s(0, 1)) > 0 ? -1 : 1;
  const int d3 = ScalarOps<S>::sign(S(d2) * s(1, 2)) > 0 ? -1 : 1;
  Mat3i d = Mat3i::Identity();
  d(1, 1) = d2;
  d(2, 2) = d3;
  return d;
}

template <class S>
Mat3i diagonal_sort_permutation(const Sym3<S>& s) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lt(s(a, a), s(b, b)); });
  Mat3i p = Mat3i::Zero();
  for (int i = 0; i < 3; ++i) p(i, order[i]) = 1;
  return p;
}

// Exhaustive fallback for boundary ties: rebuild a basis from successively
// shortest vectors (coefficient box relative to the current basis), each
// required to complete the previous ones to a det +-1 basis.
template <class S>
bool greedy_minkowski(const Sym3<S>& s_orig, Mat3i& g, int radius) {
  struct Cand {
    VecI<3> v;
    S q;
  };
  std::vector<Cand> cands;
  VecI<3> c;
  for (c[0] = -radius; c[0] <= radius; ++c[0])
    for (c[1] = -radius; c[1] <= radius; ++c[1])
      for (c[2] = -radius; c[2] <= radius; ++c[2]) {
        if (is_zero_vec<3>(c)) continue;
        const VecI<3> v = g.transpose() * c;
        cands.push_back({v, quadratic_form(s_orig, v)});
      }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (lt(a.q, b.q)) return true;
    if (lt(b.q, a.q)) return false;
    return lex_less<3>(a.v, b.v);
  });
  Mat3i basis = Mat3i::Zero();
  int have = 0;
  for (const auto& cand : cands) {
    Mat3i trial = basis;
    trial.row(have) = cand.v.transpose();
    bool ok = true;
    if (have == 1) {
      const VecI<3> a = trial.row(0).transpose(), b = trial.row(1).transpose();
      const VecI<3> cr(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                       a[0] * b[1] - a[1] * b[0]);
      ok = !is_zero_vec<3>(cr);
    } else if (have == 2) {
      ok = is_unimodular<3>(trial);
    }
    if (!ok) continue;
    basis = trial;
    if (++have == 3) break;
  }
  if (have < 3) return false;
  g = basis;
  return true;
}

} // namespace detail

// Pipeline: Selling reduce, sort the superbase by norm, apply the
// Balashov-Ursell case transform, then normalize permutations/signs into the
// inequality domain. A bounded greedy rebuild covers boundary ties.
template <class S>
ReductionResult<S, 3> minkowski_reduce(const Sym3<S>& s) {
  auto sel = selling_reduce(s);

  detail::SuperbaseRows<3> w;
  w.template topRows<3>() = sel.transform;
  w.row(3) = -(w.row(0) + w.row(1) + w.row(2));
  std::array<int, 4> order{0, 1, 2, 3};
  std::array<S, 4> norm;
  for (int i = 0; i < 4; ++i)
    norm[i] = quadratic_form<S, 3>(s, w.row(i).transpose());
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lt(norm[a], norm[b]); });
  Mat3i g;
  for (int i = 0; i < 3; ++i) g.row(i) = w.row(order[i]);
  Sym3<S> cur = apply_unimodular(g, s);

  // case transform on the sorted superbase Gram matrix
  Mat3i sigma = Mat3i::Identity();
  if (ScalarOps<S>::sign(S(cur(0, 0) + S(2) * cur(0, 1))) < 0) {
    sigma << -1, 0, 0, 1, 1, 0, 0, 0, 1;
  } else if (ScalarOps<S>::sign(S(cur(0, 0) + S(2) * cur(0, 2))) < 0) {
    sigma << 1, 0, 0, 0, 1, 0, 1, 0, 1;
  } else if (ScalarOps<S>::sign(S(cur(1, 1) + S(2) * cur(1, 2))) < 0) {
    sigma << 1, 0, 0, 0, 1, 0, 0, -1, -1;
  }
  g = sigma * g;
  cur = apply_unimodular(g, s);

  const Mat3i p = detail::diagonal_sort_permutation(cur);
  g = p * g;
  cur = apply_unimodular(g, s);
  const Mat3i d = detail::normalizing_flips(cur);
  g = d * g;
  cur = apply_unimodular(g, s);

  if (!is_minkowski_reduced(cur)) {
    for (int radius : {2, 4}) {
      Mat3i gg = g;
      if (!detail::greedy_minkowski(s, gg, radius)) continue;
      Sym3<S> t = apply_unimodular(gg, s);
      const Mat3i dd = detail::normalizing_flips(t);
      gg = dd * gg;
      t = apply_unimodular(gg, s);
      if (is_minkowski_reduced(t)) {
        g = gg;
        cur = t;
        break;
      }
    }
  }
  if (!is_minkowski_reduced(cur))
    throw InternalAssertion("Minkowski normalization failed");
  return {cur, g};
}

} // namespace lat13
