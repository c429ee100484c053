// Core vocabulary: symmetric Gram matrices over an exact or floating scalar,
// integer vectors, and the GL_n(Z) action g S g^T.
//
// Conventions used everywhere:
//   - vectors are integer column vectors v; the form value is q(v) = v^T S v
//   - a basis change g (integer, det +-1) acts by S -> g S g^T, so the rows
//     of g express the new basis in the old one

#pragma once

#include "lat13/errors.hpp"
#include "lat13/numeric.hpp"
#include "lat13/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace lat13 {

template <class S, int N>
using Sym = Eigen::Matrix<S, N, N>;
template <class S>
using Sym3 = Sym<S, 3>;
template <class S>
using Sym2 = Sym<S, 2>;

template <int N>
using VecI = Eigen::Matrix<std::int64_t, N, 1>;
using Vec3i = VecI<3>;
using Vec2i = VecI<2>;

template <int N>
using MatI = Eigen::Matrix<std::int64_t, N, N>;
using Mat3i = MatI<3>;
using Mat2i = MatI<2>;

// entry order used by the CLI and file formats: s11,s22,s33,s12,s13,s23
template <class S>
Sym3<S> make_sym3(const S& s11, const S& s22, const S& s33, const S& s12,
                  const S& s13, const S& s23) {
  Sym3<S> m;
  m << s11, s12, s13, s12, s22, s23, s13, s23, s33;
  return m;
}

template <class S>
Sym2<S> make_sym2(const S& s11, const S& s22, const S& s12) {
  Sym2<S> m;
  m << s11, s12, s12, s22;
  return m;
}

template <class S>
std::array<S, 6> sym3_entries(const Sym3<S>& m) {
  return {m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2)};
}

template <class S>
std::array<S, 3> sym2_entries(const Sym2<S>& m) {
  return {m(0, 0), m(1, 1), m(0, 1)};
}

template <class S, int N>
S quadratic_form(const Sym<S, N>& s, const VecI<N>& v) {
  S q(0);
  for (int i = 0; i < N; ++i) {
    q += s(i, i) * S(v[i]) * S(v[i]);
    for (int j = i + 1; j < N; ++j) q += S(2) * s(i, j) * S(v[i]) * S(v[j]);
  }
  return q;
}

// v^T S w
template <class S, int N>
S bilinear_form(const Sym<S, N>& s, const VecI<N>& v, const VecI<N>& w) {
  S q(0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) q += S(v[i]) * s(i, j) * S(w[j]);
  return q;
}

// all leading principal minors positive
template <class S, int N>
bool is_positive_definite(const Sym<S, N>& s) {
  S minor = s(0, 0);
  if (ScalarOps<S>::sign(minor) <= 0) return false;
  if constexpr (N >= 2) {
    minor = s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1);
    if (ScalarOps<S>::sign(minor) <= 0) return false;
  }
  if constexpr (N >= 3) {
    minor = s.determinant();
    if (ScalarOps<S>::sign(minor) <= 0) return false;
  }
  return true;
}

template <class S, int N>
void require_positive_definite(const Sym<S, N>& s) {
  if (!is_positive_definite(s)) throw NotPositiveDefinite();
}

template <int N>
std::int64_t int_det(const MatI<N>& g) {
  if constexpr (N == 2) {
    return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  } else {
    return g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
           g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
           g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
  }
}

template <int N>
bool is_unimodular(const MatI<N>& g) {
  const auto d = int_det(g);
  return d == 1 || d == -1;
}

// inverse of a det +-1 integer matrix, again integral
template <int N>
MatI<N> unimodular_inverse(const MatI<N>& g) {
  const std::int64_t d = int_det(g);
  MatI<N> adj;
  if constexpr (N == 2) {
    adj << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  } else {
    adj(0, 0) = g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1);
    adj(0, 1) = g(0, 2) * g(2, 1) - g(0, 1) * g(2, 2);
    adj(0, 2) = g(0, 1) * g(1, 2) - g(0, 2) * g(1, 1);
    adj(1, 0) = g(1, 2) * g(2, 0) - g(1, 0) * g(2, 2);
    adj(1, 1) = g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0);
    adj(1, 2) = g(0, 2) * g(1, 0) - g(0, 0) * g(1, 2);
    adj(2, 0) = g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0);
    adj(2, 1) = g(0, 1) * g(2, 0) - g(0, 0) * g(2, 1);
    adj(2, 2) = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  }
  return d == 1 ? adj : MatI<N>(-adj);
}

template <class S, int N>
Sym<S, N> apply_unimodular(const MatI<N>& g, const Sym<S, N>& s) {
  Sym<S, N> gs = g.template cast<S>();
  Sym<S, N> r = gs * s * gs.transpose();
  // symmetrize to kill rounding asymmetry in float mode
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      S v = (r(i, j) + r(j, i)) / S(2);
      r(i, j) = v;
      r(j, i) = v;
    }
  return r;
}

template <int N>
bool lex_less(const VecI<N>& a, const VecI<N>& b) {
  for (int i = 0; i < N; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

template <int N>
struct LexLess {
  bool operator()(const VecI<N>& a, const VecI<N>& b) const { return lex_less<N>(a, b); }
};

// flips v so its first nonzero coordinate is positive
template <int N>
VecI<N> sign_normalized(const VecI<N>& v) {
  for (int i = 0; i < N; ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return VecI<N>(-v);
  }
  return v;
}

template <int N>
bool is_zero_vec(const VecI<N>& v) {
  return v == VecI<N>::Zero();
}

template <int N>
std::int64_t gcd_of(const VecI<N>& v) {
  std::int64_t g = 0;
  for (int i = 0; i < N; ++i) {
    std::int64_t x = v[i] < 0 ? -v[i] : v[i];
    while (x) {
      const std::int64_t t = g % x;
      g = x;
      x = t;
    }
  }
  return g;
}

template <int N>
bool is_primitive(const VecI<N>& v) {
  return gcd_of<N>(v) == 1;
}

} // namespace lat13
