// The two piecewise-linear embeddings of rank-3 lattice space into R^13.
//
// iota_s: Selling reduce, list the seven vonorms (values of the form at the
// nonzero 0/1 vectors) and the six conorms, each sorted ascending.
// iota_m: Minkowski reduce, list the thirteen vonorms modulo 3 via the fixed
// vector evaluation below, sorted ascending.
//
// Both are invariant under the GL_3(Z) action and injective on classes, so
// any norm on R^13 compares lattices directly.

#pragma once

#include "lat13/vonorm.hpp"

namespace lat13 {

enum class EmbeddingKind { Selling, Minkowski };

enum class MetricKind { L1, L2, Linf };

template <class S>
struct Embedding13 {
  EmbeddingKind kind = EmbeddingKind::Minkowski;
  std::array<S, 13> values{}; // Selling: sorted 7 vonorms then sorted 6 conorms

  bool operator==(const Embedding13&) const = default;
};

template <class S>
Embedding13<S> iota_s(const Sym3<S>& s) {
  const auto red = selling_reduce(s).reduced;
  static const std::array<Vec3i, 7> vecs = {
      Vec3i(1, 0, 0), Vec3i(0, 1, 0), Vec3i(0, 0, 1), Vec3i(1, 1, 0),
      Vec3i(1, 0, 1), Vec3i(0, 1, 1), Vec3i(1, 1, 1)};
  Embedding13<S> e;
  e.kind = EmbeddingKind::Selling;
  for (int i = 0; i < 7; ++i) e.values[i] = quadratic_form(red, vecs[i]);
  std::stable_sort(e.values.begin(), e.values.begin() + 7,
                   [](const S& a, const S& b) { return a < b; });
  const auto t = superbase_gram<S, 3>(red);
  int k = 7;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e.values[k++] = -t(i, j);
  std::stable_sort(e.values.begin() + 7, e.values.end(),
                   [](const S& a, const S& b) { return a < b; });
  return e;
}

// the thirteen coset minima modulo 3 of a Minkowski reduced form, read off
// the fixed vector lists
template <class S>
std::array<S, 13> minkowski_vonorms3(const Sym3<S>& red) {
  static const std::array<Vec3i, 10> singles = {
      Vec3i(1, 0, 0), Vec3i(0, 1, 0), Vec3i(0, 0, 1), Vec3i(1, 1, 0),
      Vec3i(1, 0, 1), Vec3i(0, 1, 1), Vec3i(1, 1, 1), Vec3i(1, -1, 0),
      Vec3i(1, 0, -1), Vec3i(0, 1, -1)};
  static const std::array<Vec3i, 2> pair_a = {Vec3i(-1, 1, 1), Vec3i(2, 1, 1)};
  static const std::array<Vec3i, 2> pair_b = {Vec3i(1, 1, -1), Vec3i(1, 1, 2)};
  static const std::array<Vec3i, 4> quad = {Vec3i(1, -1, 1), Vec3i(1, 2, 1),
                                            Vec3i(-2, -1, 1), Vec3i(1, -1, -2)};
  std::array<S, 13> v;
  for (int i = 0; i < 10; ++i) v[i] = quadratic_form(red, singles[i]);
  const auto min_over = [&](const auto& list) {
    S best = quadratic_form(red, list[0]);
    for (std::size_t i = 1; i < list.size(); ++i) {
      S q = quadratic_form(red, list[i]);
      if (q < best) best = q;
    }
    return best;
  };
  v[10] = min_over(pair_a);
  v[11] = min_over(pair_b);
  v[12] = min_over(quad);
  return v;
}

template <class S>
Embedding13<S> iota_m(const Sym3<S>& s) {
  const auto red = minkowski_reduce(s).reduced;
  Embedding13<S> e;
  e.kind = EmbeddingKind::Minkowski;
  const auto v = minkowski_vonorms3(red);
  std::copy(v.begin(), v.end(), e.values.begin());
  std::stable_sort(e.values.begin(), e.values.end(),
                   [](const S& a, const S& b) { return a < b; });
  return e;
}

template <class S>
Embedding13<S> embed(const Sym3<S>& s, EmbeddingKind kind) {
  return kind == EmbeddingKind::Selling ? iota_s(s) : iota_m(s);
}

namespace detail {

template <class S, std::size_t K>
S metric_distance(const std::array<S, K>& a, const std::array<S, K>& b,
                  MetricKind m) {
  switch (m) {
    case MetricKind::L1: {
      S sum(0);
      for (std::size_t i = 0; i < K; ++i) sum += abs_value<S>(S(a[i] - b[i]));
      return sum;
    }
    case MetricKind::L2: {
      S sum(0);
      for (std::size_t i = 0; i < K; ++i) {
        const S d = S(a[i] - b[i]);
        sum += d * d;
      }
      // reported metric; the square root passes through double in exact mode
      if (ScalarOps<S>::is_zero(sum)) return S(0);
      return S(std::sqrt(to_double(sum)));
    }
    case MetricKind::Linf:
    default: {
      S best(0);
      for (std::size_t i = 0; i < K; ++i) {
        const S d = abs_value<S>(S(a[i] - b[i]));
        if (d > best) best = d;
      }
      return best;
    }
  }
}

} // namespace detail

template <class S>
S embed_distance(const Embedding13<S>& a, const Embedding13<S>& b, MetricKind m) {
  if (a.kind != b.kind) throw KindMismatch();
  return detail::metric_distance(a.values, b.values, m);
}

template <class S>
S lattice_distance(const Sym3<S>& s1, const Sym3<S>& s2, MetricKind m,
                   EmbeddingKind kind) {
  return embed_distance(embed(s1, kind), embed(s2, kind), m);
}

// all invertible n x n matrices over F_2, cached; |GL_2| = 6, |GL_3| = 168
template <int N>
const std::vector<MatI<N>>& gl_f2_matrices() {
  static const std::vector<MatI<N>> cache = [] {
    std::vector<MatI<N>> out;
    const int cells = N * N;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      MatI<N> g;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = (mask >> (i * N + j)) & 1u;
      const auto d = int_det<N>(g);
      if ((d % 2 + 2) % 2 == 1) out.push_back(g);
    }
    return out;
  }();
  return cache;
}

// Vonorm-map comparison minimized over GL_n(Z/2Z); a proper metric on
// lattice classes wherever the vonorm map is injective (known for n <= 5).
template <class S, int N>
S vonorm_distance_generic(const Sym<S, N>& s1, const Sym<S, N>& s2, MetricKind m) {
  const auto cosets = canonical_cosets<N>(2);
  const auto t1 = vonorm_map<S, N>(s1, 2), t2 = vonorm_map<S, N>(s2, 2);
  constexpr std::size_t K = std::size_t(1) << N;
  std::array<S, K - 1> v1{}, v2{};
  std::map<std::array<std::int64_t, N>, int> index;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    std::array<std::int64_t, N> key;
    for (int d = 0; d < N; ++d) key[d] = cosets[i][d];
    index[key] = static_cast<int>(i);
    v1[i] = t1.entries[i].value;
    v2[i] = t2.entries[i].value;
  }
  auto coset_index = [&](const VecI<N>& u) {
    std::array<std::int64_t, N> key;
    for (int d = 0; d < N; ++d) key[d] = u[d];
    return index.at(key);
  };
  bool have = false;
  S best(0);
  for (const auto& g : gl_f2_matrices<N>()) {
    std::array<S, K - 1> permuted{};
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      const VecI<N> image = mod_vec<N>(VecI<N>(g.transpose() * cosets[i]), 2);
      permuted[i] = v2[coset_index(image)];
    }
    const S d = detail::metric_distance(v1, permuted, m);
    if (!have || d < best) {
      best = d;
      have = true;
    }
  }
  return best;
}

// Rank-2 comparison: the values of the reduced form at e1, e2, e1+e2 are
// already sorted; compare the two 3-vectors directly.
template <class S>
S rank2_distance(const Sym2<S>& s1, const Sym2<S>& s2, MetricKind m) {
  const auto r1 = reduce_2d(s1).reduced, r2 = reduce_2d(s2).reduced;
  const auto ell = [](const Sym2<S>& r) {
    return std::array<S, 3>{r(0, 0), r(1, 1), S(r(0, 0) + r(1, 1) + S(2) * r(0, 1))};
  };
  return detail::metric_distance(ell(r1), ell(r2), m);
}

} // namespace lat13
