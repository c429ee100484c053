// Brute-force coset minimization over a certified box.
//
// Deliberately independent of the reduction and enumeration machinery: no
// basis change, no LDL^T, just a full scan of w = u + r z inside a box that
// provably contains every vector with q(w) <= q(lift of u). Used by the
// verification suites to cross-check the fast path. Exact arithmetic only.

#pragma once

#include "lat13/vonorm.hpp"

namespace lat13::oracle {

// |w_i|^2 <= q(w) * (S^{-1})_{ii}, so a box built from an upper bound on the
// minimum certifiably contains all minimizers.
template <int N>
struct CosetScan {
  Rational value;
  std::vector<VecI<N>> minimizers;
};

template <int N>
CosetScan<N> coset_minimum_box(const Sym<Rational, N>& s, const VecI<N>& u, int r) {
  require_positive_definite(s);
  const VecI<N> um = mod_vec<N>(u, r);
  if (is_zero_vec<N>(um))
    throw std::invalid_argument("coset representative is 0 modulo r");

  // upper bound: best over all lifts with coordinates shifted by -r, 0, +r
  Rational ub;
  bool have_ub = false;
  VecI<N> shift = VecI<N>::Zero();
  while (true) {
    VecI<N> w;
    for (int i = 0; i < N; ++i) w[i] = um[i] + r * (shift[i] - 1);
    const Rational q = quadratic_form(s, w);
    if (!have_ub || q < ub) {
      ub = q;
      have_ub = true;
    }
    int i = N - 1;
    while (i >= 0 && shift[i] == 2) shift[i--] = 0;
    if (i < 0) break;
    ++shift[i];
  }

  const Sym<Rational, N> inv = s.inverse();
  VecI<N> box;
  for (int i = 0; i < N; ++i)
    box[i] = static_cast<std::int64_t>(floor_sqrt(ub * inv(i, i)).get_si());

  CosetScan<N> out;
  out.value = ub;
  VecI<N> w;
  const auto start = [&](int i) {
    // smallest member of the residue class >= -box[i]
    std::int64_t lo = -box[i];
    std::int64_t rem = ((um[i] - lo) % r + r) % r;
    return lo + rem;
  };
  std::array<std::int64_t, N> first{};
  for (int i = 0; i < N; ++i) first[i] = start(i);
  for (int i = 0; i < N; ++i) w[i] = first[i];
  while (true) {
    const Rational q = quadratic_form(s, w);
    if (q < out.value) {
      out.value = q;
      out.minimizers.clear();
      out.minimizers.push_back(w);
    } else if (q == out.value) {
      out.minimizers.push_back(w);
    }
    int i = N - 1;
    while (i >= 0 && w[i] + r > box[i]) {
      w[i] = first[i];
      --i;
    }
    if (i < 0) break;
    w[i] += r;
  }
  std::sort(out.minimizers.begin(), out.minimizers.end(), LexLess<N>{});
  return out;
}

// sorted vonorm values modulo r over the +-identified nonzero cosets
template <int N>
std::vector<Rational> sorted_vonorms(const Sym<Rational, N>& s, int r) {
  std::vector<Rational> values;
  for (const auto& rep : canonical_cosets<N>(r))
    values.push_back(coset_minimum_box<N>(s, rep, r).value);
  std::sort(values.begin(), values.end());
  return values;
}

template <int N>
PhiSet<N> phi_set(const Sym<Rational, N>& s, int r) {
  std::vector<VecI<N>> all;
  for (const auto& rep : canonical_cosets<N>(r)) {
    const auto scan = coset_minimum_box<N>(s, rep, r);
    for (const auto& v : scan.minimizers) {
      all.push_back(v);
      all.push_back(-v);
    }
  }
  std::sort(all.begin(), all.end(), LexLess<N>{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return {r, std::move(all)};
}

} // namespace lat13::oracle
