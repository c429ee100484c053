// Vonorms modulo r, conorms, and Voronoi vectors modulo r.
//
// vo_{S,r}(u + rZ^n) is the minimum of the quadratic form over a nonzero
// coset of Z^n / rZ^n. Minima are found exactly: the form is Selling reduced
// first, then cosets are enumerated Fincke-Pohst style over the exact LDL^T
// decomposition, scanning each coordinate outward from the parabola center
// within its residue class. No tolerance enters in exact mode.

#pragma once

#include "lat13/reduction.hpp"

#include <map>
#include <utility>

namespace lat13 {

template <class S, int N>
struct VonormEntry {
  VecI<N> rep;     // canonical coset representative, coordinates in [0, r)
  S value;
  VecI<N> witness; // achieves value; witness = rep (mod r) up to sign
};

template <class S, int N>
struct VonormTable {
  int r = 2;
  std::vector<VonormEntry<S, N>> entries; // ordered lexicographically by rep

  const VonormEntry<S, N>* find(const VecI<N>& rep) const {
    for (const auto& e : entries)
      if (e.rep == rep) return &e;
    return nullptr;
  }
};

// finite set of integer vectors closed under negation, 0 excluded
template <int N>
struct PhiSet {
  int r = 2;
  std::vector<VecI<N>> vectors; // lex sorted

  bool contains(const VecI<N>& v) const {
    return std::binary_search(vectors.begin(), vectors.end(), v, LexLess<N>{});
  }
  bool subset_of(const PhiSet& other) const {
    for (const auto& v : vectors)
      if (!other.contains(v)) return false;
    return true;
  }
  std::size_t size() const { return vectors.size(); }
  bool operator==(const PhiSet& other) const { return vectors == other.vectors; }
};

template <int N>
PhiSet<N> make_phi_set(std::vector<VecI<N>> vectors, int r) {
  std::vector<VecI<N>> all;
  all.reserve(vectors.size() * 2);
  for (const auto& v : vectors) {
    all.push_back(v);
    all.push_back(-v);
  }
  std::sort(all.begin(), all.end(), LexLess<N>{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return {r, std::move(all)};
}

template <int N>
VecI<N> mod_vec(const VecI<N>& v, int r) {
  VecI<N> m;
  for (int i = 0; i < N; ++i) m[i] = ((v[i] % r) + r) % r;
  return m;
}

// lexicographically smaller of the two residue vectors of {u, -u}
template <int N>
VecI<N> canonical_coset_rep(const VecI<N>& u, int r) {
  const VecI<N> a = mod_vec<N>(u, r);
  const VecI<N> b = mod_vec<N>(VecI<N>(-a), r);
  return lex_less<N>(b, a) ? b : a;
}

// all canonical nonzero coset representatives, lex sorted
template <int N>
std::vector<VecI<N>> canonical_cosets(int r) {
  std::vector<VecI<N>> reps;
  VecI<N> u = VecI<N>::Zero();
  while (true) {
    if (!is_zero_vec<N>(u) && canonical_coset_rep<N>(u, r) == u) reps.push_back(u);
    int i = N - 1;
    while (i >= 0 && u[i] == r - 1) u[i--] = 0;
    if (i < 0) break;
    ++u[i];
  }
  return reps;
}

// Exact shortest-vector engine over one positive-definite form. Reduction
// happens once in the constructor; queries map coordinates back and forth.
template <class S, int N>
class LatticeEnumerator {
public:
  explicit LatticeEnumerator(const Sym<S, N>& s) {
    require_positive_definite(s);
    auto red = selling_reduce(s);
    reduced_ = red.reduced;
    basis_ = red.transform;
    basis_inv_ = unimodular_inverse<N>(basis_);
    // exact LDL^T of the reduced form
    Sym<S, N> a = reduced_;
    lower_ = Sym<S, N>::Identity();
    for (int k = 0; k < N; ++k) {
      S d = a(k, k);
      for (int m = 0; m < k; ++m) d -= lower_(k, m) * lower_(k, m) * diag_[m];
      diag_[k] = d;
      for (int i = k + 1; i < N; ++i) {
        S v = a(i, k);
        for (int m = 0; m < k; ++m) v -= lower_(i, m) * lower_(k, m) * diag_[m];
        lower_(i, k) = v / d;
      }
    }
  }

  struct CosetMin {
    S value;
    std::vector<VecI<N>> minimizers; // original coordinates; the full set
  };

  // minimum of q over u + rZ^N with every minimizer; u must not be 0 mod r
  CosetMin coset_minimum(const VecI<N>& u, int r) const {
    const VecI<N> u_red = mod_vec<N>(basis_inv_.transpose() * u, r);
    if (is_zero_vec<N>(u_red))
      throw std::invalid_argument("coset representative is 0 modulo r");
    // symmetric lift of the representative gives the starting upper bound
    VecI<N> lift;
    for (int i = 0; i < N; ++i)
      lift[i] = u_red[i] > r / 2 ? u_red[i] - r : u_red[i];
    State st;
    st.r = r;
    st.residue = mod_vec<N>(u_red, r);
    st.bound = quadratic_form(reduced_, lift);
    st.minimize = true;
    scan(st);
    CosetMin out;
    out.value = st.bound;
    out.minimizers.reserve(st.hits.size());
    for (const auto& x : st.hits) out.minimizers.push_back(basis_.transpose() * x);
    std::sort(out.minimizers.begin(), out.minimizers.end(), LexLess<N>{});
    return out;
  }

  // all v != 0 with q(v) <= bound, original coordinates, with values
  std::vector<std::pair<VecI<N>, S>> ball(const S& bound) const {
    State st;
    st.r = 1;
    st.residue = VecI<N>::Zero();
    st.bound = bound;
    st.minimize = false;
    scan(st);
    std::vector<std::pair<VecI<N>, S>> out;
    out.reserve(st.hits.size());
    for (std::size_t i = 0; i < st.hits.size(); ++i) {
      if (is_zero_vec<N>(st.hits[i])) continue;
      out.emplace_back(basis_.transpose() * st.hits[i], st.values[i]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (lt(a.second, b.second)) return true;
      if (lt(b.second, a.second)) return false;
      return lex_less<N>(a.first, b.first);
    });
    return out;
  }

  const Sym<S, N>& reduced() const { return reduced_; }
  const MatI<N>& transform() const { return basis_; }

private:
  struct State {
    int r = 1;
    VecI<N> residue;
    S bound{};
    bool minimize = false;
    VecI<N> x = VecI<N>::Zero();
    std::vector<VecI<N>> hits;
    std::vector<S> values;
  };

  void scan(State& st) const { level(st, N - 1, S(0)); }

  void level(State& st, int k, const S& acc) const {
    if (k < 0) {
      if (st.minimize && lt(acc, st.bound)) {
        st.bound = acc;
        st.hits.clear();
      }
      st.hits.push_back(st.x);
      if (!st.minimize) st.values.push_back(acc);
      return;
    }
    S offset(0);
    for (int i = k + 1; i < N; ++i) offset += lower_(i, k) * S(st.x[i]);
    // nearest member of the residue class to the parabola center -offset
    const S t_star = (-offset - S(st.residue[k])) / S(st.r);
    const std::int64_t t0 = nearest_int(t_star);
    for (std::int64_t t = t0;; ++t) {
      if (!try_point(st, k, acc, offset, t)) break;
    }
    for (std::int64_t t = t0 - 1;; --t) {
      if (!try_point(st, k, acc, offset, t)) break;
    }
  }

  bool try_point(State& st, int k, const S& acc, const S& offset,
                 std::int64_t t) const {
    const std::int64_t xk = st.residue[k] + static_cast<std::int64_t>(st.r) * t;
    const S y = S(xk) + offset;
    const S next = acc + diag_[k] * y * y;
    // ties are kept: the bound only shrinks strictly below
    if (next > st.bound) return false;
    st.x[k] = xk;
    level(st, k - 1, next);
    return true;
  }

  static std::int64_t nearest_int(const S& x) {
    if constexpr (ScalarOps<S>::exact) {
      return static_cast<std::int64_t>(rational_floor(x + Rational(1, 2)).get_si());
    } else {
      return static_cast<std::int64_t>(std::floor(x + 0.5));
    }
  }

  Sym<S, N> reduced_;
  MatI<N> basis_, basis_inv_;
  Sym<S, N> lower_;
  std::array<S, N> diag_;
};

// minimum and one deterministic witness (lexicographically smallest
// minimizer lying in the exact coset u + rZ^N)
template <class S, int N>
std::pair<S, VecI<N>> shortest_in_coset(const Sym<S, N>& s, const VecI<N>& u, int r) {
  LatticeEnumerator<S, N> engine(s);
  auto m = engine.coset_minimum(u, r);
  return {m.value, m.minimizers.front()};
}

// first successive minimum: the smallest of the 2^n - 1 vonorms modulo 2
template <class S, int N>
S first_minimum(const LatticeEnumerator<S, N>& engine) {
  bool have = false;
  S best(0);
  for (const auto& u : canonical_cosets<N>(2)) {
    auto m = engine.coset_minimum(u, 2);
    if (!have || lt(m.value, best)) {
      best = m.value;
      have = true;
    }
  }
  return best;
}

template <class S, int N>
S first_minimum(const Sym<S, N>& s) {
  return first_minimum(LatticeEnumerator<S, N>(s));
}

template <class S, int N>
VonormTable<S, N> vonorm_map(const Sym<S, N>& s, int r) {
  if (r < 2) throw std::invalid_argument("vonorm modulus must be >= 2");
  LatticeEnumerator<S, N> engine(s);
  VonormTable<S, N> table;
  table.r = r;
  for (const auto& rep : canonical_cosets<N>(r)) {
    auto m = engine.coset_minimum(rep, r);
    // witness canonical over the +- identified class: flip each minimizer to
    // have positive leading coordinate, take the lex smallest
    VecI<N> witness = sign_normalized<N>(m.minimizers.front());
    for (const auto& v : m.minimizers) {
      const VecI<N> n = sign_normalized<N>(v);
      if (lex_less<N>(n, witness)) witness = n;
    }
    table.entries.push_back({rep, m.value, witness});
  }
  return table;
}

template <class S, int N>
PhiSet<N> voronoi_vectors(const Sym<S, N>& s, int r) {
  LatticeEnumerator<S, N> engine(s);
  std::vector<VecI<N>> all;
  for (const auto& rep : canonical_cosets<N>(r)) {
    auto m = engine.coset_minimum(rep, r);
    for (const auto& v : m.minimizers) {
      all.push_back(v);
      all.push_back(-v);
    }
  }
  std::sort(all.begin(), all.end(), LexLess<N>{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return {r, std::move(all)};
}

// |Phi_{S,r}| of a form in general position: one +- pair per coset, plus the
// self-negative cosets contributing two pairs each when r is even
template <int N>
std::size_t general_position_count(int r) {
  std::size_t rn = 1, twon = 1;
  for (int i = 0; i < N; ++i) {
    rn *= static_cast<std::size_t>(r);
    twon *= 2;
  }
  return r % 2 == 0 ? rn + twon - 2 : rn - 1;
}

template <class S, int N>
bool is_general_position(const Sym<S, N>& s, int r) {
  return voronoi_vectors(s, r).size() == general_position_count<N>(r);
}

// Conorms: the negated, 1/2^{n-1}-normalized Fourier transform of the mod-2
// vonorm map over the characters of (Z/2Z)^3. For a Selling reduced form
// these are the negated off-diagonal entries of the superbase Gram matrix.
template <class S>
struct ConormMap {
  std::array<S, 8> values; // indexed by character bits c1 + 2 c2 + 4 c3

  // the six characters with chi(e1), chi(e2), chi(e3) not all equal
  std::array<S, 6> mixed() const {
    return {values[1], values[2], values[3], values[4], values[5], values[6]};
  }
};

template <class S>
ConormMap<S> conorm_map(const Sym3<S>& s) {
  const auto table = vonorm_map<S, 3>(s, 2);
  ConormMap<S> co;
  for (int c = 0; c < 8; ++c) {
    S sum(0);
    for (const auto& e : table.entries) {
      const int bits = static_cast<int>(e.rep[0] + 2 * e.rep[1] + 4 * e.rep[2]);
      const int parity = __builtin_popcount(static_cast<unsigned>(bits & c)) & 1;
      sum += parity ? -e.value : e.value;
    }
    co.values[c] = -sum / S(4);
  }
  return co;
}

} // namespace lat13
