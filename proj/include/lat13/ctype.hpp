// Enumeration of primitive C-type domains modulo r, up to GL_n(Z).
//
// A C-type domain D_r(Phi) collects the forms for which every vector of Phi
// is shortest in its coset modulo r; primitive domains are the
// full-dimensional ones. The enumeration walks the facet graph: candidate
// wall inequalities come from pairs u, v = u + r w inside Phi subject to a
// primitivity condition, facets are certified by exact LP, and each wall
// crossing is validated by recomputing the Voronoi vectors of a rational
// sample point just beyond the wall. Everything is exact.

#pragma once

#include "lat13/simplex.hpp"
#include "lat13/vonorm.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>

namespace lat13 {

template <int N>
constexpr int sym_dim() {
  return N * (N + 1) / 2;
}

// coordinate order s11,s22[,s33],s12[,s13,s23]: diagonal then off-diagonal
template <class S, int N>
std::vector<S> sym_to_coords(const Sym<S, N>& s) {
  std::vector<S> x;
  for (int i = 0; i < N; ++i) x.push_back(s(i, i));
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) x.push_back(s(i, j));
  return x;
}

template <class S, int N>
Sym<S, N> coords_to_sym(const std::vector<S>& x) {
  Sym<S, N> s;
  int k = 0;
  for (int i = 0; i < N; ++i) s(i, i) = x[k++];
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      s(i, j) = x[k];
      s(j, i) = x[k];
      ++k;
    }
  return s;
}

template <int N>
struct ConeInequality {
  MatI<N> coeff; // v v^T - u u^T; S inside the half-space iff trace(S C) >= 0
  VecI<N> u, v;
};

template <int N>
ConeInequality<N> make_cone_inequality(const VecI<N>& u, const VecI<N>& v) {
  // normalize the pair sign so the stored provenance is canonical
  const VecI<N> un = sign_normalized<N>(u);
  const VecI<N> vn = un == u ? v : VecI<N>(-v);
  ConeInequality<N> c;
  c.u = un;
  c.v = vn;
  c.coeff = vn * vn.transpose() - un * un.transpose();
  return c;
}

// trace(S C) as a functional on the sym_dim coordinates of S
template <int N>
std::vector<Rational> cone_functional(const MatI<N>& coeff) {
  Sym<Rational, N> c;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) c(i, j) = Rational(static_cast<long>(coeff(i, j)));
  auto x = sym_to_coords<Rational, N>(c);
  for (int k = N; k < sym_dim<N>(); ++k) x[k] *= 2;
  return x;
}

template <int N>
std::array<std::int64_t, N * N> flatten(const MatI<N>& m) {
  std::array<std::int64_t, N * N> f{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) f[i * N + j] = m(i, j);
  return f;
}

template <int N>
MatI<N> primitive_direction(const MatI<N>& coeff) {
  std::int64_t g = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::int64_t x = coeff(i, j) < 0 ? -coeff(i, j) : coeff(i, j);
      while (x) {
        const std::int64_t t = g % x;
        g = x;
        x = t;
      }
    }
  return g > 1 ? MatI<N>(coeff / g) : coeff;
}

template <int N>
bool linearly_independent(const VecI<N>& a, const VecI<N>& b) {
  if constexpr (N == 2) {
    return a[0] * b[1] - a[1] * b[0] != 0;
  } else {
    return a[1] * b[2] - a[2] * b[1] != 0 || a[2] * b[0] - a[0] * b[2] != 0 ||
           a[0] * b[1] - a[1] * b[0] != 0;
  }
}

// Candidate wall inequalities of D_r(phi): pairs u, v = u + r w with u, w in
// phi, the chain {k w : 1 <= k <= r/2} u {u + k w : 1 <= k <= r-1} inside
// phi, and u + v (odd r) or (u + v)/2 (even r) primitive.
template <int N>
std::vector<ConeInequality<N>> ctype_inequalities(const PhiSet<N>& phi, int r) {
  std::vector<ConeInequality<N>> out;
  for (const auto& u : phi.vectors) {
    for (const auto& w : phi.vectors) {
      if (!linearly_independent<N>(u, w)) continue;
      const VecI<N> v = u + r * w;
      if (r % 2 == 0) {
        const VecI<N> half = u + (r / 2) * w;
        if (!is_primitive<N>(half)) continue;
      } else {
        if (!is_primitive<N>(VecI<N>(u + v))) continue;
      }
      bool chain = true;
      for (int k = 1; chain && k <= r / 2; ++k)
        chain = phi.contains(VecI<N>(k * w));
      for (int k = 1; chain && k <= r - 1; ++k)
        chain = phi.contains(VecI<N>(u + k * w));
      if (!chain) continue;
      out.push_back(make_cone_inequality<N>(u, v));
    }
  }
  // canonical order, duplicates (same pair via both signs) merged
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (lex_less<N>(a.u, b.u)) return true;
    if (lex_less<N>(b.u, a.u)) return false;
    return lex_less<N>(a.v, b.v);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.u == b.u && a.v == b.v;
                        }),
            out.end());
  return out;
}

namespace detail {

// groups of inequalities sharing a primitive direction
template <int N>
struct DirectionGroup {
  MatI<N> direction;
  std::vector<Rational> functional;
  std::vector<ConeInequality<N>> members;
};

template <int N>
std::vector<DirectionGroup<N>> group_by_direction(
    const std::vector<ConeInequality<N>>& ineqs) {
  std::map<std::array<std::int64_t, N * N>, DirectionGroup<N>> groups;
  for (const auto& c : ineqs) {
    const MatI<N> dir = primitive_direction<N>(c.coeff);
    auto& g = groups[flatten<N>(dir)];
    if (g.members.empty()) {
      g.direction = dir;
      g.functional = cone_functional<N>(dir);
    }
    g.members.push_back(c);
  }
  std::vector<DirectionGroup<N>> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

// LP: maximize delta subject to f_k.x >= delta for the active functionals,
// f_0.x = 0 when a facet candidate is pinned, trace(x) = 1, 0 <= delta <= 1.
// Returns delta* and the witness point.
template <int N>
std::pair<Rational, std::vector<Rational>> max_slack_point(
    const std::vector<std::vector<Rational>>& active,
    const std::vector<Rational>* pinned) {
  const int d = sym_dim<N>();
  // variables: p(d), q(d) with x = p - q, delta, one slack per active row,
  // one slack for delta <= 1
  const std::size_t nvar = 2 * d + 1 + active.size() + 1;
  LpProblem lp;
  lp.c.assign(nvar, Rational(0));
  lp.c[2 * d] = -1; // maximize delta
  auto row = [&](const std::vector<Rational>& f) {
    std::vector<Rational> a(nvar, Rational(0));
    for (int j = 0; j < d; ++j) {
      a[j] = f[j];
      a[d + j] = -f[j];
    }
    return a;
  };
  for (std::size_t k = 0; k < active.size(); ++k) {
    auto a = row(active[k]);
    a[2 * d] = -1;
    a[2 * d + 1 + k] = -1;
    lp.a.push_back(std::move(a));
    lp.b.push_back(0);
  }
  if (pinned) {
    lp.a.push_back(row(*pinned));
    lp.b.push_back(0);
  }
  {
    std::vector<Rational> tr(nvar, Rational(0));
    for (int j = 0; j < N; ++j) {
      tr[j] = 1;
      tr[d + j] = -1;
    }
    lp.a.push_back(std::move(tr));
    lp.b.push_back(1);
  }
  {
    std::vector<Rational> cap(nvar, Rational(0));
    cap[2 * d] = 1;
    cap[2 * d + 1 + active.size()] = 1;
    lp.a.push_back(std::move(cap));
    lp.b.push_back(1);
  }
  const LpResult res = solve_lp(lp);
  if (res.status != LpResult::Status::Optimal) return {Rational(-1), {}};
  std::vector<Rational> x(d);
  for (int j = 0; j < d; ++j) x[j] = res.x[j] - res.x[d + j];
  return {-res.objective, std::move(x)};
}

template <int N>
Rational dot(const std::vector<Rational>& f, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * x[i];
  return s;
}

} // namespace detail

// The irredundant subset: an inequality is a facet when some point of the
// cone meets it with every non-parallel inequality strictly positive; parallel
// duplicates collapse to their lexicographically first member.
template <int N>
std::vector<ConeInequality<N>> facets(const std::vector<ConeInequality<N>>& ineqs) {
  auto groups = detail::group_by_direction<N>(ineqs);
  std::vector<std::vector<Rational>> all;
  for (const auto& g : groups) all.push_back(g.functional);

  auto [delta, interior] = detail::max_slack_point<N>(all, nullptr);
  if (sgn(delta) <= 0)
    throw DegenerateCone("cone is not full-dimensional");

  std::vector<ConeInequality<N>> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<std::vector<Rational>> others;
    for (std::size_t k = 0; k < groups.size(); ++k)
      if (k != i) others.push_back(groups[k].functional);
    auto [slack, witness] = detail::max_slack_point<N>(others, &groups[i].functional);
    if (sgn(slack) > 0) out.push_back(groups[i].members.front());
  }
  return out;
}

// swap rule for n <= 3: the neighboring Phi differs in exactly one +- pair
template <int N>
PhiSet<N> neighbor_phi(const PhiSet<N>& phi, const VecI<N>& u, const VecI<N>& v, int r) {
  std::vector<VecI<N>> vecs;
  for (const auto& x : phi.vectors)
    if (x != u && x != VecI<N>(-u)) vecs.push_back(x);
  vecs.push_back(v);
  vecs.push_back(-v);
  std::sort(vecs.begin(), vecs.end(), LexLess<N>{});
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  return {r, std::move(vecs)};
}

// General replacement rules from the parallelogram identities. For n <= 3
// they reduce to the swap above; kept generic for reference and testing.
template <int N>
PhiSet<N> neighbor_phi_general(const PhiSet<N>& phi, const VecI<N>& u,
                               const VecI<N>& v, int r) {
  using QVec = Eigen::Matrix<Rational, N, 1>;
  const auto to_q = [](const VecI<N>& x) {
    QVec q;
    for (int i = 0; i < N; ++i) q[i] = Rational(static_cast<long>(x[i]));
    return q;
  };
  const QVec a = to_q(u + v) / Rational(2);  // (u+v)/2
  const QVec dvec = to_q(u - v) / Rational(2); // (u-v)/2
  const QVec b = to_q(u - v) / Rational(static_cast<long>(r));
  const QVec second_shift = r % 2 == 0
                                ? QVec(a * Rational(static_cast<long>(r / 2)))
                                : QVec(to_q(u + v) * frac(r, 2));

  enum class KKind { Integer, OddInteger, OddOverTwo };
  // x = k p + q with k > 0 of the required kind
  const auto match = [&](const QVec& x, const QVec& p, const QVec& q,
                         KKind kind) -> std::optional<QVec> {
    int pivot = -1;
    for (int i = 0; i < N; ++i)
      if (sgn(p[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    const Rational k = Rational(x[pivot] - q[pivot]) / p[pivot];
    if (sgn(k) <= 0) return std::nullopt;
    for (int i = 0; i < N; ++i)
      if (x[i] != k * p[i] + q[i]) return std::nullopt;
    const Rational doubled = k * 2;
    switch (kind) {
      case KKind::Integer:
        if (k.get_den() != 1) return std::nullopt;
        break;
      case KKind::OddInteger:
        if (k.get_den() != 1 || mpz_even_p(k.get_num_mpz_t())) return std::nullopt;
        break;
      case KKind::OddOverTwo:
        if (doubled.get_den() != 1 || mpz_even_p(doubled.get_num_mpz_t()))
          return std::nullopt;
        break;
    }
    return QVec(k * p - q);
  };

  // the patterns carry a +- prefix: try x, then -x with a negated image
  const auto match_signed = [&](const QVec& x) -> std::optional<QVec> {
    for (int s : {1, -1}) {
      const QVec xs = s > 0 ? x : QVec(-x);
      std::optional<QVec> repl;
      if (r % 2 == 0) {
        repl = match(xs, a, dvec, KKind::Integer);
        if (!repl) repl = match(xs, b, second_shift, KKind::Integer);
      } else {
        repl = match(xs, a, dvec, KKind::OddInteger);
        if (!repl) repl = match(xs, QVec(b / Rational(2)), second_shift, KKind::OddOverTwo);
      }
      if (repl) return s > 0 ? repl : std::optional<QVec>(QVec(-*repl));
    }
    return std::nullopt;
  };

  std::vector<VecI<N>> out;
  for (const auto& xv : phi.vectors) {
    const std::optional<QVec> repl = match_signed(to_q(xv));
    VecI<N> y = xv;
    if (repl) {
      bool integral = true;
      for (int i = 0; i < N; ++i)
        if ((*repl)[i].get_den() != 1) integral = false;
      if (integral)
        for (int i = 0; i < N; ++i) y[i] = static_cast<std::int64_t>((*repl)[i].get_num().get_si());
    }
    out.push_back(y);
  }
  std::sort(out.begin(), out.end(), LexLess<N>{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return {r, std::move(out)};
}

// all signed permutation matrices (8 for n = 2, 48 for n = 3)
template <int N>
const std::vector<MatI<N>>& signed_permutations() {
  static const std::vector<MatI<N>> cache = [] {
    std::vector<MatI<N>> out;
    std::array<int, N> perm;
    for (int i = 0; i < N; ++i) perm[i] = i;
    do {
      for (unsigned signs = 0; signs < (1u << N); ++signs) {
        MatI<N> m = MatI<N>::Zero();
        for (int i = 0; i < N; ++i) m(i, perm[i]) = (signs >> i) & 1u ? -1 : 1;
        out.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return cache;
}

// cheap equivalence-class key: minimum over signed permutations of the
// lex-sorted vector list
template <int N>
std::vector<VecI<N>> canonical_phi_form(const PhiSet<N>& phi) {
  std::vector<VecI<N>> best;
  for (const auto& p : signed_permutations<N>()) {
    std::vector<VecI<N>> image;
    image.reserve(phi.vectors.size());
    for (const auto& v : phi.vectors) image.push_back(p * v);
    std::sort(image.begin(), image.end(), LexLess<N>{});
    if (best.empty() ||
        std::lexicographical_compare(image.begin(), image.end(), best.begin(),
                                     best.end(), LexLess<N>{}))
      best = std::move(image);
  }
  return best;
}

// Full GL_n(Z) equivalence: fix a linearly independent anchor triple of one
// set, try every ordered image tuple from the other, keep integral det +-1
// solutions that map the sets onto each other. Returns a map m with
// m * phi1 = phi2 when one exists.
template <int N>
std::optional<MatI<N>> phi_equivalent(const PhiSet<N>& phi1, const PhiSet<N>& phi2) {
  if (phi1.size() != phi2.size()) return std::nullopt;

  // anchor: first N linearly independent vectors
  std::vector<VecI<N>> anchor;
  Eigen::Matrix<Rational, N, N> amat;
  for (const auto& v : phi1.vectors) {
    anchor.push_back(v);
    bool ok = true;
    if (anchor.size() >= 2 && !linearly_independent<N>(anchor[0], anchor[1])) ok = false;
    if constexpr (N == 3) {
      if (ok && anchor.size() == 3) {
        MatI<3> t;
        for (int i = 0; i < 3; ++i) t.col(i) = anchor[i];
        if (int_det<3>(t) == 0) ok = false;
      }
    }
    if (!ok) anchor.pop_back();
    if (anchor.size() == N) break;
  }
  if (anchor.size() < N) return std::nullopt;
  MatI<N> a;
  for (int i = 0; i < N; ++i) a.col(i) = anchor[i];
  const std::int64_t det_a = int_det<N>(a);

  std::vector<int> idx(N, 0);
  const int n2 = static_cast<int>(phi2.vectors.size());
  std::vector<int> pick(N);
  std::function<bool(int, MatI<N>&)> search = [&](int level, MatI<N>& out) -> bool {
    if (level == N) {
      MatI<N> b;
      for (int i = 0; i < N; ++i) b.col(i) = phi2.vectors[pick[i]];
      if (int_det<N>(b) != det_a && int_det<N>(b) != -det_a) return false;
      // solve m a = b exactly
      Eigen::Matrix<Rational, N, N> aq, bq;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          aq(i, j) = Rational(static_cast<long>(a(i, j)));
          bq(i, j) = Rational(static_cast<long>(b(i, j)));
        }
      const Eigen::Matrix<Rational, N, N> mq = bq * aq.inverse();
      MatI<N> m;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (mq(i, j).get_den() != 1) return false;
          m(i, j) = static_cast<std::int64_t>(mq(i, j).get_num().get_si());
        }
      if (!is_unimodular<N>(m)) return false;
      for (const auto& v : phi1.vectors)
        if (!phi2.contains(VecI<N>(m * v))) return false;
      out = m;
      return true;
    }
    for (pick[level] = 0; pick[level] < n2; ++pick[level]) {
      if (search(level + 1, out)) return true;
    }
    return false;
  };
  MatI<N> m;
  if (search(0, m)) return m;
  return std::nullopt;
}

template <int N>
struct FacetRecord {
  ConeInequality<N> wall; // validated provenance pair (u out, v in)
  int neighbor = -1;      // class index in the enumeration output
};

template <int N>
struct CTypeDomain {
  PhiSet<N> phi;
  std::vector<FacetRecord<N>> facets;
  Sym<Rational, N> interior; // strictly interior, positive-definite sample
};

// Initial Phi in general position: the box set for odd r; for even r a
// perturbation direction splitting every coset tie, tried over a
// deterministic ladder of candidates.
template <int N>
PhiSet<N> initial_phi(int r) {
  if (r < 2) throw std::invalid_argument("modulus must be >= 2");
  if (r % 2 == 1) {
    std::vector<VecI<N>> vecs;
    VecI<N> x;
    const std::int64_t half = r / 2;
    const auto fill = [&](auto&& self, int k) -> void {
      if (k == N) {
        if (!is_zero_vec<N>(x)) vecs.push_back(x);
        return;
      }
      for (x[k] = -half; x[k] <= half; ++x[k]) self(self, k + 1);
    };
    fill(fill, 0);
    std::sort(vecs.begin(), vecs.end(), LexLess<N>{});
    return {r, std::move(vecs)};
  }

  const Sym<Rational, N> identity = Sym<Rational, N>::Identity();
  const PhiSet<N> phi_id = voronoi_vectors<Rational, N>(identity, r);

  // coset collisions that the direction T has to split
  std::vector<std::pair<VecI<N>, VecI<N>>> collisions;
  for (std::size_t i = 0; i < phi_id.vectors.size(); ++i)
    for (std::size_t j = i + 1; j < phi_id.vectors.size(); ++j) {
      const VecI<N>&u = phi_id.vectors[i], &v = phi_id.vectors[j];
      if (u == VecI<N>(-v)) continue;
      if (mod_vec<N>(VecI<N>(u - v), r) != VecI<N>::Zero()) continue;
      collisions.emplace_back(u, v);
    }

  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<int> num(-7, 7);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Sym<Rational, N> t;
    if (attempt == 0) {
      // fixed generic direction with pairwise-coprime denominators
      const long dens[6] = {3, 5, 7, 11, 13, 17};
      int k = 0;
      for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
          t(i, j) = frac(1, dens[k % 6]);
          t(j, i) = t(i, j);
          ++k;
        }
    } else {
      for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
          t(i, j) = frac(num(rng), 16);
          t(j, i) = t(i, j);
        }
    }
    bool splits = true;
    for (const auto& [u, v] : collisions) {
      if (quadratic_form(t, u) == quadratic_form(t, v)) {
        splits = false;
        break;
      }
    }
    if (!splits) continue;
    for (const Rational eps : {frac(1, 8), frac(1, 64), frac(1, 512), frac(1, 4096)}) {
      const Sym<Rational, N> s = identity + Sym<Rational, N>(eps * t);
      if (!is_positive_definite(s)) continue;
      const PhiSet<N> phi = voronoi_vectors<Rational, N>(s, r);
      if (phi.size() == general_position_count<N>(r) && phi.subset_of(phi_id))
        return phi;
    }
  }
  throw RetryExhausted("no general-position perturbation found");
}

namespace detail {

// interior sample of D_r(phi), validated to reproduce phi exactly
template <int N>
Sym<Rational, N> interior_point(const PhiSet<N>& phi, int r,
                                const std::vector<DirectionGroup<N>>& groups) {
  std::vector<std::vector<Rational>> all;
  for (const auto& g : groups) all.push_back(g.functional);
  auto [delta, x] = max_slack_point<N>(all, nullptr);
  if (sgn(delta) <= 0)
    throw DegenerateCone("domain is not full-dimensional");
  const Sym<Rational, N> s = coords_to_sym<Rational, N>(x);
  if (!is_positive_definite(s))
    throw DegenerateCone("interior witness is not positive-definite");
  if (!(voronoi_vectors<Rational, N>(s, r) == phi))
    throw InternalAssertion("interior witness does not reproduce Phi");
  return s;
}

// a positive-definite point in the relative interior of the pinned facet
template <int N>
std::optional<Sym<Rational, N>> facet_point(
    const std::vector<DirectionGroup<N>>& groups, std::size_t pinned,
    const Sym<Rational, N>& interior) {
  std::vector<std::vector<Rational>> others;
  for (std::size_t k = 0; k < groups.size(); ++k)
    if (k != pinned) others.push_back(groups[k].functional);
  auto [slack, x] = max_slack_point<N>(others, &groups[pinned].functional);
  if (sgn(slack) <= 0) return std::nullopt;

  Sym<Rational, N> s = coords_to_sym<Rational, N>(x);
  if (is_positive_definite(s)) return s;

  // blend toward the projection of the interior point onto the wall
  const auto& f = groups[pinned].functional;
  const auto xi = sym_to_coords<Rational, N>(interior);
  Rational ff(0), fx(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    ff += f[i] * f[i];
    fx += f[i] * xi[i];
  }
  std::vector<Rational> proj(xi.size());
  for (std::size_t i = 0; i < f.size(); ++i) proj[i] = xi[i] - fx / ff * f[i];
  Rational t = frac(1, 2);
  for (int it = 0; it < 12; ++it, t /= 2) {
    std::vector<Rational> y(xi.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] = (Rational(1) - t) * x[i] + t * proj[i];
    bool strict = true;
    for (std::size_t k = 0; k < groups.size() && strict; ++k) {
      if (k == pinned) continue;
      if (sgn(dot<N>(groups[k].functional, y)) <= 0) strict = false;
    }
    const Sym<Rational, N> sy = coords_to_sym<Rational, N>(y);
    if (strict && is_positive_definite(sy)) return sy;
  }
  return std::nullopt;
}

} // namespace detail

// Expansion of one domain: every facet with its validated swap pair and the
// neighboring Phi, obtained by sampling just beyond the wall.
template <int N>
struct DomainExpansion {
  Sym<Rational, N> interior;
  struct Wall {
    ConeInequality<N> pair;                       // the (u, v) realizing the swap
    std::vector<ConeInequality<N>> all_pairs;     // every generator of this wall
    PhiSet<N> neighbor;
    Sym<Rational, N> sample;                      // beyond-the-wall witness
  };
  std::vector<Wall> walls;
};

template <int N>
DomainExpansion<N> expand_domain(const PhiSet<N>& phi, int r) {
  const auto ineqs = ctype_inequalities<N>(phi, r);
  auto groups = detail::group_by_direction<N>(ineqs);
  DomainExpansion<N> out;
  out.interior = detail::interior_point<N>(phi, r, groups);
  const auto xi = sym_to_coords<Rational, N>(out.interior);

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto fp = detail::facet_point<N>(groups, i, out.interior);
    if (!fp) continue;
    const auto xf = sym_to_coords<Rational, N>(*fp);

    bool validated = false;
    typename DomainExpansion<N>::Wall wall;
    Rational eps = frac(1, 4);
    for (int attempt = 0; attempt < 14 && !validated; ++attempt, eps /= 4) {
      std::vector<Rational> y(xf.size());
      for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = xf[k] + eps * (xf[k] - xi[k]);
      const Sym<Rational, N> s = coords_to_sym<Rational, N>(y);
      if (!is_positive_definite(s)) continue;
      const PhiSet<N> nb = voronoi_vectors<Rational, N>(s, r);
      if (nb.size() != phi.size()) continue;
      if (nb == phi) continue;
      // the swap pair: phi \ nb = {+-u}, nb \ phi = {+-v}
      std::vector<VecI<N>> lost, gained;
      for (const auto& v : phi.vectors)
        if (!nb.contains(v)) lost.push_back(v);
      for (const auto& v : nb.vectors)
        if (!phi.contains(v)) gained.push_back(v);
      if (lost.size() != 2 || gained.size() != 2) continue;
      const VecI<N> u = sign_normalized<N>(lost.front());
      VecI<N> v = gained.front();
      if (mod_vec<N>(VecI<N>(v - u), r) != VecI<N>::Zero()) v = -v;
      if (mod_vec<N>(VecI<N>(v - u), r) != VecI<N>::Zero()) continue;
      bool known = false;
      for (const auto& member : groups[i].members) {
        if (member.u == u && member.v == v) {
          known = true;
          break;
        }
      }
      if (!known) continue;
      wall.pair = make_cone_inequality<N>(u, v);
      wall.all_pairs = groups[i].members;
      wall.neighbor = nb;
      wall.sample = s;
      validated = true;
    }
    if (validated) out.walls.push_back(std::move(wall));
  }
  return out;
}

// Breadth-first closure over facet neighbors modulo GL_n(Z); output classes
// are sorted by their canonical form, the discovery representative is kept.
template <int N>
std::vector<CTypeDomain<N>> enumerate_ctype_reps(int r) {
  if (r < 2 || r > 4) throw std::invalid_argument("supported moduli are 2, 3, 4");

  std::vector<CTypeDomain<N>> classes;
  std::vector<std::vector<VecI<N>>> keys;
  std::deque<int> queue;

  const auto lookup = [&](const PhiSet<N>& phi) -> int {
    const auto key = canonical_phi_form<N>(phi);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].phi.size() != phi.size()) continue;
      if (keys[i] == key) return static_cast<int>(i);
      if (phi_equivalent<N>(classes[i].phi, phi)) return static_cast<int>(i);
    }
    return -1;
  };
  const auto add_class = [&](const PhiSet<N>& phi) {
    classes.push_back({phi, {}, Sym<Rational, N>::Identity()});
    keys.push_back(canonical_phi_form<N>(phi));
    queue.push_back(static_cast<int>(classes.size()) - 1);
  };

  add_class(initial_phi<N>(r));
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    const auto expansion = expand_domain<N>(classes[idx].phi, r);
    classes[idx].interior = expansion.interior;
    for (const auto& wall : expansion.walls) {
      int nb = lookup(wall.neighbor);
      if (nb < 0) {
        add_class(wall.neighbor);
        nb = static_cast<int>(classes.size()) - 1;
      }
      classes[idx].facets.push_back({wall.pair, nb});
    }
  }

  // deterministic output order: sort by canonical form
  std::vector<int> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return std::lexicographical_compare(keys[a].begin(), keys[a].end(),
                                        keys[b].begin(), keys[b].end(),
                                        LexLess<N>{});
  });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  std::vector<CTypeDomain<N>> sorted;
  for (int o : order) {
    CTypeDomain<N> c = std::move(classes[o]);
    for (auto& f : c.facets) f.neighbor = rank[f.neighbor];
    sorted.push_back(std::move(c));
  }
  return sorted;
}

} // namespace lat13
