#include "lat13/embedding.hpp"
#include "lat13/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lat13;

namespace {

Sym3<Rational> example_s1() { return make_sym3<Rational>(6, 12, 12, -2, -2, -3); }
Sym3<Rational> example_s2() { return make_sym3<Rational>(6, 12, 14, -3, -1, -5); }

Mat3i random_unimodular3(std::mt19937_64& rng, int steps = 8, int max_abs = 5) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    Mat3i g = Mat3i::Identity();
    for (int step = 0; step < steps; ++step) {
      Mat3i e = Mat3i::Identity();
      const int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
      if (i != j) e(i, j) = entry(rng);
      if (rng() % 5 == 0) e(i, i) = -1;
      g = e * g;
    }
    if (g.cwiseAbs().maxCoeff() <= max_abs && g != Mat3i::Identity()) return g;
  }
}

Sym3<Rational> random_pd3(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 6);
  Sym3<Rational> l = Sym3<Rational>::Identity();
  l(1, 0) = frac(num(rng), den(rng));
  l(2, 0) = frac(num(rng), den(rng));
  l(2, 1) = frac(num(rng), den(rng));
  Sym3<Rational> d = Sym3<Rational>::Zero();
  d(0, 0) = frac(den(rng), 1);
  d(1, 1) = frac(den(rng), 2);
  d(2, 2) = frac(den(rng), 3);
  return l * d * l.transpose();
}

template <std::size_t K>
std::array<Rational, K> sorted(std::array<Rational, K> a) {
  std::sort(a.begin(), a.end());
  return a;
}

} // namespace

TEST_CASE("iota_s known values") {
  const auto e = iota_s<Rational>(Sym3<Rational>::Identity());
  CHECK(e.values == std::array<Rational, 13>{1, 1, 1, 2, 2, 2, 3, 0, 0, 0, 1, 1, 1});

  const auto e1 = iota_s(example_s1());
  CHECK(e1.values == std::array<Rational, 13>{6, 12, 12, 14, 14, 16, 18, 2, 2, 2, 3, 7, 7});

  const auto e2 = iota_s(example_s2());
  CHECK(e2.values == std::array<Rational, 13>{6, 12, 12, 14, 14, 16, 18, 1, 2, 3, 4, 5, 8});
}

TEST_CASE("iota_m known values") {
  const auto id = iota_m<Rational>(Sym3<Rational>::Identity());
  CHECK(id.values == std::array<Rational, 13>{1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3});

  const auto d123 = iota_m(make_sym3<Rational>(1, 2, 3, 0, 0, 0));
  CHECK(d123.values == std::array<Rational, 13>{1, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 6, 6});

  const auto big = iota_m(make_sym3<Rational>(4, 4, 4, 0, 0, 0));
  for (int i = 0; i < 13; ++i) CHECK(big.values[i] == Rational(4) * id.values[i]);
}

TEST_CASE("embedding separates the example family at t = 1") {
  CHECK(iota_s(example_s1()).values != iota_s(example_s2()).values);
  CHECK(iota_m(example_s1()).values != iota_m(example_s2()).values);
}

TEST_CASE("embed_distance") {
  const auto a = iota_m<Rational>(Sym3<Rational>::Identity());
  const auto b = iota_m(make_sym3<Rational>(4, 4, 4, 0, 0, 0));
  CHECK(embed_distance(a, a, MetricKind::L2) == 0);
  CHECK(embed_distance(a, b, MetricKind::Linf) == 9);
  CHECK(embed_distance(a, b, MetricKind::L1) == Rational(3 * 3 + 6 * 6 + 4 * 9));
  CHECK(embed_distance(a, b, MetricKind::Linf) == embed_distance(b, a, MetricKind::Linf));
  CHECK_THROWS_AS(embed_distance(a, iota_s<Rational>(Sym3<Rational>::Identity()), MetricKind::L2),
                  KindMismatch);
}

TEST_CASE("exact invariance under the unimodular action") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    const Mat3i g = random_unimodular3(rng);
    const Sym3<Rational> s2 = apply_unimodular(g, s);
    CHECK(iota_s(s).values == iota_s(s2).values);
    CHECK(iota_m(s).values == iota_m(s2).values);
    CHECK(lattice_distance(s, s2, MetricKind::Linf, EmbeddingKind::Minkowski) == 0);
    CHECK(lattice_distance(s, s2, MetricKind::L1, EmbeddingKind::Selling) == 0);
  }
}

TEST_CASE("iota_m equals the sorted mod-3 vonorms") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const auto red = minkowski_reduce(random_pd3(rng)).reduced;
    const auto fixed = sorted(minkowski_vonorms3(red));
    const auto table = vonorm_map<Rational, 3>(red, 3);
    std::array<Rational, 13> brute;
    for (int i = 0; i < 13; ++i) brute[i] = table.entries[i].value;
    std::sort(brute.begin(), brute.end());
    CHECK(fixed == brute);
  }
}

TEST_CASE("iota_s vonorm part equals the sorted mod-2 vonorms") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto red = selling_reduce(random_pd3(rng)).reduced;
    const auto e = iota_s(red);
    const auto table = vonorm_map<Rational, 3>(red, 2);
    std::array<Rational, 7> brute;
    for (int i = 0; i < 7; ++i) brute[i] = table.entries[i].value;
    std::sort(brute.begin(), brute.end());
    CHECK(std::equal(brute.begin(), brute.end(), e.values.begin()));
  }
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    const Rational c = frac(3 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 4));
    const Sym3<Rational> cs = c * s;
    const auto e1 = iota_m(s), e2 = iota_m(cs);
    for (int i = 0; i < 13; ++i) CHECK(e2.values[i] == c * e1.values[i]);
    const auto f1 = iota_s(s), f2 = iota_s(cs);
    for (int i = 0; i < 13; ++i) CHECK(f2.values[i] == c * f1.values[i]);
  }
}

TEST_CASE("local Lipschitz bound under reduced-preserving perturbations") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<int> num(-3, 3);
  int done = 0;
  for (int trial = 0; trial < 2000 && done < 200; ++trial) {
    const auto red = minkowski_reduce(random_pd3(rng)).reduced;
    Sym3<Rational> e;
    const Rational eps = frac(1, 50 + static_cast<int>(rng() % 100));
    e << frac(num(rng), 3) * eps, frac(num(rng), 3) * eps, frac(num(rng), 3) * eps,
        0, 0, 0, 0, 0, 0;
    e(1, 0) = e(0, 1);
    e(2, 0) = e(0, 2);
    e(2, 1) = e(1, 2);
    Sym3<Rational> pert = red;
    Rational emax(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Rational x = frac(num(rng), 5) * eps;
        if (j >= i) {
          pert(i, j) += x;
          pert(j, i) = pert(i, j);
        }
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Rational d = abs(Rational(pert(i, j) - red(i, j)));
        if (d > emax) emax = d;
      }
    if (!is_minkowski_reduced(pert) || !is_positive_definite(pert)) continue;
    const auto a = iota_m(red), b = iota_m(pert);
    CHECK(embed_distance(a, b, MetricKind::Linf) <= Rational(16) * emax);
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("GL(F2) enumeration counts") {
  CHECK(gl_f2_matrices<3>().size() == 168);
  CHECK(gl_f2_matrices<2>().size() == 6);
}

TEST_CASE("vonorm_distance_generic vanishes on equivalent forms") {
  std::mt19937_64 rng(83);
  const Sym3<Rational> s = random_pd3(rng);
  CHECK(vonorm_distance_generic<Rational, 3>(s, s, MetricKind::L2) == 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Sym3<Rational> t = random_pd3(rng);
    const Sym3<Rational> t2 = apply_unimodular(random_unimodular3(rng), t);
    CHECK(vonorm_distance_generic<Rational, 3>(t, t2, MetricKind::L2) == 0);
    CHECK(vonorm_distance_generic<Rational, 3>(t, t2, MetricKind::Linf) == 0);
  }
}

TEST_CASE("rank2_distance") {
  const Sym2<Rational> id = Sym2<Rational>::Identity();
  CHECK(rank2_distance(id, id, MetricKind::L2) == 0);
  const Sym2<Rational> hex = make_sym2<Rational>(1, 1, Rational(-1, 2));
  CHECK(rank2_distance(id, hex, MetricKind::Linf) == 1);

  // the reduced three-value list is sorted as it stands
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 8);
  int done = 0;
  for (int trial = 0; trial < 2000 && done < 500; ++trial) {
    const Sym2<Rational> s = make_sym2<Rational>(frac(num(rng) + 10, den(rng)),
                                                 frac(num(rng) + 10, den(rng)),
                                                 frac(num(rng), den(rng) * 2));
    if (!is_positive_definite(s)) continue;
    const auto r = reduce_2d(s).reduced;
    const Rational third = r(0, 0) + r(1, 1) + Rational(2) * r(0, 1);
    CHECK(r(0, 0) <= r(1, 1));
    CHECK(r(1, 1) <= third);
    ++done;
  }
  CHECK(done == 500);
}
