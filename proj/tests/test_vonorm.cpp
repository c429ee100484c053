#include "lat13/oracle.hpp"
#include "lat13/vonorm.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lat13;

namespace {

Sym3<Rational> example_s1() { return make_sym3<Rational>(6, 12, 12, -2, -2, -3); }
Sym3<Rational> example_s2() { return make_sym3<Rational>(6, 12, 14, -3, -1, -5); }

Mat3i random_unimodular3(std::mt19937_64& rng, int steps = 8) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Mat3i g = Mat3i::Identity();
  for (int step = 0; step < steps; ++step) {
    Mat3i e = Mat3i::Identity();
    const int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
    if (i != j) e(i, j) = entry(rng);
    if (rng() % 5 == 0) e(i, i) = -1;
    g = e * g;
  }
  return g;
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

std::vector<Rational> sorted_values(const VonormTable<Rational, 3>& t) {
  std::vector<Rational> v;
  for (const auto& e : t.entries) v.push_back(e.value);
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("canonical cosets counts") {
  CHECK(canonical_cosets<3>(2).size() == 7);
  CHECK(canonical_cosets<3>(3).size() == 13);
  CHECK(canonical_cosets<2>(2).size() == 3);
  CHECK(canonical_cosets<2>(3).size() == 4);
  CHECK(canonical_cosets<3>(4).size() == 35); // (4^3 - 1 + 7) / 2
}

TEST_CASE("shortest_in_coset basics") {
  const Sym3<Rational> id = Sym3<Rational>::Identity();
  auto [v1, w1] = shortest_in_coset<Rational, 3>(id, Vec3i(1, 0, 0), 3);
  CHECK(v1 == 1);
  CHECK(w1 == Vec3i(1, 0, 0));

  auto [v2, w2] = shortest_in_coset<Rational, 3>(id, Vec3i(2, 0, 0), 3);
  CHECK(v2 == 1);
  CHECK(w2 == Vec3i(-1, 0, 0));

  auto [v3, w3] = shortest_in_coset<Rational, 3>(make_sym3<Rational>(1, 2, 3, 0, 0, 0),
                                                 Vec3i(1, 2, 0), 3);
  CHECK(v3 == 3);
  CHECK(w3 == Vec3i(1, -1, 0));

  CHECK_THROWS_AS((shortest_in_coset<Rational, 3>(id, Vec3i(3, 0, 0), 3)),
                  std::invalid_argument);
}

TEST_CASE("vonorm_map identity multisets") {
  const Sym3<Rational> id = Sym3<Rational>::Identity();
  CHECK(sorted_values(vonorm_map<Rational, 3>(id, 2)) ==
        std::vector<Rational>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sorted_values(vonorm_map<Rational, 3>(id, 3)) ==
        std::vector<Rational>{1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("vonorm_map of the example matches the printed values") {
  CHECK(sorted_values(vonorm_map<Rational, 3>(example_s1(), 2)) ==
        std::vector<Rational>{6, 12, 12, 14, 14, 16, 18});
  CHECK(sorted_values(vonorm_map<Rational, 3>(example_s2(), 2)) ==
        std::vector<Rational>{6, 12, 12, 14, 14, 16, 18});
  CHECK(example_s1().determinant() == 690);
  CHECK(example_s2().determinant() == 690);
}

TEST_CASE("vonorm witnesses satisfy the half-space criterion") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    for (int r : {2, 3}) {
      const auto table = vonorm_map<Rational, 3>(s, r);
      for (const auto& e : table.entries) {
        CHECK(quadratic_form(s, e.witness) == e.value);
        CHECK(canonical_coset_rep<3>(e.witness, r) == e.rep);
        // v S l <= (r/2) l S l over a brute-force ball
        for (int a = -4; a <= 4; ++a)
          for (int b = -4; b <= 4; ++b)
            for (int c = -4; c <= 4; ++c) {
              const VecI<3> l(a, b, c);
              CHECK(Rational(2) * bilinear_form(s, e.witness, l) <=
                    Rational(r) * quadratic_form(s, l));
            }
      }
    }
  }
}

TEST_CASE("vonorm values are unimodular invariants") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    const Mat3i g = random_unimodular3(rng);
    const Sym3<Rational> s2 = apply_unimodular(g, s);
    for (int r : {2, 3})
      CHECK(sorted_values(vonorm_map<Rational, 3>(s, r)) ==
            sorted_values(vonorm_map<Rational, 3>(s2, r)));
  }
}

TEST_CASE("voronoi_vectors known sets") {
  const Sym3<Rational> id = Sym3<Rational>::Identity();
  const auto phi = voronoi_vectors<Rational, 3>(id, 3);
  CHECK(phi.size() == 26);
  for (const auto& v : phi.vectors) {
    CHECK(v.cwiseAbs().maxCoeff() <= 1);
    CHECK(phi.contains(VecI<3>(-v)));
  }

  const auto phi2 = voronoi_vectors<Rational, 2>(Sym2<Rational>(Sym2<Rational>::Identity()), 2);
  CHECK(phi2.size() == 8);
  CHECK(phi2.contains(Vec2i(1, 1)));
  CHECK(phi2.contains(Vec2i(1, -1)));
  CHECK(phi2.contains(Vec2i(1, 0)));
  CHECK(phi2.contains(Vec2i(0, 1)));

  const auto phi3 = voronoi_vectors<Rational, 3>(make_sym3<Rational>(1, 2, 3, 0, 0, 0), 3);
  CHECK(phi3.size() == 26);
}

TEST_CASE("phi monotone in the modulus for r | r2") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    const auto phi2 = voronoi_vectors<Rational, 3>(s, 2);
    const auto phi3 = voronoi_vectors<Rational, 3>(s, 3);
    const auto phi4 = voronoi_vectors<Rational, 3>(s, 4);
    CHECK(phi2.subset_of(phi4));
    CHECK(phi2.subset_of(phi3));
    CHECK(phi3.subset_of(phi4));
  }
}

TEST_CASE("is_general_position") {
  const Sym3<Rational> id = Sym3<Rational>::Identity();
  CHECK(is_general_position<Rational, 3>(id, 3));
  CHECK_FALSE(is_general_position<Rational, 2>(Sym2<Rational>(Sym2<Rational>::Identity()), 2));
  // generic diagonal with tiny off-diagonal perturbation
  const Sym3<Rational> s =
      make_sym3<Rational>(1, 2, 3, Rational(-1, 97), Rational(1, 101), Rational(-1, 103));
  CHECK(is_general_position<Rational, 3>(s, 2));
  CHECK(voronoi_vectors<Rational, 3>(s, 2).size() == 14);
}

TEST_CASE("conorm_map known values") {
  const auto co_id = conorm_map<Rational>(Sym3<Rational>::Identity());
  auto mixed = co_id.mixed();
  std::sort(mixed.begin(), mixed.end());
  CHECK(std::vector<Rational>(mixed.begin(), mixed.end()) ==
        std::vector<Rational>{0, 0, 0, 1, 1, 1});

  auto m1 = conorm_map<Rational>(example_s1()).mixed();
  std::sort(m1.begin(), m1.end());
  CHECK(std::vector<Rational>(m1.begin(), m1.end()) ==
        std::vector<Rational>{2, 2, 2, 3, 7, 7});

  auto m2 = conorm_map<Rational>(example_s2()).mixed();
  std::sort(m2.begin(), m2.end());
  CHECK(std::vector<Rational>(m2.begin(), m2.end()) ==
        std::vector<Rational>{1, 2, 3, 4, 5, 8});
}

TEST_CASE("conorms are nonnegative on Selling reduced forms") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto red = selling_reduce(random_pd3(rng));
    const auto co = conorm_map<Rational>(red.reduced);
    for (const auto& v : co.mixed()) CHECK(v >= 0);
    // and they equal the negated superbase off-diagonals
    const auto t = superbase_gram<Rational, 3>(red.reduced);
    std::vector<Rational> neg{-t(0, 1), -t(0, 2), -t(1, 2), -t(0, 3), -t(1, 3), -t(2, 3)};
    std::sort(neg.begin(), neg.end());
    auto mixed = co.mixed();
    std::sort(mixed.begin(), mixed.end());
    CHECK(std::equal(neg.begin(), neg.end(), mixed.begin()));
  }
}

TEST_CASE("fast path agrees with the box oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Sym3<Rational> s = random_pd3(rng);
    for (int r : {2, 3}) {
      const auto table = vonorm_map<Rational, 3>(s, r);
      std::vector<Rational> fast = sorted_values(table);
      CHECK(fast == oracle::sorted_vonorms<3>(s, r));
      CHECK(voronoi_vectors<Rational, 3>(s, r) == oracle::phi_set<3>(s, r));
    }
  }
}

TEST_CASE("first_minimum") {
  CHECK(first_minimum<Rational, 3>(Sym3<Rational>::Identity()) == 1);
  CHECK(first_minimum<Rational, 3>(example_s1()) == 6);
  CHECK(first_minimum<Rational, 3>(make_sym3<Rational>(1, 2, 3, 0, 0, 0)) == 1);
}
