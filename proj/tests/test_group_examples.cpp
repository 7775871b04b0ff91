#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/orbit_examples.hpp"
#include "tgc/catalog.hpp"

using namespace oracle;
using tgc::Rational;

TEST(RootOfUnity, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic(1), (Poly{-1, 1}));
  EXPECT_EQ(cyclotomic(4), (Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (Poly{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12).size(), 5u);
}

TEST(RootOfUnity, IdentityOrbitVanishes) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> group(n);
    for (int k = 0; k < n; ++k) group[k] = k;
    for (const auto& z : {tgc::make_rational(3, 7), tgc::make_rational(-5, 2)}) {
      std::function<Cyclotomic(const int&, const Cyclotomic&)> act = [n](const int& k, const Cyclotomic& v) {
        return zeta_power(n, k) * v;
      };
      std::function<Cyclotomic(const Cyclotomic&)> id = [](const Cyclotomic& v) { return v; };
      auto s = orbit_sum(group, act, id, rational_in(n, z), rational_in(n, 0));
      EXPECT_TRUE(s.is_zero()) << n;
    }
  }
}

TEST(RootOfUnity, PowerOrbitMultipliesByN) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> group(n);
    for (int k = 0; k < n; ++k) group[k] = k;
    std::function<Cyclotomic(const int&, const Cyclotomic&)> act = [n](const int& k, const Cyclotomic& v) {
      return zeta_power(n, k) * v;
    };
    std::function<Cyclotomic(const Cyclotomic&)> pow_n = [n](const Cyclotomic& v) {
      Cyclotomic r = rational_in(n, 1);
      for (int i = 0; i < n; ++i) r = r * v;
      return r;
    };
    const Rational z = tgc::make_rational(2, 3);
    auto s = orbit_sum(group, act, pow_n, rational_in(n, z), rational_in(n, 0));
    Rational zn = 1;
    for (int i = 0; i < n; ++i) zn *= z;
    EXPECT_EQ(s.value, (Poly{Rational(n) * zn})) << n;
  }
}

TEST(Determinant, SymmetricOrbitVanishes) {
  std::mt19937_64 rng(1);
  for (const auto& e : tgc::catalog(3)) {
    const int n = 2 * e.graph.k();  // vertex count of the graph
    if (n > 6) continue;
    Matrix x(n, std::vector<Rational>(n));
    for (auto& row : x)
      for (auto& v : row) v = tgc::make_rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
    auto perms = tgc::all_perms(n);
    std::function<Matrix(const tgc::Perm&, const Matrix&)> act = [](const tgc::Perm& s, const Matrix& m) {
      return permute_rows(m, s);
    };
    std::function<Rational(const Matrix&)> det = [](const Matrix& m) { return determinant(m); };
    EXPECT_EQ(orbit_sum(perms, act, det, x, Rational(0)), 0) << e.name;
    EXPECT_NE(determinant(x), 0);
  }
}

TEST(Characters, SchurOrthogonality) {
  auto k = quaternion_group();
  ASSERT_EQ(k.size(), 8u);
  std::function<Mat2(const Mat2&, const Mat2&)> act = [](const Mat2& u, const Mat2& x) { return mat_mul(u, x); };
  for (const auto& m : k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        std::function<long(const Mat2&)> f = [i, j](const Mat2& x) {
          const int cls = quaternion_class(x);
          return quaternion_character(i, cls) * quaternion_character(j, cls);
        };
        EXPECT_EQ(orbit_sum(k, act, f, m, 0L), i == j ? 8L : 0L);
      }
}

TEST(Characters, TwoDimensionalTraceIsTheCharacter) {
  for (const auto& m : quaternion_group()) {
    auto tr = m[0] + m[3];
    EXPECT_EQ(tr.imag(), 0);
    EXPECT_EQ(tr.real(), quaternion_character(4, quaternion_class(m)));
  }
}

TEST(Wreath, OrbitSumClosedForm) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int d = 1; d <= 4; ++d)
    for (int trial = 0; trial < 10; ++trial) {
      WreathSample s{RealVec(d), RealVec(d), trial % 2 ? -1 : 1};
      for (auto& v : s.z1) v = u(rng);
      for (auto& v : s.z2) v = u(rng);
      EXPECT_NEAR(wreath_orbit_sum(s), wreath_closed_form(s), 1e-12);
      if (s.eps == 1) {
        EXPECT_NEAR(wreath_orbit_sum(s), wreath_closed_form_signed(s), 1e-12);
      } else {
        // The leading sign only survives for eps = +1.
        EXPECT_NEAR(wreath_orbit_sum(s), -wreath_closed_form_signed(s), 1e-12);
      }
    }
}

TEST(Wreath, PermutationInvarianceFactor) {
  // F only sees |Z|, so the two S(D) sums contribute (D!)^2 identical terms.
  WreathSample s{{0.3, -0.2, 0.9}, {1.1, 0.4, -0.7}, -1};
  const double d2 = factorial(3) * factorial(3);
  const double c = 1.0 / (2.0 * d2);
  double reduced = 0;
  for (int tau : {1, -1}) {
    const int e = tau * s.eps;
    reduced += c * e * (std::exp(-norm(s.z2) + e * norm(s.z1)) + std::exp(-norm(s.z1) + e * norm(s.z2)));
  }
  EXPECT_NEAR(wreath_orbit_sum(s), d2 * reduced, 1e-12);
}
