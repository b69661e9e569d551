#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qgcat/cyclo.hpp"
#include "qgcat/cyclo_matrix.hpp"
#include "qgcat/json_io.hpp"

using namespace qgcat;

namespace {

// Independent float evaluation of a sum of roots of unity.
std::complex<long double> root(long n, long k) {
  const long double pi = std::acos(-1.0L);
  return std::polar(1.0L, 2 * pi * k / n);
}

CycloNumber random_element(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  const int deg = CycloField::get(canonical_order(order)).degree;
  std::vector<mpq_class> c(deg);
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return CycloNumber::from_coeffs(canonical_order(order), c);
}

}  // namespace

TEST(Exact, RootOfUnityBasics) {
  EXPECT_TRUE(embed_root_of_unity(1, 0).is_one());
  auto i = embed_root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycloNumber(-1L));
  for (int n : {1, 3, 5, 6, 8, 10, 12, 15, 20, 28}) {
    EXPECT_TRUE(embed_root_of_unity(n, n).is_one()) << n;
    EXPECT_TRUE(embed_root_of_unity(n, 1).pow(n).is_one()) << n;
  }
}

TEST(Exact, SixthRootsSumToOne) {
  auto s = embed_root_of_unity(6, 1) + embed_root_of_unity(6, -1);
  // float oracle: 2 cos(pi/3)
  const auto f = root(6, 1) + root(6, -1);
  EXPECT_NEAR(static_cast<double>(f.real()), 1.0, 1e-15);
  EXPECT_TRUE(s.is_one());
}

TEST(Exact, CanonicalFormAcrossFolding) {
  // zeta_6 and -zeta_3^2 are the same number.
  EXPECT_EQ(embed_root_of_unity(6, 1), -embed_root_of_unity(3, 2));
  auto a = embed_root_of_unity(12, 2);
  auto b = embed_root_of_unity(6, 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.order(), 3);
}

TEST(Exact, QuantumIntegers) {
  auto q6 = embed_root_of_unity(6, 1);
  EXPECT_TRUE(quantum_integer(1, q6).is_one());
  EXPECT_TRUE(quantum_integer(2, q6).is_one());
  auto q8 = embed_root_of_unity(8, 1);
  EXPECT_TRUE(quantum_integer(4, q8).is_zero());
  for (int n = -6; n <= 6; ++n) {
    EXPECT_EQ(quantum_integer(-n, q8), -quantum_integer(n, q8));
    // float oracle sin(n pi/4) / sin(pi/4)
    const double expect = std::sin(n * M_PI / 4) / std::sin(M_PI / 4);
    EXPECT_NEAR(quantum_integer(n, q8).to_complex().real(), expect, 1e-12);
  }
  EXPECT_THROW(quantum_integer(2, CycloNumber(1L)), arithmetic_error);
  EXPECT_THROW(quantum_integer(2, CycloNumber(-1L)), arithmetic_error);
}

TEST(Exact, ConjAndSign) {
  EXPECT_EQ(conj(embed_root_of_unity(4, 1)), embed_root_of_unity(4, 3));
  auto q10 = embed_root_of_unity(10, 1);
  auto phi = quantum_integer(2, q10);
  EXPECT_TRUE(phi.is_real_positive());
  EXPECT_NEAR(phi.to_complex().real(), (1 + std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_FALSE((-phi).is_real_positive());
  EXPECT_THROW(CycloNumber().is_real_positive(), arithmetic_error);
  // A tiny positive value: phi^-40 still has a certified sign.
  EXPECT_TRUE(phi.pow(-40).is_real_positive());
  EXPECT_FALSE((phi.pow(-40) * CycloNumber(-1L)).is_real_positive());
}

TEST(Exact, ToFloat) {
  auto v = embed_root_of_unity(8, 1).to_float(20);
  mpfr_float::default_precision(40);
  mpfr_float h = boost::multiprecision::sqrt(mpfr_float(2)) / 2;
  EXPECT_LT(boost::multiprecision::abs(v.re - h), mpfr_float("1e-19"));
  EXPECT_LT(boost::multiprecision::abs(v.im - h), mpfr_float("1e-19"));
}

TEST(ExactProperty, FieldAxioms) {
  std::mt19937 rng(7);
  for (int order : {3, 5, 7, 8, 12, 15, 16, 20, 24}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, order);
      auto b = random_element(rng, order);
      auto c = random_element(rng, order);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(ExactProperty, MixedOrders) {
  std::mt19937 rng(11);
  auto a = random_element(rng, 5);
  auto b = random_element(rng, 8);
  auto s = a + b;
  EXPECT_EQ(s.order(), 40);
  EXPECT_EQ(s - b, a);
  EXPECT_EQ((a * b) / b, a);
}

TEST(ExactProperty, GaloisConsistency) {
  std::mt19937 rng(3);
  for (int order : {5, 8, 12, 20}) {
    for (int t = 0; t < 10; ++t) {
      auto a = random_element(rng, order);
      auto b = random_element(rng, order);
      EXPECT_EQ(conj(conj(a)), a);
      EXPECT_EQ(conj(a + b), conj(a) + conj(b));
      EXPECT_EQ(conj(a * b), conj(a) * conj(b));
      auto n = a * conj(a);
      EXPECT_TRUE(n.is_real());
    }
  }
}

TEST(ExactProperty, EmbeddingFidelity) {
  std::mt19937 rng(5);
  const int digits = 40;
  for (int order : {5, 8, 12, 20, 28}) {
    for (int t = 0; t < 5; ++t) {
      auto a = random_element(rng, order);
      auto b = random_element(rng, order);
      auto fa = a.to_float(digits);
      auto fb = b.to_float(digits);
      auto fab = (a * b).to_float(digits);
      mpfr_float::default_precision(digits + 10);
      mpfr_float re = fa.re * fb.re - fa.im * fb.im;
      mpfr_float im = fa.re * fb.im + fa.im * fb.re;
      mpfr_float err = boost::multiprecision::abs(re - fab.re) + boost::multiprecision::abs(im - fab.im);
      EXPECT_LT(err, boost::multiprecision::pow(mpfr_float(10), -(digits - 5)));
    }
  }
}

TEST(ExactProperty, FloatAgreesWithIndependentEvaluation) {
  // sum_k c_k zeta^k evaluated directly versus the canonical form.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int order : {7, 9, 12, 30}) {
    CycloNumber x;
    std::complex<long double> f = 0;
    for (int k = 0; k < order; ++k) {
      int c = d(rng);
      x += CycloNumber(static_cast<long>(c)) * embed_root_of_unity(order, k);
      f += static_cast<long double>(c) * root(order, k);
    }
    auto z = x.to_complex();
    EXPECT_NEAR(z.real(), static_cast<double>(f.real()), 1e-9);
    EXPECT_NEAR(z.imag(), static_cast<double>(f.imag()), 1e-9);
  }
}

TEST(Matrix, ConjTransposeInvolution) {
  std::mt19937 rng(1);
  CycloMatrix a(3, 2), b(2, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) a(i, j) = random_element(rng, 8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) b(i, j) = random_element(rng, 12);
  EXPECT_EQ(a.conj_transpose().conj_transpose(), a);
  EXPECT_EQ((a * b).conj_transpose(), b.conj_transpose() * a.conj_transpose());
}

TEST(Matrix, InverseRankKernel) {
  std::mt19937 rng(2);
  CycloMatrix a(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = random_element(rng, 5);
  EXPECT_EQ(a.rank(), 4u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  CycloMatrix s(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    s(0, j) = a(0, j);
    s(1, j) = a(1, j);
    s(2, j) = a(0, j) * embed_root_of_unity(5, 2) - a(1, j);
  }
  EXPECT_EQ(s.rank(), 2u);
  auto k = s.kernel();
  EXPECT_EQ(k.cols(), 1u);
  EXPECT_TRUE((s * k).is_zero());
  EXPECT_THROW(s.inverse(), arithmetic_error);
}

TEST(Matrix, EchelonSpan) {
  EchelonSpan sp(3);
  auto z = embed_root_of_unity(8, 1);
  EXPECT_TRUE(sp.insert({CycloNumber(1L), z, CycloNumber()}));
  EXPECT_TRUE(sp.insert({CycloNumber(), CycloNumber(1L), z}));
  EXPECT_FALSE(sp.insert({CycloNumber(2L), 2 * z + z, z * z}));
  EXPECT_TRUE(sp.contains({z, z * z + CycloNumber(1L), z}));
  EXPECT_EQ(sp.size(), 2u);
}

TEST(Json, RoundTrip) {
  std::mt19937 rng(4);
  auto a = random_element(rng, 12);
  auto j = to_json(a);
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(cyclo_from_json(j), a);
  auto h = to_json(CycloNumber(mpq_class(1, 2)));
  EXPECT_EQ(h["coeffs"][0], "1/2");
}
