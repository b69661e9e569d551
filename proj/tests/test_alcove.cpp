#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qgcat/alcove.hpp"

using namespace qgcat;

namespace {

AlcoveCategory a1(int k) { return AlcoveCategory::build(RootSystem::build(LieType::A, 1), k); }

// SU(2)_k S-matrix by the sine formula, used as a float oracle.
double sine_s(int a, int b, int ell) {
  return std::sqrt(2.0 / ell) * std::sin(M_PI * (a + 1) * (b + 1) / ell);
}

std::vector<std::pair<LieType, int>> types_upto(int max_rank) {
  std::vector<std::pair<LieType, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({LieType::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({LieType::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({LieType::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({LieType::D, n});
  out.push_back({LieType::G2, 2});
  return out;
}

}  // namespace

TEST(Alcove, A1Examples) {
  auto c1 = a1(1);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1.ell(), 3);
  EXPECT_TRUE(c1.qdim(1).is_one());
  EXPECT_EQ(c1.fuse({1}, {1}), (std::map<Weight, long>{{{0}, 1}}));

  auto c2 = a1(2);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2.qdim(1), embed_root_of_unity(8, 1) + embed_root_of_unity(8, -1));
  EXPECT_TRUE(c2.qdim(2).is_one());
  EXPECT_EQ(c2.fuse({1}, {1}), (std::map<Weight, long>{{{0}, 1}, {{2}, 1}}));

  auto c3 = a1(3);
  ASSERT_EQ(c3.size(), 4u);
  EXPECT_EQ(c3.qdim(1), embed_root_of_unity(10, 1) + embed_root_of_unity(10, -1));
  EXPECT_NEAR(c3.qdim(1).to_complex().real(), 2 * std::cos(M_PI / 5), 1e-14);
  for (int k = 1; k <= 4; ++k) {
    auto c = a1(k);
    for (const auto& mu : c.weights()) EXPECT_EQ(c.fuse({0}, mu), (std::map<Weight, long>{{mu, 1}}));
  }
  EXPECT_THROW(c1.fuse({2}, {0}), std::invalid_argument);
}

TEST(Alcove, A1QdimsMatchSineFormula) {
  for (int k = 1; k <= 8; ++k) {
    auto c = a1(k);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double expect = std::sin(M_PI * (i + 1) / c.ell()) / std::sin(M_PI / c.ell());
      EXPECT_NEAR(c.qdim(static_cast<int>(i)).to_complex().real(), expect, 1e-12);
    }
  }
}

TEST(Alcove, A1FusionMatchesFloatVerlinde) {
  for (int k = 1; k <= 8; ++k) {
    auto c = a1(k);
    const int ell = c.ell();
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int e = 0; e <= k; ++e) {
          double s = 0;
          for (int x = 0; x <= k; ++x) s += sine_s(a, x, ell) * sine_s(b, x, ell) * sine_s(e, x, ell) / sine_s(0, x, ell);
          EXPECT_EQ(c.N(a, b, e), static_cast<int>(std::lround(s))) << k << ":" << a << b << e;
          EXPECT_NEAR(s, std::lround(s), 1e-9);
        }
  }
}

TEST(Alcove, TruncatedPowers) {
  auto c1 = a1(1);
  EXPECT_EQ(c1.truncated_power(2).multiplicity, (std::vector<long>{1, 0}));
  EXPECT_EQ(c1.truncated_power(3).multiplicity, (std::vector<long>{0, 1}));
  auto c2 = a1(2);
  auto p3 = c2.truncated_power(3);
  EXPECT_EQ(p3.multiplicity, (std::vector<long>{0, 2, 0}));
  EXPECT_EQ(p3.centralizer_dimension(), 4);
  auto c3 = a1(3);
  auto p4 = c3.truncated_power(4);
  EXPECT_EQ(p4.multiplicity, (std::vector<long>{2, 0, 3, 0}));
  EXPECT_EQ(p4.centralizer_dimension(), 13);
  EXPECT_EQ(p4.paths.size(), 5u);
  for (const auto& p : p4.paths) {
    EXPECT_EQ(p.nodes.size(), 5u);
    for (std::size_t i = 1; i < p.nodes.size(); ++i) EXPECT_EQ(std::abs(p.nodes[i] - p.nodes[i - 1]), 1);
  }
}

TEST(Alcove, Twists) {
  auto c2 = a1(2);
  EXPECT_TRUE(c2.twist(0).is_one());
  // conformal weight h = l(l+2)/(4 ell): theta = exp(2 pi i h)
  EXPECT_EQ(c2.twist(1), embed_root_of_unity(16, 3));
  EXPECT_EQ(c2.twist(2), CycloNumber(-1L));
  for (int k = 1; k <= 6; ++k) {
    auto c = a1(k);
    for (int l = 0; l <= k; ++l) {
      const double h = l * (l + 2) / (4.0 * c.ell());
      const auto z = c.twist(l).to_complex();
      EXPECT_NEAR(z.real(), std::cos(2 * M_PI * h), 1e-12);
      EXPECT_NEAR(z.imag(), std::sin(2 * M_PI * h), 1e-12);
    }
  }
}

TEST(Alcove, ModularDataA1) {
  auto c1 = a1(1);
  auto md1 = c1.modular_data();
  EXPECT_EQ(md1.S(0, 0) * conj(md1.S(0, 0)), md1.S(0, 1) * conj(md1.S(0, 1)));
  for (int k = 1; k <= 8; ++k) {
    auto c = a1(k);
    auto md = c.modular_data();
    EXPECT_TRUE(md.modular);
    const double norm = sine_s(0, 0, c.ell());
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        const auto z = md.S(a, b).to_complex();
        EXPECT_NEAR(z.real(), sine_s(a, b, c.ell()) / norm, 1e-10);
        EXPECT_NEAR(z.imag(), 0.0, 1e-10);
      }
  }
  // Ising: S proportional to [[1, r, 1], [r, 0, -r], [1, -r, 1]], r = sqrt 2.
  auto md2 = a1(2).modular_data();
  const CycloNumber r = embed_root_of_unity(8, 1) + embed_root_of_unity(8, -1);
  EXPECT_EQ(md2.S(0, 1), r);
  EXPECT_TRUE(md2.S(1, 1).is_zero());
  EXPECT_EQ(md2.S(1, 2), -r);
  EXPECT_TRUE(md2.S(2, 2).is_one());
}

TEST(AlcoveProperty, FusionRingAxioms) {
  for (auto [t, n] : types_upto(3)) {
    auto rs = RootSystem::build(t, n);
    for (int k = 1; k <= 6; ++k) {
      auto c = AlcoveCategory::build(rs, k);
      const int m = static_cast<int>(c.size());
      EXPECT_EQ(c.ell(), k + rs.dual_coxeter);
      for (int i = 0; i < m; ++i) {
        EXPECT_TRUE(c.qdim(i).is_real_positive()) << to_string(t) << n << " k=" << k;
        EXPECT_EQ(c.dual(c.dual(i)), i);
      }
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          CycloNumber lhs = c.qdim(a) * c.qdim(b), rhs;
          for (int e = 0; e < m; ++e) {
            EXPECT_EQ(c.N(a, b, e), c.N(b, a, e));
            EXPECT_EQ(c.N(0, a, e), a == e ? 1 : 0);
            // Frobenius reciprocity.
            EXPECT_EQ(c.N(a, b, e), c.N(c.dual(a), e, b));
            if (c.N(a, b, e)) rhs += CycloNumber(static_cast<long>(c.N(a, b, e))) * c.qdim(e);
          }
          EXPECT_EQ(lhs, rhs) << to_string(t) << n << " k=" << k;
        }
      // Associativity, summing over the sparse support of N.
      std::vector<std::vector<std::pair<int, int>>> nz(m * m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int s = 0; s < m; ++s)
            if (c.N(a, b, s)) nz[a * m + b].push_back({s, c.N(a, b, s)});
      long bad = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int e = 0; e < m; ++e) {
            std::vector<long> l(m, 0), r(m, 0);
            for (auto [s, x] : nz[a * m + b])
              for (auto [f, y] : nz[s * m + e]) l[f] += static_cast<long>(x) * y;
            for (auto [s, x] : nz[b * m + e])
              for (auto [f, y] : nz[a * m + s]) r[f] += static_cast<long>(x) * y;
            if (l != r) ++bad;
          }
      EXPECT_EQ(bad, 0) << to_string(t) << n << " k=" << k;
    }
  }
}

TEST(AlcoveProperty, TruncationSelectsPositiveQdims) {
  for (auto [t, n] : types_upto(2)) {
    auto rs = RootSystem::build(t, n);
    for (int k = 1; k <= 4; ++k) {
      auto c = AlcoveCategory::build(rs, k);
      for (int p = 1; p <= 6; ++p) {
        auto tp = c.truncated_power(p);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (tp.multiplicity[i] > 0) EXPECT_TRUE(c.qdim(static_cast<int>(i)).is_real_positive());
        // Path count and quantum dimension agree: qdim(V)^n = sum m_n(l) qdim(l).
        CycloNumber dv;
        for (int v : c.V()) dv += c.qdim(v);
        CycloNumber s;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (tp.multiplicity[i]) s += CycloNumber(tp.multiplicity[i]) * c.qdim(static_cast<int>(i));
        EXPECT_EQ(s, dv.pow(p));
      }
    }
  }
}

TEST(AlcoveProperty, ModularRelationsAndVerlinde) {
  const std::vector<std::tuple<LieType, int, int>> cases = {
      {LieType::A, 1, 5}, {LieType::A, 2, 3}, {LieType::B, 2, 2}, {LieType::C, 2, 2},
      {LieType::G2, 2, 2}, {LieType::B, 3, 1}, {LieType::D, 4, 1}, {LieType::D, 5, 1}};
  for (auto [t, n, kmax] : cases) {
    auto rs = RootSystem::build(t, n);
    for (int k = 1; k <= kmax; ++k) {
      auto c = AlcoveCategory::build(rs, k);
      auto md = c.modular_data();
      EXPECT_TRUE(md.modular) << to_string(t) << n << " k=" << k;
      EXPECT_TRUE(md.st_relation);
      EXPECT_TRUE(md.s4_scalar);
      EXPECT_EQ(md.S, md.S.transpose());
      for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(md.S(i, 0), c.qdim(static_cast<int>(i)));
        for (std::size_t j = 0; j < c.size(); ++j)
          EXPECT_EQ(md.C(i, j), CycloNumber(static_cast<long>(c.dual(static_cast<int>(i)) == static_cast<int>(j))));
      }
      auto rep = c.verlinde_check(md);
      EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
    }
  }
}

TEST(AlcoveProperty, GaussSumGivesCentralCharge) {
  // p+ = sum d^2 theta satisfies p+^2 = D^2 exp(2 pi i c / 4) with
  // c = k dim(g) / (k + h^v); this pins the twist normalization.
  for (auto [t, n] : types_upto(3)) {
    auto rs = RootSystem::build(t, n);
    const long dimg = rs.weyl_dimension(rs.theta);
    for (int k = 1; k <= 3; ++k) {
      auto c = AlcoveCategory::build(rs, k);
      CycloNumber p, d2;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto d = c.qdim(static_cast<int>(i));
        p += d * d * c.twist(static_cast<int>(i));
        d2 += d * d;
      }
      const mpq_class cc(k * dimg, k + rs.dual_coxeter);
      EXPECT_EQ(p * p, d2 * exp_2pi_i(cc / 4)) << to_string(t) << n << " k=" << k;
    }
  }
}

TEST(AlcoveReports, CountsAndPass) {
  for (int k = 1; k <= 4; ++k) {
    auto c = AlcoveCategory::build(RootSystem::build(LieType::A, 1), k);
    const long n = k + 1;
    auto a = fusion_associativity(c), m = qdim_multiplicativity(c), t = truncation_rule(c, 6);
    EXPECT_TRUE(a.ok() && m.ok() && t.ok());
    EXPECT_EQ(a.instances, n * n * n * n);
    EXPECT_EQ(m.instances, n * n);
    // Summands of V^1..V^6 for sl2 at level k: labels of parity m up to min(m, k).
    long expect = 0;
    for (int p = 1; p <= 6; ++p)
      for (int l = p % 2; l <= std::min<int>(p, k); l += 2) ++expect;
    EXPECT_EQ(t.instances, expect);
  }
}
