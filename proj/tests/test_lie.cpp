#include <gtest/gtest.h>

#include <functional>

#include "qgcat/lie.hpp"

using namespace qgcat;

namespace {

std::vector<std::pair<LieType, int>> supported_upto(int max_rank) {
  std::vector<std::pair<LieType, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({LieType::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({LieType::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({LieType::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({LieType::D, n});
  out.push_back({LieType::G2, 2});
  return out;
}

void for_each_weight(int rank, int max_label, const std::function<void(const Weight&)>& f) {
  Weight w(rank, 0);
  for (;;) {
    f(w);
    int i = 0;
    while (i < rank && w[i] == max_label) w[i++] = 0;
    if (i == rank) return;
    ++w[i];
  }
}

// Decomposes a formal character by repeatedly removing the character of the
// irreducible module whose highest weight is a maximal dominant weight left.
std::map<Weight, long> peel(const RootSystem& rs, std::map<Weight, long> ch) {
  std::map<Weight, long> out;
  for (;;) {
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
    if (ch.empty()) return out;
    Weight top;
    for (const auto& [w, m] : ch) {
      if (!rs.is_dominant(w)) continue;
      bool maximal = true;
      for (const auto& [u, n] : ch) {
        if (u == w) continue;
        auto c = rs.root_difference(u, w);
        if (c && std::all_of(c->begin(), c->end(), [](int v) { return v >= 0; })) maximal = false;
      }
      if (maximal) {
        top = w;
        break;
      }
    }
    const long m = ch[top];
    out[top] += m;
    for (const auto& [w, k] : rs.weight_multiplicities(top)) ch[w] -= m * k;
  }
}

std::map<Weight, long> product_character(const RootSystem& rs, const Weight& a, const Weight& b) {
  std::map<Weight, long> ch;
  for (const auto& [u, m] : rs.weight_multiplicities(a))
    for (const auto& [v, n] : rs.weight_multiplicities(b)) ch[rs.add(u, v)] += m * n;
  return ch;
}

}  // namespace

TEST(Lie, DualCoxeterAndRatio) {
  auto a1 = RootSystem::build(LieType::A, 1);
  EXPECT_EQ(a1.dual_coxeter, 2);
  EXPECT_EQ(a1.ratio_d, 1);
  auto g2 = RootSystem::build(LieType::G2, 2);
  EXPECT_EQ(g2.dual_coxeter, 4);
  EXPECT_EQ(g2.ratio_d, 3);
  auto c2 = RootSystem::build(LieType::C, 2);
  EXPECT_EQ(c2.dual_coxeter, 3);
  EXPECT_EQ(c2.ratio_d, 2);
}

TEST(LieProperty, DualCoxeterFromCasimir) {
  // <theta, theta + 2 rho> = 2 h^v for long roots of squared length 2.
  for (auto [t, n] : supported_upto(5)) {
    auto rs = RootSystem::build(t, n);
    mpq_class c = rs.inner(rs.theta, rs.add(rs.theta, rs.add(rs.rho, rs.rho)));
    EXPECT_EQ(c, 2 * rs.dual_coxeter) << to_string(t) << n;
    EXPECT_EQ(rs.inner(rs.theta, rs.theta), 2);
  }
}

TEST(LieProperty, CartanShapeAndRho) {
  for (auto [t, n] : supported_upto(5)) {
    auto rs = RootSystem::build(t, n);
    mpq_class lmax = 0, lmin = 100;
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(rs.cartan[i][i], 2);
      for (int j = 0; j < n; ++j)
        if (i != j) EXPECT_LE(rs.cartan[i][j], 0);
      // <rho, alpha_i^v> is the i-th label of rho.
      EXPECT_EQ(rs.rho[i], 1);
    }
    for (const auto& r : rs.positive_roots) {
      mpq_class l = rs.inner(r, r);
      lmax = std::max(lmax, l);
      lmin = std::min(lmin, l);
    }
    EXPECT_EQ(lmax / lmin, rs.ratio_d);
    // 2 rho is the sum of the positive roots.
    Weight two_rho = rs.zero();
    for (const auto& r : rs.positive_roots) two_rho = rs.add(two_rho, r);
    EXPECT_EQ(two_rho, rs.add(rs.rho, rs.rho));
  }
}

TEST(LieProperty, RootCounts) {
  // |Phi+| = (dim g - rank) / 2 = (Weyl dimension of the adjoint - rank) / 2.
  for (auto [t, n] : supported_upto(5)) {
    auto rs = RootSystem::build(t, n);
    long adj = rs.weyl_dimension(rs.theta);
    EXPECT_EQ(static_cast<long>(rs.positive_roots.size()), (adj - n) / 2) << to_string(t) << n;
  }
}

TEST(Lie, Inadmissible) {
  EXPECT_THROW(RootSystem::build(LieType::A, 0), std::invalid_argument);
  EXPECT_THROW(RootSystem::build(LieType::B, 1), std::invalid_argument);
  EXPECT_THROW(RootSystem::build(LieType::D, 2), std::invalid_argument);
  EXPECT_THROW(RootSystem::build(LieType::G2, 3), std::invalid_argument);
}

TEST(Lie, FundamentalRep) {
  auto a1 = RootSystem::build(LieType::A, 1);
  EXPECT_EQ(a1.fundamental_rep(), std::vector<Weight>{Weight{1}});
  auto b2 = RootSystem::build(LieType::B, 2);
  EXPECT_EQ(b2.fundamental_rep(), std::vector<Weight>({Weight{0, 1}}));
  EXPECT_EQ(b2.weyl_dimension({0, 1}), 4);
  auto g2 = RootSystem::build(LieType::G2, 2);
  ASSERT_EQ(g2.fundamental_rep().size(), 1u);
  EXPECT_EQ(g2.weyl_dimension(g2.fundamental_rep()[0]), 7);
  auto d4 = RootSystem::build(LieType::D, 4);
  EXPECT_EQ(d4.fundamental_rep().size(), 2u);
  for (const auto& v : d4.fundamental_rep()) EXPECT_EQ(d4.weyl_dimension(v), 8);
  auto d5 = RootSystem::build(LieType::D, 5);
  EXPECT_EQ(d5.weyl_dimension(d5.fundamental_rep()[0]), 16);
  auto c3 = RootSystem::build(LieType::C, 3);
  EXPECT_EQ(c3.weyl_dimension(c3.fundamental_rep()[0]), 6);
}

TEST(Lie, WeylDimension) {
  auto a1 = RootSystem::build(LieType::A, 1);
  EXPECT_EQ(a1.weyl_dimension({0}), 1);
  EXPECT_EQ(a1.weyl_dimension({3}), 4);
  EXPECT_THROW(a1.weyl_dimension({-1}), std::invalid_argument);
}

TEST(LieProperty, WeylDimensionMatchesCharacter) {
  for (auto [t, n] : supported_upto(3)) {
    auto rs = RootSystem::build(t, n);
    for_each_weight(n, 2, [&](const Weight& w) {
      long total = 0;
      for (const auto& [mu, m] : rs.weight_multiplicities(w)) total += m;
      EXPECT_EQ(total, rs.weyl_dimension(w)) << to_string(t) << n << weight_str(w);
    });
  }
}

TEST(Lie, TensorWithV) {
  auto a1 = RootSystem::build(LieType::A, 1);
  EXPECT_EQ(a1.tensor_with_V({0}), (std::map<Weight, long>{{{1}, 1}}));
  EXPECT_EQ(a1.tensor_with_V({1}), (std::map<Weight, long>{{{0}, 1}, {{2}, 1}}));
  EXPECT_EQ(a1.tensor_with_V({2}), (std::map<Weight, long>{{{1}, 1}, {{3}, 1}}));
}

TEST(LieProperty, KlimykMatchesCharacterPeeling) {
  for (auto [t, n] : supported_upto(3)) {
    auto rs = RootSystem::build(t, n);
    for_each_weight(n, 2, [&](const Weight& lam) {
      std::map<Weight, long> expect;
      for (const auto& v : rs.fundamental_rep())
        for (const auto& [w, m] : peel(rs, product_character(rs, lam, v))) expect[w] += m;
      EXPECT_EQ(rs.tensor_with_V(lam), expect) << to_string(t) << n << weight_str(lam);
    });
  }
}

TEST(LieProperty, TensorDimensionSum) {
  for (auto [t, n] : supported_upto(4)) {
    auto rs = RootSystem::build(t, n);
    long dim_v = 0;
    for (const auto& v : rs.fundamental_rep()) dim_v += rs.weyl_dimension(v);
    for_each_weight(n, 4, [&](const Weight& lam) {
      long s = 0;
      for (const auto& [nu, m] : rs.tensor_with_V(lam)) s += m * rs.weyl_dimension(nu);
      EXPECT_EQ(s, rs.weyl_dimension(lam) * dim_v) << to_string(t) << n << weight_str(lam);
    });
    std::map<Weight, long> v0;
    for (const auto& v : rs.fundamental_rep()) v0[v] += 1;
    EXPECT_EQ(rs.tensor_with_V(rs.zero()), v0);
  }
}

TEST(Lie, WeylOrbitReflect) {
  auto a1 = RootSystem::build(LieType::A, 1);
  auto r = a1.weyl_orbit_reflect({2});
  EXPECT_FALSE(r.annihilated);
  EXPECT_EQ(r.weight, Weight{2});
  EXPECT_EQ(r.sign, 1);
  EXPECT_TRUE(a1.weyl_orbit_reflect({-1}).annihilated);
  // -2 + rho = -1 is not on a wall: it reflects to 1, i.e. weight 0.
  r = a1.weyl_orbit_reflect({-2});
  EXPECT_FALSE(r.annihilated);
  EXPECT_EQ(r.weight, Weight{0});
  EXPECT_EQ(r.sign, -1);
  r = a1.weyl_orbit_reflect({-3});
  EXPECT_FALSE(r.annihilated);
  EXPECT_EQ(r.weight, Weight{1});
  EXPECT_EQ(r.sign, -1);
  // Affine wall at ell = 3: lambda = 2 has lambda + rho = 3 on the wall.
  EXPECT_TRUE(a1.weyl_orbit_reflect({2}, 3).annihilated);
  r = a1.weyl_orbit_reflect({3}, 3);  // 4 -> 2, i.e. weight 1, one reflection
  EXPECT_EQ(r.weight, Weight{1});
  EXPECT_EQ(r.sign, -1);
}

TEST(LieProperty, ReflectIdempotent) {
  for (auto [t, n] : supported_upto(3)) {
    auto rs = RootSystem::build(t, n);
    for_each_weight(n, 6, [&](const Weight& raw) {
      Weight mu(n);
      for (int i = 0; i < n; ++i) mu[i] = raw[i] - 3;
      for (std::optional<int> ell : {std::optional<int>{}, std::optional<int>{rs.dual_coxeter + 2}}) {
        auto r = rs.weyl_orbit_reflect(mu, ell);
        if (r.annihilated) continue;
        EXPECT_TRUE(rs.is_dominant(r.weight));
        auto again = rs.weyl_orbit_reflect(r.weight, ell);
        EXPECT_FALSE(again.annihilated);
        EXPECT_EQ(again.weight, r.weight);
        EXPECT_EQ(again.sign, 1);
      }
    });
  }
}

TEST(Lie, DualWeights) {
  auto a2 = RootSystem::build(LieType::A, 2);
  EXPECT_EQ(a2.dual({1, 0}), (Weight{0, 1}));
  EXPECT_EQ(a2.dual({2, 1}), (Weight{1, 2}));
  auto b2 = RootSystem::build(LieType::B, 2);
  EXPECT_EQ(b2.dual({1, 1}), (Weight{1, 1}));
  auto d5 = RootSystem::build(LieType::D, 5);
  EXPECT_EQ(d5.dual({0, 0, 0, 0, 1}), (Weight{0, 0, 0, 1, 0}));
}
