#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "qgcat/braid.hpp"

using namespace qgcat;

namespace {

AlcoveCategory a1(int k) { return AlcoveCategory::build(RootSystem::build(LieType::A, 1), k); }

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

// Classical Sym^2 V by the character (chi^2 + psi^2 chi) / 2.
std::map<Weight, long> sym2(const RootSystem& rs, const Weight& v) {
  std::map<Weight, long> ch;
  const auto& mv = rs.weight_multiplicities(v);
  for (const auto& [a, m] : mv)
    for (const auto& [b, n] : mv) ch[rs.add(a, b)] += m * n;
  for (const auto& [a, m] : mv) ch[rs.add(a, a)] += m;
  for (auto& [w, m] : ch) m /= 2;
  return peel(rs, ch);
}

}  // namespace

TEST(Braid, RelationsA1) {
  for (int k = 1; k <= 4; ++k) {
    auto cat = a1(k);
    for (int n = 2; n <= 6; ++n) {
      auto t = BraidTower::build(cat, n);
      const auto one = CycloMatrix::identity(t.dim());
      for (int i = 1; i < n; ++i) {
        EXPECT_EQ(t.sigma(i) * t.sigma_inv(i), one);
        EXPECT_EQ(t.e(i) * t.e(i), t.e(i) * t.delta());
        EXPECT_TRUE(t.is_block_diagonal(t.sigma(i)));
        // Eigenvalues A and -A^-3 only, for every i and n.
        const auto p = (t.sigma(i) - one * t.A()) * (t.sigma(i) + one * t.A().pow(-3));
        EXPECT_TRUE(p.is_zero());
        if (i + 1 < n) {
          EXPECT_EQ(t.sigma(i) * t.sigma(i + 1) * t.sigma(i), t.sigma(i + 1) * t.sigma(i) * t.sigma(i + 1));
          EXPECT_EQ(t.e(i) * t.e(i + 1) * t.e(i), t.e(i));
          EXPECT_EQ(t.e(i + 1) * t.e(i) * t.e(i + 1), t.e(i + 1));
        }
        for (int j = i + 2; j < n; ++j) EXPECT_EQ(t.sigma(i) * t.sigma(j), t.sigma(j) * t.sigma(i));
      }
    }
  }
}

TEST(Braid, KauffmanParameter) {
  auto cat = a1(2);
  auto t = BraidTower::build(cat, 3);
  EXPECT_EQ(t.A() * t.A(), cat.q());
  EXPECT_EQ(t.delta(), t.A().pow(2) + t.A().pow(-2));
  // sigma_1 on the 2-dimensional path block of V^3 has both eigenvalues.
  ASSERT_EQ(t.blocks().size(), 1u);
  const auto s = t.sigma(1);
  EXPECT_EQ(s(0, 0) + s(1, 1), t.A() - t.A().pow(-3));
  EXPECT_EQ(s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0), -t.A().pow(-2));
}

TEST(Braid, CentralizerDimensions) {
  EXPECT_EQ(centralizer_dimension(a1(2), 3), 4);
  EXPECT_EQ(centralizer_dimension(a1(3), 3), 5);
  EXPECT_EQ(centralizer_dimension(a1(3), 4), 13);
}

TEST(Braid, ImageDimensions) {
  auto t1 = BraidTower::build(a1(1), 3);
  EXPECT_EQ(t1.braid_image_dimension(), 1);
  EXPECT_EQ(t1.dim(), 1u);
  EXPECT_EQ(t1.sigma(1) * t1.sigma(2), t1.sigma(2) * t1.sigma(1));
  EXPECT_EQ(BraidTower::build(a1(2), 3).braid_image_dimension(), 4);
  EXPECT_EQ(BraidTower::build(a1(3), 4).braid_image_dimension(), 13);
}

TEST(Braid, DualityReportA1) {
  for (int k : {2, 3, 4}) {
    auto start = std::chrono::steady_clock::now();
    auto rows = duality_report(a1(k), 6);
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& r : rows) {
      EXPECT_TRUE(r.duality) << "k=" << k << " n=" << r.n << " " << r.braid_image_dim << "/" << r.centralizer_dim;
      EXPECT_FALSE(r.eigenvalues.empty());
    }
    std::cout << "k=" << k << " duality up to n=6 in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  }
}

TEST(Braid, MarkovTrace) {
  for (int k = 2; k <= 4; ++k) {
    auto cat = a1(k);
    for (int n = 2; n <= 5; ++n) {
      auto t = BraidTower::build(cat, n);
      const auto tr1 = t.markov_trace(CycloMatrix::identity(t.dim()));
      EXPECT_EQ(tr1, t.delta().pow(n));
      for (int i = 1; i < n; ++i) {
        const auto ratio = t.markov_trace(t.e(i)) / tr1;
        EXPECT_EQ(ratio, t.delta().inverse());
        // tr(e_i / delta) = 1/delta^2, evaluated at 40 digits.
        const auto lhs = (ratio / t.delta()).to_float(40);
        const auto rhs = t.delta().pow(-2).to_float(40);
        mpfr_float::default_precision(50);
        EXPECT_LT(boost::multiprecision::abs(lhs.re - rhs.re), mpfr_float("1e-30"));
      }
    }
  }
}

TEST(Braid, NonA1Rejected) {
  auto cat = AlcoveCategory::build(RootSystem::build(LieType::B, 2), 1);
  EXPECT_THROW(BraidTower::build(cat, 3), std::invalid_argument);
}

TEST(PairBraiding, A1Examples) {
  auto c2 = a1(2);
  auto pb0 = pair_braiding(c2, 0);
  ASSERT_EQ(pb0.size(), 1u);
  ASSERT_EQ(pb0[0].channels.size(), 1u);
  // Braiding with the unit: theta_V / theta_V.
  EXPECT_TRUE((pb0[0].eigen[0] * pb0[0].eigen[0]).is_one());
  EXPECT_TRUE(coboundary(c2, pb0[0]).rbar[0].is_one());

  auto pb = pair_braiding(c2, 1)[0];
  ASSERT_EQ(pb.channels, (std::vector<int>{0, 2}));
  auto t = BraidTower::build(c2, 2);
  const CycloNumber a = t.A();
  EXPECT_EQ(pb.eigen[0], -a.pow(-3));
  EXPECT_EQ(pb.eigen[1], a);
  EXPECT_EQ(pb.eigen[0] / pb.eigen[1], -c2.q().pow(-2));
  // The n = 2 tower is diagonal with the same scalars.
  EXPECT_EQ(t.sigma(1)(0, 0), pb.eigen[0]);
  EXPECT_EQ(t.sigma(1)(1, 1), pb.eigen[1]);
  auto cb = coboundary(c2, pb);
  EXPECT_EQ(cb.rbar[0], CycloNumber(-1L));
  EXPECT_EQ(cb.rbar[1], CycloNumber(1L));
}

TEST(PairBraiding, MonodromyAndCoboundaryAllTypes) {
  const std::vector<std::tuple<LieType, int, int>> cases = {
      {LieType::A, 1, 8}, {LieType::A, 2, 4}, {LieType::A, 3, 2}, {LieType::B, 2, 3}, {LieType::C, 2, 3},
      {LieType::G2, 2, 3}, {LieType::B, 3, 2}, {LieType::C, 3, 2}, {LieType::D, 4, 2}, {LieType::D, 5, 1}};
  for (auto [t, n, kmax] : cases) {
    auto rs = RootSystem::build(t, n);
    for (int k = 1; k <= kmax; ++k) {
      auto cat = AlcoveCategory::build(rs, k);
      for (int l = 0; l < static_cast<int>(cat.size()); ++l)
        for (const auto& pb : pair_braiding(cat, l)) {
          for (std::size_t j = 0; j < pb.channels.size(); ++j)
            EXPECT_EQ(pb.eigen[j] * pb.eigen[j], pb.monodromy(cat, j));
          auto cb = coboundary(cat, pb);
          EXPECT_TRUE(cb.involutive) << to_string(t) << n << " k=" << k;
          EXPECT_TRUE(cb.unit_modulus);
          for (std::size_t j = 0; j < cb.rbar.size(); ++j)
            EXPECT_EQ(cb.rbar[j], CycloNumber(static_cast<long>(pb.signs[j])));
        }
    }
  }
}

TEST(PairBraiding, SignsMatchClassicalFlip) {
  // At q = 1 the braiding on V (x) V is the flip: +1 on Sym^2 V, -1 on Lambda^2 V.
  const std::vector<std::pair<LieType, int>> types = {
      {LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::B, 2}, {LieType::B, 3},
      {LieType::C, 2}, {LieType::C, 3}, {LieType::D, 4}, {LieType::D, 5}, {LieType::G2, 2}};
  for (auto [t, n] : types) {
    auto rs = RootSystem::build(t, n);
    // A level high enough that V (x) V is not truncated.
    auto cat = AlcoveCategory::build(rs, 3);
    for (int v : cat.V()) {
      auto sym = sym2(rs, cat.weight(v));
      for (const auto& pb : pair_braiding(cat, v)) {
        if (pb.v != v) continue;
        for (std::size_t j = 0; j < pb.channels.size(); ++j) {
          const bool in_sym = sym.count(cat.weight(pb.channels[j])) > 0;
          EXPECT_EQ(pb.signs[j], in_sym ? 1 : -1) << to_string(t) << n << weight_str(cat.weight(pb.channels[j]));
        }
      }
    }
  }
}

TEST(PairBraiding, PairLevelDuality) {
  const std::vector<std::tuple<LieType, int, int>> cases = {
      {LieType::A, 1, 4}, {LieType::A, 2, 4}, {LieType::B, 2, 3}, {LieType::C, 2, 3},
      {LieType::G2, 2, 3}, {LieType::D, 4, 2}, {LieType::D, 5, 2}, {LieType::B, 3, 2}};
  for (auto [t, n, kmax] : cases) {
    auto rs = RootSystem::build(t, n);
    for (int k = 1; k <= kmax; ++k) {
      auto cat = AlcoveCategory::build(rs, k);
      for (const auto& r : pair_duality(cat)) {
        std::set<std::string> distinct(r.eigenvalues.begin(), r.eigenvalues.end());
        // Vandermonde: spanning iff the eigenvalues are distinct.
        EXPECT_EQ(r.duality, distinct.size() == r.eigenvalues.size());
        EXPECT_EQ(r.braid_image_dim, static_cast<long>(distinct.size()));
        EXPECT_TRUE(r.duality) << to_string(t) << n << " k=" << k;
      }
    }
  }
}
