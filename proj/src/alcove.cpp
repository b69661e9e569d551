#include "qgcat/alcove.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgcat {

long TruncatedPower::centralizer_dimension() const {
  long s = 0;
  for (long m : multiplicity) s += m * m;
  return s;
}

AlcoveCategory AlcoveCategory::build(const RootSystem& rs, int k) {
  if (k < 1) throw std::invalid_argument("level must be positive");
  AlcoveCategory cat(rs, k);
  cat.ell_ = k + rs.dual_coxeter;
  cat.q_ = CycloNumber::root_of_unity(cat.q_order(), 1);

  // Dominant weights of level <= k; each label is bounded by k.
  const int n = rs.rank;
  Weight w(n, 0);
  for (;;) {
    if (rs.level_of(w) <= k) cat.weights_.push_back(w);
    int i = 0;
    while (i < n && w[i] == k) w[i++] = 0;
    if (i == n) break;
    ++w[i];
  }
  std::sort(cat.weights_.begin(), cat.weights_.end(), [&](const Weight& a, const Weight& b) {
    const int la = rs.level_of(a), lb = rs.level_of(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  for (std::size_t i = 0; i < cat.weights_.size(); ++i) cat.index_[cat.weights_[i]] = static_cast<int>(i);

  for (const auto& lam : cat.weights_) {
    const Weight lr = rs.add(lam, rs.rho);
    CycloNumber num(1L), den(1L);
    for (std::size_t a = 0; a < rs.positive_roots.size(); ++a) {
      const CycloNumber qa = cat.q_.pow(rs.root_d(a));
      num *= quantum_integer(rs.coroot_pairing(lr, a), qa);
      den *= quantum_integer(rs.coroot_pairing(rs.rho, a), qa);
    }
    cat.qdims_.push_back(num / den);
    cat.duals_.push_back(cat.index_of(rs.dual(lam)));
    cat.casimirs_.push_back(rs.inner(lam, rs.add(lam, rs.add(rs.rho, rs.rho))));
  }
  for (const auto& v : rs.fundamental_rep()) {
    const int i = cat.index_of(v);
    if (i < 0) throw std::logic_error("V is not in the alcove");
    cat.v_.push_back(i);
  }

  const std::size_t m = cat.size();
  cat.fusion_.assign(m * m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      for (const auto& [nu, mult] : cat.fuse(cat.weights_[a], cat.weights_[b])) {
        const int c = cat.index_of(nu);
        cat.fusion_[(a * m + b) * m + c] = static_cast<int>(mult);
        cat.fusion_[(b * m + a) * m + c] = static_cast<int>(mult);
      }
  return cat;
}

int AlcoveCategory::index_of(const Weight& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

bool AlcoveCategory::in_alcove(const Weight& w) const { return index_of(w) >= 0; }

std::map<Weight, long> AlcoveCategory::fuse(const Weight& lambda, const Weight& mu) const {
  if (!in_alcove(lambda) || !in_alcove(mu)) throw std::invalid_argument("fuse: weight outside the alcove");
  // Sum over the weights of the smaller module.
  const bool swap = rs_.weyl_dimension(lambda) < rs_.weyl_dimension(mu);
  const Weight& base = swap ? mu : lambda;
  const Weight& other = swap ? lambda : mu;
  std::map<Weight, long> out;
  for (const auto& [nu, m] : rs_.weight_multiplicities(other)) {
    auto r = rs_.weyl_orbit_reflect(rs_.add(base, nu), ell_);
    if (r.annihilated) continue;
    out[r.weight] += r.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw std::logic_error("negative truncated fusion multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

CycloNumber AlcoveCategory::ribbon_phase(const mpq_class& e) const {
  return exp_2pi_i(e / (2 * ell_));
}

CycloNumber AlcoveCategory::twist(int i) const { return ribbon_phase(casimirs_.at(i)); }

TruncatedPower AlcoveCategory::truncated_power(int n) const {
  if (n < 1) throw std::invalid_argument("truncated power needs n >= 1");
  TruncatedPower tp;
  tp.n = n;
  tp.paths.push_back(Path{{0}, {}});
  for (int step = 0; step < n; ++step) {
    std::vector<Path> next;
    for (const auto& p : tp.paths) {
      const int last = p.nodes.back();
      for (std::size_t s = 0; s < v_.size(); ++s)
        for (std::size_t c = 0; c < size(); ++c) {
          const int mult = N(last, v_[s], static_cast<int>(c));
          for (int copy = 0; copy < mult; ++copy) {
            Path q = p;
            q.nodes.push_back(static_cast<int>(c));
            q.edges.push_back(static_cast<int>(s) * 64 + copy);
            next.push_back(std::move(q));
          }
        }
    }
    tp.paths = std::move(next);
  }
  std::sort(tp.paths.begin(), tp.paths.end(), [](const Path& a, const Path& b) {
    if (a.nodes.back() != b.nodes.back()) return a.nodes.back() < b.nodes.back();
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.edges < b.edges;
  });
  tp.multiplicity.assign(size(), 0);
  for (const auto& p : tp.paths) ++tp.multiplicity[p.nodes.back()];
  return tp;
}

namespace {

bool proportional(const CycloMatrix& a, const CycloMatrix& b, CycloNumber* scalar) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) {
        const CycloNumber c = a(i, j) / b(i, j);
        if (c.is_zero() || a != b * c) return false;
        if (scalar) *scalar = c;
        return true;
      }
  return false;
}

}  // namespace

ModularData AlcoveCategory::modular_data() const {
  const std::size_t m = size();
  ModularData md;
  md.S = CycloMatrix(m, m);
  md.T = CycloMatrix(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    md.T(a, a) = twist(static_cast<int>(a));
    for (std::size_t b = a; b < m; ++b) {
      CycloNumber s;
      for (std::size_t c = 0; c < m; ++c) {
        const int mult = N(dual(static_cast<int>(a)), static_cast<int>(b), static_cast<int>(c));
        if (mult == 0) continue;
        s += CycloNumber(static_cast<long>(mult)) * ribbon_phase(casimirs_[c] - casimirs_[a] - casimirs_[b]) * qdims_[c];
      }
      md.S(a, b) = s;
      md.S(b, a) = s;
    }
  }
  md.global_dim_sq = CycloNumber();
  for (const auto& d : qdims_) md.global_dim_sq += d * d;

  const CycloMatrix sst = md.S * md.S.conj_transpose();
  md.modular = !md.global_dim_sq.is_zero() && sst == CycloMatrix::identity(m) * md.global_dim_sq;
  const CycloMatrix s2 = md.S * md.S;
  md.C = s2 * md.global_dim_sq.inverse();
  const CycloMatrix st = md.S * md.T;
  const CycloMatrix st3 = st * st * st;
  md.st_relation = proportional(st3, s2, &md.modular_scalar);
  md.s4_scalar = proportional(s2 * s2, CycloMatrix::identity(m), nullptr);
  return md;
}

VerlindeReport AlcoveCategory::verlinde_check(const ModularData& md) const {
  const std::size_t m = size();
  VerlindeReport rep;
  std::vector<CycloNumber> a(m);
  for (std::size_t s = 0; s < m; ++s) a[s] = (md.S(0, s) * md.global_dim_sq).inverse();
  CycloMatrix sc = md.S.conj();
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t u = 0; u < m; ++u) {
      std::vector<CycloNumber> w(m);
      for (std::size_t s = 0; s < m; ++s) w[s] = md.S(l, s) * md.S(u, s) * a[s];
      for (std::size_t v = 0; v < m; ++v) {
        CycloNumber sum;
        for (std::size_t s = 0; s < m; ++s) sum.add_product(w[s], sc(v, s));
        ++rep.checked;
        const CycloNumber expect(static_cast<long>(N(static_cast<int>(l), static_cast<int>(u), static_cast<int>(v))));
        if (sum != expect) {
          ++rep.violations;
          if (rep.failures.size() < 5) {
            std::ostringstream os;
            os << weight_str(weights_[l]) << " x " << weight_str(weights_[u]) << " -> " << weight_str(weights_[v])
               << ": Verlinde " << sum << " vs N " << expect;
            rep.failures.push_back(os.str());
          }
        }
      }
    }
  return rep;
}

SuiteReport fusion_associativity(const AlcoveCategory& cat) {
  SuiteReport r{"fusion associativity"};
  const int n = static_cast<int>(cat.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          long x = 0, y = 0;
          for (int s = 0; s < n; ++s) {
            x += static_cast<long>(cat.N(a, b, s)) * cat.N(s, c, d);
            y += static_cast<long>(cat.N(b, c, s)) * cat.N(a, s, d);
          }
          ++r.instances;
          if (x != y && r.violations++ == 0)
            r.first_counterexample = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                     ") -> " + std::to_string(d);
        }
  return r;
}

SuiteReport qdim_multiplicativity(const AlcoveCategory& cat) {
  SuiteReport r{"qdim multiplicativity"};
  const int n = static_cast<int>(cat.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CycloNumber s;
      for (int c = 0; c < n; ++c)
        if (cat.N(a, b, c)) s += cat.qdim(c) * CycloNumber(static_cast<long>(cat.N(a, b, c)));
      ++r.instances;
      if (s != cat.qdim(a) * cat.qdim(b) && r.violations++ == 0)
        r.first_counterexample = weight_str(cat.weight(a)) + " x " + weight_str(cat.weight(b));
    }
  return r;
}

SuiteReport truncation_rule(const AlcoveCategory& cat, int n_max) {
  SuiteReport r{"truncation rule"};
  for (int m = 1; m <= n_max; ++m) {
    const TruncatedPower tp = cat.truncated_power(m);
    for (std::size_t i = 0; i < tp.multiplicity.size(); ++i) {
      if (tp.multiplicity[i] == 0) continue;
      ++r.instances;
      if (!cat.qdim(static_cast<int>(i)).is_real_positive() && r.violations++ == 0)
        r.first_counterexample = "V^" + std::to_string(m) + " contains " + weight_str(cat.weight(i));
    }
  }
  return r;
}

}  // namespace qgcat
