#include "qgcat/solvers.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>

namespace qgcat {

namespace {

bool is_unit_entry(const FKey& x) { return x.a == 0 || x.b == 0 || x.c == 0; }

struct ResidualFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const SixJTable* t;
  std::vector<std::complex<double>> base;             // fixed values
  std::vector<int> unknowns;                          // variable ids
  std::vector<int> slot;                              // variable -> unknown index or -1
  std::vector<std::vector<std::vector<int>>> blocks;  // F-matrices as variable ids

  std::size_t unitary_rows() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size() * b.size();
    return n;
  }
  int inputs() const { return static_cast<int>(2 * unknowns.size()); }
  int values() const { return static_cast<int>(2 * (t->relations().size() + unitary_rows())); }

  std::vector<std::complex<double>> assemble(const Eigen::VectorXd& x) const {
    auto v = base;
    for (std::size_t i = 0; i < unknowns.size(); ++i) v[unknowns[i]] = {x[2 * i], x[2 * i + 1]};
    return v;
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    const auto v = assemble(x);
    const auto& rels = t->relations();
    std::size_t r = 0;
    for (; r < rels.size(); ++r) {
      const auto z = evaluate(rels[r], v);
      fvec[2 * r] = z.real();
      fvec[2 * r + 1] = z.imag();
    }
    for (const auto& m : blocks)
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j, ++r) {
          std::complex<double> z = i == j ? -1.0 : 0.0;
          for (std::size_t l = 0; l < m.size(); ++l) z += v[m[i][l]] * std::conj(v[m[j][l]]);
          fvec[2 * r] = z.real();
          fvec[2 * r + 1] = z.imag();
        }
    return 0;
  }

  // d(residual r) += c dx, or c conj(dx).
  void add(Eigen::MatrixXd& fjac, std::size_t r, int var, std::complex<double> c, bool conjugated) const {
    const int s = slot[var];
    if (s < 0) return;
    const double sg = conjugated ? -1.0 : 1.0;
    fjac(2 * r, 2 * s) += c.real();
    fjac(2 * r, 2 * s + 1) -= sg * c.imag();
    fjac(2 * r + 1, 2 * s) += c.imag();
    fjac(2 * r + 1, 2 * s + 1) += sg * c.real();
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& fjac) const {
    const auto v = assemble(x);
    fjac.setZero();
    const auto& rels = t->relations();
    std::size_t r = 0;
    for (; r < rels.size(); ++r)
      for (const auto& m : rels[r].terms)
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
          if (slot[m.factors[i].first] < 0) continue;
          // Unknowns are F entries, which occur with power 1.
          std::complex<double> d = static_cast<double>(m.coef);
          for (std::size_t j = 0; j < m.factors.size(); ++j) {
            if (j == i) continue;
            const auto& [w, e] = m.factors[j];
            d *= e == 1 ? v[w] : std::pow(v[w], e);
          }
          add(fjac, r, m.factors[i].first, d, false);
        }
    for (const auto& m : blocks)
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j, ++r)
          for (std::size_t l = 0; l < m.size(); ++l) {
            add(fjac, r, m[i][l], std::conj(v[m[j][l]]), false);
            add(fjac, r, m[j][l], v[m[i][l]], true);
          }
    return 0;
  }
};

}  // namespace

NumericSolveReport numeric_pentagon_solve(const SixJTable& t, int starts, std::uint64_t seed) {
  NumericSolveReport rep;
  ResidualFunctor fn;
  fn.t = &t;
  fn.base.resize(t.num_vars());
  fn.slot.assign(t.num_vars(), -1);
  for (std::size_t i = 0; i < t.num_f(); ++i) {
    if (is_unit_entry(t.fkeys()[i])) {
      fn.base[i] = 1.0;
    } else {
      fn.slot[i] = static_cast<int>(fn.unknowns.size());
      fn.unknowns.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t i = t.num_f(); i < t.num_vars(); ++i) fn.base[i] = t.values()[i].to_complex();
  // Unitarity of every F-matrix excludes the degenerate critical points with
  // vanishing F-matrices.
  const int n = t.level() + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const auto es = t.left_channels(a, b, c, d);
          const auto fs = t.right_channels(a, b, c, d);
          if (es.empty()) continue;
          std::vector<std::vector<int>> ids(es.size());
          for (std::size_t i = 0; i < es.size(); ++i)
            for (int f : fs) ids[i].push_back(t.fid(a, b, c, d, es[i], f));
          fn.blocks.push_back(std::move(ids));
        }

  const GaugeSystem gauge(t);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  rep.best_residual = INFINITY;
  for (int s = 0; s < starts; ++s) {
    ++rep.starts;
    Eigen::VectorXd x(fn.inputs());
    for (int i = 0; i < x.size(); ++i) x[i] = unif(rng);
    if (x.size() > 0) {
      Eigen::LevenbergMarquardt<ResidualFunctor> lm(fn);
      lm.parameters.maxfev = 400;
      lm.parameters.xtol = 1e-15;
      lm.parameters.ftol = 1e-15;
      lm.minimize(x);
    }
    Eigen::VectorXd f(fn.values());
    fn(x, f);
    const double resid = f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
    rep.best_residual = std::min(rep.best_residual, resid);
    std::ostringstream os;
    os << "start " << s << ": max residual " << resid;
    if (resid < kConvergedResidual) {
      ++rep.converged;
      const auto cmp = gauge.compare(fn.assemble(x), t.values(), kGaugeTolerance, kZeroTolerance);
      if (cmp.equivalent) {
        ++rep.matched;
        os << ", gauge equivalent (" << cmp.kernel_size << " invariants)";
      } else {
        os << ", different solution: " << cmp.reason;
      }
    } else {
      os << ", not converged";
    }
    rep.notes.push_back(os.str());
  }
  return rep;
}

std::vector<int> special_variables(const SixJTable& t) {
  std::vector<int> out;
  const int v = 1;
  for (std::size_t i = 0; i < t.num_f(); ++i) {
    const auto& x = t.fkeys()[i];
    const int ones = (x.a == v) + (x.b == v) + (x.c == v);
    if (ones >= 2) out.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < t.num_r(); ++i) {
    const auto& x = t.rkeys()[i];
    if (x.a == v || x.b == v) out.push_back(static_cast<int>(t.num_f() + i));
  }
  return out;
}

PropagationReport propagate_from_special(const SixJTable& t) {
  PropagationReport rep;
  const std::size_t nv = t.num_vars();
  std::vector<char> known(nv, 0);
  rep.values.assign(nv, CycloNumber());
  for (int i : special_variables(t)) {
    known[i] = 1;
    rep.values[i] = t.values()[i];
  }
  for (std::size_t i = 0; i < t.num_f(); ++i)
    if (!known[i] && is_unit_entry(t.fkeys()[i])) {
      known[i] = 1;
      rep.values[i] = CycloNumber(1L);
    }
  rep.known_initially = static_cast<std::size_t>(std::count(known.begin(), known.end(), 1));

  const auto& rels = t.relations();
  std::vector<std::vector<int>> uses(nv);
  std::vector<int> missing(rels.size(), 0);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::vector<int> vars;
    for (const auto& m : rels[r].terms)
      for (const auto& [v, e] : m.factors) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int v : vars) {
      uses[v].push_back(static_cast<int>(r));
      if (!known[v]) ++missing[r];
    }
  }

  std::deque<int> queue;
  for (std::size_t r = 0; r < rels.size(); ++r)
    if (missing[r] == 1) queue.push_back(static_cast<int>(r));
  auto learn = [&](int v, const CycloNumber& val) {
    known[v] = 1;
    rep.values[v] = val;
    for (int r : uses[v])
      if (--missing[r] == 1) queue.push_back(r);
  };

  // Solve a relation with one unknown x occurring to a single power +-1.
  auto try_solve = [&](const Relation& rel) -> bool {
    int x = -1;
    for (const auto& m : rel.terms)
      for (const auto& [v, e] : m.factors)
        if (!known[v]) x = v;
    if (x < 0) return false;
    CycloNumber a, c;
    int degree = 0;
    for (const auto& m : rel.terms) {
      CycloNumber p(static_cast<long>(m.coef));
      int d = 0;
      for (const auto& [v, e] : m.factors) {
        if (v == x) {
          d += e;
        } else {
          p *= e == 1 ? rep.values[v] : rep.values[v].pow(e);
        }
      }
      if (d == 0) {
        c += p;
      } else {
        if (degree != 0 && degree != d) return false;
        degree = d;
        a += p;
      }
    }
    if (degree == 1 && !a.is_zero()) {
      learn(x, -c / a);
      return true;
    }
    if (degree == -1 && !a.is_zero() && !c.is_zero()) {
      learn(x, -a / c);
      return true;
    }
    return false;
  };

  const GaugeSystem gauge(t);
  auto free_in_gauge = [&](int v) {
    std::vector<int> vars;
    for (std::size_t i = 0; i < nv; ++i)
      if (known[i] && !rep.values[i].is_zero()) vars.push_back(static_cast<int>(i));
    vars.push_back(v);
    for (const auto& y : gauge.invariant_monomials(vars))
      for (const auto& [i, c] : y)
        if (i == v && c != 0) return false;
    return true;
  };

  for (;;) {
    while (!queue.empty()) {
      const int r = queue.front();
      queue.pop_front();
      if (missing[r] != 1) continue;
      if (try_solve(rels[r])) ++rep.solved;
    }
    // Gauge fixing: prefer entries of 1x1 F-matrices.
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass)
      for (std::size_t i = 0; i < t.num_f() && pick < 0; ++i) {
        if (known[i]) continue;
        const auto& x = t.fkeys()[i];
        if (pass == 0 && t.left_channels(x.a, x.b, x.c, x.d).size() != 1) continue;
        if (free_in_gauge(static_cast<int>(i))) pick = static_cast<int>(i);
      }
    if (pick < 0) break;
    rep.gauge_fixed.push_back(t.var_name(pick));
    learn(pick, CycloNumber(1L));
  }

  for (std::size_t i = 0; i < nv; ++i)
    if (!known[i]) rep.undetermined.push_back(t.var_name(static_cast<int>(i)));
  if (!rep.undetermined.empty()) return rep;
  for (const auto& rel : rels)
    if (!evaluate(rel, rep.values).is_zero()) ++rep.relations_violated;
  rep.comparison = gauge.compare(t.values(), rep.values);
  std::vector<int> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<int>(i);
  if (auto u = gauge.solve(t.values(), rep.values, all)) {
    rep.gauge = *u;
    rep.gauge_found = true;
  }
  return rep;
}

RigidityReport gauge_rigidity_experiment(const AlcoveCategory& cat, int trials, std::uint64_t seed) {
  RigidityReport rep;
  const SixJTable t = SixJTable::q_racah(cat);
  const GaugeSystem gauge(t);
  const SymbolInvariants base = symbol_invariants(t, t.values(), cat);
  const int order = 4 * t.ell();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> power(0, order - 1);
  std::vector<int> sensitive;
  for (std::size_t i = 0; i < t.num_f(); ++i)
    if (gauge.is_gauge_sensitive(static_cast<int>(i))) sensitive.push_back(static_cast<int>(i));
  std::uniform_int_distribution<std::size_t> pick(0, sensitive.empty() ? 0 : sensitive.size() - 1);
  const CycloNumber bump = CycloNumber(1L) + CycloNumber::root_of_unity(8, 1) * CycloNumber(mpq_class(1, 1000));

  for (int trial = 0; trial < trials; ++trial) {
    ++rep.trials;
    std::vector<CycloNumber> u(gauge.num_vertices(), CycloNumber(1L));
    for (std::size_t v = 0; v < u.size(); ++v) {
      const RKey& x = gauge.vertex(v);
      if (x.a != 0 && x.b != 0) u[v] = CycloNumber::root_of_unity(order, power(rng));
    }
    const auto g = gauge.apply(t.values(), u);
    if (pentagon_suite(t, g).ok() && hexagon_suite(t, g).ok()) ++rep.gauge_preserved;
    if (symbol_invariants(t, g, cat) == base) ++rep.invariants_preserved;

    if (sensitive.empty()) continue;
    const int var = sensitive[pick(rng)];
    auto p = t.values();
    p[var] *= bump;
    if (!pentagon_suite(t, p).ok()) {
      ++rep.perturbations_detected;
    } else {
      rep.undetected.push_back(t.var_name(var));
    }
  }
  rep.propagation = propagate_from_special(t);
  return rep;
}

}  // namespace qgcat
