#pragma once

// Level-k alcove categories: simple objects, quantum dimensions, truncated
// fusion (Kac-Walton), truncated powers of V, twists and modular data.

#include <map>
#include <string>
#include <vector>

#include "qgcat/cyclo.hpp"
#include "qgcat/cyclo_matrix.hpp"
#include "qgcat/lie.hpp"
#include "qgcat/report.hpp"

namespace qgcat {

struct Path {
  std::vector<int> nodes;  // alcove indices, nodes[0] = unit
  std::vector<int> edges;  // which summand of V (and copy) each step used
};

struct TruncatedPower {
  int n = 0;
  std::vector<long> multiplicity;  // indexed by alcove weight
  std::vector<Path> paths;

  long centralizer_dimension() const;
};

struct ModularData {
  CycloMatrix S;                   // unnormalized, S(0,0) = 1
  CycloMatrix T;                   // diagonal of twists
  CycloMatrix C;                   // S^2 / D^2
  CycloNumber global_dim_sq;       // D^2 = sum of qdim^2
  CycloNumber modular_scalar;      // (S T)^3 = modular_scalar * S^2
  bool modular = false;
  bool st_relation = false;
  bool s4_scalar = false;
};

struct VerlindeReport {
  long checked = 0;
  long violations = 0;
  std::vector<std::string> failures;  // first few
  bool ok() const { return violations == 0; }
};

class AlcoveCategory {
 public:
  static AlcoveCategory build(const RootSystem& rs, int k);

  const RootSystem& root_system() const { return rs_; }
  int level() const { return k_; }
  int ell() const { return ell_; }
  /// q = zeta_{q_order}, q_order = 2 d ell.
  int q_order() const { return 2 * rs_.ratio_d * ell_; }
  const CycloNumber& q() const { return q_; }

  std::size_t size() const { return weights_.size(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(int i) const { return weights_.at(i); }
  /// -1 if outside the alcove.
  int index_of(const Weight& w) const;
  bool in_alcove(const Weight& w) const;

  const CycloNumber& qdim(int i) const { return qdims_.at(i); }
  int N(int a, int b, int c) const { return fusion_[(a * size() + b) * size() + c]; }
  int dual(int i) const { return duals_.at(i); }
  /// Alcove indices of the summands of V.
  const std::vector<int>& V() const { return v_; }

  /// Truncated decomposition of V_lambda (x) V_mu.
  std::map<Weight, long> fuse(const Weight& lambda, const Weight& mu) const;

  /// <lambda, lambda + 2 rho> with long roots of squared length 2.
  mpq_class casimir(int i) const { return casimirs_.at(i); }
  /// theta_lambda = exp(i pi casimir / ell).
  CycloNumber twist(int i) const;
  /// exp(i pi e / ell) for a rational combination e of Casimir values.
  CycloNumber ribbon_phase(const mpq_class& e) const;

  TruncatedPower truncated_power(int n) const;
  ModularData modular_data() const;
  VerlindeReport verlinde_check(const ModularData& md) const;

 private:
  AlcoveCategory(const RootSystem& rs, int k) : rs_(rs), k_(k) {}

  RootSystem rs_;
  int k_;
  int ell_ = 0;
  CycloNumber q_;
  std::vector<Weight> weights_;
  std::map<Weight, int> index_;
  std::vector<CycloNumber> qdims_;
  std::vector<int> fusion_;
  std::vector<int> duals_;
  std::vector<int> v_;
  std::vector<mpq_class> casimirs_;
};

/// sum_s N[a][b][s] N[s][c][d] = sum_s N[b][c][s] N[a][s][d] for all labels.
SuiteReport fusion_associativity(const AlcoveCategory& cat);
/// qdim(a) qdim(b) = sum_c N[a][b][c] qdim(c).
SuiteReport qdim_multiplicativity(const AlcoveCategory& cat);
/// Every summand of V^n, n <= n_max, has real positive quantum dimension.
SuiteReport truncation_rule(const AlcoveCategory& cat, int n_max);

}  // namespace qgcat
