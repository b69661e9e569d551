#pragma once

// Root systems of types A, B, C, D, G2 in Dynkin-label coordinates.
//
// Conventions: Bourbaki numbering, Cartan matrix A[i][j] = <alpha_i, alpha_j^v>
// (so row i lists the Dynkin labels of alpha_i), long roots of squared
// length 2.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qgcat {

enum class LieType { A, B, C, D, G2 };

LieType parse_lie_type(const std::string& s);
std::string to_string(LieType t);

using Weight = std::vector<int>;  // Dynkin labels

std::string weight_str(const Weight& w);

struct ReflectResult {
  bool annihilated = false;
  Weight weight;
  int sign = 1;
};

class RootSystem {
 public:
  LieType lie_type;
  int rank;
  std::vector<std::vector<int>> cartan;
  std::vector<Weight> positive_roots;            // Dynkin labels
  std::vector<std::vector<int>> root_coords;     // same roots, simple-root coordinates
  Weight rho;
  Weight theta;                                  // highest root
  std::vector<int> theta_comarks;                // theta^v in simple coroots
  int dual_coxeter = 0;
  int ratio_d = 1;
  std::vector<int> d_simple;                     // d * |alpha_i|^2 / 2, in {1..d}

  /// Throws std::invalid_argument for inadmissible pairs.
  static RootSystem build(LieType t, int rank);

  /// <x, y> with long roots of squared length 2.
  mpq_class inner(const Weight& x, const Weight& y) const;
  /// d * <x, y>; takes values in Z/|det|.
  mpq_class inner_short(const Weight& x, const Weight& y) const { return inner(x, y) * ratio_d; }

  /// <x, theta^v>.
  int level_of(const Weight& x) const;
  /// <x, alpha^v> for a positive root given by index into positive_roots.
  int coroot_pairing(const Weight& x, std::size_t root) const;
  /// d_alpha = d |alpha|^2 / 2 for a positive root.
  int root_d(std::size_t root) const { return root_d_[root]; }

  bool is_dominant(const Weight& w) const;
  Weight add(const Weight& a, const Weight& b) const;
  Weight sub(const Weight& a, const Weight& b) const;
  Weight reflect(const Weight& w, int i) const;

  /// Linear Weyl-group representative in the dominant chamber (no rho shift).
  Weight dominant(const Weight& w) const;
  /// lambda* = dominant representative of -lambda.
  Weight dual(const Weight& w) const;

  /// Reflects mu + rho into the dominant chamber (the fundamental alcove of
  /// scale ell when given) and subtracts rho again.
  ReflectResult weyl_orbit_reflect(const Weight& mu, std::optional<int> ell = std::nullopt) const;

  long weyl_dimension(const Weight& lambda) const;

  /// Weights of the irreducible module with highest weight lambda, with
  /// multiplicities (Freudenthal). Cached.
  const std::map<Weight, long>& weight_multiplicities(const Weight& lambda) const;

  /// lambda - mu as an integer combination of simple roots, if it is one.
  std::optional<std::vector<int>> root_difference(const Weight& lambda, const Weight& mu) const;

  /// Generating object V; two summands for D with even rank.
  std::vector<Weight> fundamental_rep() const;

  /// Classical decomposition of V_lambda (x) V by Klimyk's rule, summed over
  /// the summands of V.
  std::map<Weight, long> tensor_with_V(const Weight& lambda) const;
  /// Classical decomposition of V_lambda (x) V_mu.
  std::map<Weight, long> tensor(const Weight& lambda, const Weight& mu) const;

  Weight zero() const { return Weight(rank, 0); }
  Weight fundamental_weight(int i) const;

 private:
  std::vector<std::vector<mpq_class>> gram_;  // <omega_i, omega_j>
  std::vector<std::vector<int>> inv_cartan_num_;  // det_ * A^-1, integral
  int det_ = 1;  // common denominator of A^-1
  std::vector<int> root_d_;
  std::vector<std::vector<int>> coroot_coords_;  // alpha^v in simple coroots

  struct MultCache {
    std::mutex mu;
    std::map<Weight, std::map<Weight, long>> table;
  };
  std::shared_ptr<MultCache> cache_ = std::make_shared<MultCache>();
};

}  // namespace qgcat
