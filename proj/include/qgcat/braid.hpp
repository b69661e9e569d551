#pragma once

// Braid group representations on truncated powers of V.
//
// Type A_1: exact Temperley-Lieb path model on V^n with
//   e_i^2 = [2] e_i,   sigma_i = A 1 - A^-1 e_i,   A = q^(1/2) = zeta_{4 ell},
// so sigma_i acts by A on the channel (2) and by -A^-3 on the channel (0),
// and sigma_i becomes the flip at q = 1.
//
// General type: scalar braiding blocks on the fusion channels of V_lambda (x) V.

#include <string>
#include <vector>

#include "qgcat/alcove.hpp"
#include "qgcat/cyclo_matrix.hpp"

namespace qgcat {

class BraidTower {
 public:
  /// Throws std::invalid_argument unless the category is of type A_1.
  static BraidTower build(const AlcoveCategory& cat, int n);

  int strands() const { return n_; }
  std::size_t dim() const { return paths_.size(); }
  const std::vector<Path>& basis() const { return paths_; }
  const CycloNumber& A() const { return a_; }
  const CycloNumber& delta() const { return delta_; }

  /// Generators are numbered 1..n-1.
  const CycloMatrix& e(int i) const { return e_.at(i - 1); }
  const CycloMatrix& sigma(int i) const { return sigma_.at(i - 1); }
  const CycloMatrix& sigma_inv(int i) const { return sigma_inv_.at(i - 1); }

  /// Isotypic blocks: [offset, offset + size) of paths ending at the same weight.
  struct Block {
    int weight;
    std::size_t offset;
    std::size_t size;
    CycloNumber qdim;
  };
  const std::vector<Block>& blocks() const { return blocks_; }

  /// True iff m is zero outside the isotypic blocks.
  bool is_block_diagonal(const CycloMatrix& m) const;

  /// Sum of the multiplicity squares.
  long centralizer_dimension() const;
  /// Dimension of the unital algebra generated by the sigma_i^{+-1}.
  long braid_image_dimension() const;

  /// Quantum trace sum_lambda qdim(lambda) tr(m restricted to lambda).
  CycloNumber markov_trace(const CycloMatrix& m) const;

 private:
  int n_ = 0;
  CycloNumber a_;
  CycloNumber delta_;
  std::vector<Path> paths_;
  std::vector<Block> blocks_;
  std::vector<CycloMatrix> e_, sigma_, sigma_inv_;
};

long centralizer_dimension(const AlcoveCategory& cat, int n);

struct PairBraiding {
  int lambda = 0;               // alcove index
  int v = 0;                    // alcove index of the summand of V
  std::vector<int> channels;    // nu with N(lambda, V, nu) = 1
  std::vector<int> signs;       // epsilon_nu
  std::vector<mpq_class> exponents;  // c_nu - c_lambda - c_V
  std::vector<CycloNumber> eigen;    // epsilon_nu exp(i pi e / (2 ell))

  /// theta_nu / (theta_lambda theta_V) for channel j.
  CycloNumber monodromy(const AlcoveCategory& cat, std::size_t j) const;
};

/// One PairBraiding per summand of V. Throws std::runtime_error if a channel
/// has multiplicity above one.
std::vector<PairBraiding> pair_braiding(const AlcoveCategory& cat, int lambda);

struct CoboundaryMatrix {
  PairBraiding base;
  std::vector<CycloNumber> rbar;  // per channel
  bool involutive = false;        // rbar_{V lambda} rbar_{lambda V} = 1
  bool unit_modulus = false;
};

/// R-bar = R (R_21 R)^(-1/2) channelwise, with the square root branch
/// exp(-i pi e / (4 ell)) that tends to 1 at q = 1.
CoboundaryMatrix coboundary(const AlcoveCategory& cat, const PairBraiding& pb);

struct DualityRow {
  int n = 0;
  long centralizer_dim = 0;
  long braid_image_dim = 0;
  bool duality = false;
  std::vector<std::string> eigenvalues;
};

/// A_1: exact tower closure for n = 2..n_max.
std::vector<DualityRow> duality_report(const AlcoveCategory& cat, int n_max);

/// Any type, n = 2: the braiding on V_s (x) V_s for each summand V_s of V.
/// braid_image_dim is the rank of the Vandermonde system of the channel
/// eigenvalues; centralizer_dim is the channel count.
std::vector<DualityRow> pair_duality(const AlcoveCategory& cat);

}  // namespace qgcat
