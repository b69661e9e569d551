#pragma once

// The weak quasi-bialgebra A_W for A_1 at level k.
//
// A = sum_lambda End(W_lambda), W_lambda the (lambda+1)-dimensional
// U_q(sl2)-module with
//   E v_m = [lambda-m+1] v_{m-1},  F v_m = [m+1] v_{m+1},  K v_m = q^{lambda-2m} v_m,
// and coproduct E -> E(x)K + 1(x)E, F -> F(x)1 + K^-1(x)F, K -> K(x)K.
//
// For every pair (lambda, mu), G embeds the channel space sum_nu W_nu over
// the truncated channels nu into W_lambda (x) W_mu (highest weight vector
// normalized at v_0 (x) v_s), and F is the left inverse that vanishes on the
// image of prod_nu (C - c_nu), C the Casimir. Then
//   Delta(a)  = G (sum_nu a_nu) F,  Delta(1) = G F,
//   Phi       = G_R Fmat F_L  (left channels (e,d) -> right channels (f,d)),
//   R_{lambda mu} = flip G_{mu lambda} diag(R^{lambda mu}_nu) F_{lambda mu}.
// Fmat is the q-Racah table moved into the gauge where it agrees with the
// geometric change of channel basis F_R G_L on the special triples.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qgcat/alcove.hpp"
#include "qgcat/cyclo_matrix.hpp"
#include "qgcat/gauge.hpp"
#include "qgcat/sixj.hpp"

namespace qgcat {

class axiom_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E, F, K, K^-1 on W_lambda.
struct UqModule {
  CycloMatrix E, F, K, Kinv;
  static UqModule build(int lambda, const CycloNumber& q);
};

struct ChannelMaps {
  int lambda = 0, mu = 0;
  std::vector<int> channels;         // truncated nu, increasing
  std::vector<std::size_t> offsets;  // start of W_nu in the channel space
  std::size_t channel_dim = 0;
  CycloMatrix G;  // (lambda+1)(mu+1) x channel_dim
  CycloMatrix F;  // channel_dim x (lambda+1)(mu+1)
  CycloMatrix p;  // G F
};

/// Channel-space embeddings of a triple product.
struct TripleMaps {
  struct Channel {
    int mid, d;  // (e, d) on the left, (f, d) on the right
    std::size_t offset;
  };
  std::vector<Channel> left, right;
  std::size_t channel_dim = 0;
  CycloMatrix GL, FL, GR, FR;
};

using Element = std::vector<CycloMatrix>;  // one matrix per block

struct TwistData;

class WeakQuasiBialgebra {
 public:
  /// A_1 only. Throws axiom_violation if a construction invariant fails.
  static WeakQuasiBialgebra build(const AlcoveCategory& cat);

  int level() const { return k_; }
  std::size_t num_blocks() const { return static_cast<std::size_t>(k_ + 1); }
  std::size_t block_dim(int lambda) const { return static_cast<std::size_t>(lambda + 1); }
  const CycloNumber& q() const { return q_; }

  const ChannelMaps& pair(int lambda, int mu) const { return pairs_.at(lambda * (k_ + 1) + mu); }
  TripleMaps triple(int lambda, int mu, int sigma) const;

  /// Stored associator block.
  const CycloMatrix& phi(int lambda, int mu, int sigma) const;
  /// G_R Fmat F_L from the current symbols.
  CycloMatrix phi_from_symbols(int lambda, int mu, int sigma) const;
  /// F_R G_L: the change of channel basis inside W_lambda (x) W_mu (x) W_sigma.
  CycloMatrix geometric_F(int lambda, int mu, int sigma) const;
  const CycloMatrix& r_element(int lambda, int mu) const;

  /// Delta(a) on W_lambda (x) W_mu, including the twist applied so far.
  CycloMatrix delta(int lambda, int mu, const Element& a) const;
  CycloMatrix delta_one(int lambda, int mu) const;
  Element one() const;
  CycloNumber counit(const Element& a) const { return a[0](0, 0); }

  /// F- and R-symbols in the A_W gauge (same indexing as table()).
  const std::vector<CycloNumber>& symbols() const { return symbols_; }
  const SixJTable& table() const { return *table_; }
  const GaugeSystem& gauge_system() const { return *gauge_; }
  /// u with symbols = apply(q-Racah, u) before any twist.
  const std::vector<CycloNumber>& gauge_from_table() const { return u_; }
  /// Channel scalars of the twist applied so far (all ones when untwisted).
  const std::vector<CycloNumber>& twist_scalars() const { return j_; }

  bool is_special(int lambda, int mu, int sigma) const;

  /// G diag(j) F for the twist applied so far (Delta(1) when untwisted).
  CycloMatrix twist_element(int lambda, int mu, bool inverse) const;
  /// G diag(s_nu) F for one scalar per channel vertex of (lambda, mu).
  CycloMatrix channel_element(int lambda, int mu, const std::vector<CycloNumber>& per_vertex, bool inverse) const;

 private:
  friend WeakQuasiBialgebra apply_twist(const WeakQuasiBialgebra& w, const TwistData& J);
  friend bool structurally_equal(const WeakQuasiBialgebra& a, const WeakQuasiBialgebra& b);

  int k_ = 0;
  CycloNumber q_;
  std::shared_ptr<const SixJTable> table_;
  std::shared_ptr<const GaugeSystem> gauge_;
  std::vector<ChannelMaps> pairs_;
  std::vector<CycloNumber> symbols_, u_, j_;
  std::map<std::tuple<int, int, int>, CycloMatrix> phi_;
  std::map<std::pair<int, int>, CycloMatrix> r_;

  CycloMatrix channel_diag(const ChannelMaps& cm, const std::vector<CycloNumber>& per_channel) const;
};

/// Symbols, associator and R blocks, and twist scalars all agree exactly.
bool structurally_equal(const WeakQuasiBialgebra& a, const WeakQuasiBialgebra& b);

struct AxiomReport {
  long coassociativity_checked = 0, coassociativity_failed = 0;
  long counit_checked = 0, counit_failed = 0;
  long hexagon_checked = 0, hexagon_failed = 0;
  long support_checked = 0, support_failed = 0;  // Phi = Delta3R(1) Phi Delta3L(1), quasi-inverse
  std::vector<std::string> failures;             // first few
  bool ok() const {
    return coassociativity_failed == 0 && counit_failed == 0 && hexagon_failed == 0 && support_failed == 0;
  }
};

/// Exhaustive over the matrix-unit basis of A when full_basis is set,
/// otherwise over the unit and `samples` seeded random elements.
AxiomReport verify_weak_axioms(const WeakQuasiBialgebra& w, bool full_basis, int samples = 2,
                               std::uint64_t seed = 1);

/// Weak coassociativity on one triple with a replacement associator block.
bool coassociative_with(const WeakQuasiBialgebra& w, int lambda, int mu, int sigma, const CycloMatrix& phi,
                        const Element& a);

/// Seeded random element of A with small entries in Q(q).
Element random_element(const WeakQuasiBialgebra& w, std::uint64_t seed);

/// Channel-scalar twist: one nonzero scalar per splitting vertex (lambda mu -> nu),
/// indexed like GaugeSystem vertices.
struct TwistData {
  std::vector<CycloNumber> j;
  static TwistData identity(const WeakQuasiBialgebra& w);
  TwistData inverse() const;
};

/// Delta_J = J Delta J^-1, Phi_J = (1 (x) J)(id (x) Delta)(J) Phi (Delta (x) id)(J^-1)(J^-1 (x) 1),
/// R_J = J_21 R J^-1, all computed on the blocks. Throws std::invalid_argument
/// for a zero scalar.
WeakQuasiBialgebra apply_twist(const WeakQuasiBialgebra& w, const TwistData& J);

/// Twist that turns the R blocks on (lambda, V), lambda != V, into the
/// coboundary blocks R-bar = R (R_21 R)^(-1/2).
TwistData coboundary_twist(const WeakQuasiBialgebra& w, const AlcoveCategory& cat);

/// Seeded random twist by roots of unity of order 4 ell, one on every vertex
/// without a unit label.
TwistData random_twist(const WeakQuasiBialgebra& w, std::uint64_t seed);

struct GaugeInvariants {
  std::vector<int> fusion;  // N[a][b][c] read off Delta(1) with the Casimir
  SymbolInvariants symbols;
  bool operator==(const GaugeInvariants&) const = default;
};

GaugeInvariants gauge_invariants(const WeakQuasiBialgebra& w, const AlcoveCategory& cat);

}  // namespace qgcat
