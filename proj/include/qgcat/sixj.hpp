#pragma once

// F- and R-symbols of the A_1 category at level k, and the polynomial
// relations (pentagon, two hexagons) they satisfy.
//
// Labels are integers 0..k (twice the spin). F^{abc}_d[e, f] has
// (a b -> e), (e c -> d), (b c -> f), (a f -> d). Pentagon:
//   F^{fcd}_e[g,l] F^{abl}_e[f,k] = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
// Hexagons:
//   R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]
//   and the same with every R replaced by its inverse and the R-labels swapped.
//
// The q-Racah table is stored in a square-root-free gauge:
//   F[e,f] = (-1)^{(a+b+c+d)/2} [f+1] D(b,c,f) D(a,f,d) * Racah sum,
//   D(x,y,z) = [(x+y-z)/2]! [(x-y+z)/2]! [(-x+y+z)/2]! / [(x+y+z)/2 + 1]!.
// It differs from the unitary gauge by u^{xy}_z = sqrt(D(x,y,z) [z+1]).

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qgcat/alcove.hpp"
#include "qgcat/cyclo.hpp"
#include "qgcat/cyclo_matrix.hpp"
#include "qgcat/report.hpp"

namespace qgcat {

struct FKey {
  int a, b, c, d, e, f;
};
struct RKey {
  int a, b, c;
};

struct Monomial {
  int coef = 1;
  std::vector<std::pair<int, int>> factors;  // (variable, power in {1, -1})
};

struct Relation {
  enum Family { Pentagon, Hexagon, HexagonInverse } family;
  std::array<int, 9> labels{};
  std::vector<Monomial> terms;  // sum of terms = 0
};

std::string family_name(Relation::Family f);

class SixJTable {
 public:
  /// The q-Racah table with R^{ab}_c = (-1)^{(a+b-c)/2} q^{(c(c+2) - a(a+2) - b(b+2))/4}.
  static SixJTable q_racah(const AlcoveCategory& cat);

  int level() const { return k_; }
  int ell() const { return k_ + 2; }
  const CycloNumber& q() const { return q_; }
  bool admissible(int a, int b, int c) const;

  std::size_t num_f() const { return fkeys_.size(); }
  std::size_t num_r() const { return rkeys_.size(); }
  /// Variables are F entries followed by R entries.
  std::size_t num_vars() const { return num_f() + num_r(); }
  const std::vector<FKey>& fkeys() const { return fkeys_; }
  const std::vector<RKey>& rkeys() const { return rkeys_; }

  /// -1 if inadmissible.
  int fid(int a, int b, int c, int d, int e, int f) const;
  int rid(int a, int b, int c) const;
  int rvar(int a, int b, int c) const { return static_cast<int>(num_f()) + rid(a, b, c); }

  /// Throws std::invalid_argument for inadmissible labels.
  const CycloNumber& F(int a, int b, int c, int d, int e, int f) const;
  const CycloNumber& R(int a, int b, int c) const;

  std::vector<CycloNumber>& values() { return vals_; }
  const std::vector<CycloNumber>& values() const { return vals_; }
  std::string var_name(int v) const;

  /// Channels e with (a b -> e) and (e c -> d), in increasing order.
  std::vector<int> left_channels(int a, int b, int c, int d) const;
  std::vector<int> right_channels(int a, int b, int c, int d) const;

  /// All pentagon and hexagon relations, in a fixed order.
  const std::vector<Relation>& relations() const { return relations_; }

  /// |u^{xy}_z|^2 = D(x,y,z) [z+1] for the gauge to the unitary table.
  CycloNumber unitary_weight(int x, int y, int z) const;

 private:
  int k_ = 0;
  CycloNumber q_;
  std::vector<FKey> fkeys_;
  std::vector<RKey> rkeys_;
  std::vector<int> fidx_, ridx_;
  std::vector<CycloNumber> vals_;
  std::vector<Relation> relations_;

  void index(int k);
  void build_relations();
  CycloNumber qfact(int n) const { return qfact_.at(n); }
  std::vector<CycloNumber> qfact_;
};

/// Exact value of one relation (zero iff it holds).
CycloNumber evaluate(const Relation& rel, const std::vector<CycloNumber>& vals);
std::complex<double> evaluate(const Relation& rel, const std::vector<std::complex<double>>& vals);


SuiteReport pentagon_suite(const SixJTable& t);
SuiteReport pentagon_suite(const SixJTable& t, const std::vector<CycloNumber>& vals);
/// Both hexagon families.
SuiteReport hexagon_suite(const SixJTable& t);
SuiteReport hexagon_suite(const SixJTable& t, const std::vector<CycloNumber>& vals);

/// Weighted unitarity of every F-matrix:
///   F diag(1/(w(bcf) w(afd))) F* = diag(1/(w(abe) w(ecd))), w = unitary_weight.
bool weighted_unitarity(const SixJTable& t, const std::vector<CycloNumber>& vals);

/// Gauge-invariant data read off a table. Invariant under gauges that are
/// trivial on vertices with a unit label.
struct SymbolInvariants {
  std::vector<CycloNumber> twists;         // theta_a = sum_c d_c R^{aa}_c / d_a
  CycloMatrix S;                           // sum_c N_{a* b}^c d_c R^{b a*}_c R^{a* b}_c
  std::vector<CycloNumber> fs_indicators;  // d_a F^{aaa}_a[0,0]
  bool operator==(const SymbolInvariants&) const = default;
};

SymbolInvariants symbol_invariants(const SixJTable& t, const std::vector<CycloNumber>& vals,
                                   const AlcoveCategory& cat);

/// |F[e,f]|^2 in the unitary gauge.
CycloNumber unitary_modulus_sq(const SixJTable& t, int a, int b, int c, int d, int e, int f);

}  // namespace qgcat
