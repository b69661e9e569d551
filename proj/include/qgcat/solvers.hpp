#pragma once

// Two independent routes back to the q-Racah table.
//
// numeric_pentagon_solve: Levenberg-Marquardt on all pentagons and hexagons
// with R fixed and the F entries with a unit label pinned to 1, from random
// complex starts. Each converged solution is compared with the exact table
// through the invariant monomials of the gauge action.
//
// propagate_from_special: F known only on the special triples (lambda,V,V),
// (V,lambda,V), (V,V,lambda) and R known only on (lambda,V), (V,lambda). Every
// other symbol is obtained exactly from relations that are linear in a single
// unknown; when no such relation is left, one unknown that the gauge can
// still move freely is set to 1.

#include <cstdint>
#include <string>
#include <vector>

#include "qgcat/gauge.hpp"
#include "qgcat/sixj.hpp"

namespace qgcat {

/// A start counts as converged below this max |residual|.
inline constexpr double kConvergedResidual = 1e-9;
/// Invariant monomials of a converged start must agree with the table to this.
inline constexpr double kGaugeTolerance = 1e-6;
/// Entries below this modulus are treated as zero in the comparison.
inline constexpr double kZeroTolerance = 1e-7;

struct NumericSolveReport {
  int starts = 0;
  int converged = 0;
  int matched = 0;                 // converged and gauge equivalent to the table
  double best_residual = 0;        // max |relation| at the best start
  std::vector<std::string> notes;  // per start
  bool ok() const { return converged > 0 && matched == converged; }
};

NumericSolveReport numeric_pentagon_solve(const SixJTable& t, int starts, std::uint64_t seed);

struct PropagationReport {
  std::size_t known_initially = 0;
  std::size_t solved = 0;
  std::vector<std::string> gauge_fixed;   // unknowns set to 1
  std::vector<std::string> undetermined;  // left without a value
  long relations_violated = 0;
  GaugeComparison comparison;
  std::vector<CycloNumber> values;        // derived table
  std::vector<CycloNumber> gauge;         // u with apply(table, u) = derived, when found
  bool gauge_found = false;
  bool ok() const { return undetermined.empty() && relations_violated == 0 && comparison.equivalent; }
};

/// Variables held fixed for the uniqueness experiment.
std::vector<int> special_variables(const SixJTable& t);

PropagationReport propagate_from_special(const SixJTable& t);

struct RigidityReport {
  int trials = 0;
  int gauge_preserved = 0;        // random gauge keeps every relation
  int invariants_preserved = 0;   // and every SymbolInvariants entry
  int perturbations_detected = 0; // one F entry times (1 + zeta_8/1000) breaks a pentagon
  std::vector<std::string> undetected;  // perturbed entries that slipped through
  PropagationReport propagation;
  bool ok() const {
    return gauge_preserved == trials && invariants_preserved == trials && perturbations_detected == trials &&
           propagation.ok();
  }
};

/// Random gauges by roots of unity of order 4 ell on vertices without a unit
/// label, random single-entry perturbations, and propagate_from_special.
RigidityReport gauge_rigidity_experiment(const AlcoveCategory& cat, int trials, std::uint64_t seed);

}  // namespace qgcat
