#pragma once

// Vertex gauge freedom of a multiplicity-free F/R table.
//
// A gauge assigns u^{ab}_c != 0 to every admissible splitting vertex and acts by
//   F^{abc}_d[e,f] -> F^{abc}_d[e,f] u^{af}_d u^{bc}_f / (u^{ab}_e u^{ec}_d)
//   R^{ab}_c       -> R^{ab}_c u^{ba}_c / u^{ab}_c
// Each variable therefore carries an integer exponent row over the vertices.
// Two tables with the same zero pattern are gauge equivalent iff the ratio
// vector rho satisfies prod rho_i^{y_i} = 1 for every integer y with y E = 0.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qgcat/sixj.hpp"

namespace qgcat {

using SparseIntRow = std::vector<std::pair<int, long>>;

/// Integer row reduction of an m x n matrix by unimodular row operations.
/// On return H = U E is in row echelon form; rows rank..m-1 of U span the
/// integer left kernel of E.
struct IntegerEchelon {
  std::vector<std::vector<long>> H, U;
  std::vector<int> pivot_cols;
  std::size_t rank = 0;

  static IntegerEchelon compute(const std::vector<std::vector<long>>& E);
  std::vector<SparseIntRow> left_kernel() const;
};

struct GaugeComparison {
  bool equivalent = false;
  std::size_t compared = 0;       // variables with nonzero value
  std::size_t kernel_size = 0;    // invariant monomials tested
  std::string reason;             // first failure
};

class GaugeSystem {
 public:
  explicit GaugeSystem(const SixJTable& t);

  std::size_t num_vertices() const { return vertices_.size(); }
  const RKey& vertex(std::size_t i) const { return vertices_[i]; }
  int vertex_id(int a, int b, int c) const;
  /// Exponent row of a variable (F entries then R entries).
  const SparseIntRow& row(int var) const { return rows_[var]; }

  /// Integer basis of the invariant monomials supported on vars.
  std::vector<SparseIntRow> invariant_monomials(const std::vector<int>& vars) const;

  std::vector<CycloNumber> apply(const std::vector<CycloNumber>& vals, const std::vector<CycloNumber>& u) const;
  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& vals,
                                          const std::vector<std::complex<double>>& u) const;

  /// Exact test over all variables, or over the given subset.
  GaugeComparison compare(const std::vector<CycloNumber>& x, const std::vector<CycloNumber>& y,
                          const std::vector<int>* subset = nullptr) const;
  /// Numeric test: |prod rho^y - 1| <= tol for every invariant monomial y;
  /// entries below zero_tol count as zero.
  GaugeComparison compare(const std::vector<std::complex<double>>& x, const std::vector<CycloNumber>& y,
                          double tol, double zero_tol) const;

  /// A gauge u with apply(x, u) = y on the subset, when the elimination only
  /// needs unit pivots. Vertices left undetermined get u = 1.
  std::optional<std::vector<CycloNumber>> solve(const std::vector<CycloNumber>& x, const std::vector<CycloNumber>& y,
                                                const std::vector<int>& subset, std::string* why = nullptr) const;

  /// True iff multiplying variable var alone by a non-root-of-unity scalar
  /// leaves the gauge orbit, i.e. some invariant monomial involves var.
  bool is_gauge_sensitive(int var) const;

 private:
  const SixJTable* t_;
  std::vector<RKey> vertices_;
  std::vector<int> vid_;
  std::vector<SparseIntRow> rows_;
  std::vector<char> sensitive_;
};

}  // namespace qgcat
