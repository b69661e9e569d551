#pragma once

// Dense matrices over cyclotomic fields and the exact linear algebra the
// verification suites rely on (rank, inverse, kernels, span closure).

#include <cstddef>
#include <optional>
#include <vector>

#include "qgcat/cyclo.hpp"

namespace qgcat {

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CycloMatrix identity(std::size_t n);
  static CycloMatrix diagonal(const std::vector<CycloNumber>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloNumber& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNumber& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CycloMatrix conj_transpose() const;
  CycloMatrix transpose() const;
  CycloMatrix conj() const;
  bool is_zero() const;
  bool is_identity() const;

  CycloMatrix& operator+=(const CycloMatrix& o);
  CycloMatrix& operator-=(const CycloMatrix& o);
  CycloMatrix& operator*=(const CycloNumber& s);
  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(CycloMatrix a, const CycloMatrix& b) { return a -= b; }
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(CycloMatrix a, const CycloNumber& s) { return a *= s; }
  friend CycloMatrix operator*(const CycloNumber& s, CycloMatrix a) { return a *= s; }
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  /// Kronecker product, row index (i of a, k of b) -> i * b.rows() + k.
  friend CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);

  CycloMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CycloMatrix& b);

  std::size_t rank() const;
  /// Throws arithmetic_error when singular.
  CycloMatrix inverse() const;
  /// Basis of {x : A x = 0}, as columns.
  CycloMatrix kernel() const;
  /// Basis of the column space, as a subset of the original columns.
  CycloMatrix column_basis() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNumber> data_;
};

/// Horizontal concatenation [a | b].
CycloMatrix hstack(const CycloMatrix& a, const CycloMatrix& b);

/// Reduced row-echelon basis of a growing subspace of K^n. Vectors are
/// reduced against the stored pivots in a fixed order (pivot columns in
/// insertion order), so the result is deterministic.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Reduces v in place; returns true iff v was independent (then it is
  /// added to the basis).
  bool insert(std::vector<CycloNumber> v);
  bool contains(std::vector<CycloNumber> v) const;

 private:
  void reduce(std::vector<CycloNumber>& v) const;

  std::size_t dim_;
  std::vector<std::vector<CycloNumber>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace qgcat
