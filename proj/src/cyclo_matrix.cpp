#include "qgcat/cyclo_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qgcat {

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNumber(1L);
  return m;
}

CycloMatrix CycloMatrix::diagonal(const std::vector<CycloNumber>& d) {
  CycloMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycloMatrix CycloMatrix::conj() const {
  CycloMatrix t(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].is_zero() ? data_[k] : data_[k].conj();
  return t;
}

CycloMatrix CycloMatrix::conj_transpose() const { return conj().transpose(); }

bool CycloMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

CycloMatrix& CycloMatrix::operator+=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

CycloMatrix& CycloMatrix::operator-=(const CycloMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

CycloMatrix& CycloMatrix::operator*=(const CycloNumber& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  CycloMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNumber& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const CycloNumber& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j).add_product(aik, bkj);
      }
    }
  }
  return c;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b) {
  CycloMatrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const auto& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) {
          if (b(k, l).is_zero()) continue;
          c(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
        }
    }
  return c;
}

CycloMatrix CycloMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  CycloMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void CycloMatrix::set_block(std::size_t r0, std::size_t c0, const CycloMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

CycloMatrix hstack(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  CycloMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(CycloMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const CycloNumber inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const CycloNumber f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t CycloMatrix::rank() const {
  CycloMatrix m = *this;
  return rref(m).size();
}

CycloMatrix CycloMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  CycloMatrix aug = hstack(*this, identity(rows_));
  auto piv = rref(aug);
  if (piv.size() < rows_ || piv.back() >= rows_) throw arithmetic_error("matrix is singular");
  return aug.block(0, rows_, rows_, rows_);
}

CycloMatrix CycloMatrix::kernel() const {
  CycloMatrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  CycloMatrix k(cols_, free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t fc = free_cols[t];
    k(fc, t) = CycloNumber(1L);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!m(r, fc).is_zero()) k(piv[r], t) = -m(r, fc);
  }
  return k;
}

CycloMatrix CycloMatrix::column_basis() const {
  CycloMatrix m = *this;
  auto piv = rref(m);
  CycloMatrix out(rows_, piv.size());
  for (std::size_t t = 0; t < piv.size(); ++t)
    for (std::size_t i = 0; i < rows_; ++i) out(i, t) = (*this)(i, piv[t]);
  return out;
}

void EchelonSpan::reduce(std::vector<CycloNumber>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const CycloNumber f = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
}

bool EchelonSpan::insert(std::vector<CycloNumber> v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonSpan dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  const CycloNumber inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonSpan::contains(std::vector<CycloNumber> v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace qgcat
