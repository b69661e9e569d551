#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycloNumber stores an element of Q(zeta_N) in the power basis
// 1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
// Coefficients are kept as integers over one positive common denominator
// with gcd(content, den) = 1, so a value has exactly one representation for
// a given order. Orders N = 2 mod 4 are folded onto N/2 (the same field).
// Mixed-order arithmetic promotes both operands to the lcm of the orders.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgcat {

class arithmetic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-order data: phi(N), the cyclotomic polynomial, the unit group.
struct CycloField {
  int order = 1;
  int degree = 1;                      // phi(order)
  std::vector<long> poly;              // Phi_N, monic, length degree+1
  std::vector<std::pair<int, long>> tail;  // nonzero (i, Phi_N[i]) for i < degree
  std::vector<int> units;              // a in [1, N) with gcd(a, N) = 1

  static const CycloField& get(int order);
};

/// Canonical order for Q(zeta_n): n = 2 mod 4 maps to n/2.
int canonical_order(int n);

using mpfr_float = boost::multiprecision::mpfr_float;

struct ComplexMp {
  mpfr_float re;
  mpfr_float im;
};

class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long value);  // NOLINT: integers embed implicitly
  CycloNumber(const mpq_class& value);  // NOLINT

  static CycloNumber root_of_unity(int order, long k);
  static CycloNumber from_coeffs(int order, const std::vector<mpq_class>& coeffs);

  int order() const { return field_->order; }
  int degree() const { return field_->degree; }
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // throws unless is_rational()

  CycloNumber promoted(int order) const;
  CycloNumber conj() const;
  CycloNumber galois(int a) const;  // zeta -> zeta^a, gcd(a, order) = 1
  CycloNumber inverse() const;
  CycloNumber pow(long e) const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  CycloNumber operator-() const;

  /// this += a * b, avoiding a temporary.
  void add_product(const CycloNumber& a, const CycloNumber& b);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  ComplexMp to_float(int digits) const;

  /// Exact sign certification for real values. Returns false for
  /// non-real values; throws arithmetic_error for zero.
  bool is_real_positive() const;
  bool is_real() const { return *this == conj(); }

  std::string str() const;

  /// Total order on representations (order, den, numerators); only for use
  /// as a deterministic map key, not a numeric comparison.
  friend bool repr_less(const CycloNumber& a, const CycloNumber& b);

 private:
  explicit CycloNumber(const CycloField* f);
  void normalize();
  void reduce_into(std::vector<mpz_class>& wide);

  const CycloField* field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

inline CycloNumber conj(const CycloNumber& x) { return x.conj(); }

/// zeta_order^k.
inline CycloNumber embed_root_of_unity(int order, long k) {
  return CycloNumber::root_of_unity(order, k);
}

/// exp(2 pi i t) for rational t, as zeta_den(t)^num(t).
CycloNumber exp_2pi_i(const mpq_class& t);

/// Quantum integer [n]_q = (q^n - q^-n) / (q - q^-1).
CycloNumber quantum_integer(long n, const CycloNumber& q);

/// [n]_q! = [1]_q ... [n]_q.
CycloNumber quantum_factorial(long n, const CycloNumber& q);

}  // namespace qgcat
