#include "qgcat/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qgcat {

namespace {

using Poly = std::vector<long>;

// Exact division of integer polynomials (b monic).
Poly poly_div(const Poly& a, const Poly& b) {
  Poly r = a;
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  Poly q(std::max(da - db + 1, 1), 0);
  for (int i = da; i >= db; --i) {
    const long c = r[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  return q;
}

Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div(p, cyclotomic_poly(d, memo));
  }
  memo[n] = p;
  return p;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int canonical_order(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (n % 4 == 2) return n / 2;
  return n;
}

const CycloField& CycloField::get(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  static std::map<int, Poly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;
  if (order != canonical_order(order)) {
    throw std::logic_error("CycloField::get expects a canonical order");
  }
  auto f = std::make_unique<CycloField>();
  f->order = order;
  f->poly = cyclotomic_poly(order, memo);
  f->degree = static_cast<int>(f->poly.size()) - 1;
  for (int i = 0; i < f->degree; ++i) {
    if (f->poly[i] != 0) f->tail.emplace_back(i, f->poly[i]);
  }
  for (int a = 1; a <= order; ++a) {
    if (std::gcd(a, order) == 1) f->units.push_back(a % order);
  }
  const CycloField* raw = f.get();
  cache.emplace(order, std::move(f));
  return *raw;
}

CycloNumber::CycloNumber(const CycloField* f) : field_(f), num_(f->degree), den_(1) {}

CycloNumber::CycloNumber() : CycloNumber(&CycloField::get(1)) {}

CycloNumber::CycloNumber(long value) : CycloNumber(&CycloField::get(1)) { num_[0] = value; }

CycloNumber::CycloNumber(const mpq_class& value) : CycloNumber(&CycloField::get(1)) {
  num_[0] = value.get_num();
  den_ = value.get_den();
  normalize();
}

void CycloNumber::normalize() {
  if (sgn(den_) == 0) throw arithmetic_error("zero denominator");
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

// Reduces a wide coefficient vector modulo Phi_N into num_.
void CycloNumber::reduce_into(std::vector<mpz_class>& wide) {
  const int deg = field_->degree;
  for (int i = static_cast<int>(wide.size()) - 1; i >= deg; --i) {
    if (sgn(wide[i]) == 0) continue;
    for (const auto& [j, c] : field_->tail) {
      // wide[i - deg + j] -= wide[i] * c
      if (c > 0) mpz_submul_ui(wide[i - deg + j].get_mpz_t(), wide[i].get_mpz_t(), static_cast<unsigned long>(c));
      else mpz_addmul_ui(wide[i - deg + j].get_mpz_t(), wide[i].get_mpz_t(), static_cast<unsigned long>(-c));
    }
    wide[i] = 0;
  }
  for (int i = 0; i < deg; ++i) num_[i].swap(wide[i]);
}

CycloNumber CycloNumber::root_of_unity(int order, long k) {
  const int n = canonical_order(order);
  long e = k;
  long sign = 1;
  if (n != order) {
    // zeta_{2m}^k = (-1)^k zeta_m^{k (m+1)/2} for odd m.
    if (mod(k, 2) == 1) sign = -1;
    e = mod(k, n) * ((n + 1) / 2);
  }
  e = mod(e, n);
  CycloNumber out(&CycloField::get(n));
  std::vector<mpz_class> wide(std::max<long>(n, out.degree()));
  wide[e] = sign;
  out.reduce_into(wide);
  return out;
}

CycloNumber CycloNumber::from_coeffs(int order, const std::vector<mpq_class>& coeffs) {
  const int n = canonical_order(order);
  if (n != order) {
    // Re-express through the power basis of the folded field.
    CycloNumber acc(&CycloField::get(n));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (sgn(coeffs[j]) == 0) continue;
      acc += CycloNumber(coeffs[j]) * root_of_unity(order, static_cast<long>(j));
    }
    return acc;
  }
  CycloNumber out(&CycloField::get(n));
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> wide(std::max<std::size_t>(coeffs.size(), out.degree()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    wide[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  }
  out.reduce_into(wide);
  out.den_ = den;
  out.normalize();
  return out;
}

std::vector<mpq_class> CycloNumber::coeffs() const {
  std::vector<mpq_class> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = mpq_class(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

bool CycloNumber::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycloNumber::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return sgn(c) == 0; });
}

bool CycloNumber::is_one() const { return is_rational() && num_[0] == den_; }

mpq_class CycloNumber::rational_value() const {
  if (!is_rational()) throw arithmetic_error("value is not rational");
  mpq_class v(num_[0], den_);
  v.canonicalize();
  return v;
}

CycloNumber CycloNumber::promoted(int order) const {
  const int n = canonical_order(order);
  if (n == field_->order) return *this;
  if (n % field_->order != 0) throw std::invalid_argument("promotion target must be a multiple of the order");
  const long step = n / field_->order;
  CycloNumber out(&CycloField::get(n));
  std::vector<mpz_class> wide(std::max<long>(n, out.degree()));
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) != 0) wide[(j * step) % n] += num_[j];
  }
  out.reduce_into(wide);
  out.den_ = den_;
  out.normalize();
  return out;
}

CycloNumber CycloNumber::galois(int a) const {
  const int n = field_->order;
  if (std::gcd(a, n) != 1 && n > 1) throw std::invalid_argument("galois exponent must be a unit");
  CycloNumber out(field_);
  std::vector<mpz_class> wide(std::max(n, field_->degree));
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) != 0) wide[mod(static_cast<long>(j) * a, n)] += num_[j];
  }
  out.reduce_into(wide);
  out.den_ = den_;
  out.normalize();
  return out;
}

CycloNumber CycloNumber::conj() const {
  if (field_->order <= 2) return *this;
  return galois(field_->order - 1);
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw arithmetic_error("division by zero in cyclotomic field");
  if (is_rational()) {
    mpq_class v = rational_value();
    return CycloNumber(mpq_class(1) / v);
  }
  // x^-1 = prod_{a != 1} sigma_a(x) / N(x).
  CycloNumber prod(1L);
  for (int a : field_->units) {
    if (a == 1) continue;
    prod *= galois(a);
  }
  CycloNumber norm = *this * prod;
  if (!norm.is_rational()) throw std::logic_error("field norm is not rational");
  mpq_class inv = mpq_class(1) / norm.rational_value();
  return prod * CycloNumber(inv);
}

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber result(1L);
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

namespace {

int common_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (field_ != o.field_) {
    const int n = common_order(field_->order, o.field_->order);
    if (n != field_->order) *this = promoted(n);
    if (n != o.field_->order) return *this += o.promoted(n);
  }
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= o.den_;
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.field_ != b.field_) {
    const int n = common_order(a.field_->order, b.field_->order);
    return a.promoted(n) * b.promoted(n);
  }
  CycloNumber out(a.field_);
  const int deg = a.field_->degree;
  if (a.is_zero() || b.is_zero()) return out;
  thread_local std::vector<mpz_class> wide;
  wide.resize(2 * deg - 1);
  for (auto& w : wide) w = 0;
  for (int i = 0; i < deg; ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      mpz_addmul(wide[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  out.reduce_into(wide);
  mpz_mul(out.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  out.normalize();
  return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  *this = *this * o;
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
  *this = *this * o.inverse();
  return *this;
}

void CycloNumber::add_product(const CycloNumber& a, const CycloNumber& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.field_ != b.field_) {
    const int n = common_order(a.field_->order, b.field_->order);
    return a.promoted(n) == b.promoted(n);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

bool repr_less(const CycloNumber& a, const CycloNumber& b) {
  if (a.field_->order != b.field_->order) return a.field_->order < b.field_->order;
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

std::complex<double> CycloNumber::to_complex() const {
  const double n = field_->order;
  double re = 0.0;
  double im = 0.0;
  const double d = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    const double c = num_[j].get_d() / d;
    const double ang = 2.0 * M_PI * static_cast<double>(j) / n;
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {re, im};
}

ComplexMp CycloNumber::to_float(int digits) const {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  const unsigned prec = static_cast<unsigned>(digits + 10);
  mpfr_float::default_precision(prec);
  ComplexMp out{mpfr_float(0, prec), mpfr_float(0, prec)};
  const mpfr_float two_pi = 2 * boost::math::constants::pi<mpfr_float>();
  const mpfr_float den(den_.get_mpz_t());
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    const mpfr_float c = mpfr_float(num_[j].get_mpz_t()) / den;
    const mpfr_float ang = two_pi * static_cast<long>(j) / field_->order;
    out.re += c * cos(ang);
    out.im += c * sin(ang);
  }
  return out;
}

bool CycloNumber::is_real_positive() const {
  if (is_zero()) throw arithmetic_error("sign of zero is indeterminate");
  if (!is_real()) return false;
  if (is_rational()) return sgn(num_[0]) > 0;
  // Refine until |value| exceeds a bound on the evaluation error.
  mpz_class l1 = 0;
  for (const auto& c : num_) l1 += abs(c);
  for (int digits = 30;; digits *= 2) {
    ComplexMp v = to_float(digits);
    mpfr_float::default_precision(digits + 10);
    mpfr_float bound = mpfr_float(l1.get_mpz_t()) / mpfr_float(den_.get_mpz_t()) *
                       boost::multiprecision::pow(mpfr_float(10), -(digits - 2));
    if (boost::multiprecision::abs(v.re) > bound) return v.re > 0;
    if (digits > 100000) throw arithmetic_error("sign refinement did not terminate");
  }
}

std::string CycloNumber::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) {
  if (x.is_zero()) return os << "0";
  const auto c = x.coeffs();
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    if (!first) os << (sgn(c[j]) > 0 ? " + " : " - ");
    else if (sgn(c[j]) < 0) os << "-";
    first = false;
    mpq_class a = abs(c[j]);
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << x.order();
      if (j > 1) os << "^" << j;
    }
  }
  return os;
}

CycloNumber exp_2pi_i(const mpq_class& t) {
  mpq_class u = t;
  u.canonicalize();
  const long den = u.get_den().get_si();
  const long num = mpz_class(u.get_num() % den).get_si();
  return CycloNumber::root_of_unity(static_cast<int>(den), num);
}

CycloNumber quantum_integer(long n, const CycloNumber& q) {
  const CycloNumber qi = q.inverse();
  if (q == qi) throw arithmetic_error("quantum integer undefined for q = q^-1");
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n); avoids dividing by q - q^-1.
  const long m = n < 0 ? -n : n;
  CycloNumber acc;
  if (m == 0) return acc;
  CycloNumber term = q.pow(m - 1);
  const CycloNumber step = qi * qi;
  for (long j = 0; j < m; ++j) {
    acc += term;
    term *= step;
  }
  return n < 0 ? -acc : acc;
}

CycloNumber quantum_factorial(long n, const CycloNumber& q) {
  CycloNumber acc(1L);
  for (long j = 2; j <= n; ++j) acc *= quantum_integer(j, q);
  return acc;
}

}  // namespace qgcat
