#include "qgcat/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgcat {

namespace {

long checked_axpy(long y, long a, long x) {
  long p, s;
  if (__builtin_mul_overflow(a, x, &p) || __builtin_sub_overflow(y, p, &s)) {
    throw std::overflow_error("integer echelon: coefficient overflow");
  }
  return s;
}

// row_r -= m * row_p in both H and U.
void sub_row(std::vector<std::vector<long>>& H, std::vector<std::vector<long>>& U, std::size_t r, std::size_t p,
             long m) {
  if (m == 0) return;
  for (std::size_t j = 0; j < H[r].size(); ++j)
    if (H[p][j]) H[r][j] = checked_axpy(H[r][j], m, H[p][j]);
  for (std::size_t j = 0; j < U[r].size(); ++j)
    if (U[p][j]) U[r][j] = checked_axpy(U[r][j], m, U[p][j]);
}

}  // namespace

IntegerEchelon IntegerEchelon::compute(const std::vector<std::vector<long>>& E) {
  IntegerEchelon ie;
  const std::size_t m = E.size();
  const std::size_t n = m ? E[0].size() : 0;
  ie.H = E;
  ie.U.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) ie.U[i][i] = 1;
  std::size_t p = 0;
  for (std::size_t col = 0; col < n && p < m; ++col) {
    for (;;) {
      // Smallest nonzero entry at or below p moves to p.
      std::size_t best = m;
      for (std::size_t r = p; r < m; ++r)
        if (ie.H[r][col] && (best == m || std::labs(ie.H[r][col]) < std::labs(ie.H[best][col]))) best = r;
      if (best == m) break;
      std::swap(ie.H[p], ie.H[best]);
      std::swap(ie.U[p], ie.U[best]);
      bool done = true;
      for (std::size_t r = p + 1; r < m; ++r) {
        if (!ie.H[r][col]) continue;
        sub_row(ie.H, ie.U, r, p, ie.H[r][col] / ie.H[p][col]);
        if (ie.H[r][col]) done = false;
      }
      if (done) break;
    }
    if (p < m && ie.H[p][col]) {
      ie.pivot_cols.push_back(static_cast<int>(col));
      ++p;
    }
  }
  ie.rank = p;
  return ie;
}

std::vector<SparseIntRow> IntegerEchelon::left_kernel() const {
  std::vector<SparseIntRow> out;
  for (std::size_t r = rank; r < U.size(); ++r) {
    SparseIntRow y;
    for (std::size_t j = 0; j < U[r].size(); ++j)
      if (U[r][j]) y.push_back({static_cast<int>(j), U[r][j]});
    out.push_back(std::move(y));
  }
  return out;
}

GaugeSystem::GaugeSystem(const SixJTable& t) : t_(&t) {
  const int n = t.level() + 1;
  vid_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (const auto& r : t.rkeys()) {
    vid_[(r.a * n + r.b) * n + r.c] = static_cast<int>(vertices_.size());
    vertices_.push_back(r);
  }
  auto add = [](SparseIntRow& row, int v, long c) {
    for (auto& [j, x] : row)
      if (j == v) {
        x += c;
        return;
      }
    row.push_back({v, c});
  };
  auto clean = [](SparseIntRow& row) {
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& p) { return p.second == 0; }), row.end());
    std::sort(row.begin(), row.end());
  };
  for (const auto& x : t.fkeys()) {
    SparseIntRow row;
    add(row, vertex_id(x.a, x.f, x.d), 1);
    add(row, vertex_id(x.b, x.c, x.f), 1);
    add(row, vertex_id(x.a, x.b, x.e), -1);
    add(row, vertex_id(x.e, x.c, x.d), -1);
    clean(row);
    rows_.push_back(std::move(row));
  }
  for (const auto& x : t.rkeys()) {
    SparseIntRow row;
    add(row, vertex_id(x.b, x.a, x.c), 1);
    add(row, vertex_id(x.a, x.b, x.c), -1);
    clean(row);
    rows_.push_back(std::move(row));
  }
  std::vector<int> all(rows_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  sensitive_.assign(rows_.size(), 0);
  for (const auto& y : invariant_monomials(all))
    for (const auto& [i, c] : y) sensitive_[i] = 1;
}

int GaugeSystem::vertex_id(int a, int b, int c) const {
  const int n = t_->level() + 1;
  if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) return -1;
  return vid_[(a * n + b) * n + c];
}

bool GaugeSystem::is_gauge_sensitive(int var) const { return sensitive_.at(var) != 0; }

std::vector<SparseIntRow> GaugeSystem::invariant_monomials(const std::vector<int>& vars) const {
  std::vector<std::vector<long>> E(vars.size(), std::vector<long>(vertices_.size(), 0));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (const auto& [j, c] : rows_[vars[i]]) E[i][j] = c;
  auto ker = IntegerEchelon::compute(E).left_kernel();
  for (auto& y : ker)
    for (auto& [i, c] : y) i = vars[i];
  return ker;
}

std::vector<CycloNumber> GaugeSystem::apply(const std::vector<CycloNumber>& vals,
                                            const std::vector<CycloNumber>& u) const {
  std::vector<CycloNumber> out = vals;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, c] : rows_[i]) out[i] *= u[j].pow(c);
  return out;
}

std::vector<std::complex<double>> GaugeSystem::apply(const std::vector<std::complex<double>>& vals,
                                                     const std::vector<std::complex<double>>& u) const {
  auto out = vals;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, c] : rows_[i]) out[i] *= std::pow(u[j], static_cast<int>(c));
  return out;
}

GaugeComparison GaugeSystem::compare(const std::vector<CycloNumber>& x, const std::vector<CycloNumber>& y,
                                     const std::vector<int>* subset) const {
  GaugeComparison gc;
  std::vector<int> vars;
  std::vector<int> pool;
  if (subset) {
    pool = *subset;
  } else {
    for (std::size_t i = 0; i < rows_.size(); ++i) pool.push_back(static_cast<int>(i));
  }
  std::vector<CycloNumber> rho(rows_.size());
  for (int i : pool) {
    const bool zx = x[i].is_zero(), zy = y[i].is_zero();
    if (zx != zy) {
      gc.reason = "zero pattern differs at " + t_->var_name(i);
      return gc;
    }
    if (zx) continue;
    rho[i] = y[i] / x[i];
    vars.push_back(i);
  }
  gc.compared = vars.size();
  const auto ker = invariant_monomials(vars);
  gc.kernel_size = ker.size();
  for (const auto& mono : ker) {
    CycloNumber p(1L);
    for (const auto& [i, c] : mono) p *= rho[i].pow(c);
    if (!p.is_one()) {
      std::ostringstream os;
      os << "invariant monomial differs:";
      for (const auto& [i, c] : mono) os << " " << t_->var_name(i) << "^" << c;
      gc.reason = os.str();
      return gc;
    }
  }
  gc.equivalent = true;
  return gc;
}

GaugeComparison GaugeSystem::compare(const std::vector<std::complex<double>>& x, const std::vector<CycloNumber>& y,
                                     double tol, double zero_tol) const {
  GaugeComparison gc;
  std::vector<int> vars;
  std::vector<std::complex<double>> rho(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const bool zx = std::abs(x[i]) < zero_tol, zy = y[i].is_zero();
    if (zx != zy) {
      gc.reason = "zero pattern differs at " + t_->var_name(static_cast<int>(i));
      return gc;
    }
    if (zx) continue;
    rho[i] = y[i].to_complex() / x[i];
    vars.push_back(static_cast<int>(i));
  }
  gc.compared = vars.size();
  const auto ker = invariant_monomials(vars);
  gc.kernel_size = ker.size();
  for (const auto& mono : ker) {
    std::complex<double> p = 1;
    for (const auto& [i, c] : mono) p *= std::pow(rho[i], static_cast<int>(c));
    if (std::abs(p - 1.0) > tol) {
      std::ostringstream os;
      os << "invariant monomial off by " << std::abs(p - 1.0) << ":";
      for (const auto& [i, c] : mono) os << " " << t_->var_name(i) << "^" << c;
      gc.reason = os.str();
      return gc;
    }
  }
  gc.equivalent = true;
  return gc;
}

std::optional<std::vector<CycloNumber>> GaugeSystem::solve(const std::vector<CycloNumber>& x,
                                                           const std::vector<CycloNumber>& y,
                                                           const std::vector<int>& subset, std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return std::nullopt;
  };
  std::vector<int> vars;
  for (int i : subset) {
    if (x[i].is_zero() != y[i].is_zero()) return fail("zero pattern differs at " + t_->var_name(i));
    if (!x[i].is_zero()) vars.push_back(i);
  }
  std::vector<std::vector<long>> E(vars.size(), std::vector<long>(vertices_.size(), 0));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (const auto& [j, c] : rows_[vars[i]]) E[i][j] = c;
  const auto ie = IntegerEchelon::compute(E);
  auto target = [&](const std::vector<long>& urow) {
    CycloNumber s(1L);
    for (std::size_t i = 0; i < urow.size(); ++i)
      if (urow[i]) s *= (y[vars[i]] / x[vars[i]]).pow(urow[i]);
    return s;
  };
  for (std::size_t r = ie.rank; r < ie.U.size(); ++r)
    if (!target(ie.U[r]).is_one()) return fail("inconsistent: an invariant monomial differs");
  std::vector<CycloNumber> u(vertices_.size(), CycloNumber(1L));
  for (std::size_t rr = ie.rank; rr-- > 0;) {
    const int pc = ie.pivot_cols[rr];
    const long h = ie.H[rr][pc];
    if (h != 1 && h != -1) return fail("non-unit pivot " + std::to_string(h));
    CycloNumber s = target(ie.U[rr]);
    for (std::size_t j = pc + 1; j < vertices_.size(); ++j)
      if (ie.H[rr][j]) s /= u[j].pow(ie.H[rr][j]);
    u[pc] = h == 1 ? s : s.inverse();
  }
  return u;
}

}  // namespace qgcat
