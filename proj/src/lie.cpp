#include "qgcat/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qgcat {

LieType parse_lie_type(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "G2" || s == "G") return LieType::G2;
  throw std::invalid_argument("unsupported Lie type: " + s);
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G2";
  }
  return "?";
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

// Gram matrix of the simple roots, long roots of squared length 2.
QMat simple_gram(LieType t, int n) {
  QMat b(n, std::vector<mpq_class>(n, 0));
  auto link = [&](int i, int j, mpq_class v) { b[i][j] = b[j][i] = v; };
  switch (t) {
    case LieType::A:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case LieType::B:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case LieType::C:
      for (int i = 0; i < n; ++i) b[i][i] = 1;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, mpq_class(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case LieType::D:
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case LieType::G2:
      b[0][0] = mpq_class(2, 3);
      b[1][1] = 2;
      link(0, 1, -1);
      break;
  }
  return b;
}

QMat invert(QMat m) {
  const std::size_t n = m.size();
  QMat inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class f = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= f;
      inv[c][j] /= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const mpq_class g = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= g * m[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

RootSystem RootSystem::build(LieType t, int n) {
  const bool ok = (t == LieType::A && n >= 1) || (t == LieType::B && n >= 2) ||
                  (t == LieType::C && n >= 2) || (t == LieType::D && n >= 3) ||
                  (t == LieType::G2 && n == 2);
  if (!ok) throw std::invalid_argument("inadmissible type/rank: " + to_string(t) + std::to_string(n));

  RootSystem rs;
  rs.lie_type = t;
  rs.rank = n;
  const QMat b = simple_gram(t, n);
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class a = 2 * b[i][j] / b[j][j];
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(a.get_num().get_si());
    }

  mpq_class hmin = b[0][0], hmax = b[0][0];
  for (int i = 0; i < n; ++i) {
    hmin = std::min(hmin, b[i][i]);
    hmax = std::max(hmax, b[i][i]);
  }
  mpq_class ratio = hmax / hmin;
  rs.ratio_d = static_cast<int>(ratio.get_num().get_si());
  for (int i = 0; i < n; ++i) {
    mpq_class di = b[i][i] / 2 * rs.ratio_d;
    rs.d_simple.push_back(static_cast<int>(di.get_num().get_si()));
  }

  // <omega_i, omega_j> = (A^-1)_{ji} |alpha_i|^2 / 2.
  QMat acart(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acart[i][j] = rs.cartan[i][j];
  QMat ainv = invert(acart);
  rs.gram_.assign(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram_[i][j] = ainv[j][i] * b[i][i] / 2;
  mpz_class den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ainv[i][j].get_den_mpz_t());
  rs.det_ = static_cast<int>(den.get_si());
  rs.inv_cartan_num_.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpq_class v = ainv[i][j] * den;
      rs.inv_cartan_num_[i][j] = static_cast<int>(v.get_num().get_si());
    }

  // Positive roots by root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^v> > 0 where p is the length of the downward string.
  auto labels_of = [&](const std::vector<int>& c) {
    Weight w(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[j] += c[i] * rs.cartan[i][j];
    return w;
  };
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  std::vector<std::vector<int>> all;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : layer) {
      all.push_back(c);
      const Weight w = labels_of(c);
      for (int i = 0; i < n; ++i) {
        int p = 0;
        std::vector<int> down = c;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - w[i] > 0) {
          std::vector<int> up = c;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x > y;
  });
  rs.root_coords = all;
  for (const auto& c : all) {
    rs.positive_roots.push_back(labels_of(c));
    mpq_class len = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) len += c[i] * c[j] * b[i][j];
    mpq_class dr = len / 2 * rs.ratio_d;
    rs.root_d_.push_back(static_cast<int>(dr.get_num().get_si()));
    // alpha^v = sum_i c_i (|alpha_i|^2 / |alpha|^2) alpha_i^v
    std::vector<int> cc(n);
    for (int i = 0; i < n; ++i) {
      mpq_class v = c[i] * b[i][i] / len;
      if (v.get_den() != 1) throw std::logic_error("non-integral coroot");
      cc[i] = static_cast<int>(v.get_num().get_si());
    }
    rs.coroot_coords_.push_back(cc);
  }

  rs.rho.assign(n, 1);
  rs.theta = rs.positive_roots.back();
  rs.theta_comarks = rs.coroot_coords_.back();
  rs.dual_coxeter = 1 + rs.level_of(rs.rho);
  return rs;
}

mpq_class RootSystem::inner(const Weight& x, const Weight& y) const {
  mpq_class s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (y[j] != 0) s += gram_[i][j] * (x[i] * y[j]);
  }
  return s;
}

int RootSystem::level_of(const Weight& x) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) s += x[i] * theta_comarks[i];
  return s;
}

int RootSystem::coroot_pairing(const Weight& x, std::size_t root) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) s += x[i] * coroot_coords_[root][i];
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int v) { return v >= 0; });
}

Weight RootSystem::add(const Weight& a, const Weight& b) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = a[i] + b[i];
  return r;
}

Weight RootSystem::sub(const Weight& a, const Weight& b) const {
  Weight r(rank);
  for (int i = 0; i < rank; ++i) r[i] = a[i] - b[i];
  return r;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight r = w;
  const int c = w[i];
  for (int j = 0; j < rank; ++j) r[j] -= c * cartan[i][j];
  return r;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = zero();
  w.at(i) = 1;
  return w;
}

Weight RootSystem::dominant(const Weight& w) const {
  Weight x = w;
  for (;;) {
    int i = 0;
    while (i < rank && x[i] >= 0) ++i;
    if (i == rank) return x;
    x = reflect(x, i);
  }
}

Weight RootSystem::dual(const Weight& w) const {
  Weight neg(rank);
  for (int i = 0; i < rank; ++i) neg[i] = -w[i];
  return dominant(neg);
}

ReflectResult RootSystem::weyl_orbit_reflect(const Weight& mu, std::optional<int> ell) const {
  Weight x = add(mu, rho);
  int sign = 1;
  for (;;) {
    int i = 0;
    while (i < rank && x[i] >= 0) ++i;
    if (i < rank) {
      x = reflect(x, i);
      sign = -sign;
      continue;
    }
    if (ell) {
      const int lev = level_of(x);
      if (lev > *ell) {
        for (int j = 0; j < rank; ++j) x[j] -= (lev - *ell) * theta[j];
        sign = -sign;
        continue;
      }
    }
    break;
  }
  ReflectResult r;
  for (int v : x)
    if (v == 0) r.annihilated = true;
  if (ell && level_of(x) == *ell) r.annihilated = true;
  if (r.annihilated) return r;
  r.weight = sub(x, rho);
  r.sign = sign;
  return r;
}

long RootSystem::weyl_dimension(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension needs a dominant weight");
  const Weight lr = add(lambda, rho);
  mpq_class v = 1;
  for (std::size_t a = 0; a < positive_roots.size(); ++a) {
    v *= mpq_class(coroot_pairing(lr, a), coroot_pairing(rho, a));
  }
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return v.get_num().get_si();
}

std::optional<std::vector<int>> RootSystem::root_difference(const Weight& lambda, const Weight& mu) const {
  const Weight v = sub(lambda, mu);
  std::vector<int> c(rank, 0);
  for (int j = 0; j < rank; ++j) {
    long s = 0;
    for (int i = 0; i < rank; ++i) s += static_cast<long>(v[i]) * inv_cartan_num_[i][j];
    if (s % det_ != 0) return std::nullopt;
    c[j] = static_cast<int>(s / det_);
  }
  return c;
}

const std::map<Weight, long>& RootSystem::weight_multiplicities(const Weight& lambda) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (auto it = cache_->table.find(lambda); it != cache_->table.end()) return it->second;
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");

  auto is_weight = [&](const Weight& mu) {
    auto c = root_difference(lambda, dominant(mu));
    return c && std::all_of(c->begin(), c->end(), [](int v) { return v >= 0; });
  };

  std::map<Weight, long> mult;
  mult[lambda] = 1;
  const Weight lr = add(lambda, rho);
  const mpq_class norm_top = inner(lr, lr);
  std::vector<Weight> layer{lambda};
  while (!layer.empty()) {
    std::set<Weight> next;
    for (const auto& w : layer)
      for (int i = 0; i < rank; ++i) {
        Weight m = w;
        for (int j = 0; j < rank; ++j) m[j] -= cartan[i][j];
        if (!mult.count(m) && is_weight(m)) next.insert(m);
      }
    for (const auto& m : next) {
      mpq_class s = 0;
      for (std::size_t a = 0; a < positive_roots.size(); ++a) {
        const Weight& al = positive_roots[a];
        Weight up = add(m, al);
        for (;;) {
          auto it = mult.find(up);
          if (it == mult.end()) break;
          s += inner(up, al) * it->second;
          up = add(up, al);
        }
      }
      const Weight mr = add(m, rho);
      mpq_class val = 2 * s / (norm_top - inner(mr, mr));
      if (val.get_den() != 1) throw std::logic_error("non-integral weight multiplicity");
      mult[m] = val.get_num().get_si();
    }
    layer.assign(next.begin(), next.end());
  }
  auto [it, _] = cache_->table.emplace(lambda, std::move(mult));
  return it->second;
}

std::vector<Weight> RootSystem::fundamental_rep() const {
  switch (lie_type) {
    case LieType::A:
    case LieType::C:
      return {fundamental_weight(0)};
    case LieType::B:
      return {fundamental_weight(rank - 1)};
    case LieType::D:
      if (rank % 2 == 0) return {fundamental_weight(rank - 2), fundamental_weight(rank - 1)};
      return {fundamental_weight(rank - 1)};
    case LieType::G2:
      for (int i = 0; i < rank; ++i)
        if (weyl_dimension(fundamental_weight(i)) == 7) return {fundamental_weight(i)};
      break;
  }
  throw std::logic_error("no generating representation");
}

std::map<Weight, long> RootSystem::tensor(const Weight& lambda, const Weight& mu) const {
  std::map<Weight, long> out;
  for (const auto& [nu, m] : weight_multiplicities(mu)) {
    auto r = weyl_orbit_reflect(add(lambda, nu));
    if (r.annihilated) continue;
    out[r.weight] += r.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw std::logic_error("negative multiplicity in Klimyk cancellation");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::map<Weight, long> RootSystem::tensor_with_V(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("tensor_with_V needs a dominant weight");
  std::map<Weight, long> out;
  for (const auto& v : fundamental_rep())
    for (const auto& [nu, m] : tensor(lambda, v)) out[nu] += m;
  return out;
}

}  // namespace qgcat
