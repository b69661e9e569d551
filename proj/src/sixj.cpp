#include "qgcat/sixj.hpp"

#include <sstream>
#include <stdexcept>

#include "qgcat/cyclo_matrix.hpp"

namespace qgcat {

std::string family_name(Relation::Family f) {
  switch (f) {
    case Relation::Pentagon: return "pentagon";
    case Relation::Hexagon: return "hexagon";
    case Relation::HexagonInverse: return "hexagon-inverse";
  }
  return "?";
}

bool SixJTable::admissible(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a > k_ || b > k_ || c > k_) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (c > a + b || a > b + c || b > a + c) return false;
  return a + b + c <= 2 * k_;
}

void SixJTable::index(int k) {
  k_ = k;
  const int n = k + 1;
  fidx_.assign(static_cast<std::size_t>(n) * n * n * n * n * n, -1);
  ridx_.assign(static_cast<std::size_t>(n) * n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              if (!admissible(a, b, e) || !admissible(e, c, d) || !admissible(b, c, f) || !admissible(a, f, d)) continue;
              fidx_[((((a * n + b) * n + c) * n + d) * n + e) * n + f] = static_cast<int>(fkeys_.size());
              fkeys_.push_back({a, b, c, d, e, f});
            }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!admissible(a, b, c)) continue;
        ridx_[(a * n + b) * n + c] = static_cast<int>(rkeys_.size());
        rkeys_.push_back({a, b, c});
      }
}

int SixJTable::fid(int a, int b, int c, int d, int e, int f) const {
  const int n = k_ + 1;
  for (int x : {a, b, c, d, e, f})
    if (x < 0 || x >= n) return -1;
  return fidx_[((((a * n + b) * n + c) * n + d) * n + e) * n + f];
}

int SixJTable::rid(int a, int b, int c) const {
  const int n = k_ + 1;
  for (int x : {a, b, c})
    if (x < 0 || x >= n) return -1;
  return ridx_[(a * n + b) * n + c];
}

const CycloNumber& SixJTable::F(int a, int b, int c, int d, int e, int f) const {
  const int i = fid(a, b, c, d, e, f);
  if (i < 0) throw std::invalid_argument("F-symbol with inadmissible labels");
  return vals_[i];
}

const CycloNumber& SixJTable::R(int a, int b, int c) const {
  const int i = rid(a, b, c);
  if (i < 0) throw std::invalid_argument("R-symbol with inadmissible labels");
  return vals_[num_f() + i];
}

std::string SixJTable::var_name(int v) const {
  std::ostringstream os;
  if (v < static_cast<int>(num_f())) {
    const auto& x = fkeys_[v];
    os << "F^{" << x.a << x.b << x.c << "}_" << x.d << "[" << x.e << "," << x.f << "]";
  } else {
    const auto& x = rkeys_[v - num_f()];
    os << "R^{" << x.a << x.b << "}_" << x.c;
  }
  return os.str();
}

std::vector<int> SixJTable::left_channels(int a, int b, int c, int d) const {
  std::vector<int> out;
  for (int e = 0; e <= k_; ++e)
    if (admissible(a, b, e) && admissible(e, c, d)) out.push_back(e);
  return out;
}

std::vector<int> SixJTable::right_channels(int a, int b, int c, int d) const {
  std::vector<int> out;
  for (int f = 0; f <= k_; ++f)
    if (admissible(b, c, f) && admissible(a, f, d)) out.push_back(f);
  return out;
}

CycloNumber SixJTable::unitary_weight(int x, int y, int z) const {
  const CycloNumber D = qfact((x + y - z) / 2) * qfact((x - y + z) / 2) * qfact((-x + y + z) / 2) /
                        qfact((x + y + z) / 2 + 1);
  return D * quantum_integer(z + 1, q_);
}

SixJTable SixJTable::q_racah(const AlcoveCategory& cat) {
  const auto& rs = cat.root_system();
  if (rs.lie_type != LieType::A || rs.rank != 1) throw std::invalid_argument("6j tables are built for A_1 only");
  SixJTable t;
  t.q_ = cat.q();
  t.index(cat.level());
  const int k = t.k_;
  for (int n = 0; n <= 2 * k + 2; ++n) t.qfact_.push_back(quantum_factorial(n, t.q_));
  auto D = [&](int x, int y, int z) {
    return t.qfact((x + y - z) / 2) * t.qfact((x - y + z) / 2) * t.qfact((-x + y + z) / 2) /
           t.qfact((x + y + z) / 2 + 1);
  };

  t.vals_.resize(t.num_vars());
  for (std::size_t i = 0; i < t.fkeys_.size(); ++i) {
    const auto [a, b, c, d, e, f] = t.fkeys_[i];
    const int al[4] = {(a + b + e) / 2, (e + c + d) / 2, (b + c + f) / 2, (a + f + d) / 2};
    const int be[3] = {(a + b + c + d) / 2, (a + c + e + f) / 2, (b + d + e + f) / 2};
    int zmin = 0, zmax = be[0];
    for (int x : al) zmin = std::max(zmin, x);
    for (int x : be) zmax = std::min(zmax, x);
    CycloNumber sum;
    for (int z = zmin; z <= zmax; ++z) {
      CycloNumber den(1L);
      for (int x : al) den *= t.qfact(z - x);
      for (int x : be) den *= t.qfact(x - z);
      CycloNumber term = t.qfact(z + 1) / den;
      if (z % 2) term = -term;
      sum += term;
    }
    CycloNumber v = quantum_integer(f + 1, t.q_) * D(b, c, f) * D(a, f, d) * sum;
    if (be[0] % 2) v = -v;
    t.vals_[i] = v;
  }
  for (std::size_t i = 0; i < t.rkeys_.size(); ++i) {
    const auto [a, b, c] = t.rkeys_[i];
    const mpq_class e = cat.casimir(c) - cat.casimir(a) - cat.casimir(b);
    CycloNumber r = cat.ribbon_phase(e / 2);
    if (((a + b - c) / 2) % 2) r = -r;
    t.vals_[t.num_f() + i] = r;
  }
  t.build_relations();
  return t;
}

void SixJTable::build_relations() {
  const int n = k_ + 1;
  // Pentagons, labelled (a, b, c, d, e; f, g, k, l).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f) {
              if (!admissible(a, b, f)) continue;
              for (int g = 0; g < n; ++g) {
                if (!admissible(f, c, g) || !admissible(g, d, e)) continue;
                for (int kk = 0; kk < n; ++kk) {
                  if (!admissible(a, kk, e)) continue;
                  for (int l = 0; l < n; ++l) {
                    if (!admissible(c, d, l) || !admissible(b, l, kk)) continue;
                    // With (f l -> e) inadmissible the left side vanishes.
                    const int x1 = fid(f, c, d, e, g, l);
                    const int x2 = fid(a, b, l, e, f, kk);
                    Relation rel{Relation::Pentagon, {a, b, c, d, e, f, g, kk, l}, {}};
                    if (x1 >= 0 && x2 >= 0) rel.terms.push_back({1, {{x1, 1}, {x2, 1}}});
                    for (int h = 0; h < n; ++h) {
                      const int y1 = fid(a, b, c, g, f, h);
                      const int y2 = fid(a, h, d, e, g, kk);
                      const int y3 = fid(b, c, d, kk, h, l);
                      if (y1 < 0 || y2 < 0 || y3 < 0) continue;
                      rel.terms.push_back({-1, {{y1, 1}, {y2, 1}, {y3, 1}}});
                    }
                    relations_.push_back(std::move(rel));
                  }
                }
              }
            }
  // Hexagons, labelled (a, b, c, d, e, g).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int g = 0; g < n; ++g) {
              const int x = fid(a, c, b, d, e, g);
              if (x < 0) continue;
              Relation h1{Relation::Hexagon, {a, b, c, d, e, g, 0, 0, 0}, {}};
              Relation h2{Relation::HexagonInverse, {a, b, c, d, e, g, 0, 0, 0}, {}};
              h1.terms.push_back({1, {{rvar(c, a, e), 1}, {x, 1}, {rvar(c, b, g), 1}}});
              h2.terms.push_back({1, {{rvar(a, c, e), -1}, {x, 1}, {rvar(b, c, g), -1}}});
              for (int f = 0; f < n; ++f) {
                const int y1 = fid(c, a, b, d, e, f);
                const int y2 = fid(a, b, c, d, f, g);
                if (y1 < 0 || y2 < 0) continue;
                h1.terms.push_back({-1, {{y1, 1}, {rvar(c, f, d), 1}, {y2, 1}}});
                h2.terms.push_back({-1, {{y1, 1}, {rvar(f, c, d), -1}, {y2, 1}}});
              }
              relations_.push_back(std::move(h1));
              relations_.push_back(std::move(h2));
            }
}

CycloNumber evaluate(const Relation& rel, const std::vector<CycloNumber>& vals) {
  CycloNumber sum;
  for (const auto& m : rel.terms) {
    CycloNumber p(static_cast<long>(m.coef));
    for (const auto& [v, e] : m.factors) {
      if (e == 1) {
        p *= vals[v];
      } else {
        p *= vals[v].pow(e);
      }
      if (p.is_zero()) break;
    }
    sum += p;
  }
  return sum;
}

std::complex<double> evaluate(const Relation& rel, const std::vector<std::complex<double>>& vals) {
  std::complex<double> sum = 0;
  for (const auto& m : rel.terms) {
    std::complex<double> p = static_cast<double>(m.coef);
    for (const auto& [v, e] : m.factors) p *= e == 1 ? vals[v] : std::pow(vals[v], e);
    sum += p;
  }
  return sum;
}

namespace {

std::string describe(const SixJTable& t, const Relation& rel, const CycloNumber& value) {
  std::ostringstream os;
  os << family_name(rel.family) << " labels (";
  const int used = rel.family == Relation::Pentagon ? 9 : 6;
  for (int i = 0; i < used; ++i) os << (i ? "," : "") << rel.labels[i];
  os << ") residual " << value.str() << " first term";
  for (const auto& [v, e] : rel.terms.front().factors) os << " " << t.var_name(v) << (e == 1 ? "" : "^-1");
  return os.str();
}

SuiteReport run_suite(const SixJTable& t, const std::vector<CycloNumber>& vals, bool pentagon) {
  SuiteReport rep;
  rep.family = pentagon ? "pentagon" : "hexagon";
  for (const auto& rel : t.relations()) {
    if ((rel.family == Relation::Pentagon) != pentagon) continue;
    ++rep.instances;
    const CycloNumber r = evaluate(rel, vals);
    if (!r.is_zero()) {
      if (rep.violations == 0) rep.first_counterexample = describe(t, rel, r);
      ++rep.violations;
    }
  }
  return rep;
}

}  // namespace

SuiteReport pentagon_suite(const SixJTable& t) { return run_suite(t, t.values(), true); }
SuiteReport pentagon_suite(const SixJTable& t, const std::vector<CycloNumber>& vals) {
  return run_suite(t, vals, true);
}
SuiteReport hexagon_suite(const SixJTable& t) { return run_suite(t, t.values(), false); }
SuiteReport hexagon_suite(const SixJTable& t, const std::vector<CycloNumber>& vals) {
  return run_suite(t, vals, false);
}

bool weighted_unitarity(const SixJTable& t, const std::vector<CycloNumber>& vals) {
  const int n = t.level() + 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const auto es = t.left_channels(a, b, c, d);
          const auto fs = t.right_channels(a, b, c, d);
          if (es.empty()) continue;
          if (es.size() != fs.size()) return false;
          CycloMatrix m(es.size(), fs.size());
          std::vector<CycloNumber> wr, wl;
          for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j) m(i, j) = vals[t.fid(a, b, c, d, es[i], fs[j])];
          for (int f : fs) wr.push_back((t.unitary_weight(b, c, f) * t.unitary_weight(a, f, d)).inverse());
          for (int e : es) wl.push_back((t.unitary_weight(a, b, e) * t.unitary_weight(e, c, d)).inverse());
          if (m * CycloMatrix::diagonal(wr) * m.conj_transpose() != CycloMatrix::diagonal(wl)) return false;
        }
  return true;
}

CycloNumber unitary_modulus_sq(const SixJTable& t, int a, int b, int c, int d, int e, int f) {
  const CycloNumber& x = t.F(a, b, c, d, e, f);
  return x * conj(x) * t.unitary_weight(a, b, e) * t.unitary_weight(e, c, d) /
         (t.unitary_weight(a, f, d) * t.unitary_weight(b, c, f));
}

SymbolInvariants symbol_invariants(const SixJTable& t, const std::vector<CycloNumber>& vals,
                                   const AlcoveCategory& cat) {
  SymbolInvariants g;
  const int n = t.level() + 1;
  for (int a = 0; a < n; ++a) {
    CycloNumber th;
    for (int c = 0; c < n; ++c)
      if (t.admissible(a, a, c)) th += cat.qdim(c) * vals[t.rvar(a, a, c)];
    g.twists.push_back(th / cat.qdim(a));
    g.fs_indicators.push_back(cat.qdim(a) * vals[t.fid(a, a, a, a, 0, 0)]);
  }
  g.S = CycloMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ad = cat.dual(a);
      CycloNumber s;
      for (int c = 0; c < n; ++c)
        if (t.admissible(ad, b, c)) s += cat.qdim(c) * vals[t.rvar(b, ad, c)] * vals[t.rvar(ad, b, c)];
      g.S(a, b) = s;
    }
  return g;
}

}  // namespace qgcat
