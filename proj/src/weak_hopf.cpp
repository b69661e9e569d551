#include "qgcat/weak_hopf.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "qgcat/braid.hpp"

namespace qgcat {

UqModule UqModule::build(int lambda, const CycloNumber& q) {
  const std::size_t n = static_cast<std::size_t>(lambda + 1);
  UqModule m{CycloMatrix(n, n), CycloMatrix(n, n), CycloMatrix(n, n), CycloMatrix(n, n)};
  for (int i = 0; i <= lambda; ++i) {
    if (i > 0) m.E(i - 1, i) = quantum_integer(lambda - i + 1, q);
    if (i < lambda) m.F(i + 1, i) = quantum_integer(i + 1, q);
    m.K(i, i) = q.pow(lambda - 2 * i);
    m.Kinv(i, i) = q.pow(2 * i - lambda);
  }
  return m;
}

namespace {

struct TensorOps {
  CycloMatrix E, F, K, Kinv, C;
};

TensorOps tensor_ops(int lambda, int mu, const CycloNumber& q) {
  const UqModule a = UqModule::build(lambda, q), b = UqModule::build(mu, q);
  const CycloMatrix ia = CycloMatrix::identity(lambda + 1), ib = CycloMatrix::identity(mu + 1);
  TensorOps t;
  t.E = kron(a.E, b.K) + kron(ia, b.E);
  t.F = kron(a.F, ib) + kron(a.Kinv, b.F);
  t.K = kron(a.K, b.K);
  t.Kinv = kron(a.Kinv, b.Kinv);
  const CycloNumber qi = q.inverse();
  const CycloNumber s = (q - qi) * (q - qi);
  t.C = t.F * t.E * s + t.K * q + t.Kinv * qi;
  return t;
}

CycloNumber casimir_value(int nu, const CycloNumber& q) { return q.pow(nu + 1) + q.pow(-nu - 1); }

// Flip W_b (x) W_a -> W_a (x) W_b.
CycloMatrix flip(int a, int b) {
  const std::size_t na = a + 1, nb = b + 1;
  CycloMatrix t(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) t(i * nb + j, j * na + i) = CycloNumber(1L);
  return t;
}

ChannelMaps build_pair(const SixJTable& tab, int lambda, int mu, const CycloNumber& q) {
  ChannelMaps cm;
  cm.lambda = lambda;
  cm.mu = mu;
  const std::size_t nb = mu + 1;
  const std::size_t dim = (lambda + 1) * nb;
  const TensorOps ops = tensor_ops(lambda, mu, q);
  std::vector<CycloMatrix> cols;
  for (int nu = 0; nu <= tab.level(); ++nu) {
    if (!tab.admissible(lambda, mu, nu)) continue;
    cm.channels.push_back(nu);
    cm.offsets.push_back(cm.channel_dim);
    cm.channel_dim += nu + 1;
    const int s = (lambda + mu - nu) / 2;
    std::vector<std::size_t> idx;
    for (int i = std::max(0, s - mu); i <= std::min(s, lambda); ++i) idx.push_back(i * nb + (s - i));
    CycloMatrix sub(dim, idx.size());
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = ops.E(r, idx[c]);
    const CycloMatrix ker = sub.kernel();
    if (ker.cols() != 1) throw axiom_violation("highest weight space of a truncated channel is not one-dimensional");
    CycloMatrix x(dim, 1);
    const CycloNumber norm = ker(0, 0);  // coefficient of v_0 (x) v_s
    if (norm.is_zero()) throw axiom_violation("highest weight vector vanishes at v_0 (x) v_s");
    for (std::size_t c = 0; c < idx.size(); ++c) x(idx[c], 0) = ker(c, 0) / norm;
    for (int t = 0; t <= nu; ++t) {
      cols.push_back(x);
      x = ops.F * x * quantum_integer(t + 1, q).inverse();
    }
    if (!x.is_zero()) throw axiom_violation("lowering past the bottom of a truncated channel");
  }
  cm.G = CycloMatrix(dim, cm.channel_dim);
  for (std::size_t c = 0; c < cols.size(); ++c) cm.G.set_block(0, c, cols[c]);

  CycloMatrix P = CycloMatrix::identity(dim);
  for (int nu : cm.channels) P = P * (ops.C - CycloMatrix::identity(dim) * casimir_value(nu, q));
  const CycloMatrix T = P.column_basis();
  if (T.cols() + cm.channel_dim != dim) throw axiom_violation("Casimir complement has the wrong dimension");
  const CycloMatrix Binv = hstack(cm.G, T).inverse();
  cm.F = Binv.block(0, 0, cm.channel_dim, dim);
  cm.p = cm.G * cm.F;
  if (!(cm.F * cm.G).is_identity()) throw axiom_violation("F G is not the identity");
  if (cm.p * cm.p != cm.p) throw axiom_violation("G F is not idempotent");
  return cm;
}

std::vector<CycloNumber> ones(std::size_t n) { return std::vector<CycloNumber>(n, CycloNumber(1L)); }

}  // namespace

bool WeakQuasiBialgebra::is_special(int lambda, int mu, int sigma) const {
  return (lambda == 1) + (mu == 1) + (sigma == 1) >= 2;
}

TripleMaps WeakQuasiBialgebra::triple(int lambda, int mu, int sigma) const {
  TripleMaps tm;
  const ChannelMaps& lm = pair(lambda, mu);
  const ChannelMaps& ms = pair(mu, sigma);
  const std::size_t ns = sigma + 1, nl = lambda + 1;
  for (std::size_t i = 0; i < lm.channels.size(); ++i)
    for (int d : pair(lm.channels[i], sigma).channels) {
      tm.left.push_back({lm.channels[i], d, tm.channel_dim});
      tm.channel_dim += d + 1;
    }
  std::size_t rdim = 0;
  for (std::size_t i = 0; i < ms.channels.size(); ++i)
    for (int d : pair(lambda, ms.channels[i]).channels) {
      tm.right.push_back({ms.channels[i], d, rdim});
      rdim += d + 1;
    }
  if (rdim != tm.channel_dim) throw axiom_violation("left and right channel spaces differ in dimension");

  // Left: W_d -> W_e (x) W_sigma -> (channel space of lambda mu) (x) W_sigma.
  CycloMatrix BL(lm.channel_dim * ns, tm.channel_dim), BLF(tm.channel_dim, lm.channel_dim * ns);
  for (const auto& ch : tm.left) {
    const std::size_t i = std::find(lm.channels.begin(), lm.channels.end(), ch.mid) - lm.channels.begin();
    const ChannelMaps& es = pair(ch.mid, sigma);
    const std::size_t j = std::find(es.channels.begin(), es.channels.end(), ch.d) - es.channels.begin();
    const std::size_t rows = (ch.mid + 1) * ns;
    for (std::size_t r = 0; r < rows; ++r)
      for (int t = 0; t <= ch.d; ++t) {
        BL(lm.offsets[i] * ns + r, ch.offset + t) = es.G(r, es.offsets[j] + t);
        BLF(ch.offset + t, lm.offsets[i] * ns + r) = es.F(es.offsets[j] + t, r);
      }
  }
  const CycloMatrix is = CycloMatrix::identity(ns), il = CycloMatrix::identity(nl);
  tm.GL = kron(lm.G, is) * BL;
  tm.FL = BLF * kron(lm.F, is);

  // Right: W_d -> W_lambda (x) W_f -> W_lambda (x) (channel space of mu sigma).
  CycloMatrix BR(nl * ms.channel_dim, tm.channel_dim), BRF(tm.channel_dim, nl * ms.channel_dim);
  for (const auto& ch : tm.right) {
    const std::size_t i = std::find(ms.channels.begin(), ms.channels.end(), ch.mid) - ms.channels.begin();
    const ChannelMaps& lf = pair(lambda, ch.mid);
    const std::size_t j = std::find(lf.channels.begin(), lf.channels.end(), ch.d) - lf.channels.begin();
    const std::size_t nf = ch.mid + 1;
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t x = 0; x < nf; ++x)
        for (int t = 0; t <= ch.d; ++t) {
          const std::size_t row = l * ms.channel_dim + ms.offsets[i] + x;
          BR(row, ch.offset + t) = lf.G(l * nf + x, lf.offsets[j] + t);
          BRF(ch.offset + t, row) = lf.F(lf.offsets[j] + t, l * nf + x);
        }
  }
  tm.GR = kron(il, ms.G) * BR;
  tm.FR = BRF * kron(il, ms.F);
  return tm;
}

CycloMatrix WeakQuasiBialgebra::geometric_F(int lambda, int mu, int sigma) const {
  const TripleMaps tm = triple(lambda, mu, sigma);
  return tm.FR * tm.GL;
}

CycloMatrix WeakQuasiBialgebra::phi_from_symbols(int lambda, int mu, int sigma) const {
  const TripleMaps tm = triple(lambda, mu, sigma);
  CycloMatrix fmat(tm.channel_dim, tm.channel_dim);
  for (const auto& r : tm.right)
    for (const auto& l : tm.left) {
      if (r.d != l.d) continue;
      const CycloNumber& v = symbols_[table_->fid(lambda, mu, sigma, l.d, l.mid, r.mid)];
      for (int t = 0; t <= l.d; ++t) fmat(r.offset + t, l.offset + t) = v;
    }
  return tm.GR * fmat * tm.FL;
}

const CycloMatrix& WeakQuasiBialgebra::phi(int lambda, int mu, int sigma) const {
  return phi_.at({lambda, mu, sigma});
}

const CycloMatrix& WeakQuasiBialgebra::r_element(int lambda, int mu) const { return r_.at({lambda, mu}); }

CycloMatrix WeakQuasiBialgebra::channel_diag(const ChannelMaps& cm, const std::vector<CycloNumber>& per_channel) const {
  CycloMatrix d(cm.channel_dim, cm.channel_dim);
  for (std::size_t i = 0; i < cm.channels.size(); ++i)
    for (int t = 0; t <= cm.channels[i]; ++t) d(cm.offsets[i] + t, cm.offsets[i] + t) = per_channel[i];
  return d;
}

CycloMatrix WeakQuasiBialgebra::channel_element(int lambda, int mu, const std::vector<CycloNumber>& per_vertex,
                                                bool inverse) const {
  const ChannelMaps& cm = pair(lambda, mu);
  std::vector<CycloNumber> s;
  for (int nu : cm.channels) {
    const CycloNumber& x = per_vertex.at(gauge_->vertex_id(lambda, mu, nu));
    if (x.is_zero()) throw std::invalid_argument("twist scalar is zero");
    s.push_back(inverse ? x.inverse() : x);
  }
  return cm.G * channel_diag(cm, s) * cm.F;
}

CycloMatrix WeakQuasiBialgebra::twist_element(int lambda, int mu, bool inverse) const {
  return channel_element(lambda, mu, j_, inverse);
}

CycloMatrix WeakQuasiBialgebra::delta(int lambda, int mu, const Element& a) const {
  const ChannelMaps& cm = pair(lambda, mu);
  CycloMatrix A(cm.channel_dim, cm.channel_dim);
  for (std::size_t i = 0; i < cm.channels.size(); ++i) A.set_block(cm.offsets[i], cm.offsets[i], a[cm.channels[i]]);
  return twist_element(lambda, mu, false) * cm.G * A * cm.F * twist_element(lambda, mu, true);
}

CycloMatrix WeakQuasiBialgebra::delta_one(int lambda, int mu) const { return delta(lambda, mu, one()); }

Element WeakQuasiBialgebra::one() const {
  Element e;
  for (int l = 0; l <= k_; ++l) e.push_back(CycloMatrix::identity(l + 1));
  return e;
}

WeakQuasiBialgebra WeakQuasiBialgebra::build(const AlcoveCategory& cat) {
  WeakQuasiBialgebra w;
  w.k_ = cat.level();
  w.q_ = cat.q();
  auto tab = std::make_shared<SixJTable>(SixJTable::q_racah(cat));
  w.table_ = tab;
  w.gauge_ = std::make_shared<GaugeSystem>(*tab);
  const int n = w.k_ + 1;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) w.pairs_.push_back(build_pair(*tab, l, m, w.q_));
  w.j_ = ones(w.gauge_->num_vertices());

  // Read the change of channel basis on the special triples; it must be a
  // scalar on each pair of channels with the same total weight.
  std::vector<CycloNumber> target(tab->num_vars());
  std::vector<int> special;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int s = 0; s < n; ++s) {
        if (!w.is_special(l, m, s)) continue;
        const TripleMaps tm = w.triple(l, m, s);
        const CycloMatrix g = tm.FR * tm.GL;
        for (const auto& r : tm.right)
          for (const auto& c : tm.left) {
            const CycloMatrix blk = g.block(r.offset, c.offset, r.d + 1, c.d + 1);
            if (r.d != c.d) {
              if (!blk.is_zero()) throw axiom_violation("geometric F mixes different channels");
              continue;
            }
            const CycloNumber v = blk(0, 0);
            if (blk != CycloMatrix::identity(r.d + 1) * v) throw axiom_violation("geometric F is not a module map");
            const int id = tab->fid(l, m, s, r.d, c.mid, r.mid);
            target[id] = v;
            special.push_back(id);
          }
      }
  std::string why;
  auto u = w.gauge_->solve(tab->values(), target, special, &why);
  if (!u) throw axiom_violation("q-Racah table does not match the special triples up to gauge: " + why);
  w.u_ = *u;
  w.symbols_ = w.gauge_->apply(tab->values(), w.u_);

  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int s = 0; s < n; ++s) {
        CycloMatrix phi = w.phi_from_symbols(l, m, s);
        if (w.is_special(l, m, s)) {
          const TripleMaps tm = w.triple(l, m, s);
          if (phi != tm.GR * tm.FR * tm.GL * tm.FL) throw axiom_violation("associator is not trivial on a special triple");
        }
        w.phi_[{l, m, s}] = std::move(phi);
      }
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      const ChannelMaps& cm = w.pair(l, m);
      std::vector<CycloNumber> rs;
      for (int nu : cm.channels) rs.push_back(w.symbols_[tab->rvar(l, m, nu)]);
      w.r_[{l, m}] = flip(l, m) * w.pair(m, l).G * w.channel_diag(cm, rs) * cm.F;
    }
  return w;
}

bool structurally_equal(const WeakQuasiBialgebra& a, const WeakQuasiBialgebra& b) {
  return a.k_ == b.k_ && a.symbols_ == b.symbols_ && a.j_ == b.j_ && a.phi_ == b.phi_ && a.r_ == b.r_;
}

namespace {

using PairBlocks = std::function<const CycloMatrix&(int, int)>;

// (Delta (x) id)(X) on W_l (x) W_m (x) W_s, X given by its pair blocks.
CycloMatrix delta_left(const WeakQuasiBialgebra& w, int l, int m, int s, const PairBlocks& X) {
  const ChannelMaps& lm = w.pair(l, m);
  const std::size_t ns = s + 1;
  CycloMatrix big(lm.channel_dim * ns, lm.channel_dim * ns);
  for (std::size_t i = 0; i < lm.channels.size(); ++i)
    big.set_block(lm.offsets[i] * ns, lm.offsets[i] * ns, X(lm.channels[i], s));
  const CycloMatrix is = CycloMatrix::identity(ns);
  return kron(w.twist_element(l, m, false) * lm.G, is) * big * kron(lm.F * w.twist_element(l, m, true), is);
}

// (id (x) Delta)(X) on W_l (x) W_m (x) W_s.
CycloMatrix delta_right(const WeakQuasiBialgebra& w, int l, int m, int s, const PairBlocks& X) {
  const ChannelMaps& ms = w.pair(m, s);
  const std::size_t nl = l + 1, cd = ms.channel_dim;
  CycloMatrix big(nl * cd, nl * cd);
  for (std::size_t i = 0; i < ms.channels.size(); ++i) {
    const int f = ms.channels[i];
    const std::size_t nf = f + 1;
    const CycloMatrix& x = X(l, f);
    for (std::size_t a = 0; a < nl; ++a)
      for (std::size_t b = 0; b < nf; ++b)
        for (std::size_t c = 0; c < nl; ++c)
          for (std::size_t d = 0; d < nf; ++d) {
            const CycloNumber& v = x(a * nf + b, c * nf + d);
            if (!v.is_zero()) big(a * cd + ms.offsets[i] + b, c * cd + ms.offsets[i] + d) = v;
          }
  }
  const CycloMatrix il = CycloMatrix::identity(nl);
  return kron(il, w.twist_element(m, s, false) * ms.G) * big * kron(il, ms.F * w.twist_element(m, s, true));
}

struct PairTable {
  int n;
  std::vector<CycloMatrix> blocks;
  const CycloMatrix& operator()(int a, int b) const { return blocks[a * n + b]; }
};

PairTable delta_table(const WeakQuasiBialgebra& w, const Element& a) {
  PairTable t{w.level() + 1, {}};
  for (int l = 0; l < t.n; ++l)
    for (int m = 0; m < t.n; ++m) t.blocks.push_back(w.delta(l, m, a));
  return t;
}

bool coassociative_on(const WeakQuasiBialgebra& w, int l, int m, int s, const CycloMatrix& phi, const PairTable& X) {
  const CycloMatrix L = delta_left(w, l, m, s, std::cref(X));
  const CycloMatrix R = delta_right(w, l, m, s, std::cref(X));
  return phi * L == R * phi;
}

void note(AxiomReport& rep, const std::string& what, int l, int m, int s) {
  if (rep.failures.size() >= 5) return;
  std::ostringstream os;
  os << what << " at (" << l << "," << m;
  if (s >= 0) os << "," << s;
  os << ")";
  rep.failures.push_back(os.str());
}

}  // namespace

Element random_element(const WeakQuasiBialgebra& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3), power(0, 2 * (w.level() + 2) - 1);
  Element a;
  for (int l = 0; l <= w.level(); ++l) {
    CycloMatrix m(l + 1, l + 1);
    for (int i = 0; i <= l; ++i)
      for (int j = 0; j <= l; ++j) m(i, j) = CycloNumber(coef(rng)) + w.q().pow(power(rng));
    a.push_back(std::move(m));
  }
  return a;
}

bool coassociative_with(const WeakQuasiBialgebra& w, int lambda, int mu, int sigma, const CycloMatrix& phi,
                        const Element& a) {
  return coassociative_on(w, lambda, mu, sigma, phi, delta_table(w, a));
}

AxiomReport verify_weak_axioms(const WeakQuasiBialgebra& w, bool full_basis, int samples, std::uint64_t seed) {
  AxiomReport rep;
  const int n = w.level() + 1;
  std::vector<Element> elems{w.one()};
  if (full_basis) {
    for (int l = 0; l < n; ++l)
      for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
          Element e;
          for (int x = 0; x < n; ++x) e.push_back(CycloMatrix(x + 1, x + 1));
          e[l](i, j) = CycloNumber(1L);
          elems.push_back(std::move(e));
        }
  } else {
    for (int s = 0; s < samples; ++s) elems.push_back(random_element(w, seed + s));
  }

  const PairTable one = delta_table(w, w.one());
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int s = 0; s < n; ++s) {
        const CycloMatrix& phi = w.phi(l, m, s);
        const CycloMatrix L1 = delta_left(w, l, m, s, std::cref(one));
        const CycloMatrix R1 = delta_right(w, l, m, s, std::cref(one));
        ++rep.support_checked;
        const std::size_t r = phi.rank();
        if (R1 * phi * L1 != phi || r != L1.rank() || r != R1.rank()) {
          ++rep.support_failed;
          note(rep, "associator support", l, m, s);
        }
      }
  for (const auto& a : elems) {
    const PairTable X = delta_table(w, a);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m)
        for (int s = 0; s < n; ++s) {
          ++rep.coassociativity_checked;
          if (!coassociative_on(w, l, m, s, w.phi(l, m, s), X)) {
            ++rep.coassociativity_failed;
            note(rep, "weak coassociativity", l, m, s);
          }
        }
    for (int l = 0; l < n; ++l) {
      rep.counit_checked += 2;
      if (X(0, l) != a[l]) {
        ++rep.counit_failed;
        note(rep, "left counit", 0, l, -1);
      }
      if (X(l, 0) != a[l]) {
        ++rep.counit_failed;
        note(rep, "right counit", l, 0, -1);
      }
    }
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        ++rep.hexagon_checked;
        const CycloMatrix op = flip(l, m) * X(m, l) * flip(m, l);
        if (w.r_element(l, m) * X(l, m) != op * w.r_element(l, m)) {
          ++rep.hexagon_failed;
          note(rep, "quasi-hexagon", l, m, -1);
        }
      }
  }
  if (!w.counit(w.one()).is_one()) {
    ++rep.counit_failed;
    note(rep, "counit of the unit", 0, 0, -1);
  }
  for (int l = 0; l < n; ++l)
    for (int s = 0; s < n; ++s) {
      ++rep.counit_checked;
      if (w.phi(l, 0, s) != one(l, s)) {
        ++rep.counit_failed;
        note(rep, "associator counit", l, 0, s);
      }
    }
  return rep;
}

TwistData TwistData::identity(const WeakQuasiBialgebra& w) {
  return TwistData{ones(w.gauge_system().num_vertices())};
}

TwistData TwistData::inverse() const {
  TwistData t;
  for (const auto& x : j) t.j.push_back(x.inverse());
  return t;
}

WeakQuasiBialgebra apply_twist(const WeakQuasiBialgebra& w, const TwistData& J) {
  if (J.j.size() != w.gauge_->num_vertices()) throw std::invalid_argument("twist has the wrong number of scalars");
  for (const auto& x : J.j)
    if (x.is_zero()) throw std::invalid_argument("twist scalar is zero");
  WeakQuasiBialgebra out = w;
  for (std::size_t v = 0; v < J.j.size(); ++v) out.j_[v] = w.j_[v] * J.j[v];
  out.symbols_ = w.gauge_->apply(w.symbols_, J.j);

  const int n = w.k_ + 1;
  PairTable Jb{n, {}}, Jinv{n, {}};
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      Jb.blocks.push_back(w.channel_element(l, m, J.j, false));
      Jinv.blocks.push_back(w.channel_element(l, m, J.j, true));
    }
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int s = 0; s < n; ++s) {
        const CycloMatrix left = kron(CycloMatrix::identity(l + 1), Jb(m, s)) * delta_right(w, l, m, s, std::cref(Jb));
        const CycloMatrix right = delta_left(w, l, m, s, std::cref(Jinv)) * kron(Jinv(l, m), CycloMatrix::identity(s + 1));
        out.phi_[{l, m, s}] = left * w.phi(l, m, s) * right;
      }
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      out.r_[{l, m}] = flip(l, m) * Jb(m, l) * flip(m, l) * w.r_element(l, m) * Jinv(l, m);
  return out;
}

TwistData coboundary_twist(const WeakQuasiBialgebra& w, const AlcoveCategory& cat) {
  TwistData t = TwistData::identity(w);
  const SixJTable& tab = w.table();
  const int v = 1;
  for (int l = 0; l <= w.level(); ++l) {
    if (l == v) continue;
    for (const auto& pb : pair_braiding(cat, l)) {
      const CoboundaryMatrix cb = coboundary(cat, pb);
      for (std::size_t c = 0; c < pb.channels.size(); ++c) {
        const int nu = pb.channels[c];
        const CycloNumber& r = w.symbols()[tab.rvar(l, v, nu)];
        t.j[w.gauge_system().vertex_id(v, l, nu)] = cb.rbar[c] / r;
      }
    }
  }
  return t;
}

TwistData random_twist(const WeakQuasiBialgebra& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int order = 4 * (w.level() + 2);
  std::uniform_int_distribution<long> pick(0, order - 1);
  TwistData t = TwistData::identity(w);
  for (std::size_t i = 0; i < t.j.size(); ++i) {
    const auto& x = w.gauge_system().vertex(i);
    if (x.a != 0 && x.b != 0) t.j[i] = CycloNumber::root_of_unity(order, pick(rng));
  }
  return t;
}

GaugeInvariants gauge_invariants(const WeakQuasiBialgebra& w, const AlcoveCategory& cat) {
  GaugeInvariants g;
  const int n = w.level() + 1;
  const SixJTable& tab = w.table();
  g.fusion.assign(n * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const CycloMatrix P = w.delta_one(a, b);
      const TensorOps ops = tensor_ops(a, b, w.q());
      const std::size_t r = P.rank();
      const std::size_t dim = (a + 1) * (b + 1);
      for (int c = 0; c < n; ++c) {
        const CycloMatrix shifted = (ops.C - CycloMatrix::identity(dim) * casimir_value(c, w.q())) * P;
        g.fusion[(a * n + b) * n + c] = static_cast<int>((r - shifted.rank()) / (c + 1));
      }
    }
  g.symbols = symbol_invariants(tab, w.symbols(), cat);
  return g;
}

}  // namespace qgcat
