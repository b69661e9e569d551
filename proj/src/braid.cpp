#include "qgcat/braid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace qgcat {

BraidTower BraidTower::build(const AlcoveCategory& cat, int n) {
  const auto& rs = cat.root_system();
  if (rs.lie_type != LieType::A || rs.rank != 1) {
    throw std::invalid_argument("exact braid towers are built for A_1 only; use pair_braiding");
  }
  if (n < 2) throw std::invalid_argument("braid tower needs n >= 2");
  BraidTower t;
  t.n_ = n;
  t.a_ = CycloNumber::root_of_unity(4 * cat.ell(), 1);
  const CycloNumber& q = cat.q();
  t.delta_ = quantum_integer(2, q);
  t.paths_ = cat.truncated_power(n).paths;

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t p = 0; p < t.paths_.size(); ++p) index[t.paths_[p].nodes] = p;
  for (std::size_t p = 0; p < t.paths_.size();) {
    const int w = t.paths_[p].nodes.back();
    std::size_t r = p;
    while (r < t.paths_.size() && t.paths_[r].nodes.back() == w) ++r;
    t.blocks_.push_back({w, p, r - p, cat.qdim(w)});
    p = r;
  }

  auto label = [&](int idx) { return cat.weight(idx)[0]; };
  const std::size_t dim = t.paths_.size();
  const CycloNumber a_inv = t.a_.inverse();
  for (int i = 1; i < n; ++i) {
    CycloMatrix e(dim, dim);
    for (std::size_t p = 0; p < dim; ++p) {
      const auto& nodes = t.paths_[p].nodes;
      if (nodes[i - 1] != nodes[i + 1]) continue;
      const int a = label(nodes[i - 1]);
      const CycloNumber inv = quantum_integer(a + 1, q).inverse();
      for (int b : {a - 1, a + 1}) {
        if (b < 0) continue;
        auto other = nodes;
        const int bi = cat.index_of({b});
        if (bi < 0) continue;
        other[i] = bi;
        auto it = index.find(other);
        if (it == index.end()) continue;
        e(p, it->second) = quantum_integer(b + 1, q) * inv;
      }
    }
    CycloMatrix s = CycloMatrix::identity(dim) * t.a_ - e * a_inv;
    CycloMatrix si = CycloMatrix::identity(dim) * a_inv - e * t.a_;
    if (!t.is_block_diagonal(s)) throw std::logic_error("braid generator leaves an isotypic block");
    t.e_.push_back(std::move(e));
    t.sigma_.push_back(std::move(s));
    t.sigma_inv_.push_back(std::move(si));
  }
  return t;
}

bool BraidTower::is_block_diagonal(const CycloMatrix& m) const {
  std::vector<std::size_t> owner(dim());
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t j = 0; j < blocks_[b].size; ++j) owner[blocks_[b].offset + j] = b;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return false;
  return true;
}

long BraidTower::centralizer_dimension() const {
  long s = 0;
  for (const auto& b : blocks_) s += static_cast<long>(b.size * b.size);
  return s;
}

long BraidTower::braid_image_dimension() const {
  using Element = std::vector<CycloMatrix>;  // one matrix per block
  auto split = [&](const CycloMatrix& m) {
    Element el;
    for (const auto& b : blocks_) el.push_back(m.block(b.offset, b.offset, b.size, b.size));
    return el;
  };
  auto flatten = [&](const Element& el) {
    std::vector<CycloNumber> v;
    v.reserve(static_cast<std::size_t>(centralizer_dimension()));
    for (const auto& m : el)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  };
  std::vector<Element> gens;
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    gens.push_back(split(sigma_[i]));
    gens.push_back(split(sigma_inv_[i]));
  }
  const long bound = centralizer_dimension();
  EchelonSpan span(static_cast<std::size_t>(bound));
  std::deque<Element> queue;
  Element one = split(CycloMatrix::identity(dim()));
  span.insert(flatten(one));
  queue.push_back(std::move(one));
  // The image lies in the block algebra (checked at build), so reaching its
  // dimension ends the search.
  while (!queue.empty() && static_cast<long>(span.size()) < bound) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Element y(x.size());
      for (std::size_t b = 0; b < x.size(); ++b) y[b] = x[b] * g[b];
      if (span.insert(flatten(y))) queue.push_back(std::move(y));
      if (static_cast<long>(span.size()) == bound) break;
    }
  }
  return static_cast<long>(span.size());
}

CycloNumber BraidTower::markov_trace(const CycloMatrix& m) const {
  CycloNumber s;
  for (const auto& b : blocks_) {
    CycloNumber tr;
    for (std::size_t j = 0; j < b.size; ++j) tr += m(b.offset + j, b.offset + j);
    if (!tr.is_zero()) s += b.qdim * tr;
  }
  return s;
}

long centralizer_dimension(const AlcoveCategory& cat, int n) {
  return cat.truncated_power(n).centralizer_dimension();
}

CycloNumber PairBraiding::monodromy(const AlcoveCategory& cat, std::size_t j) const {
  return cat.twist(channels[j]) * (cat.twist(lambda) * cat.twist(v)).inverse();
}

std::vector<PairBraiding> pair_braiding(const AlcoveCategory& cat, int lambda) {
  const auto& rs = cat.root_system();
  std::vector<PairBraiding> out;
  for (int v : cat.V()) {
    PairBraiding pb;
    pb.lambda = lambda;
    pb.v = v;
    const Weight top = rs.add(cat.weight(lambda), cat.weight(v));
    for (int nu = 0; nu < static_cast<int>(cat.size()); ++nu) {
      const int m = cat.N(lambda, v, nu);
      if (m == 0) continue;
      if (m > 1) throw std::runtime_error("pair_braiding: channel of multiplicity > 1");
      auto diff = rs.root_difference(top, cat.weight(nu));
      if (!diff) throw std::logic_error("channel outside the root-lattice class");
      long ht = 0;
      for (int c : *diff) ht += c;
      const int sign = (ht % 2 == 0) ? 1 : -1;
      const mpq_class e = cat.casimir(nu) - cat.casimir(lambda) - cat.casimir(v);
      pb.channels.push_back(nu);
      pb.signs.push_back(sign);
      pb.exponents.push_back(e);
      pb.eigen.push_back(CycloNumber(static_cast<long>(sign)) * cat.ribbon_phase(e / 2));
    }
    out.push_back(std::move(pb));
  }
  return out;
}

CoboundaryMatrix coboundary(const AlcoveCategory& cat, const PairBraiding& pb) {
  CoboundaryMatrix cb;
  cb.base = pb;
  cb.involutive = true;
  cb.unit_modulus = true;
  for (std::size_t j = 0; j < pb.channels.size(); ++j) {
    const CycloNumber root = cat.ribbon_phase(-pb.exponents[j] / 2);
    if (root * root * pb.monodromy(cat, j) != CycloNumber(1L)) {
      throw std::logic_error("coboundary square root does not square to the inverse monodromy");
    }
    const CycloNumber rbar = pb.eigen[j] * root;
    // R-bar for (V, lambda) on the same channel uses the same scalar.
    if (!(rbar * rbar).is_one()) cb.involutive = false;
    if (!(rbar * conj(rbar)).is_one()) cb.unit_modulus = false;
    cb.rbar.push_back(rbar);
  }
  return cb;
}

std::vector<DualityRow> duality_report(const AlcoveCategory& cat, int n_max) {
  std::vector<DualityRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    auto tower = BraidTower::build(cat, n);
    DualityRow r;
    r.n = n;
    r.centralizer_dim = tower.centralizer_dimension();
    r.braid_image_dim = tower.braid_image_dimension();
    r.duality = r.centralizer_dim == r.braid_image_dim;
    const CycloNumber& a = tower.A();
    for (const CycloNumber& x : {a, -a.pow(-3)}) {
      const CycloMatrix shifted = tower.sigma(1) - CycloMatrix::identity(tower.dim()) * x;
      if (shifted.rank() < tower.dim()) r.eigenvalues.push_back(x.str());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<DualityRow> pair_duality(const AlcoveCategory& cat) {
  std::vector<DualityRow> rows;
  for (int v : cat.V()) {
    for (const auto& pb : pair_braiding(cat, v)) {
      if (pb.v != v) continue;
      DualityRow r;
      r.n = 2;
      const std::size_t m = pb.channels.size();
      r.centralizer_dim = static_cast<long>(m);
      EchelonSpan span(m);
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<CycloNumber> row;
        for (const auto& x : pb.eigen) row.push_back(x.pow(static_cast<long>(j)));
        span.insert(row);
      }
      r.braid_image_dim = static_cast<long>(span.size());
      r.duality = r.braid_image_dim == r.centralizer_dim;
      for (const auto& x : pb.eigen) r.eigenvalues.push_back(x.str());
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace qgcat
