#include "fsnet/fermi.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fsnet {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

Eigen::MatrixXcd jw_ladder(int mode, int num_modes) {
  if (num_modes < 1 || num_modes > 10)
    throw std::invalid_argument("jw_ladder: mode count must be between 1 and 10");
  if (mode < 0 || mode >= num_modes) throw std::invalid_argument("jw_ladder: mode out of range");
  int dim = 1 << num_modes;
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  uint32_t below = (uint32_t{1} << mode) - 1;
  for (int s = 0; s < dim; ++s) {
    if (!(s >> mode & 1)) continue;
    double sign = (std::popcount(uint32_t(s) & below) & 1) ? -1.0 : 1.0;
    a(s ^ (1 << mode), s) = sign;
  }
  return a;
}

Eigen::MatrixXcd fswap_unitary() {
  MatrixXcd f = MatrixXcd::Zero(4, 4);
  f(0, 0) = 1;
  f(2, 1) = 1;
  f(1, 2) = 1;
  f(3, 3) = -1;
  return f;
}

Eigen::MatrixXcd hubbard_matrix(const HubbardModel& m, const LinearOrder& order) {
  InteractionGraph ig = interaction_graph(m);
  int n = ig.graph.num_vertices;
  if (n > 10) throw std::invalid_argument("hubbard_matrix: more than 10 modes");
  if (static_cast<int>(order.rank.size()) != n)
    throw std::invalid_argument("hubbard_matrix: order does not match the model");
  int dim = 1 << n;
  MatrixXcd h = MatrixXcd::Zero(dim, dim);
  for (int ei = 0; ei < static_cast<int>(ig.edges.size()); ++ei) {
    int p = order.rank[ig.edges[ei].first];
    int q = order.rank[ig.edges[ei].second];
    if (ig.edge_terms[ei] == TermKind::hop) {
      int lo = std::min(p, q), hi = std::max(p, q);
      uint32_t between = ((uint32_t{1} << hi) - 1) & ~((uint32_t{1} << (lo + 1)) - 1);
      for (int s = 0; s < dim; ++s) {
        if (!(s >> q & 1) || (s >> p & 1)) continue;
        int s2 = s ^ (1 << p) ^ (1 << q);
        double sign = (std::popcount(uint32_t(s) & between) & 1) ? -1.0 : 1.0;
        h(s2, s) += -m.t * sign;
        h(s, s2) += -m.t * sign;
      }
    } else {
      for (int s = 0; s < dim; ++s)
        if ((s >> p & 1) && (s >> q & 1)) h(s, s) += m.u;
    }
  }
  for (int v : ig.site_terms) {
    int p = order.rank[v];
    for (int s = 0; s < dim; ++s)
      if (s >> p & 1) h(s, s) += m.u;
  }
  return h;
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  MatrixXcd b = a.adjoint() * a;
  int dim = static_cast<int>(b.rows());
  double best = 0.0;
  for (int start = 0; start < 3; ++start) {
    VectorXcd v(dim);
    for (int i = 0; i < dim; ++i)
      v(i) = complex<double>(std::cos(0.7 * i + 0.3 + start), std::sin(1.3 * i + 0.7 * start));
    double nv = v.norm();
    if (nv == 0.0) continue;
    v /= nv;
    double lam = 0.0;
    bool converged = false;
    for (int it = 0; it < 5000; ++it) {
      VectorXcd w = b * v;
      double nw = w.norm();
      if (nw < 1e-300) return 0.0;
      v = w / nw;
      if (std::abs(nw - lam) <= 1e-10 * std::max(1.0, nw)) {
        lam = nw;
        converged = true;
        break;
      }
      lam = nw;
    }
    best = std::max(best, lam);
    if (converged) break;
  }
  return std::sqrt(best);
}

namespace {

std::vector<std::vector<int>> swap_layer_lists(const SwapNetwork& net) {
  int n = net.num_positions;
  std::vector<std::vector<int>> out;
  for (const Layer& l : net.layers) {
    if (l.kind != Layer::Kind::swap) continue;
    std::vector<char> used(n, 0);
    for (int p : l.at) {
      if (p < 0 || p + 1 >= n)
        throw std::runtime_error("mode_permutation_check: transposition out of range");
      if (used[p] || used[p + 1])
        throw std::runtime_error("mode_permutation_check: overlapping transpositions");
      used[p] = used[p + 1] = 1;
    }
    out.push_back(l.at);
  }
  return out;
}

}  // namespace

bool mode_permutation_check(const SwapNetwork& net) {
  int n = net.num_positions;
  if (n < 1 || n > 10)
    throw std::invalid_argument("mode_permutation_check: positions must be between 1 and 10");
  auto layers = swap_layer_lists(net);

  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  for (const auto& lay : layers)
    for (int p : lay) std::swap(line[p], line[p + 1]);
  std::vector<int> final_pos(n, 0);
  for (int p = 0; p < n; ++p) final_pos[line[p]] = p;

  int dim = 1 << n;
  for (int s = 0; s < dim; ++s) {
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    int sign = 1;
    for (const auto& lay : layers)
      for (int p : lay) {
        if ((s >> cur[p] & 1) && (s >> cur[p + 1] & 1)) sign = -sign;
        std::swap(cur[p], cur[p + 1]);
      }
    int inv = 1;
    for (int l = 0; l < n; ++l) {
      if (!(s >> l & 1)) continue;
      for (int l2 = l + 1; l2 < n; ++l2)
        if ((s >> l2 & 1) && final_pos[l] > final_pos[l2]) inv = -inv;
    }
    if (sign != inv) return false;
    for (int p = 0; p < n; ++p)
      if (cur[p] != line[p]) return false;
  }
  return true;
}

namespace {

struct BasisMap {
  std::vector<int> to;
  std::vector<int> sign;
};

BasisMap swap_layer_basis_map(const std::vector<int>& at, int n) {
  int dim = 1 << n;
  BasisMap bm;
  bm.to.resize(dim);
  bm.sign.assign(dim, 1);
  for (int s = 0; s < dim; ++s) {
    int s2 = s;
    int sg = 1;
    for (int p : at) {
      int ba = s2 >> p & 1, bb = s2 >> (p + 1) & 1;
      if (ba && bb) sg = -sg;
      if (ba != bb) s2 ^= (1 << p) | (1 << (p + 1));
    }
    bm.to[s] = s2;
    bm.sign[s] = sg;
  }
  return bm;
}

MatrixXcd trotter_propagator(const HubbardModel& m, const SwapNetwork& net, double delta) {
  int n = net.num_positions;
  int dim = 1 << n;
  MatrixXcd t = MatrixXcd::Identity(dim, dim);
  std::vector<int> pf(dim);
  std::iota(pf.begin(), pf.end(), 0);
  std::vector<int> psign(dim, 1);

  for (const Layer& l : net.layers) {
    if (l.kind == Layer::Kind::swap) {
      BasisMap bm = swap_layer_basis_map(l.at, n);
      MatrixXcd nt(dim, dim);
      for (int s = 0; s < dim; ++s) nt.row(bm.to[s]) = double(bm.sign[s]) * t.row(s);
      t = std::move(nt);
      for (int s = 0; s < dim; ++s) {
        psign[s] *= bm.sign[pf[s]];
        pf[s] = bm.to[pf[s]];
      }
      continue;
    }
    for (const InteractRecord& r : l.records) {
      if (r.term == TermKind::hop) {
        if (r.at < 0 || r.at + 1 >= n)
          throw std::runtime_error("trotter_error_check: record out of range");
        double th = m.t * delta;
        complex<double> c(std::cos(th), 0.0), is(0.0, std::sin(th));
        int ma = 1 << r.at, mb = 1 << (r.at + 1);
        for (int s = 0; s < dim; ++s) {
          if (!(s & ma) || (s & mb)) continue;
          int s2 = s ^ ma ^ mb;
          Eigen::RowVectorXcd ra = t.row(s), rb = t.row(s2);
          t.row(s) = c * ra + is * rb;
          t.row(s2) = is * ra + c * rb;
        }
      } else if (r.term == TermKind::onsite_pair) {
        complex<double> ph = std::exp(complex<double>(0.0, -delta * m.u));
        int ma = 1 << r.at, mb = 1 << (r.at + 1);
        for (int s = 0; s < dim; ++s)
          if ((s & ma) && (s & mb)) t.row(s) *= ph;
      } else {
        complex<double> ph = std::exp(complex<double>(0.0, -delta * m.u));
        int ma = 1 << r.at;
        for (int s = 0; s < dim; ++s)
          if (s & ma) t.row(s) *= ph;
      }
    }
  }

  MatrixXcd a(dim, dim);
  for (int s = 0; s < dim; ++s) a.row(s) = double(psign[s]) * t.row(pf[s]);
  return a;
}

MatrixXcd exact_propagator(const MatrixXcd& h, double delta) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const auto& vals = es.eigenvalues();
  const MatrixXcd& vecs = es.eigenvectors();
  VectorXcd phases(vals.size());
  for (int i = 0; i < vals.size(); ++i)
    phases(i) = std::exp(complex<double>(0.0, -delta * vals(i)));
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace

TrotterCheck trotter_error_check(const HubbardModel& m, const SwapNetwork& net, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("trotter_error_check: dt must be positive");
  InteractionGraph ig = interaction_graph(m);
  int n = ig.graph.num_vertices;
  if (n != net.num_positions)
    throw std::invalid_argument("trotter_error_check: network size does not match the model");
  if (n > 8) throw std::invalid_argument("trotter_error_check: more than 8 modes");
  LinearOrder order = order_from_coords(ig.graph, net.initial_order);
  MatrixXcd h = hubbard_matrix(m, order);

  auto err_at = [&](double delta) {
    return spectral_norm(trotter_propagator(m, net, delta) - exact_propagator(h, delta));
  };
  TrotterCheck tc;
  tc.err = err_at(dt);
  double e2 = err_at(dt / 2);
  tc.ratio = (e2 < 1e-15) ? 0.0 : tc.err / e2;
  return tc;
}

}  // namespace fsnet
