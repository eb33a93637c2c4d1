#include "fsnet/isoperimetry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsnet {

LinearOrder make_order(const GridGraph& g, std::vector<int> seq) {
  if (static_cast<int>(seq.size()) != g.num_vertices)
    throw std::invalid_argument("make_order: sequence length must equal vertex count");
  LinearOrder r;
  r.rank.assign(g.num_vertices, -1);
  for (int pos = 0; pos < g.num_vertices; ++pos) {
    int v = seq[pos];
    if (v < 0 || v >= g.num_vertices || r.rank[v] != -1)
      throw std::invalid_argument("make_order: sequence is not a permutation of the vertices");
    r.rank[v] = pos;
  }
  r.seq = std::move(seq);
  return r;
}

LinearOrder order_from_coords(const GridGraph& g, const std::vector<Coord>& coords) {
  std::vector<int> seq;
  seq.reserve(coords.size());
  for (const Coord& c : coords) seq.push_back(vertex_index(g, c));
  return make_order(g, std::move(seq));
}

static int coord_sum(const Coord& c) { return std::accumulate(c.begin(), c.end(), 0); }

LinearOrder wang_wang_order(const GridGraph& g) {
  std::vector<int> seq(g.num_vertices);
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<Coord> coords(g.num_vertices);
  std::vector<int> sums(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) {
    coords[v] = vertex_coord(g, v);
    sums[v] = coord_sum(coords[v]);
  }
  std::sort(seq.begin(), seq.end(), [&](int a, int b) {
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return coords[a] > coords[b];  // ties: descending lexicographic
  });
  return make_order(g, std::move(seq));
}

static void check_set(const GridGraph& g, const std::vector<int>& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= g.num_vertices)
      throw std::invalid_argument("vertex set contains an index out of range");
    if (i && w[i] <= w[i - 1])
      throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  }
}

std::vector<int> vertex_boundary(const GridGraph& g, const std::vector<int>& w) {
  check_set(g, w);
  std::vector<char> in(g.num_vertices, 0), out(g.num_vertices, 0);
  for (int v : w) in[v] = 1;
  for (auto [a, b] : g.edges) {
    if (in[a] && !in[b]) out[b] = 1;
    if (in[b] && !in[a]) out[a] = 1;
  }
  std::vector<int> res;
  for (int v = 0; v < g.num_vertices; ++v)
    if (out[v]) res.push_back(v);
  return res;
}

std::vector<int> closure(const GridGraph& g, const std::vector<int>& w) {
  std::vector<int> b = vertex_boundary(g, w);
  std::vector<int> res;
  res.reserve(w.size() + b.size());
  std::merge(w.begin(), w.end(), b.begin(), b.end(), std::back_inserter(res));
  return res;
}

ShellPartition shells(const GridGraph& g) {
  ShellPartition p;
  std::vector<int> grown{0};  // root: the all-zeros vertex
  p.shells.push_back(grown);
  while (static_cast<int>(grown.size()) < g.num_vertices) {
    std::vector<int> next = vertex_boundary(g, grown);
    if (next.empty()) throw std::runtime_error("shells: graph is not connected");
    p.shells.push_back(next);
    std::vector<int> merged;
    merged.reserve(grown.size() + next.size());
    std::merge(grown.begin(), grown.end(), next.begin(), next.end(), std::back_inserter(merged));
    grown = std::move(merged);
  }
  return p;
}

std::vector<SigmaRow> sigma_rows(const GridGraph& g, int shell_index) {
  int max_shell = 0;
  for (int d : g.dims) max_shell += d - 1;
  if (shell_index < 0 || shell_index > max_shell)
    throw std::invalid_argument("sigma_rows: shell index out of range");

  std::vector<SigmaRow> rows;
  size_t n = g.dims.size();
  if (n == 1) {
    SigmaRow row;
    row.shell_index = shell_index;
    row.elements.push_back(vertex_index(g, {shell_index}));
    rows.push_back(std::move(row));
    return rows;
  }

  // enumerate row indices (components 2..n-1) in descending lexicographic order
  std::vector<int> x(n - 2);
  for (size_t i = 0; i < x.size(); ++i) x[i] = g.dims[i + 2] - 1;
  while (true) {
    int rest = std::accumulate(x.begin(), x.end(), 0);
    int k = shell_index - rest;
    int lo = std::max(0, k - (g.dims[1] - 1));
    int hi = std::min(k, g.dims[0] - 1);
    if (hi >= lo) {
      SigmaRow row;
      row.shell_index = shell_index;
      row.row_index = x;
      for (int a = hi; a >= lo; --a) {
        Coord c(n);
        c[0] = a;
        c[1] = k - a;
        for (size_t i = 0; i < x.size(); ++i) c[i + 2] = x[i];
        row.elements.push_back(vertex_index(g, c));
      }
      rows.push_back(std::move(row));
    }
    // next tuple downward
    size_t i = x.size();
    while (i > 0 && x[i - 1] == 0) x[--i] = g.dims[i + 2] - 1;
    if (i == 0) break;
    --x[i - 1];
  }
  return rows;
}

bool is_initial_segment_closed(const GridGraph& g, const LinearOrder& r) {
  if (static_cast<int>(r.seq.size()) != g.num_vertices)
    throw std::invalid_argument("is_initial_segment_closed: order does not match graph");
  std::vector<std::vector<int>> adj = adjacency(g);
  for (int k = 1; k <= g.num_vertices; ++k) {
    int cl_size = k;
    std::vector<char> in_cl(g.num_vertices, 0);
    for (int pos = 0; pos < k; ++pos) in_cl[r.seq[pos]] = 1;
    for (int pos = 0; pos < k; ++pos)
      for (int u : adj[r.seq[pos]])
        if (!in_cl[u]) {
          in_cl[u] = 1;
          ++cl_size;
        }
    for (int v = 0; v < g.num_vertices; ++v)
      if (in_cl[v] && r.rank[v] >= cl_size) return false;
  }
  return true;
}

static std::vector<uint32_t> neighbor_masks(const GridGraph& g) {
  std::vector<uint32_t> nbr(g.num_vertices, 0);
  for (auto [a, b] : g.edges) {
    nbr[a] |= uint32_t(1) << b;
    nbr[b] |= uint32_t(1) << a;
  }
  return nbr;
}

static void scan_masks(const std::vector<uint32_t>& nbr, uint32_t lo, uint32_t hi,
                       std::vector<int>& best) {
  for (uint32_t mask = lo; mask < hi; ++mask) {
    uint32_t rest = mask;
    uint32_t boundary = 0;
    while (rest) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      boundary |= nbr[v];
    }
    boundary &= ~mask;
    int k = __builtin_popcount(mask);
    int b = __builtin_popcount(boundary);
    if (b < best[k]) best[k] = b;
  }
}

std::vector<int> min_boundary_by_size_serial(const GridGraph& g) {
  if (g.num_vertices > 20)
    throw std::invalid_argument("min_boundary_by_size: vertex count exceeds the subset-scan limit");
  std::vector<uint32_t> nbr = neighbor_masks(g);
  std::vector<int> best(g.num_vertices + 1, g.num_vertices + 1);
  best[0] = 0;
  scan_masks(nbr, 1, uint32_t(1) << g.num_vertices, best);
  return best;
}

std::vector<int> min_boundary_by_size(const GridGraph& g) {
#ifdef _OPENMP
  if (g.num_vertices > 20)
    throw std::invalid_argument("min_boundary_by_size: vertex count exceeds the subset-scan limit");
  std::vector<uint32_t> nbr = neighbor_masks(g);
  std::vector<int> best(g.num_vertices + 1, g.num_vertices + 1);
  best[0] = 0;
  uint32_t total = uint32_t(1) << g.num_vertices;
#pragma omp parallel
  {
    std::vector<int> local(g.num_vertices + 1, g.num_vertices + 1);
    local[0] = 0;
#pragma omp for schedule(static)
    for (int64_t chunk = 0; chunk < 256; ++chunk) {
      uint32_t lo = static_cast<uint32_t>((int64_t(total) * chunk) / 256);
      uint32_t hi = static_cast<uint32_t>((int64_t(total) * (chunk + 1)) / 256);
      scan_masks(nbr, std::max<uint32_t>(lo, 1), hi, local);
    }
#pragma omp critical
    for (size_t k = 0; k < best.size(); ++k) best[k] = std::min(best[k], local[k]);
  }
  return best;
#else
  return min_boundary_by_size_serial(g);
#endif
}

IsoperimetryCheck verify_isoperimetric(const GridGraph& g, const LinearOrder& r, int size_limit) {
  if (g.num_vertices > size_limit)
    throw std::invalid_argument("verify_isoperimetric: vertex count exceeds size limit");
  if (static_cast<int>(r.seq.size()) != g.num_vertices)
    throw std::invalid_argument("verify_isoperimetric: order does not match graph");
  std::vector<int> best = min_boundary_by_size(g);
  std::vector<int> prefix;
  IsoperimetryCheck res;
  for (int k = 1; k <= g.num_vertices; ++k) {
    prefix.push_back(r.seq[k - 1]);
    std::sort(prefix.begin(), prefix.end());
    int b = static_cast<int>(vertex_boundary(g, prefix).size());
    if (b != best[k]) {
      res.ok = false;
      res.counterexample_k = k;
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace fsnet
