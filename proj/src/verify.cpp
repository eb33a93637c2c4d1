#include "fsnet/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsnet {

namespace {

void apply_swap_layer(const Layer& l, int n, std::vector<int>& line) {
  std::vector<char> used(n, 0);
  for (int p : l.at) {
    if (p < 0 || p + 1 >= n)
      throw std::runtime_error("simulate: transposition index out of range");
    if (used[p] || used[p + 1])
      throw std::runtime_error("simulate: overlapping transpositions in one layer");
    used[p] = used[p + 1] = 1;
    std::swap(line[p], line[p + 1]);
  }
}

}  // namespace

std::vector<std::vector<Coord>> simulate(const SwapNetwork& net) {
  int n = net.num_positions;
  if (n < 1 || static_cast<int>(net.initial_order.size()) != n)
    throw std::runtime_error("simulate: initial order does not fill the line");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<std::vector<Coord>> trace;
  std::vector<Coord> line = net.initial_order;
  trace.push_back(line);
  for (const Layer& l : net.layers) {
    if (l.kind == Layer::Kind::swap) {
      apply_swap_layer(l, n, idx);
      std::vector<Coord> cur(n);
      for (int p = 0; p < n; ++p) cur[p] = net.initial_order[idx[p]];
      line = cur;
    }
    trace.push_back(line);
  }
  return trace;
}

CoverageReport coverage(const SwapNetwork& net, const InteractionGraph& ig) {
  const GridGraph& g = ig.graph;
  int n = g.num_vertices;
  if (net.num_positions != n)
    throw std::invalid_argument("coverage: network size does not match the interaction graph");
  if (static_cast<int>(net.initial_order.size()) != n)
    throw std::runtime_error("coverage: initial order does not fill the line");

  std::vector<int> line(n);
  std::vector<char> seen(n, 0);
  for (int p = 0; p < n; ++p) {
    int v = vertex_index(g, net.initial_order[p]);
    if (seen[v]) throw std::runtime_error("coverage: vertex repeated in the initial order");
    seen[v] = 1;
    line[p] = v;
  }

  std::map<std::pair<int, int>, int> edge_index;
  for (int ei = 0; ei < static_cast<int>(ig.edges.size()); ++ei) edge_index[ig.edges[ei]] = ei;
  std::vector<char> is_site(n, 0);
  for (int v : ig.site_terms) is_site[v] = 1;

  CoverageReport rep;
  rep.covered_layer.assign(ig.edges.size(), -1);
  std::vector<char> site_covered(n, 0);

  int layer_idx = 0;
  for (const Layer& l : net.layers) {
    if (l.kind == Layer::Kind::swap) {
      apply_swap_layer(l, n, line);
      ++rep.swap_depth;
    } else {
      std::vector<char> used(n, 0);
      for (const InteractRecord& r : l.records) {
        if (r.sites.size() == 2) {
          if (r.at < 0 || r.at + 1 >= n)
            throw std::runtime_error("coverage: record position out of range");
          if (used[r.at] || used[r.at + 1])
            throw std::runtime_error("coverage: records overlap within a layer");
          used[r.at] = used[r.at + 1] = 1;
          int u = line[r.at], v = line[r.at + 1];
          if (r.sites[0] != vertex_coord(g, u) || r.sites[1] != vertex_coord(g, v))
            throw std::runtime_error("coverage: record does not name the occupants");
          auto it = edge_index.find({std::min(u, v), std::max(u, v)});
          if (it == edge_index.end())
            throw std::runtime_error("coverage: interaction is not in the required set");
          if (r.term != ig.edge_terms[it->second])
            throw std::runtime_error("coverage: wrong term kind for an interaction");
          if (rep.covered_layer[it->second] < 0) rep.covered_layer[it->second] = layer_idx;
        } else if (r.sites.size() == 1) {
          if (r.at < 0 || r.at >= n)
            throw std::runtime_error("coverage: record position out of range");
          if (r.term != TermKind::number_op)
            throw std::runtime_error("coverage: a single-site record must be a number term");
          int v = line[r.at];
          if (r.sites[0] != vertex_coord(g, v))
            throw std::runtime_error("coverage: record does not name the occupant");
          if (!is_site[v])
            throw std::runtime_error("coverage: number term on a vertex without one");
          site_covered[v] = 1;
        } else {
          throw std::runtime_error("coverage: record must list one or two sites");
        }
      }
      ++rep.interaction_depth;
    }
    ++layer_idx;
  }

  for (int ei = 0; ei < static_cast<int>(ig.edges.size()); ++ei)
    if (rep.covered_layer[ei] < 0) rep.missing.push_back(ig.edges[ei]);
  for (int v : ig.site_terms)
    if (!site_covered[v]) rep.missing_sites.push_back(v);
  return rep;
}

OptimalityCheck check_against_bounds(const CoverageReport& rep, const BoundsReport& bounds) {
  OptimalityCheck oc;
  oc.swap_optimal = rep.swap_depth == bounds.swap_depth_lb;
  oc.interaction_optimal = rep.interaction_depth == bounds.interaction_depth_lb;
  return oc;
}

namespace {

struct SwapDepthSearch {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  uint64_t full_mask = 0;
  std::vector<std::vector<int>> moves;  // transposition sets, left indices

  explicit SwapDepthSearch(const InteractionGraph& ig, int size_limit) {
    n = ig.graph.num_vertices;
    if (n > size_limit || n > 7)
      throw std::invalid_argument("min_swap_depth: too many vertices for the exhaustive search");
    if (3 * n + static_cast<int>(ig.edges.size()) > 64)
      throw std::invalid_argument("min_swap_depth: state does not fit in 64 bits");
    edges = ig.edges;
    full_mask = (edges.empty() ? 0 : ((uint64_t{1} << edges.size()) - 1));

    int gaps = n - 1;
    for (uint32_t s = 1; s < (uint32_t{1} << gaps); ++s) {
      if (s & (s << 1)) continue;
      std::vector<int> mv;
      for (int p = 0; p < gaps; ++p)
        if (s >> p & 1) mv.push_back(p);
      moves.push_back(mv);
    }
  }

  uint64_t pack(const std::vector<int>& line, uint64_t mask) const {
    uint64_t st = mask << (3 * n);
    for (int p = 0; p < n; ++p) st |= uint64_t(line[p]) << (3 * p);
    return st;
  }
  void unpack_line(uint64_t st, std::vector<int>& line) const {
    for (int p = 0; p < n; ++p) line[p] = int(st >> (3 * p) & 7);
  }
  uint64_t mask_of(uint64_t st) const { return st >> (3 * n); }

  uint64_t adjacency_mask(const std::vector<int>& line) const {
    uint64_t m = 0;
    for (int p = 0; p + 1 < n; ++p) {
      int a = std::min(line[p], line[p + 1]), b = std::max(line[p], line[p + 1]);
      for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei)
        if (edges[ei].first == a && edges[ei].second == b) m |= uint64_t{1} << ei;
    }
    return m;
  }

  std::vector<uint64_t> seeds() const {
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i) line[i] = i;
    std::vector<uint64_t> out;
    do {
      out.push_back(pack(line, adjacency_mask(line)));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
  }

  uint64_t step(uint64_t st, const std::vector<int>& mv, std::vector<int>& scratch) const {
    unpack_line(st, scratch);
    for (int p : mv) std::swap(scratch[p], scratch[p + 1]);
    uint64_t mask = mask_of(st) | adjacency_mask(scratch);
    return pack(scratch, mask);
  }
};

}  // namespace

int min_swap_depth_exhaustive_serial(const InteractionGraph& ig, int size_limit) {
  SwapDepthSearch s(ig, size_limit);
  std::vector<uint64_t> level = s.seeds();
  std::unordered_set<uint64_t> visited(level.begin(), level.end());
  for (uint64_t st : level)
    if (s.mask_of(st) == s.full_mask) return 0;

  std::vector<int> scratch(s.n);
  for (int depth = 1;; ++depth) {
    std::vector<uint64_t> next;
    for (uint64_t st : level)
      for (const auto& mv : s.moves) {
        uint64_t ns = s.step(st, mv, scratch);
        if (!visited.insert(ns).second) continue;
        if (s.mask_of(ns) == s.full_mask) return depth;
        next.push_back(ns);
      }
    if (next.empty()) throw std::runtime_error("min_swap_depth: search exhausted");
    level.swap(next);
  }
}

int min_swap_depth_exhaustive(const InteractionGraph& ig, int size_limit) {
#ifndef _OPENMP
  return min_swap_depth_exhaustive_serial(ig, size_limit);
#else
  SwapDepthSearch s(ig, size_limit);
  std::vector<uint64_t> level = s.seeds();
  std::unordered_set<uint64_t> visited(level.begin(), level.end());
  for (uint64_t st : level)
    if (s.mask_of(st) == s.full_mask) return 0;

  for (int depth = 1;; ++depth) {
    std::vector<std::vector<uint64_t>> parts;
    bool found = false;
#pragma omp parallel
    {
      std::vector<uint64_t> local;
      std::vector<int> scratch(s.n);
      bool local_found = false;
#pragma omp for schedule(dynamic, 64) nowait
      for (long i = 0; i < static_cast<long>(level.size()); ++i)
        for (const auto& mv : s.moves) {
          uint64_t ns = s.step(level[i], mv, scratch);
          if (s.mask_of(ns) == s.full_mask) local_found = true;
          local.push_back(ns);
        }
#pragma omp critical
      {
        parts.push_back(std::move(local));
        if (local_found) found = true;
      }
    }
    if (found) return depth;
    std::vector<uint64_t> next;
    for (auto& part : parts)
      for (uint64_t ns : part)
        if (visited.insert(ns).second) next.push_back(ns);
    if (next.empty()) throw std::runtime_error("min_swap_depth: search exhausted");
    level.swap(next);
  }
#endif
}

}  // namespace fsnet
