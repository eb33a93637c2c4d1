#include "fsnet/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fsnet {

GridGraph make_grid(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("make_grid: dims must be non-empty");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("make_grid: every dimension must be >= 1");

  GridGraph g;
  g.axis_perm.resize(dims.size());
  std::iota(g.axis_perm.begin(), g.axis_perm.end(), 0);
  std::stable_sort(g.axis_perm.begin(), g.axis_perm.end(),
                   [&](int a, int b) { return dims[a] < dims[b]; });
  g.dims.reserve(dims.size());
  for (int a : g.axis_perm) g.dims.push_back(dims[a]);

  g.num_vertices = 1;
  for (int d : g.dims) g.num_vertices *= d;

  // mixed radix, component 0 fastest
  std::vector<int> stride(g.dims.size());
  int s = 1;
  for (size_t ax = 0; ax < g.dims.size(); ++ax) {
    stride[ax] = s;
    s *= g.dims[ax];
  }
  for (int v = 0; v < g.num_vertices; ++v) {
    int rem = v;
    for (size_t ax = 0; ax < g.dims.size(); ++ax) {
      int c = rem % g.dims[ax];
      rem /= g.dims[ax];
      if (c + 1 < g.dims[ax]) g.edges.emplace_back(v, v + stride[ax]);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

int vertex_index(const GridGraph& g, const Coord& v) {
  if (v.size() != g.dims.size())
    throw std::invalid_argument("vertex_index: coordinate has wrong dimension count");
  int idx = 0;
  for (size_t ax = g.dims.size(); ax-- > 0;) {
    if (v[ax] < 0 || v[ax] >= g.dims[ax])
      throw std::invalid_argument("vertex_index: coordinate out of bounds");
    idx = idx * g.dims[ax] + v[ax];
  }
  return idx;
}

Coord vertex_coord(const GridGraph& g, int index) {
  if (index < 0 || index >= g.num_vertices)
    throw std::invalid_argument("vertex_coord: index out of range");
  Coord v(g.dims.size());
  for (size_t ax = 0; ax < g.dims.size(); ++ax) {
    v[ax] = index % g.dims[ax];
    index /= g.dims[ax];
  }
  return v;
}

std::vector<Coord> neighbors(const GridGraph& g, const Coord& v) {
  vertex_index(g, v);  // bounds check
  std::vector<Coord> out;
  for (size_t ax = 0; ax < g.dims.size(); ++ax) {
    for (int step : {-1, +1}) {
      int c = v[ax] + step;
      if (c < 0 || c >= g.dims[ax]) continue;
      Coord w = v;
      w[ax] = c;
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<std::vector<int>> adjacency(const GridGraph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string term_name(TermKind k) {
  switch (k) {
    case TermKind::hop: return "hop";
    case TermKind::onsite_pair: return "onsite_pair";
    case TermKind::number_op: return "number_op";
  }
  throw std::invalid_argument("term_name: unknown term kind");
}

TermKind term_from_name(const std::string& s) {
  if (s == "hop") return TermKind::hop;
  if (s == "onsite_pair") return TermKind::onsite_pair;
  if (s == "number_op") return TermKind::number_op;
  throw std::invalid_argument("term_from_name: unknown term kind '" + s + "'");
}

static void check_model(const HubbardModel& m) {
  if (m.m < 1 || m.n < 1) throw std::invalid_argument("HubbardModel: M, N must be >= 1");
  if (m.m > m.n) throw std::invalid_argument("HubbardModel: M must not exceed N");
}

InteractionGraph interaction_graph(const HubbardModel& m) {
  check_model(m);
  InteractionGraph ig;
  if (!m.spin) {
    ig.graph = make_grid({m.m, m.n});
    ig.edges = ig.graph.edges;
    ig.edge_terms.assign(ig.edges.size(), TermKind::hop);
    ig.site_terms.resize(ig.graph.num_vertices);
    std::iota(ig.site_terms.begin(), ig.site_terms.end(), 0);
    return ig;
  }
  ig.graph = make_grid({2, m.m, m.n});
  // the spin axis is input axis 0; locate it after normalization
  int spin_axis = -1;
  for (size_t ax = 0; ax < ig.graph.axis_perm.size(); ++ax)
    if (ig.graph.axis_perm[ax] == 0) spin_axis = static_cast<int>(ax);
  ig.edges = ig.graph.edges;
  ig.edge_terms.reserve(ig.edges.size());
  for (auto [a, b] : ig.edges) {
    Coord ca = vertex_coord(ig.graph, a);
    Coord cb = vertex_coord(ig.graph, b);
    bool onsite = ca[spin_axis] != cb[spin_axis];
    ig.edge_terms.push_back(onsite ? TermKind::onsite_pair : TermKind::hop);
  }
  return ig;
}

InteractionGraph grid_interaction_graph(const GridGraph& g) {
  InteractionGraph ig;
  ig.graph = g;
  ig.edges = g.edges;
  ig.edge_terms.assign(ig.edges.size(), TermKind::hop);
  return ig;
}

InteractionGraph dense_interaction_graph(int n) {
  if (n < 2) throw std::invalid_argument("dense_interaction_graph: need n >= 2");
  InteractionGraph ig;
  ig.graph = make_grid({n});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) ig.edges.emplace_back(a, b);
  ig.edge_terms.assign(ig.edges.size(), TermKind::hop);
  return ig;
}

int degree_bound(const InteractionGraph& ig) {
  std::vector<int> deg(ig.graph.num_vertices, 0);
  int best = 0;
  for (auto [a, b] : ig.edges) {
    best = std::max(best, ++deg[a]);
    best = std::max(best, ++deg[b]);
  }
  return best;
}

static std::string coord_label(const Coord& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_dot(const GridGraph& g) {
  std::ostringstream os;
  os << "graph grid {\n";
  for (int v = 0; v < g.num_vertices; ++v)
    os << "  v" << v << " [label=\"" << coord_label(vertex_coord(g, v)) << "\"];\n";
  for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fsnet
