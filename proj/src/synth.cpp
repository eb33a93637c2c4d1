#include "fsnet/synth.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace fsnet {

int swap_depth(const SwapNetwork& net) {
  int d = 0;
  for (const Layer& l : net.layers)
    if (l.kind == Layer::Kind::swap) ++d;
  return d;
}

int interaction_depth(const SwapNetwork& net) {
  int d = 0;
  for (const Layer& l : net.layers)
    if (l.kind == Layer::Kind::interact) ++d;
  return d;
}

namespace {

int coord_sum(const Coord& c) { return std::accumulate(c.begin(), c.end(), 0); }

// Rows used by the line construction.  In two dimensions these are the
// plain sigma rows (whole anti-diagonals).  Higher grids instead pair the
// first component with the last one, indexed by the middle components, so
// a row is short and a shifted row only ever crosses the few rows whose
// middle index differs, keeping the per-vertex travel small.
std::vector<SigmaRow> synth_rows(const GridGraph& g, int shell) {
  size_t n = g.dims.size();
  if (n <= 2) return sigma_rows(g, shell);
  int last = static_cast<int>(n) - 1;
  std::vector<SigmaRow> rows;
  std::vector<int> x(n - 2);
  for (size_t i = 0; i < x.size(); ++i) x[i] = g.dims[i + 1] - 1;
  while (true) {
    int rest = std::accumulate(x.begin(), x.end(), 0);
    int k = shell - rest;
    int lo = std::max(0, k - (g.dims[last] - 1));
    int hi = std::min(k, g.dims[0] - 1);
    if (hi >= lo) {
      SigmaRow row;
      row.shell_index = shell;
      row.row_index = x;
      for (int a = hi; a >= lo; --a) {
        Coord c(n);
        c[0] = a;
        c[last] = k - a;
        for (size_t i = 0; i < x.size(); ++i) c[i + 1] = x[i];
        row.elements.push_back(vertex_index(g, c));
      }
      rows.push_back(std::move(row));
    }
    size_t i = x.size();
    while (i > 0 && x[i - 1] == 0) x[--i] = g.dims[i + 1] - 1;
    if (i == 0) break;
    --x[i - 1];
  }
  return rows;
}

// all vertices of one coordinate-sum parity, in shell order, each shell
// flattened through its construction rows
std::vector<int> parity_line(const GridGraph& g, int parity) {
  int max_shell = 0;
  for (int d : g.dims) max_shell += d - 1;
  std::vector<int> out;
  for (int s = parity; s <= max_shell; s += 2)
    for (const SigmaRow& row : synth_rows(g, s))
      for (int v : row.elements) out.push_back(v);
  return out;
}

// neighbors of c in the same-index row of the shell below (dir -1) or
// above (dir +1); these differ from c by one step in a row-varying axis
std::vector<int> row_partners(const GridGraph& g, const Coord& c, int dir) {
  std::vector<int> out;
  size_t n = g.dims.size();
  std::vector<size_t> axes = n <= 2 ? (n == 1 ? std::vector<size_t>{0} : std::vector<size_t>{0, 1})
                                    : std::vector<size_t>{0, n - 1};
  for (size_t ax : axes) {
    Coord w = c;
    w[ax] += dir;
    if (w[ax] >= 0 && w[ax] < g.dims[ax]) out.push_back(vertex_index(g, w));
  }
  return out;
}

// Weave the odd-parity vertices into the even-parity skeleton.  Plain mode
// processes odd vertices in reverse and places each at the rightmost gap
// adjacent to its partners one shell down, keeping it left of everything
// placed so far.  Mirror mode runs forward with partners one shell up and
// leftmost placement, producing the arrangement the motion stage steers to.
std::vector<int> interleave_line(const GridGraph& g, bool mirror) {
  std::vector<int> line = parity_line(g, 0);
  std::vector<int> odds = parity_line(g, 1);
  if (!mirror) std::reverse(odds.begin(), odds.end());

  std::set<std::pair<int, int>> bonds;
  std::vector<char> placed(g.num_vertices, 0);
  auto bonded = [&](int a, int b) {
    return bonds.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  for (int e : odds) {
    std::vector<int> partners = row_partners(g, vertex_coord(g, e), mirror ? 1 : -1);
    int len = static_cast<int>(line.size());

    int lo_gap = 0, hi_gap = len;
    for (int i = 0; i < len; ++i) {
      if (!placed[line[i]]) continue;
      if (mirror)
        lo_gap = std::max(lo_gap, i + 1);
      else
        hi_gap = std::min(hi_gap, i);
    }
    auto gap_ok = [&](int gp) {
      if (gp < lo_gap || gp > hi_gap) return false;
      if (gp > 0 && gp < len && bonded(line[gp - 1], line[gp])) return false;
      return true;
    };
    auto pos_of = [&](int v) {
      return static_cast<int>(std::find(line.begin(), line.end(), v) - line.begin());
    };

    int chosen = -1;
    if (partners.size() == 2) {
      int i0 = pos_of(partners[0]), i1 = pos_of(partners[1]);
      if (std::abs(i0 - i1) != 1)
        throw std::runtime_error("interleave_line: partner pair not adjacent");
      int gp = std::max(i0, i1);
      if (gap_ok(gp)) chosen = gp;
    } else if (partners.size() == 1) {
      int i0 = pos_of(partners[0]);
      int first = mirror ? i0 : i0 + 1;
      int second = mirror ? i0 + 1 : i0;
      if (gap_ok(first))
        chosen = first;
      else if (gap_ok(second))
        chosen = second;
    } else {
      if (mirror) {
        // nothing to meet above: stay right of every even from the shells
        // below instead of drifting backwards
        int shell = coord_sum(vertex_coord(g, e));
        int evens_below = 0;
        for (int v : line)
          if (!placed[v] && coord_sum(vertex_coord(g, v)) < shell) ++evens_below;
        int seen = 0, floor_gap = 0;
        for (int i = 0; i < len && seen < evens_below; ++i)
          if (!placed[line[i]]) {
            ++seen;
            floor_gap = i + 1;
          }
        for (int gp = std::max(lo_gap, floor_gap); gp <= hi_gap && chosen < 0; ++gp)
          if (gap_ok(gp)) chosen = gp;
      } else {
        for (int gp = hi_gap; gp >= lo_gap && chosen < 0; --gp)
          if (gap_ok(gp)) chosen = gp;
      }
    }
    if (chosen < 0) throw std::runtime_error("interleave_line: no feasible gap");

    line.insert(line.begin() + chosen, e);
    placed[e] = 1;
    for (int p : partners) bonds.insert({std::min(e, p), std::max(e, p)});
  }
  return line;
}

struct Motion {
  std::vector<int> initial_line;
  std::vector<int> final_line;
  std::vector<std::vector<int>> swap_layers;  // left indices per layer
  std::vector<std::vector<int>> moments;      // arrangements, swap_layers.size()+1 entries
};

// Steer the initial arrangement to the mirrored one.  Odd vertices drift
// right past even ones; each still owes rem[v] passes.  A layer scans
// right to left and fires every odd/even adjacent pair it can.
Motion build_motion(const GridGraph& g) {
  Motion mo;
  mo.initial_line = interleave_line(g, false);
  mo.final_line = interleave_line(g, true);
  int n = g.num_vertices;

  std::vector<char> odd(n, 0);
  for (int v = 0; v < n; ++v) odd[v] = coord_sum(vertex_coord(g, v)) & 1;

  auto evens_before = [&](const std::vector<int>& line) {
    std::vector<int> cnt(n, 0);
    int c = 0;
    for (int v : line) {
      cnt[v] = c;
      if (!odd[v]) ++c;
    }
    return cnt;
  };
  std::vector<int> ei = evens_before(mo.initial_line);
  std::vector<int> ef = evens_before(mo.final_line);
  std::vector<int> rem(n, 0);
  for (int v = 0; v < n; ++v)
    if (odd[v]) {
      rem[v] = ef[v] - ei[v];
      if (rem[v] < 0) throw std::runtime_error("build_motion: negative pass count");
    }

  std::vector<int> line = mo.initial_line;
  mo.moments.push_back(line);
  auto more = [&] {
    for (int v = 0; v < n; ++v)
      if (odd[v] && rem[v] > 0) return true;
    return false;
  };
  while (more()) {
    std::vector<int> layer;
    std::vector<char> used(n, 0);
    for (int p = n - 2; p >= 0; --p) {
      if (used[p] || used[p + 1]) continue;
      int v = line[p], w = line[p + 1];
      if (odd[v] && rem[v] > 0 && !odd[w]) {
        std::swap(line[p], line[p + 1]);
        --rem[v];
        used[p] = used[p + 1] = 1;
        layer.push_back(p);
      }
    }
    if (layer.empty()) throw std::runtime_error("build_motion: stalled");
    std::reverse(layer.begin(), layer.end());
    mo.swap_layers.push_back(layer);
    mo.moments.push_back(line);
  }
  if (line != mo.final_line) throw std::runtime_error("build_motion: missed target");
  return mo;
}

std::vector<std::vector<int>> positions_by_moment(const Motion& mo, int n) {
  std::vector<std::vector<int>> pos;
  for (const auto& line : mo.moments) {
    std::vector<int> p(n, 0);
    for (int i = 0; i < n; ++i) p[line[i]] = i;
    pos.push_back(p);
  }
  return pos;
}

// per moment, a list of interaction layers, each a list of edge indices
using MomentSchedule = std::vector<std::vector<std::vector<int>>>;

int count_layers(const MomentSchedule& s) {
  int c = 0;
  for (const auto& m : s) c += static_cast<int>(m.size());
  return c;
}

// Group edges by direction class (axis and sign, seen from the odd
// endpoint) and give each class one layer at the earliest moment where
// all of its edges are adjacent at once.  Fails if a class has no such
// moment.
std::optional<MomentSchedule> schedule_class_common(const GridGraph& g,
                                                    const std::vector<std::pair<int, int>>& edges,
                                                    const std::vector<std::vector<int>>& pos) {
  int nm = static_cast<int>(pos.size());
  int nax = static_cast<int>(g.dims.size());
  std::vector<std::vector<int>> cls(2 * nax);
  for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
    Coord ca = vertex_coord(g, edges[ei].first);
    Coord cb = vertex_coord(g, edges[ei].second);
    bool a_odd = coord_sum(ca) & 1;
    const Coord& co = a_odd ? ca : cb;
    const Coord& ce = a_odd ? cb : ca;
    int axis = -1, sign = 0;
    for (int ax = 0; ax < nax; ++ax)
      if (co[ax] != ce[ax]) {
        axis = ax;
        sign = ce[ax] - co[ax];
      }
    if (axis < 0 || std::abs(sign) != 1)
      throw std::invalid_argument("schedule_class_common: edge is not a unit step");
    cls[axis * 2 + (sign > 0 ? 1 : 0)].push_back(ei);
  }
  MomentSchedule sched(nm);
  for (const auto& c : cls) {
    if (c.empty()) continue;
    int found = -1;
    for (int t = 0; t < nm && found < 0; ++t) {
      bool all = true;
      for (int ei : c)
        if (std::abs(pos[t][edges[ei].first] - pos[t][edges[ei].second]) != 1) {
          all = false;
          break;
        }
      if (all) found = t;
    }
    if (found < 0) return std::nullopt;
    sched[found].push_back(c);
  }
  return sched;
}

// At each moment interact every uncovered edge that is currently adjacent,
// packed into at most two layers: edges sharing a position alternate.
MomentSchedule schedule_greedy(const std::vector<std::pair<int, int>>& edges,
                               const std::vector<std::vector<int>>& pos,
                               std::vector<char>& covered) {
  int nm = static_cast<int>(pos.size());
  MomentSchedule sched(nm);
  for (int t = 0; t < nm; ++t) {
    std::vector<std::pair<int, int>> avail;  // (left position, edge index)
    for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
      if (covered[ei]) continue;
      int pa = pos[t][edges[ei].first], pb = pos[t][edges[ei].second];
      if (std::abs(pa - pb) == 1) avail.emplace_back(std::min(pa, pb), ei);
    }
    if (avail.empty()) continue;
    std::sort(avail.begin(), avail.end());
    std::vector<std::vector<int>> two(2);
    int prev_p = -2, prev_lay = 0;
    for (auto [p, ei] : avail) {
      int lay = (p == prev_p + 1) ? 1 - prev_lay : 0;
      two[lay].push_back(ei);
      prev_p = p;
      prev_lay = lay;
      covered[ei] = 1;
    }
    sched[t].push_back(two[0]);
    if (!two[1].empty()) sched[t].push_back(two[1]);
  }
  return sched;
}

SwapNetwork assemble(const GridGraph& g, const InteractionGraph& ig, const Motion& mo,
                     const MomentSchedule& sched) {
  SwapNetwork net;
  net.num_positions = g.num_vertices;
  for (int v : mo.initial_line) net.initial_order.push_back(vertex_coord(g, v));
  auto pos = positions_by_moment(mo, g.num_vertices);
  int sd = static_cast<int>(mo.swap_layers.size());
  bool sites_pending = !ig.site_terms.empty();

  auto site_records = [&](int t) {
    std::vector<InteractRecord> recs;
    for (int v : ig.site_terms) {
      InteractRecord r;
      r.at = pos[t][v];
      r.term = TermKind::number_op;
      r.sites = {vertex_coord(g, v)};
      recs.push_back(r);
    }
    std::sort(recs.begin(), recs.end(),
              [](const InteractRecord& a, const InteractRecord& b) { return a.at < b.at; });
    return recs;
  };

  for (int t = 0; t <= sd; ++t) {
    for (const auto& lay : sched[t]) {
      Layer L;
      L.kind = Layer::Kind::interact;
      std::vector<std::pair<int, int>> ordered;
      for (int ei : lay) {
        int pa = pos[t][ig.edges[ei].first], pb = pos[t][ig.edges[ei].second];
        ordered.emplace_back(std::min(pa, pb), ei);
      }
      std::sort(ordered.begin(), ordered.end());
      for (auto [p, ei] : ordered) {
        InteractRecord r;
        r.at = p;
        r.term = ig.edge_terms[ei];
        r.sites = {vertex_coord(g, mo.moments[t][p]), vertex_coord(g, mo.moments[t][p + 1])};
        L.records.push_back(r);
      }
      if (sites_pending) {
        for (InteractRecord& r : site_records(t)) L.records.push_back(r);
        sites_pending = false;
      }
      net.layers.push_back(L);
    }
    if (t < sd) {
      Layer L;
      L.kind = Layer::Kind::swap;
      L.at = mo.swap_layers[t];
      net.layers.push_back(L);
    }
  }
  if (sites_pending) {
    Layer L;
    L.kind = Layer::Kind::interact;
    L.records = site_records(0);
    net.layers.insert(net.layers.begin(), L);
  }
  return net;
}

SwapNetwork build_on_grid(const GridGraph& g, const InteractionGraph& ig, bool force_class) {
  Motion mo = build_motion(g);
  auto pos = positions_by_moment(mo, g.num_vertices);
  auto cls = schedule_class_common(g, ig.edges, pos);
  std::vector<char> covered(ig.edges.size(), 0);
  MomentSchedule greedy = schedule_greedy(ig.edges, pos, covered);
  for (char c : covered)
    if (!c) throw std::runtime_error("build_on_grid: an interaction never becomes adjacent");

  if (force_class) {
    if (!cls) throw std::runtime_error("build_on_grid: no common moment for a direction class");
    return assemble(g, ig, mo, *cls);
  }
  if (cls && count_layers(*cls) <= count_layers(greedy)) return assemble(g, ig, mo, *cls);
  return assemble(g, ig, mo, greedy);
}

}  // namespace

LinearOrder interleave_orders(const GridGraph& g) {
  return make_order(g, interleave_line(g, false));
}

SwapNetwork grid_network(const GridGraph& g) {
  return build_on_grid(g, grid_interaction_graph(g), false);
}

SwapNetwork hubbard_network(const HubbardModel& m) {
  InteractionGraph ig = interaction_graph(m);
  return build_on_grid(ig.graph, ig, m.spin);
}

std::vector<std::vector<std::pair<int, int>>> round_robin_matchings(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("round_robin_matchings: n must be even and at least 2");
  std::vector<std::vector<std::pair<int, int>>> rounds;
  int m = n - 1;
  for (int r = 0; r < m; ++r) {
    std::vector<std::pair<int, int>> mt;
    mt.emplace_back(n - 1, r);
    for (int i = 1; i <= (n - 2) / 2; ++i) mt.emplace_back((r + i) % m, (r - i + m) % m);
    rounds.push_back(mt);
  }
  return rounds;
}

SwapNetwork dense_network(int n, DenseMode mode) {
  if (n < 2) throw std::invalid_argument("dense_network: n must be at least 2");
  GridGraph g = make_grid({n});
  SwapNetwork net;
  net.num_positions = n;
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  for (int v : line) net.initial_order.push_back(vertex_coord(g, v));

  auto interact_at_parity = [&](int par) {
    Layer L;
    L.kind = Layer::Kind::interact;
    for (int p = par; p + 1 < n; p += 2) {
      InteractRecord r;
      r.at = p;
      r.term = TermKind::hop;
      r.sites = {vertex_coord(g, line[p]), vertex_coord(g, line[p + 1])};
      L.records.push_back(r);
    }
    if (!L.records.empty()) net.layers.push_back(L);
  };
  auto swap_at_parity = [&](int par) {
    Layer L;
    L.kind = Layer::Kind::swap;
    for (int p = par; p + 1 < n; p += 2) {
      L.at.push_back(p);
      std::swap(line[p], line[p + 1]);
    }
    if (!L.at.empty()) net.layers.push_back(L);
  };

  if (mode == DenseMode::swap_optimal) {
    interact_at_parity(1);
    for (int t = 0; t + 2 < n; ++t) {
      interact_at_parity(t % 2);
      swap_at_parity(t % 2);
    }
    interact_at_parity(n % 2);
    return net;
  }

  if (n % 2 != 0)
    throw std::invalid_argument("dense_network: interaction_optimal mode needs even n");
  for (const auto& matching : round_robin_matchings(n)) {
    std::vector<int> rank(n, 0);
    int q = 0;
    for (auto [a, b] : matching) {
      rank[a] = q++;
      rank[b] = q++;
    }
    for (int pass = 0; pass < n; ++pass) {
      Layer L;
      L.kind = Layer::Kind::swap;
      for (int p = pass % 2; p + 1 < n; p += 2)
        if (rank[line[p]] > rank[line[p + 1]]) {
          L.at.push_back(p);
          std::swap(line[p], line[p + 1]);
        }
      if (!L.at.empty()) net.layers.push_back(L);
    }
    Layer L;
    L.kind = Layer::Kind::interact;
    for (int p = 0; p + 1 < n; p += 2) {
      InteractRecord r;
      r.at = p;
      r.term = TermKind::hop;
      r.sites = {vertex_coord(g, line[p]), vertex_coord(g, line[p + 1])};
      L.records.push_back(r);
    }
    net.layers.push_back(L);
  }
  return net;
}

std::pair<InteractionGraph, SwapNetwork> triangular_network(int m, int n) {
  HubbardModel hm;
  hm.m = m;
  hm.n = n;
  hm.spin = false;
  InteractionGraph ig = interaction_graph(hm);
  const GridGraph& g = ig.graph;
  size_t num_grid_edges = g.edges.size();

  for (int v = 0; v < g.num_vertices; ++v) {
    Coord c = vertex_coord(g, v);
    for (int d0 : {1, -1}) {
      Coord w = c;
      w[0] += d0;
      w[1] += 1;
      if (w[0] < 0 || w[0] >= g.dims[0] || w[1] >= g.dims[1]) continue;
      int u = vertex_index(g, w);
      ig.edges.emplace_back(std::min(v, u), std::max(v, u));
      ig.edge_terms.push_back(TermKind::hop);
    }
  }

  Motion mo = build_motion(g);
  auto pos = positions_by_moment(mo, g.num_vertices);

  std::vector<std::pair<int, int>> grid_edges(ig.edges.begin(),
                                              ig.edges.begin() + num_grid_edges);
  auto cls = schedule_class_common(g, grid_edges, pos);
  std::vector<char> covered(grid_edges.size(), 0);
  MomentSchedule greedy = schedule_greedy(grid_edges, pos, covered);
  for (char c : covered)
    if (!c) throw std::runtime_error("triangular_network: a grid interaction never becomes adjacent");
  MomentSchedule base =
      (cls && count_layers(*cls) <= count_layers(greedy)) ? *cls : greedy;

  // best effort on the diagonals: take any that happen to pass through
  std::vector<char> diag_covered(ig.edges.size(), 1);
  std::fill(diag_covered.begin() + num_grid_edges, diag_covered.end(), 0);
  MomentSchedule extra = schedule_greedy(ig.edges, pos, diag_covered);
  for (size_t t = 0; t < base.size(); ++t)
    for (auto& lay : extra[t]) base[t].push_back(std::move(lay));

  SwapNetwork net = assemble(g, ig, mo, base);
  return {std::move(ig), std::move(net)};
}

}  // namespace fsnet
