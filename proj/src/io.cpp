#include "fsnet/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fsnet {

namespace {

using ojson = nlohmann::ordered_json;

ojson coords_json(const std::vector<Coord>& cs) {
  ojson a = ojson::array();
  for (const Coord& c : cs) a.push_back(c);
  return a;
}

std::string coord_str(const Coord& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

Coord coord_from_json(const ojson& j) {
  if (!j.is_array() || j.empty()) throw std::runtime_error("network parse: bad coordinate");
  Coord c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::runtime_error("network parse: bad coordinate");
    c.push_back(x.get<int>());
  }
  return c;
}

}  // namespace

std::string network_to_json(const SwapNetwork& net) {
  ojson j;
  j["version"] = 1;
  j["num_positions"] = net.num_positions;
  j["initial_order"] = coords_json(net.initial_order);
  ojson layers = ojson::array();
  for (const Layer& l : net.layers) {
    ojson lj;
    if (l.kind == Layer::Kind::swap) {
      lj["type"] = "swap";
      lj["at"] = l.at;
    } else {
      lj["type"] = "interact";
      ojson pairs = ojson::array();
      for (const InteractRecord& r : l.records) {
        ojson rj;
        rj["at"] = r.at;
        rj["term"] = term_name(r.term);
        rj["sites"] = coords_json(r.sites);
        pairs.push_back(std::move(rj));
      }
      lj["pairs"] = std::move(pairs);
    }
    layers.push_back(std::move(lj));
  }
  j["layers"] = std::move(layers);
  return j.dump() + "\n";
}

SwapNetwork network_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("network parse: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("network parse: top level is not an object");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw std::runtime_error("network parse: unsupported version");
  if (!j.contains("num_positions") || !j["num_positions"].is_number_integer())
    throw std::runtime_error("network parse: missing num_positions");
  SwapNetwork net;
  net.num_positions = j["num_positions"].get<int>();
  if (net.num_positions < 1) throw std::runtime_error("network parse: num_positions must be positive");
  if (!j.contains("initial_order") || !j["initial_order"].is_array())
    throw std::runtime_error("network parse: missing initial_order");
  for (const auto& c : j["initial_order"]) net.initial_order.push_back(coord_from_json(c));
  if (!j.contains("layers") || !j["layers"].is_array())
    throw std::runtime_error("network parse: missing layers");
  for (const auto& lj : j["layers"]) {
    if (!lj.is_object() || !lj.contains("type") || !lj["type"].is_string())
      throw std::runtime_error("network parse: bad layer");
    Layer l;
    std::string type = lj["type"].get<std::string>();
    if (type == "swap") {
      l.kind = Layer::Kind::swap;
      if (!lj.contains("at") || !lj["at"].is_array())
        throw std::runtime_error("network parse: swap layer without at");
      for (const auto& x : lj["at"]) {
        if (!x.is_number_integer()) throw std::runtime_error("network parse: bad swap index");
        l.at.push_back(x.get<int>());
      }
    } else if (type == "interact") {
      l.kind = Layer::Kind::interact;
      if (!lj.contains("pairs") || !lj["pairs"].is_array())
        throw std::runtime_error("network parse: interact layer without pairs");
      for (const auto& rj : lj["pairs"]) {
        if (!rj.is_object() || !rj.contains("at") || !rj["at"].is_number_integer() ||
            !rj.contains("term") || !rj["term"].is_string() || !rj.contains("sites") ||
            !rj["sites"].is_array())
          throw std::runtime_error("network parse: bad interact record");
        InteractRecord r;
        r.at = rj["at"].get<int>();
        try {
          r.term = term_from_name(rj["term"].get<std::string>());
        } catch (const std::invalid_argument& e) {
          throw std::runtime_error(std::string("network parse: ") + e.what());
        }
        for (const auto& c : rj["sites"]) r.sites.push_back(coord_from_json(c));
        if (r.sites.empty() || r.sites.size() > 2)
          throw std::runtime_error("network parse: record must list one or two sites");
        l.records.push_back(std::move(r));
      }
    } else {
      throw std::runtime_error("network parse: unknown layer type " + type);
    }
    net.layers.push_back(std::move(l));
  }
  return net;
}

std::string network_to_text(const SwapNetwork& net) {
  std::ostringstream os;
  for (const Layer& l : net.layers) {
    if (l.kind == Layer::Kind::swap) {
      os << "swap at";
      for (int p : l.at) os << " " << p;
    } else {
      os << "interact ";
      for (size_t i = 0; i < l.records.size(); ++i) {
        const InteractRecord& r = l.records[i];
        if (i) os << "; ";
        os << term_name(r.term) << " " << coord_str(r.sites[0]);
        if (r.sites.size() == 2) os << "-" << coord_str(r.sites[1]);
        os << " at " << r.at;
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string network_to_dot(const SwapNetwork& net, const InteractionGraph& ig) {
  CoverageReport rep = coverage(net, ig);
  std::ostringstream os;
  os << "graph network {\n";
  for (int v = 0; v < ig.graph.num_vertices; ++v)
    os << "  v" << v << " [label=\"" << coord_str(vertex_coord(ig.graph, v)) << "\"];\n";
  for (size_t ei = 0; ei < ig.edges.size(); ++ei) {
    os << "  v" << ig.edges[ei].first << " -- v" << ig.edges[ei].second;
    if (rep.covered_layer[ei] >= 0)
      os << " [label=\"L" << rep.covered_layer[ei] << "\"];\n";
    else
      os << " [color=red label=\"missing\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string bounds_to_json(const BoundsReport& rep) {
  ojson j;
  if (rep.bandwidth)
    j["bandwidth"] = *rep.bandwidth;
  else
    j["bandwidth"] = nullptr;
  if (rep.two_bandwidth)
    j["two_bandwidth"] = *rep.two_bandwidth;
  else
    j["two_bandwidth"] = nullptr;
  j["swap_depth_lb"] = rep.swap_depth_lb;
  j["interaction_depth_lb"] = rep.interaction_depth_lb;
  ojson prof = ojson::array();
  for (const auto& row : rep.profile) prof.push_back({row[0], row[1], row[2]});
  j["profile"] = std::move(prof);
  j["method"] = rep.method;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j.dump() + "\n";
}

std::string coverage_to_json(const CoverageReport& rep, const InteractionGraph& ig) {
  ojson j;
  ojson covered = ojson::array();
  for (size_t ei = 0; ei < ig.edges.size(); ++ei) {
    if (rep.covered_layer[ei] < 0) continue;
    ojson e;
    e["edge"] = coords_json({vertex_coord(ig.graph, ig.edges[ei].first),
                             vertex_coord(ig.graph, ig.edges[ei].second)});
    e["term"] = term_name(ig.edge_terms[ei]);
    e["layer"] = rep.covered_layer[ei];
    covered.push_back(std::move(e));
  }
  j["covered"] = std::move(covered);
  ojson missing = ojson::array();
  for (const auto& [a, b] : rep.missing)
    missing.push_back(coords_json({vertex_coord(ig.graph, a), vertex_coord(ig.graph, b)}));
  j["missing"] = std::move(missing);
  ojson ms = ojson::array();
  for (int v : rep.missing_sites) ms.push_back(ojson(vertex_coord(ig.graph, v)));
  j["missing_sites"] = std::move(ms);
  j["swap_depth"] = rep.swap_depth;
  j["interaction_depth"] = rep.interaction_depth;
  j["complete"] = rep.complete();
  return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace fsnet
