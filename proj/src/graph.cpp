#include "preftriads/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "preftriads/rng.hpp"

namespace preftriads {

namespace {

inline std::uint64_t edge_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_edge_list(std::span<const Edge> edges,
                            IngestReport* report) {
  return from_edge_list(edges, 0, report);
}

Graph Graph::from_edge_list(std::span<const Edge> edges,
                            std::size_t min_node_count, IngestReport* report) {
  IngestReport local;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  std::size_t node_count = min_node_count;
  for (const Edge& e : edges) {
    node_count = std::max<std::size_t>(node_count, std::max(e.u, e.v) + 1u);
    if (e.u == e.v) {
      ++local.dropped_loops;
      continue;
    }
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(normalized.begin(), normalized.end());
  const auto last = std::unique(normalized.begin(), normalized.end());
  local.merged_duplicates =
      static_cast<std::uint64_t>(normalized.end() - last);
  normalized.erase(last, normalized.end());

  Graph g;
  g.adjacency_.resize(node_count);
  for (const Edge& e : normalized) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = normalized.size();
  if (report != nullptr) *report = local;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.push_back(Edge{u, v});
    }
  }
  return out;
}

std::vector<std::uint32_t> Graph::degree_sequence() const {
  std::vector<std::uint32_t> degrees;
  degrees.reserve(node_count());
  for (const auto& nbrs : adjacency_) {
    degrees.push_back(static_cast<std::uint32_t>(nbrs.size()));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::uint64_t Graph::wedge_count() const {
  std::uint64_t wedges = 0;
  for (const auto& nbrs : adjacency_) {
    const std::uint64_t d = nbrs.size();
    wedges += d * (d - 1) / 2;
  }
  return wedges;
}

void Graph::validate() const {
  std::size_t directed = 0;
  for (NodeId u = 0; u < node_count(); ++u) {
    const auto& nbrs = adjacency_[u];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId v = nbrs[i];
      if (v == u) throw Error("self-loop at node " + std::to_string(u));
      if (v >= node_count()) {
        throw Error("neighbor out of range at node " + std::to_string(u));
      }
      if (i > 0 && nbrs[i - 1] >= v) {
        throw Error("neighbor list of node " + std::to_string(u) +
                    " not strictly sorted");
      }
      if (!has_edge(v, u)) {
        throw Error("asymmetric edge " + std::to_string(u) + "-" +
                    std::to_string(v));
      }
    }
    directed += nbrs.size();
  }
  if (directed != 2 * edge_count_) {
    throw Error("edge count inconsistent with adjacency");
  }
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for_each_triangle(g, [&](NodeId, NodeId, NodeId) { ++count; });
  return count;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(
      g, [&](NodeId u, NodeId v, NodeId w) { out.push_back({u, v, w}); });
  return out;
}

double closed_triangle_fraction(const Graph& g) {
  const std::uint64_t wedges = g.wedge_count();
  if (wedges == 0) return 0.0;
  return 3.0 * static_cast<double>(triangle_count(g)) /
         static_cast<double>(wedges);
}

RewireResult rewire(const Graph& g, std::uint64_t successful_swaps,
                    std::uint64_t seed) {
  if (g.edge_count() < 2 && successful_swaps > 0) {
    throw InvalidArgumentError("rewiring needs at least 2 edges");
  }
  std::vector<Edge> edges = g.edges();
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));

  Rng rng(seed);
  RewireReport report;
  report.requested = successful_swaps;
  const std::uint64_t attempt_cap = 100 * successful_swaps;
  const auto edge_total = static_cast<std::uint64_t>(edges.size());

  while (report.achieved < successful_swaps) {
    if (report.attempts >= attempt_cap) {
      report.saturated = true;
      RewireResult partial{
          Graph::from_edge_list(edges, g.node_count(), nullptr), report};
      throw SaturationError(
          "rewiring saturated after " + std::to_string(report.attempts) +
          " attempts with " + std::to_string(report.achieved) + " of " +
          std::to_string(successful_swaps) + " swaps",
          std::move(partial));
    }
    ++report.attempts;

    const std::uint64_t e1 = rng.below(edge_total);
    const std::uint64_t e2 = rng.below(edge_total);
    if (e1 == e2) {
      ++report.rejected_same_edge;
      continue;
    }
    const NodeId a = edges[e1].u;
    const NodeId b = edges[e1].v;
    NodeId c = edges[e2].u;
    NodeId d = edges[e2].v;
    if (rng.coin()) std::swap(c, d);

    // propose (a,d) and (c,b)
    if (a == d || c == b) {
      ++report.rejected_loop;
      continue;
    }
    if (present.contains(edge_key(a, d)) || present.contains(edge_key(c, b))) {
      ++report.rejected_duplicate;
      continue;
    }
    present.erase(edge_key(a, b));
    present.erase(edge_key(c, d));
    present.insert(edge_key(a, d));
    present.insert(edge_key(c, b));
    edges[e1] = a < d ? Edge{a, d} : Edge{d, a};
    edges[e2] = c < b ? Edge{c, b} : Edge{b, c};
    ++report.achieved;
    assert(present.size() == edge_total);
  }

  RewireResult result{Graph::from_edge_list(edges, g.node_count(), nullptr),
                      report};
  assert(result.graph.degree_sequence() == g.degree_sequence());
  return result;
}

Graph read_edge_list(std::istream& in, IngestReport* report) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0 || u > UINT32_MAX ||
        v > UINT32_MAX) {
      throw Error("edge list line " + std::to_string(line_no) +
                  ": expected two non-negative integers, got '" + line + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw Error("edge list line " + std::to_string(line_no) +
                  ": trailing content '" + extra + "'");
    }
    edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  return Graph::from_edge_list(edges, report);
}

Graph load_edge_list(const std::filesystem::path& path, IngestReport* report) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open edge list '" + path.string() + "'");
  return read_edge_list(in, report);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write edge list '" + path.string() + "'");
  write_edge_list(g, out);
}

Graph gnp_random_graph(NodeId n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back(Edge{u, v});
    }
  }
  return Graph::from_edge_list(edges, n, nullptr);
}

}  // namespace preftriads
