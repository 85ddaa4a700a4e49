#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "preftriads/error.hpp"

namespace preftriads {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct IngestReport {
  std::uint64_t dropped_loops = 0;
  std::uint64_t merged_duplicates = 0;
};

// Simple undirected graph: no self-loops, no parallel edges, sorted
// ascending neighbor lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Deduplicates repeated pairs and orientations, drops self-loops; counts
  // both in `report` when given. node_count = max id + 1.
  static Graph from_edge_list(std::span<const Edge> edges,
                              IngestReport* report = nullptr);

  // Same, but keeps at least `min_node_count` nodes so trailing isolated
  // nodes survive.
  static Graph from_edge_list(std::span<const Edge> edges,
                              std::size_t min_node_count,
                              IngestReport* report);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> neighbors(NodeId u) const {
    return adjacency_.at(u);
  }
  std::uint32_t degree(NodeId u) const {
    return static_cast<std::uint32_t>(adjacency_.at(u).size());
  }
  bool has_edge(NodeId u, NodeId v) const;

  std::vector<Edge> edges() const;  // u < v, sorted
  std::vector<std::uint32_t> degree_sequence() const;  // sorted ascending
  std::uint64_t wedge_count() const;  // paths of length 2 (connected triples)

  // Checks all representation invariants; throws Error on violation.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct Triangle {
  NodeId u;
  NodeId v;
  NodeId w;  // u < v < w

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Calls fn(u, v, w) exactly once per triangle, with u < v < w: for each edge
// (u, v) with u < v, intersect the two sorted neighbor lists above v.
template <typename Fn>
void for_each_triangle(const Graph& g, Fn&& fn) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (const NodeId v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      auto iu = nu.begin();
      auto iv = nv.begin();
      while (iu != nu.end() && *iu <= v) ++iu;
      while (iv != nv.end() && *iv <= v) ++iv;
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          fn(u, v, *iu);
          ++iu;
          ++iv;
        }
      }
    }
  }
}

std::uint64_t triangle_count(const Graph& g);
std::vector<Triangle> triangles(const Graph& g);

// Global clustering coefficient: 3 * triangles / wedges; 0 when there are no
// wedges.
double closed_triangle_fraction(const Graph& g);

struct RewireReport {
  std::uint64_t requested = 0;
  std::uint64_t achieved = 0;
  std::uint64_t attempts = 0;
  std::uint64_t rejected_loop = 0;
  std::uint64_t rejected_duplicate = 0;
  std::uint64_t rejected_same_edge = 0;
  bool saturated = false;
};

struct RewireResult {
  Graph graph;
  RewireReport report;
};

// Raised when the attempt cap is hit before reaching the requested number of
// successful swaps; carries whatever was achieved.
struct SaturationError : Error {
  SaturationError(const std::string& message, RewireResult result)
      : Error(message), partial(std::move(result)) {}
  RewireResult partial;
};

// Degree-preserving randomization by double edge swaps: draw two distinct
// edges (a,b),(c,d) uniformly, randomize the orientation of the second,
// propose (a,d),(c,b), reject proposals that would create a self-loop or a
// parallel edge. Runs until `successful_swaps` swaps were applied or the
// attempt cap of 100 * successful_swaps is hit (SaturationError). The degree
// of every node is unchanged.
RewireResult rewire(const Graph& g, std::uint64_t successful_swaps,
                    std::uint64_t seed);

// Edge-list text format: one "u v" pair of non-negative integers per line,
// blank lines and lines starting with '#' ignored.
Graph read_edge_list(std::istream& in, IngestReport* report = nullptr);
Graph load_edge_list(const std::filesystem::path& path,
                     IngestReport* report = nullptr);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

// Erdos-Renyi G(n, p) with deterministic seeding; demo/fixture generator.
Graph gnp_random_graph(NodeId n, double p, std::uint64_t seed);

}  // namespace preftriads
