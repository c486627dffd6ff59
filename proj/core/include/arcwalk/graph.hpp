#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arcwalk/types.hpp"

namespace arcwalk {

/// Directed view of an edge: each edge {x,y} contributes the two arcs
/// (x,y) and (y,x).
struct Arc {
  int origin = 0;
  int terminus = 0;

  friend bool operator==(const Arc&, const Arc&) = default;

  Arc reversed() const { return Arc{terminus, origin}; }
};

/// Simple finite undirected graph with a canonical arc ordering.
///
/// Edges are stored sorted by (min,max) endpoint; edge k contributes arc
/// 2k (low -> high) and arc 2k+1 (high -> low), so the inverse of arc i is
/// arc i^1. Vertices are dense 0-based ids and every vertex has degree >= 1.
class Graph {
 public:
  /// Path graph P_n on vertices 0..n-1 with edges {i, i+1}. Requires n >= 2.
  static Graph path(int n);

  /// Cycle graph C_n on vertices 0..n-1 with edges {i, (i+1) mod n}.
  /// Requires n >= 3 (simplicity).
  static Graph cycle(int n);

  /// Complete bipartite graph with parts {0..m-1} and {m..m+n-1}.
  /// Requires m, n >= 1.
  static Graph complete_bipartite(int m, int n);

  /// Builds a graph from (origin, terminus) pairs over dense 0-based vertex
  /// ids. Duplicate edges are merged; self-loops raise InvalidEdge; a vertex
  /// id in 0..max_id with no incident edge raises IsolatedVertex.
  static Graph from_edge_list(std::span<const std::pair<int, int>> pairs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int arc_count() const { return 2 * edge_count(); }

  int degree(int vertex) const { return degrees_[vertex]; }

  /// Canonical edges, sorted by (min,max) endpoint.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  Arc arc_at(int index) const {
    return Arc{arc_origin_[index], arc_terminus_[index]};
  }
  int origin_of(int arc) const { return arc_origin_[arc]; }
  int terminus_of(int arc) const { return arc_terminus_[arc]; }

  /// Canonical index of an arc; UnknownArc if (origin, terminus) is not an
  /// arc of this graph.
  int index_of(Arc a) const;
  bool has_arc(Arc a) const;

  /// inverse(a) swaps origin and terminus; with the canonical ordering that
  /// is an index XOR with 1.
  static int inverse(int arc_index) { return arc_index ^ 1; }

  /// Arcs whose terminus is `vertex` (size == degree(vertex)).
  std::span<const int> arcs_into(int vertex) const;

  /// Original vertex labels when the graph came from a labeled edge-list
  /// file; empty means labels coincide with the dense ids.
  const std::vector<long long>& vertex_labels() const { return labels_; }

  /// Short human-readable descriptor ("C_5", "K_{3,3}", "edges(|V|=7)").
  const std::string& name() const { return name_; }

 private:
  Graph(int vertex_count, std::vector<std::pair<int, int>> sorted_edges,
        std::string name, std::vector<long long> labels = {});

  friend Graph load_edge_list(const std::filesystem::path&);

  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degrees_;
  std::vector<int> arc_origin_;
  std::vector<int> arc_terminus_;
  // CSR over terminus: arcs_into(v) == in_arcs_[in_start_[v] .. in_start_[v+1])
  std::vector<int> in_start_;
  std::vector<int> in_arcs_;
  std::vector<long long> labels_;
  std::string name_;
};

/// Boundary matrix d (V x A): d(x,a) = 1/sqrt(deg x) iff x = t(a).
RealMatrix boundary_matrix(const Graph& g);

/// Shift matrix S (A x A): the involution swapping each arc with its inverse.
RealMatrix shift_matrix(const Graph& g);

/// Reads an edge-list file: one edge per line, two whitespace-separated
/// non-negative integer labels; '#' comments and blank lines ignored.
/// Labels are remapped to dense ids in sorted label order; the mapping is
/// recorded in Graph::vertex_labels().
Graph load_edge_list(const std::filesystem::path& path);

}  // namespace arcwalk
