#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutgroeb/monomial.hpp"

namespace cutgroeb {

/// Undirected edge {u, v} with 1-based endpoints, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..m with an ordered edge list.
/// Edge order matters: it fixes the row order of the cut configuration.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph complete_bipartite(int p, int q);
  static Graph cycle(int n);
  /// The 6-vertex, 7-edge theta graph (three 1-4 paths of lengths 3, 2, 2),
  /// labeled so its cut rows line up with the printed matrix.
  static Graph fig1();
  /// "c7", "k23", "k4", "fig1", and the generic forms "c<n>", "k<n>", "k<p><q>" for one-digit sizes.
  static Graph named(std::string_view id);

  int vertex_count() const { return m_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  /// Index of the edge in edges(), or -1.
  int edge_index(Edge e) const;
  int degree(int v) const;
  bool is_connected() const;

  /// Endpoints merged; loops and parallel edges dropped; vertices relabeled
  /// 1..m-1 keeping relative order, merged vertex takes the smaller label.
  Graph contract_edge(Edge e) const;
  Graph delete_edge(Edge e) const;
  Graph delete_vertex(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int m_;
  std::vector<Edge> edges_;
};

/// Canonical labeling by exhaustive search over vertex permutations that
/// respect a degree-based refinement. Intended for at most ~10 vertices.
std::vector<std::uint8_t> canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// H obtainable from G by deletions and contractions, up to isomorphism.
bool has_minor(const Graph& g, const Graph& h);
/// H obtainable from G by contractions only, up to isomorphism.
bool contraction_reachable(const Graph& g, const Graph& h);
/// G has a chordless cycle of length >= k.
bool has_long_induced_cycle(const Graph& g, int k);

}  // namespace cutgroeb
