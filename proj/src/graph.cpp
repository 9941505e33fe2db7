#include "cutgroeb/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace cutgroeb {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : m_(vertex_count) {
  if (vertex_count < 1) throw Error("graph needs at least one vertex");
  std::set<Edge> seen;
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > m_) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("loops are not allowed");
    if (!seen.insert(e).second) throw Error("duplicate edge");
    edges_.push_back(e);
  }
}

Graph Graph::complete(int n) {
  if (n < 1) throw Error("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph Graph::complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw Error("complete bipartite graph needs p, q >= 1");
  std::vector<Edge> es;
  for (int u = 1; u <= p; ++u)
    for (int v = p + 1; v <= p + q; ++v) es.push_back({u, v});
  return Graph(p + q, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw Error("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int u = 1; u < n; ++u) es.push_back({u, u + 1});
  es.push_back({1, n});
  return Graph(n, std::move(es));
}

Graph Graph::fig1() {
  // Induced 5-cycle 1-2-3-4-5; vertex 6 joins 1 and 4. Contracting {2,3} gives K_{2,3}.
  return Graph(6, {{1, 5}, {4, 5}, {1, 6}, {4, 6}, {1, 2}, {2, 3}, {3, 4}});
}

Graph Graph::named(std::string_view id) {
  if (id == "fig1") return fig1();
  auto digits = [&](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view rest = id.substr(std::min<std::size_t>(1, id.size()));
  if (id.size() >= 2 && id[0] == 'c' && digits(rest)) return cycle(std::stoi(std::string(rest)));
  if (id.size() == 3 && id[0] == 'k' && digits(rest)) return complete_bipartite(rest[0] - '0', rest[1] - '0');
  if (id.size() == 2 && id[0] == 'k' && digits(rest)) return complete(rest[0] - '0');
  throw Error("unknown graph id '" + std::string(id) + "'");
}

bool Graph::has_edge(int u, int v) const { return edge_index({std::min(u, v), std::max(u, v)}) >= 0; }

int Graph::edge_index(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto it = std::find(edges_.begin(), edges_.end(), e);
  return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
}

int Graph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.u == v || e.v == v; }));
}

bool Graph::is_connected() const {
  std::vector<int> parent(m_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int components = m_;
  for (const Edge& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph Graph::contract_edge(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (edge_index(e) < 0) throw Error("contract_edge: edge not in graph");
  if (m_ < 2) throw Error("contract_edge: graph too small");
  auto relabel = [&](int x) {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> es;
  std::set<Edge> seen;
  for (const Edge& f : edges_) {
    Edge g{relabel(f.u), relabel(f.v)};
    if (g.u == g.v) continue;
    if (g.u > g.v) std::swap(g.u, g.v);
    if (seen.insert(g).second) es.push_back(g);
  }
  return Graph(m_ - 1, std::move(es));
}

Graph Graph::delete_edge(Edge e) const {
  int idx = edge_index(e);
  if (idx < 0) throw Error("delete_edge: edge not in graph");
  std::vector<Edge> es = edges_;
  es.erase(es.begin() + idx);
  return Graph(m_, std::move(es));
}

Graph Graph::delete_vertex(int v) const {
  if (v < 1 || v > m_ || m_ < 2) throw Error("delete_vertex: bad vertex");
  std::vector<Edge> es;
  for (const Edge& f : edges_) {
    if (f.u == v || f.v == v) continue;
    es.push_back({f.u > v ? f.u - 1 : f.u, f.v > v ? f.v - 1 : f.v});
  }
  return Graph(m_ - 1, std::move(es));
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
  const int m = g.vertex_count();
  if (m > 11) throw Error("canonical_form: graph too large for exhaustive labeling");
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  std::vector<int> deg(m, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1][e.v - 1] = adj[e.v - 1][e.u - 1] = true;
    ++deg[e.u - 1];
    ++deg[e.v - 1];
  }
  // Invariant per vertex: degree, then sorted neighbor degrees.
  std::vector<std::vector<int>> inv(m);
  for (int v = 0; v < m; ++v) {
    inv[v].push_back(deg[v]);
    std::vector<int> nd;
    for (int w = 0; w < m; ++w)
      if (adj[v][w]) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });

  // Class boundaries in `order`; permutations are only taken within a class.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && inv[order[j]] == inv[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> header;
  for (int v : order) header.insert(header.end(), inv[v].begin(), inv[v].end()), header.push_back(255);

  std::vector<std::uint8_t> best;
  std::vector<int> perm = order;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      std::vector<std::uint8_t> code;
      code.reserve(m * (m - 1) / 2);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) code.push_back(adj[perm[i]][perm[j]] ? 1 : 0);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(c + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);

  std::vector<std::uint8_t> out;
  out.reserve(1 + header.size() + best.size());
  out.push_back(static_cast<std::uint8_t>(m));
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

namespace {

// Depth-first search over graphs reachable by the allowed moves, deduplicated
// by canonical form.
bool reachable(const Graph& g, const Graph& h, bool allow_deletions) {
  const int hv = h.vertex_count(), he = h.edge_count();
  const auto target = canonical_form(h);
  std::set<std::vector<std::uint8_t>> visited;
  std::vector<Graph> stack{g};
  while (!stack.empty()) {
    Graph cur = std::move(stack.back());
    stack.pop_back();
    if (cur.vertex_count() < hv || cur.edge_count() < he) continue;
    auto code = canonical_form(cur);
    if (!visited.insert(code).second) continue;
    if (code == target) return true;
    if (cur.vertex_count() > hv) {
      for (const Edge& e : cur.edges()) stack.push_back(cur.contract_edge(e));
      if (allow_deletions)
        for (int v = 1; v <= cur.vertex_count(); ++v) stack.push_back(cur.delete_vertex(v));
    }
    if (allow_deletions && cur.edge_count() > he)
      for (const Edge& e : cur.edges()) stack.push_back(cur.delete_edge(e));
  }
  return false;
}

}  // namespace

bool has_minor(const Graph& g, const Graph& h) { return reachable(g, h, true); }

bool contraction_reachable(const Graph& g, const Graph& h) { return reachable(g, h, false); }

bool has_long_induced_cycle(const Graph& g, int k) {
  if (k < 3) throw Error("has_long_induced_cycle: k must be >= 3");
  const int m = g.vertex_count();
  if (m > 24) throw Error("has_long_induced_cycle: graph too large");
  std::vector<std::uint32_t> nbr(m, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u - 1] |= 1u << (e.v - 1);
    nbr[e.v - 1] |= 1u << (e.u - 1);
  }
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    if (std::popcount(s) < k) continue;
    bool two_regular = true;
    for (int v = 0; v < m && two_regular; ++v)
      if ((s >> v & 1) && std::popcount(nbr[v] & s) != 2) two_regular = false;
    if (!two_regular) continue;
    // 2-regular and connected means a single chordless cycle.
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < m; ++v)
        if (frontier >> v & 1) next |= nbr[v] & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

}  // namespace cutgroeb
