#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "normdepth/graph.hpp"

namespace normdepth {

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > kMaxVariables) {
    throw std::invalid_argument("vertex count must lie in 0.." +
                                std::to_string(kMaxVariables));
  }
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} leaves 1.." +
                                  std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adjacency_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adjacency_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::adjacent(int u, int v) const noexcept {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adjacency_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
}

Mask Graph::all_vertices() const noexcept {
  return n_ >= 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
}

std::optional<int> Graph::isolated_vertex() const noexcept {
  for (int v = 1; v <= n_; ++v) {
    if (adjacency_[static_cast<std::size_t>(v)] == 0) return v;
  }
  return std::nullopt;
}

MonomialIdeal edge_ideal(const Graph& graph) {
  if (auto v = graph.isolated_vertex()) {
    throw std::invalid_argument("edge ideal needs a graph without isolated "
                                "vertices; vertex " + std::to_string(*v) +
                                " is isolated");
  }
  std::vector<Monomial> gens;
  gens.reserve(graph.edge_count());
  for (auto [u, v] : graph.edges()) gens.push_back(Monomial::from_indices({u, v}));
  MonomialIdeal out = minimalize(gens);
  return out.is_zero() ? out : out.widened(graph.vertex_count());
}

Graph complement(const Graph& graph) {
  std::vector<Edge> edges;
  const int n = graph.vertex_count();
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!graph.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> edges = first.edges();
  const int offset = first.vertex_count();
  for (auto [u, v] : second.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + second.vertex_count(), edges);
}

Graph with_disjoint_edge(const Graph& graph) {
  return disjoint_union(graph, Graph(2, {{1, 2}}));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 1; u <= a; ++u) {
    for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph(a + b, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

ChordalityReport chordality(const Graph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  Mask unvisited = graph.all_vertices();
  while (unvisited != 0) {
    int best = 0;
    for (Mask b = unvisited; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b) + 1;
      if (best == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    visit.push_back(best);
    unvisited &= ~vertex_bit(best);
    for (Mask b = graph.neighbors(best) & unvisited; b != 0; b &= b - 1) {
      ++weight[static_cast<std::size_t>(std::countr_zero(b) + 1)];
    }
  }

  ChordalityReport report;
  report.elimination_order.assign(visit.rbegin(), visit.rend());
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < report.elimination_order.size(); ++i) {
    rank[static_cast<std::size_t>(report.elimination_order[i])] = static_cast<int>(i);
  }
  for (int v : report.elimination_order) {
    Mask later = 0;
    for (Mask b = graph.neighbors(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b) + 1;
      if (rank[static_cast<std::size_t>(u)] > rank[static_cast<std::size_t>(v)]) later |= vertex_bit(u);
    }
    if (later == 0) continue;
    int first = 0;
    for (Mask b = later; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b) + 1;
      if (first == 0 || rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(first)]) first = u;
    }
    const Mask others = later & ~vertex_bit(first);
    if ((others & ~graph.neighbors(first)) != 0) {
      report.chordal = false;
      report.elimination_order.clear();
      return report;
    }
  }
  report.chordal = true;
  return report;
}

std::vector<Mask> connected_components(const Graph& graph, Mask within) {
  within &= graph.all_vertices();
  std::vector<Mask> out;
  while (within != 0) {
    Mask reached = within & (~within + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask b = frontier; b != 0; b &= b - 1) {
        next |= graph.neighbors(std::countr_zero(b) + 1);
      }
      next &= within & ~reached;
      reached |= next;
      frontier = next;
    }
    out.push_back(reached);
    within &= ~reached;
  }
  return out;
}

std::vector<Mask> connected_components(const Graph& graph) {
  return connected_components(graph, graph.all_vertices());
}

bool is_connected(const Graph& graph) {
  return connected_components(graph).size() <= 1;
}

std::vector<int> cut_vertices(const Graph& graph) {
  if (!is_connected(graph)) {
    throw std::invalid_argument("cut vertices are defined for connected graphs");
  }
  const int n = graph.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> cut(static_cast<std::size_t>(n) + 1, false);
  int clock = 0;
  std::function<void(int, int)> visit = [&](int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++clock;
    int children = 0;
    for (Mask b = graph.neighbors(v); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b) + 1;
      if (disc[static_cast<std::size_t>(u)] == 0) {
        ++children;
        visit(u, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
        if (parent != 0 && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(v)]) {
          cut[static_cast<std::size_t>(v)] = true;
        }
      } else if (u != parent) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
      }
    }
    if (parent == 0 && children > 1) cut[static_cast<std::size_t>(v)] = true;
  };
  if (n > 0) visit(1, 0);
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

SimplicialComplex clique_complex(const Graph& graph) {
  // Bron-Kerbosch with pivoting over vertex masks.
  std::vector<Mask> cliques;
  std::function<void(Mask, Mask, Mask)> expand = [&](Mask r, Mask p, Mask x) {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    const Mask px = p | x;
    const int pivot = std::countr_zero(px) + 1;
    for (Mask b = p & ~graph.neighbors(pivot); b != 0; b &= b - 1) {
      const int v = std::countr_zero(b) + 1;
      const Mask nv = graph.neighbors(v);
      expand(r | vertex_bit(v), p & nv, x & nv);
      p &= ~vertex_bit(v);
      x |= vertex_bit(v);
    }
  };
  expand(0, graph.all_vertices(), 0);
  return SimplicialComplex(graph.vertex_count(), std::move(cliques));
}

}  // namespace normdepth
