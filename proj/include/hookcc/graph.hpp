#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hookcc {

using Vertex = std::uint64_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An undirected graph as a vertex count plus an ordered edge list.
/// Edge records are stored exactly as loaded or generated: duplicates and
/// self-loops are kept, and the order is significant (segmentation is
/// defined over stored edge positions).
struct Graph {
  Vertex n = 0;
  std::vector<Edge> edges;

  std::uint64_t m_stored() const { return edges.size(); }

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct GraphStats {
  Vertex n = 0;
  std::uint64_t m_stored = 0;
  // Unique undirected adjacencies, self-loops excluded.
  std::uint64_t m_unique = 0;
  double avg_degree = 0.0;  // 2 * m_unique / n
  std::uint64_t max_degree = 0;
};

/// Degree statistics over the deduplicated adjacency (self-loops excluded).
inline GraphStats compute_stats(const Graph& g) {
  GraphStats st;
  st.n = g.n;
  st.m_stored = g.edges.size();
  if (g.n == 0) return st;

  std::vector<std::pair<Vertex, Vertex>> adj;
  adj.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    adj.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(adj.begin(), adj.end());
  adj.erase(std::unique(adj.begin(), adj.end()), adj.end());

  st.m_unique = adj.size();
  st.avg_degree = g.n == 0 ? 0.0 : 2.0 * static_cast<double>(st.m_unique) /
                                       static_cast<double>(g.n);
  std::vector<std::uint64_t> degree(g.n, 0);
  for (const auto& [a, b] : adj) {
    ++degree[a];
    ++degree[b];
  }
  for (std::uint64_t d : degree) st.max_degree = std::max(st.max_degree, d);
  return st;
}

/// Deduplicated copy: self-loops dropped, endpoints canonicalized to u < v,
/// edges sorted. Used for stats cross-checks, not by the engines.
inline Graph normalize(const Graph& g) {
  Graph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    out.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  auto less = [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  };
  std::sort(out.edges.begin(), out.edges.end(), less);
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

inline void check_endpoints(const Graph& g) {
  for (const Edge& e : g.edges) {
    if (e.u >= g.n || e.v >= g.n)
      throw std::invalid_argument("edge endpoint out of range");
  }
}

}  // namespace hookcc
