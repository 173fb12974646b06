#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hookcc/engines.hpp"
#include "hookcc/graph.hpp"

// Sequential reference implementations. Deliberately plain: these are the
// ground truth the parallel engines are checked against.

namespace hookcc {

class DisjointSet {
 public:
  explicit DisjointSet(Vertex n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];  // path halving
      v = parent_[v];
    }
    return v;
  }

  void unite(Vertex a, Vertex b) {
    Vertex ra = find(a);
    Vertex rb = find(b);
    if (ra == rb) return;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
};

/// Union-find labeling with min-canonical relabeling: label(v) is the
/// smallest vertex index in v's component.
inline ComponentLabeling oracle_cc(const Graph& g) {
  DisjointSet dsu(g.n);
  for (const Edge& e : g.edges) dsu.unite(e.u, e.v);

  std::vector<Vertex> min_of_root(g.n);
  for (Vertex v = 0; v < g.n; ++v) min_of_root[v] = v;
  for (Vertex v = 0; v < g.n; ++v) {
    Vertex r = dsu.find(v);
    if (v < min_of_root[r]) min_of_root[r] = v;
  }
  ComponentLabeling out;
  out.label.resize(g.n);
  for (Vertex v = 0; v < g.n; ++v) out.label[v] = min_of_root[dsu.find(v)];
  out.canonical = true;
  return out;
}

/// Independent second oracle: BFS from each unvisited vertex in ascending
/// order, labeling with the BFS source. Sources are component minima, so the
/// output matches oracle_cc exactly.
inline ComponentLabeling bfs_cc(const Graph& g) {
  std::vector<std::uint64_t> head(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    if (e.u != e.v) {
      ++head[e.u + 1];
      ++head[e.v + 1];
    }
  }
  for (Vertex v = 0; v < g.n; ++v) head[v + 1] += head[v];
  std::vector<Vertex> adj(head[g.n]);
  std::vector<std::uint64_t> cursor(head.begin(), head.end() - 1);
  for (const Edge& e : g.edges) {
    if (e.u != e.v) {
      adj[cursor[e.u]++] = e.v;
      adj[cursor[e.v]++] = e.u;
    }
  }

  ComponentLabeling out;
  out.label.assign(g.n, 0);
  std::vector<bool> visited(g.n, false);
  std::vector<Vertex> queue;
  for (Vertex src = 0; src < g.n; ++src) {
    if (visited[src]) continue;
    visited[src] = true;
    out.label[src] = src;
    queue.assign(1, src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      for (std::uint64_t i = head[v]; i < head[v + 1]; ++i) {
        Vertex w = adj[i];
        if (!visited[w]) {
          visited[w] = true;
          out.label[w] = src;
          queue.push_back(w);
        }
      }
    }
  }
  out.canonical = true;
  return out;
}

/// Partition equality irrespective of label names: checks that the two
/// labelings induce the same equivalence classes via a mutual bijection.
inline bool partitions_equal(const ComponentLabeling& a,
                             const ComponentLabeling& b) {
  if (a.label.size() != b.label.size())
    throw std::invalid_argument("partitions_equal: length mismatch");
  std::map<Vertex, Vertex> a_to_b, b_to_a;
  for (Vertex v = 0; v < a.label.size(); ++v) {
    Vertex la = a.label[v];
    Vertex lb = b.label[v];
    auto [ia, inserted_a] = a_to_b.emplace(la, lb);
    if (!inserted_a && ia->second != lb) return false;
    auto [ib, inserted_b] = b_to_a.emplace(lb, la);
    if (!inserted_b && ib->second != la) return false;
  }
  return true;
}

inline std::map<Vertex, std::uint64_t> component_histogram(
    const ComponentLabeling& labeling) {
  std::map<Vertex, std::uint64_t> hist;
  for (Vertex label : labeling.label) ++hist[label];
  return hist;
}

}  // namespace hookcc
