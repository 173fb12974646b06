#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "hookcc/graph.hpp"

namespace hookcc {

/// G(n, m) with endpoints sampled uniformly with replacement. Deterministic
/// for a fixed seed.
inline Graph erdos_renyi(Vertex n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("erdos_renyi: zero vertices");
  Graph g;
  g.n = n;
  g.edges.reserve(m);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < m; ++i) {
    Vertex u = rng() % n;
    Vertex v = rng() % n;
    g.edges.push_back({u, v});
  }
  return g;
}

/// Recursive-quadrant (Kronecker-style) generator: n = 2^scale vertices,
/// edge_factor * n edges. Quadrant probabilities are applied un-perturbed at
/// every level; endpoint ids are not permuted.
inline Graph rmat(unsigned scale, std::uint64_t edge_factor, double a, double b,
                  double c, double d, std::uint64_t seed) {
  if (std::abs(a + b + c + d - 1.0) > 1e-9)
    throw std::invalid_argument("rmat: quadrant probabilities must sum to 1");
  Vertex n = Vertex{1} << scale;
  std::uint64_t m = edge_factor * n;
  Graph g;
  g.n = n;
  g.edges.reserve(m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t i = 0; i < m; ++i) {
    Vertex u = 0, v = 0;
    for (unsigned level = 0; level < scale; ++level) {
      double p = unit(rng);
      u <<= 1;
      v <<= 1;
      if (p < a) {
        // top-left
      } else if (p < a + b) {
        v |= 1;
      } else if (p < a + b + c) {
        u |= 1;
      } else {
        u |= 1;
        v |= 1;
      }
    }
    g.edges.push_back({u, v});
  }
  return g;
}

inline Graph rmat(unsigned scale, std::uint64_t edge_factor,
                  std::uint64_t seed) {
  return rmat(scale, edge_factor, 0.57, 0.19, 0.19, 0.05, seed);
}

/// 4-neighbor lattice with row-major vertex ids: all row edges first, then
/// all column edges.
inline Graph grid(Vertex rows, Vertex cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("grid: zero vertices");
  Graph g;
  g.n = rows * cols;
  g.edges.reserve(rows * (cols - 1) + (rows - 1) * cols);
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c + 1 < cols; ++c) {
      Vertex id = r * cols + c;
      g.edges.push_back({id, id + 1});
    }
  for (Vertex r = 0; r + 1 < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      Vertex id = r * cols + c;
      g.edges.push_back({id, id + cols});
    }
  return g;
}

}  // namespace hookcc
