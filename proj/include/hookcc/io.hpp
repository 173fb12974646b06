#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookcc/graph.hpp"

namespace hookcc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

/// Plain edge-list text: one `u v` pair per line, 0-indexed, `#` comments.
/// With `expect_header` the first non-comment line is `n m` and endpoints
/// are validated against n; otherwise n = 1 + max endpoint.
inline Graph parse_edge_list(std::istream& in, bool expect_header = false) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  bool have_n = false;
  Vertex max_endpoint = 0;
  bool any_edge = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b)) throw ParseError(lineno, "expected two fields");

    std::uint64_t x, y;
    if (!detail::parse_u64(a, x) || !detail::parse_u64(b, y))
      throw ParseError(lineno, "malformed integer token");

    if (expect_header && !header_seen) {
      header_seen = true;
      g.n = x;
      have_n = true;
      g.edges.reserve(y);
      continue;
    }
    if (have_n && (x >= g.n || y >= g.n))
      throw ParseError(lineno, "endpoint exceeds declared vertex count");
    g.edges.push_back({x, y});
    max_endpoint = std::max({max_endpoint, x, y});
    any_edge = true;
  }
  if (!have_n) g.n = any_edge ? max_endpoint + 1 : 0;
  return g;
}

/// DIMACS-9 shortest-path format: `c` comments, one `p sp <n> <m>` line,
/// `a <u> <v> <w>` arcs with 1-indexed endpoints. Weights are discarded.
inline Graph parse_dimacs(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  bool problem_seen = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (problem_seen) throw ParseError(lineno, "duplicate problem line");
      std::string kind;
      std::uint64_t n, m;
      if (!(ls >> kind >> n >> m) || kind != "sp")
        throw ParseError(lineno, "expected `p sp <n> <m>`");
      g.n = n;
      g.edges.reserve(m);
      problem_seen = true;
    } else if (tag == "a") {
      if (!problem_seen) throw ParseError(lineno, "arc before problem line");
      std::uint64_t u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed arc line");
      if (u < 1 || u > g.n || v < 1 || v > g.n)
        throw ParseError(lineno, "endpoint out of range");
      g.edges.push_back({u - 1, v - 1});
    } else {
      throw ParseError(lineno, "unknown line tag `" + tag + "`");
    }
  }
  if (!problem_seen) throw ParseError(lineno, "missing problem line");
  return g;
}

/// MatrixMarket coordinate format, pattern or weighted (weights discarded),
/// general or symmetric. Symmetric entries are stored once, not mirrored.
/// Diagonal entries become self-loops and are kept.
inline Graph parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "empty stream");
  ++lineno;
  {
    std::istringstream ls(line);
    std::string banner, object, fmt, field, symmetry;
    ls >> banner >> object >> fmt >> field >> symmetry;
    if (banner != "%%MatrixMarket" || object != "matrix" || fmt != "coordinate")
      throw ParseError(lineno, "unsupported MatrixMarket header");
    if (field != "pattern" && field != "real" && field != "integer")
      throw ParseError(lineno, "unsupported field type `" + field + "`");
    if (symmetry != "general" && symmetry != "symmetric")
      throw ParseError(lineno, "unsupported symmetry `" + symmetry + "`");
  }

  std::uint64_t rows = 0, cols = 0, nnz = 0;
  bool size_seen = false;
  Graph g;
  std::uint64_t entries = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    if (!size_seen) {
      if (!(ls >> rows >> cols >> nnz)) throw ParseError(lineno, "malformed size line");
      size_seen = true;
      g.n = std::max(rows, cols);
      g.edges.reserve(nnz);
      continue;
    }
    std::uint64_t i, j;
    if (!(ls >> i >> j)) throw ParseError(lineno, "malformed entry");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError(lineno, "entry index out of range");
    g.edges.push_back({i - 1, j - 1});
    ++entries;
  }
  if (!size_seen) throw ParseError(lineno, "missing size line");
  if (entries != nnz)
    throw ParseError(lineno, "entry count " + std::to_string(entries) +
                                 " does not match nnz " + std::to_string(nnz));
  return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out,
                            bool with_header = false) {
  if (with_header) out << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
}

/// Label file: one `<vertex> <label>` line per vertex, 0-indexed.
inline void write_labels(const std::vector<Vertex>& labels, std::ostream& out) {
  for (std::size_t v = 0; v < labels.size(); ++v)
    out << v << ' ' << labels[v] << '\n';
}

inline std::vector<Vertex> read_labels(std::istream& in) {
  std::vector<Vertex> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a[0] == '#') continue;
    if (!(ls >> b)) throw ParseError(lineno, "expected `<vertex> <label>`");
    std::uint64_t v, lab;
    if (!detail::parse_u64(a, v) || !detail::parse_u64(b, lab))
      throw ParseError(lineno, "malformed integer token");
    if (v != labels.size())
      throw ParseError(lineno, "vertices must appear in ascending order");
    labels.push_back(lab);
  }
  return labels;
}

}  // namespace hookcc
