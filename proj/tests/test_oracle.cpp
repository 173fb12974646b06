#include <algorithm>
#include <random>

#include <catch_amalgamated.hpp>

#include "hookcc/generators.hpp"
#include "hookcc/oracle.hpp"

using namespace hookcc;

namespace {

Graph random_graph(std::mt19937_64& rng, Vertex max_n = 80,
                   std::uint64_t max_m = 200) {
  Vertex n = 1 + rng() % max_n;
  Graph g{n, {}};
  std::uint64_t m = rng() % max_m;
  for (std::uint64_t i = 0; i < m; ++i)
    g.edges.push_back({rng() % n, rng() % n});
  return g;
}

ComponentLabeling random_labeling(std::mt19937_64& rng, Vertex n) {
  ComponentLabeling lab;
  lab.label.resize(n);
  for (Vertex v = 0; v < n; ++v) lab.label[v] = rng() % (n / 4 + 1);
  return lab;
}

}  // namespace

TEST_CASE("oracle_cc: spec examples") {
  Graph g{5, {{0, 1}, {1, 2}, {3, 4}}};
  CHECK(oracle_cc(g).label == std::vector<Vertex>{0, 0, 0, 3, 3});

  Graph loop{3, {{0, 0}}};
  CHECK(oracle_cc(loop).label == std::vector<Vertex>{0, 1, 2});

  CHECK(oracle_cc(grid(3, 3)).label == std::vector<Vertex>(9, 0));
}

TEST_CASE("bfs_cc: spec examples") {
  Graph g{5, {{0, 1}, {1, 2}, {3, 4}}};
  CHECK(bfs_cc(g).label == std::vector<Vertex>{0, 0, 0, 3, 3});

  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(bfs_cc(k4).label == std::vector<Vertex>{0, 0, 0, 0});

  CHECK(bfs_cc(Graph{2, {}}).label == std::vector<Vertex>{0, 1});
}

TEST_CASE("dual-oracle agreement on random graphs") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = random_graph(rng);
    CHECK(oracle_cc(g).label == bfs_cc(g).label);
  }
  CHECK(oracle_cc(rmat(8, 4, 5)).label == bfs_cc(rmat(8, 4, 5)).label);
}

TEST_CASE("oracle_cc: invariant under shuffles and duplication") {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_graph(rng);
    ComponentLabeling ref = oracle_cc(g);

    Graph shuffled = g;
    std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
    CHECK(oracle_cc(shuffled).label == ref.label);

    Graph doubled = g;
    doubled.edges.insert(doubled.edges.end(), g.edges.begin(), g.edges.end());
    CHECK(oracle_cc(doubled).label == ref.label);
  }
}

TEST_CASE("partitions_equal: spec examples") {
  CHECK(partitions_equal({{0, 0, 3, 3}, true}, {{1, 1, 0, 0}, true}));
  CHECK_FALSE(partitions_equal({{0, 0, 0, 3}, true}, {{0, 0, 3, 3}, true}));
  CHECK(partitions_equal({{}, true}, {{}, true}));
  CHECK_THROWS_AS(partitions_equal({{0}, true}, {{0, 1}, true}),
                  std::invalid_argument);
}

TEST_CASE("partitions_equal: equivalence relation on random labelings") {
  std::mt19937_64 rng(107);
  for (int iter = 0; iter < 100; ++iter) {
    Vertex n = 1 + rng() % 40;
    ComponentLabeling a = random_labeling(rng, n);
    ComponentLabeling b = random_labeling(rng, n);
    ComponentLabeling c = random_labeling(rng, n);

    CHECK(partitions_equal(a, a));  // reflexive
    CHECK(partitions_equal(a, b) == partitions_equal(b, a));  // symmetric
    if (partitions_equal(a, b) && partitions_equal(b, c))
      CHECK(partitions_equal(a, c));  // transitive

    // renaming labels preserves the partition
    ComponentLabeling renamed = a;
    for (Vertex& l : renamed.label) l = l * 7 + 3;
    CHECK(partitions_equal(a, renamed));
  }
}

TEST_CASE("component_histogram") {
  auto h = component_histogram({{0, 0, 0, 3, 3}, true});
  CHECK(h == std::map<Vertex, std::uint64_t>{{0, 3}, {3, 2}});
  CHECK(component_histogram({{0, 1}, true}) ==
        std::map<Vertex, std::uint64_t>{{0, 1}, {1, 1}});
  CHECK(component_histogram({{}, true}).empty());

  std::mt19937_64 rng(109);
  for (int iter = 0; iter < 20; ++iter) {
    Graph g = random_graph(rng);
    auto hist = component_histogram(oracle_cc(g));
    std::uint64_t total = 0;
    for (auto& [label, size] : hist) total += size;
    CHECK(total == g.n);
  }
}
