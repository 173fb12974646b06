#include <random>
#include <thread>
#include <vector>

#include <catch_amalgamated.hpp>

#include "hookcc/forest.hpp"

using namespace hookcc;

namespace {

ParentForest make_forest(const std::vector<Vertex>& parents) {
  ParentForest pi(parents.size());
  for (Vertex v = 0; v < parents.size(); ++v) pi.store(v, parents[v]);
  return pi;
}

// Chain of depth d: parent(i) = i - 1, root 0.
ParentForest make_chain(Vertex depth) {
  ParentForest pi(depth + 1);
  for (Vertex v = 1; v <= depth; ++v) pi.store(v, v - 1);
  return pi;
}

Vertex find_root(const ParentForest& pi, Vertex v) {
  while (pi.load(v) != v) v = pi.load(v);
  return v;
}

}  // namespace

TEST_CASE("init_forest: identity parents") {
  CHECK(init_forest(5).dump() == "0 1 2 3 4");
  CHECK(init_forest(0).size() == 0);
  CHECK(init_forest(1).dump() == "0");
}

TEST_CASE("hook: high parent attaches under low") {
  ParentForest pi = init_forest(3);
  CHECK(hook(0, 2, pi));
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 1, 0});

  ParentForest pi2 = make_forest({0, 0, 2});
  CHECK(hook(1, 2, pi2));
  CHECK(pi2.snapshot() == std::vector<Vertex>{0, 0, 0});
}

TEST_CASE("hook: self-loop is a no-op") {
  ParentForest pi = make_forest({0, 0, 1});
  CHECK_FALSE(hook(1, 1, pi));
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 0, 1});
}

TEST_CASE("jump: grandparent shortcut with change signal") {
  ParentForest pi = make_forest({0, 0, 1});
  CHECK(jump(2, pi));
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 0, 0});
  CHECK_FALSE(jump(2, pi));

  ParentForest root = init_forest(1);
  CHECK_FALSE(jump(0, root));
}

TEST_CASE("atomic_hook: acquires the root of the higher side") {
  ParentForest pi = init_forest(5);
  KernelCounters c;
  atomic_hook(2, 4, pi, c);
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 1, 2, 3, 2});
  CHECK(c.hook_traversal_steps == 1);
  CHECK(c.cas_failures == 0);
}

TEST_CASE("atomic_hook: walks to a root when H is not one") {
  ParentForest pi = make_forest({0, 1, 0, 1});
  KernelCounters c;
  atomic_hook(2, 3, pi, c);
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 0, 0, 1});
  CHECK(find_root(pi, 2) == find_root(pi, 3));
}

TEST_CASE("atomic_hook: already connected is a no-op") {
  ParentForest pi = make_forest({0, 0, 0});
  KernelCounters c;
  atomic_hook(1, 2, pi, c);
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 0, 0});
  CHECK(c.hook_traversal_steps == 0);
  CHECK(c.cas_failures == 0);
}

TEST_CASE("atomic_hook: quiescent postcondition on random forests") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Vertex n = 2 + rng() % 30;
    ParentForest pi(n);
    // random bound-respecting forest
    for (Vertex v = 1; v < n; ++v) pi.store(v, rng() % (v + 1));
    Vertex u = rng() % n;
    Vertex v = rng() % n;
    KernelCounters c;
    atomic_hook(u, v, pi, c);
    CHECK(find_root(pi, u) == find_root(pi, v));
    for (Vertex w = 0; w < n; ++w) CHECK(pi.load(w) <= w);
  }
}

TEST_CASE("atomic_hook: traversal bounded by chain depth plus one") {
  for (Vertex depth : {Vertex{1}, Vertex{2}, Vertex{17}, Vertex{1024}}) {
    ParentForest pi = make_chain(depth);
    KernelCounters c;
    atomic_hook(depth, 0, pi, c);
    CHECK(c.hook_traversal_steps <= depth + 1);
  }
}

TEST_CASE("multi_jump: compresses the whole chain eagerly") {
  ParentForest pi = make_forest({0, 0, 1, 2});
  KernelCounters c;
  multi_jump(3, pi, c);
  CHECK(pi.load(3) == 0);
  CHECK(c.jump_steps == 2);
}

TEST_CASE("multi_jump: no-ops") {
  ParentForest pi = make_forest({0, 0});
  KernelCounters c;
  multi_jump(1, pi, c);
  CHECK(c.jump_steps == 0);
  CHECK(pi.snapshot() == std::vector<Vertex>{0, 0});

  ParentForest root = init_forest(1);
  multi_jump(0, root, c);
  CHECK(c.jump_steps == 0);
}

TEST_CASE("multi_jump: quiescent result is the prior root") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    Vertex n = 2 + rng() % 30;
    ParentForest pi(n);
    for (Vertex v = 1; v < n; ++v) pi.store(v, rng() % (v + 1));
    Vertex v = rng() % n;
    Vertex root_before = find_root(pi, v);
    KernelCounters c;
    multi_jump(v, pi, c);
    CHECK(pi.load(v) == root_before);
  }
}

TEST_CASE("multi_jump: ascending pass on a chain does one write per deep vertex") {
  // Chain of depth k. Ascending order visits each parent after it has been
  // compressed, so only the vertex adjacent to the root needs no write:
  // k - 1 writes in total. Descending order pays the full chain walk.
  constexpr Vertex k = 1000;
  {
    ParentForest pi = make_chain(k);
    KernelCounters up;
    for (Vertex v = 0; v <= k; ++v) multi_jump(v, pi, up);
    CHECK(up.jump_steps == k - 1);
    CHECK(is_star(pi));
  }
  {
    ParentForest pi = make_chain(k);
    KernelCounters down;
    for (Vertex v = k + 1; v-- > 0;) multi_jump(v, pi, down);
    CHECK(down.jump_steps == k * (k - 1) / 2);
    CHECK(is_star(pi));
  }
}

TEST_CASE("is_star") {
  CHECK(is_star(make_forest({0, 0, 0, 3, 3})));
  CHECK_FALSE(is_star(make_forest({0, 0, 1})));
  CHECK(is_star(ParentForest(0)));
}

TEST_CASE("counters merge") {
  KernelCounters a{1, 2, 3}, b{10, 20, 30};
  a.merge(b);
  CHECK(a.hook_traversal_steps == 11);
  CHECK(a.cas_failures == 22);
  CHECK(a.jump_steps == 33);
}

TEST_CASE("stress: concurrent kernels keep parent(v) <= v") {
  constexpr Vertex n = 2000;
  std::mt19937_64 seed_rng(7);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 6000; ++i)
    edges.emplace_back(seed_rng() % n, seed_rng() % n);

  ParentForest pi(n);
  auto worker = [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    KernelCounters c;
    for (int i = 0; i < 30000; ++i) {
      auto [u, v] = edges[rng() % edges.size()];
      switch (rng() % 4) {
        case 0: hook(u, v, pi); break;
        case 1: atomic_hook(u, v, pi, c); break;
        case 2: jump(rng() % n, pi); break;
        default: multi_jump(rng() % n, pi, c); break;
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::uint64_t t = 0; t < 4; ++t) threads.emplace_back(worker, 100 + t);
  for (auto& t : threads) t.join();

  for (Vertex v = 0; v < n; ++v) CHECK(pi.load(v) <= v);
}

TEST_CASE("monotonicity: atomic kernels never raise a slot") {
  std::mt19937_64 rng(21);
  constexpr Vertex n = 64;
  ParentForest pi(n);
  std::vector<Vertex> prev = pi.snapshot();
  for (int i = 0; i < 5000; ++i) {
    KernelCounters c;
    Vertex u = rng() % n, v = rng() % n;
    if (rng() % 2)
      atomic_hook(u, v, pi, c);
    else
      multi_jump(u, pi, c);
    std::vector<Vertex> cur = pi.snapshot();
    for (Vertex w = 0; w < n; ++w) CHECK(cur[w] <= prev[w]);
    prev = std::move(cur);
  }
}
