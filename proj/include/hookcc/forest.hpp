#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hookcc/graph.hpp"

namespace hookcc {

/// The shared parent-link workspace. One slot per vertex; every slot supports
/// atomic load, store, and compare-and-swap. Plain accesses are relaxed:
/// per-slot atomicity is all the kernels rely on, phase barriers in the
/// drivers provide cross-slot visibility. The drivers maintain the bound
/// invariant parent(v) <= v throughout.
class ParentForest {
 public:
  explicit ParentForest(Vertex n) : slots_(n) { reset(); }

  Vertex size() const { return slots_.size(); }

  void reset() {
    for (Vertex v = 0; v < slots_.size(); ++v)
      slots_[v].store(v, std::memory_order_relaxed);
  }

  Vertex load(Vertex v) const {
    return slots_[v].load(std::memory_order_relaxed);
  }

  void store(Vertex v, Vertex parent) {
    slots_[v].store(parent, std::memory_order_relaxed);
  }

  /// On failure `expected` holds the value observed by the CAS.
  bool cas(Vertex v, Vertex& expected, Vertex desired) {
    return slots_[v].compare_exchange_strong(expected, desired,
                                             std::memory_order_acq_rel,
                                             std::memory_order_acquire);
  }

  std::vector<Vertex> snapshot() const {
    std::vector<Vertex> out(slots_.size());
    for (Vertex v = 0; v < slots_.size(); ++v) out[v] = load(v);
    return out;
  }

  /// One line of n integers, for test fixtures.
  std::string dump() const {
    std::ostringstream os;
    for (Vertex v = 0; v < slots_.size(); ++v) {
      if (v) os << ' ';
      os << load(v);
    }
    return os.str();
  }

 private:
  std::vector<std::atomic<Vertex>> slots_;
};

struct KernelCounters {
  std::uint64_t hook_traversal_steps = 0;
  std::uint64_t cas_failures = 0;
  std::uint64_t jump_steps = 0;

  void merge(const KernelCounters& o) {
    hook_traversal_steps += o.hook_traversal_steps;
    cas_failures += o.cas_failures;
    jump_steps += o.jump_steps;
  }
};

inline ParentForest init_forest(Vertex n) { return ParentForest(n); }

/// Non-atomic hook: attach the higher parent under the lower one with a plain
/// store. Concurrent calls may lose updates; the baseline driver's
/// convergence loop retries until no hook changes anything. Returns whether
/// the endpoint parents differed (the driver's change signal).
inline bool hook(Vertex u, Vertex v, ParentForest& pi) {
  Vertex pu = pi.load(u);
  Vertex pv = pi.load(v);
  if (pu == pv) return false;
  pi.store(std::max(pu, pv), std::min(pu, pv));
  return true;
}

/// Single-level shortcut: parent(v) <- grandparent(v). Returns whether the
/// slot changed.
inline bool jump(Vertex v, ParentForest& pi) {
  Vertex p = pi.load(v);
  Vertex gp = pi.load(p);
  if (gp == p) return false;
  pi.store(v, gp);
  return true;
}

/// CAS-verified hook: walks down the parent chains until it acquires a root
/// slot, so the trees containing u and v are connected when it returns.
/// Only a root slot is ever CASed (expected value = its own index), so no
/// concurrent hook is overwritten. On a failed acquisition the observed
/// value becomes the next u, L the next v, and the walk continues; every
/// retry strictly descends, so the loop terminates.
inline void atomic_hook(Vertex u, Vertex v, ParentForest& pi,
                        KernelCounters& counters) {
  for (;;) {
    Vertex pu = pi.load(u);
    Vertex pv = pi.load(v);
    if (pu == pv) return;
    ++counters.hook_traversal_steps;
    Vertex high = std::max(pu, pv);
    Vertex low = std::min(pu, pv);
    Vertex expected = high;
    if (pi.cas(high, expected, low)) return;
    ++counters.cas_failures;
    u = expected;
    v = low;
  }
}

/// Full compression of v's chain in one call, writing every intermediate
/// value eagerly so concurrent readers of slot v see progressively shorter
/// chains. One jump_steps increment per write.
inline void multi_jump(Vertex v, ParentForest& pi, KernelCounters& counters) {
  Vertex p = pi.load(v);
  for (;;) {
    Vertex gp = pi.load(p);
    if (gp == p) return;
    pi.store(v, gp);
    ++counters.jump_steps;
    p = gp;
  }
}

/// True iff every tree has depth at most one. Only meaningful on a quiescent
/// forest.
inline bool is_star(const ParentForest& pi) {
  for (Vertex v = 0; v < pi.size(); ++v) {
    Vertex p = pi.load(v);
    if (pi.load(p) != p) return false;
  }
  return true;
}

}  // namespace hookcc
