#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hookcc/forest.hpp"
#include "hookcc/graph.hpp"
#include "hookcc/metrics.hpp"
#include "hookcc/parallel.hpp"

namespace hookcc {

struct ComponentLabeling {
  std::vector<Vertex> label;
  bool canonical = false;

  Vertex n() const { return label.size(); }
};

/// Ordered partition of the edge list into s contiguous, balanced segments.
struct SegmentPlan {
  std::uint64_t s = 1;
  bool clamped = false;  // requested s exceeded the edge count
  std::vector<std::uint64_t> boundaries;  // s+1 offsets, [0] = 0, [s] = m
};

/// Segment-count heuristic: the average degree, rounded half-up, at least 1,
/// never more than the stored edge count.
inline std::uint64_t choose_segment_count(const GraphStats& stats) {
  if (stats.n == 0) return 1;
  auto s = static_cast<std::uint64_t>(std::floor(stats.avg_degree + 0.5));
  if (s < 1) s = 1;
  if (stats.m_stored > 0 && s > stats.m_stored) s = stats.m_stored;
  return s;
}

inline SegmentPlan partition_edges(std::uint64_t m, std::uint64_t s) {
  SegmentPlan plan;
  if (s < 1) s = 1;
  plan.clamped = s > m && m > 0;
  plan.s = std::max<std::uint64_t>(1, std::min(s, std::max<std::uint64_t>(m, 1)));
  plan.boundaries.resize(plan.s + 1);
  std::uint64_t base = m / plan.s;
  std::uint64_t rem = m % plan.s;
  std::uint64_t off = 0;
  plan.boundaries[0] = 0;
  for (std::uint64_t i = 0; i < plan.s; ++i) {
    off += base + (i < rem ? 1 : 0);
    plan.boundaries[i + 1] = off;
  }
  return plan;
}

inline SegmentPlan partition_edges(const Graph& g, std::uint64_t s) {
  return partition_edges(g.edges.size(), s);
}

/// Reads the converged forest as a labeling. Requires a quiescent, star-shaped
/// forest; validated in non-release builds.
inline ComponentLabeling extract_labels(const ParentForest& pi) {
#ifndef NDEBUG
  if (!is_star(pi))
    throw std::logic_error("extract_labels: forest is not star-shaped");
#endif
  ComponentLabeling out;
  out.label = pi.snapshot();
  out.canonical = true;
  return out;
}

inline std::uint64_t count_components(const ComponentLabeling& labeling) {
  std::uint64_t count = 0;
  for (Vertex v = 0; v < labeling.label.size(); ++v)
    if (labeling.label[v] == v) ++count;
  return count;
}

enum class Phase { Hook, Compress };

struct DriverOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  // Called with the quiesced forest after every phase barrier (test hook).
  std::function<void(const ParentForest&, Phase)> phase_observer;
};

struct DriverResult {
  ComponentLabeling labels;
  RunMetrics metrics;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

inline void observe(const DriverOptions& opts, const ParentForest& pi,
                    Phase phase) {
  if (opts.phase_observer) opts.phase_observer(pi, phase);
}

inline void merge_locals(std::vector<KernelCounters>& locals,
                         KernelCounters& segment, KernelCounters& total) {
  for (auto& c : locals) {
    segment.merge(c);
    total.merge(c);
    c = KernelCounters{};
  }
}

}  // namespace detail

/// The original two-loop driver: non-atomic hook passes over all edges
/// alternated with single-level jump passes until neither changes anything.
inline RunMetrics baseline_cc_into(const Graph& g, ParentForest& pi,
                                   const DriverOptions& opts = {}) {
  unsigned nw = opts.workers ? opts.workers : hardware_workers();
  ThreadPool pool(nw);
  std::vector<KernelCounters> locals(nw);

  RunMetrics mx;
  mx.algo = "baseline";
  mx.n = g.n;
  mx.m = g.edges.size();
  mx.workers = nw;

  auto t0 = detail::Clock::now();
  pi.reset();

  for (;;) {
    ++mx.outer_iterations;
    PhaseTimes pt;
    KernelCounters seg_counters;

    auto th = detail::Clock::now();
    std::atomic<bool> hook_changed{false};
    pool.for_range(0, g.edges.size(),
                   [&](std::uint64_t b, std::uint64_t e, unsigned) {
                     bool any = false;
                     for (std::uint64_t i = b; i < e; ++i)
                       any |= hook(g.edges[i].u, g.edges[i].v, pi);
                     if (any) hook_changed.store(true, std::memory_order_relaxed);
                   });
    pt.hook_ms = detail::ms_since(th);
    detail::observe(opts, pi, Phase::Hook);

    auto tc = detail::Clock::now();
    for (;;) {
      std::atomic<bool> jump_changed{false};
      pool.for_range(0, g.n, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
        std::uint64_t steps = 0;
        for (Vertex v = b; v < e; ++v)
          if (jump(v, pi)) ++steps;
        locals[w].jump_steps += steps;
        if (steps) jump_changed.store(true, std::memory_order_relaxed);
      });
      if (!jump_changed.load()) break;
    }
    pt.compress_ms = detail::ms_since(tc);
    detail::observe(opts, pi, Phase::Compress);

    mx.hook_ms += pt.hook_ms;
    mx.compress_ms += pt.compress_ms;
    detail::merge_locals(locals, seg_counters, mx.counters);
    mx.segment_ms.push_back(pt);
    mx.segment_counters.push_back(seg_counters);
    if (!hook_changed.load()) break;
  }
  mx.total_ms = detail::ms_since(t0);
  return mx;
}

/// Baseline with the compress phase fused: one multi-jump pass replaces the
/// inner jump-until-fixed-point loop. The hook side is unchanged.
inline RunMetrics baseline_mj_cc_into(const Graph& g, ParentForest& pi,
                                      const DriverOptions& opts = {}) {
  unsigned nw = opts.workers ? opts.workers : hardware_workers();
  ThreadPool pool(nw);
  std::vector<KernelCounters> locals(nw);

  RunMetrics mx;
  mx.algo = "baseline-mj";
  mx.n = g.n;
  mx.m = g.edges.size();
  mx.workers = nw;

  auto t0 = detail::Clock::now();
  pi.reset();

  for (;;) {
    ++mx.outer_iterations;
    PhaseTimes pt;
    KernelCounters seg_counters;

    auto th = detail::Clock::now();
    std::atomic<bool> hook_changed{false};
    pool.for_range(0, g.edges.size(),
                   [&](std::uint64_t b, std::uint64_t e, unsigned) {
                     bool any = false;
                     for (std::uint64_t i = b; i < e; ++i)
                       any |= hook(g.edges[i].u, g.edges[i].v, pi);
                     if (any) hook_changed.store(true, std::memory_order_relaxed);
                   });
    pt.hook_ms = detail::ms_since(th);
    detail::observe(opts, pi, Phase::Hook);

    auto tc = detail::Clock::now();
    pool.for_range(0, g.n, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      for (Vertex v = b; v < e; ++v) multi_jump(v, pi, locals[w]);
    });
    pt.compress_ms = detail::ms_since(tc);
    detail::observe(opts, pi, Phase::Compress);

    mx.hook_ms += pt.hook_ms;
    mx.compress_ms += pt.compress_ms;
    detail::merge_locals(locals, seg_counters, mx.counters);
    mx.segment_ms.push_back(pt);
    mx.segment_counters.push_back(seg_counters);
    if (!hook_changed.load()) break;
  }
  mx.total_ms = detail::ms_since(t0);
  return mx;
}

/// Segmented atomic driver: for each edge segment in order, one atomic-hook
/// pass over the segment, then one multi-jump pass over all vertices. No
/// convergence loop is needed: atomic hooks guarantee connectivity, the final
/// multi-jump pass guarantees stars. `segments == 0` selects the
/// average-degree heuristic.
inline RunMetrics adaptive_cc_into(const Graph& g, std::uint64_t segments,
                                   ParentForest& pi,
                                   const DriverOptions& opts = {}) {
  unsigned nw = opts.workers ? opts.workers : hardware_workers();
  ThreadPool pool(nw);
  std::vector<KernelCounters> locals(nw);

  std::uint64_t requested =
      segments == 0 ? choose_segment_count(compute_stats(g)) : segments;
  SegmentPlan plan = partition_edges(g.edges.size(), requested);

  RunMetrics mx;
  mx.algo = "adaptive";
  mx.n = g.n;
  mx.m = g.edges.size();
  mx.s = plan.s;
  mx.segments_clamped = plan.clamped;
  mx.workers = nw;

  auto t0 = detail::Clock::now();
  pi.reset();

  for (std::uint64_t seg = 0; seg < plan.s; ++seg) {
    PhaseTimes pt;
    KernelCounters seg_counters;

    auto th = detail::Clock::now();
    pool.for_range(plan.boundaries[seg], plan.boundaries[seg + 1],
                   [&](std::uint64_t b, std::uint64_t e, unsigned w) {
                     for (std::uint64_t i = b; i < e; ++i)
                       atomic_hook(g.edges[i].u, g.edges[i].v, pi, locals[w]);
                   });
    pt.hook_ms = detail::ms_since(th);
    detail::observe(opts, pi, Phase::Hook);

    // Vertex chunks are claimed in ascending order (see ThreadPool), so
    // compression starts at the tree tops and works down.
    auto tc = detail::Clock::now();
    pool.for_range(0, g.n, [&](std::uint64_t b, std::uint64_t e, unsigned w) {
      for (Vertex v = b; v < e; ++v) multi_jump(v, pi, locals[w]);
    });
    pt.compress_ms = detail::ms_since(tc);
    detail::observe(opts, pi, Phase::Compress);

    mx.hook_ms += pt.hook_ms;
    mx.compress_ms += pt.compress_ms;
    detail::merge_locals(locals, seg_counters, mx.counters);
    mx.segment_ms.push_back(pt);
    mx.segment_counters.push_back(seg_counters);
  }
  mx.outer_iterations = plan.s;
  mx.total_ms = detail::ms_since(t0);
  return mx;
}

/// One atomic-hook pass over all edges followed by one multi-jump pass:
/// the single-segment special case.
inline RunMetrics single_hook_cc_into(const Graph& g, ParentForest& pi,
                                      const DriverOptions& opts = {}) {
  RunMetrics mx = adaptive_cc_into(g, 1, pi, opts);
  mx.algo = "atomic";
  return mx;
}

namespace detail {

template <typename Driver>
DriverResult run_driver(const Graph& g, Driver&& driver) {
  ParentForest pi(g.n);
  DriverResult result;
  result.metrics = driver(pi);
  result.labels = extract_labels(pi);
  result.metrics.components = count_components(result.labels);
  return result;
}

}  // namespace detail

inline DriverResult baseline_cc(const Graph& g, const DriverOptions& opts = {}) {
  return detail::run_driver(
      g, [&](ParentForest& pi) { return baseline_cc_into(g, pi, opts); });
}

inline DriverResult baseline_mj_cc(const Graph& g,
                                   const DriverOptions& opts = {}) {
  return detail::run_driver(
      g, [&](ParentForest& pi) { return baseline_mj_cc_into(g, pi, opts); });
}

inline DriverResult single_hook_cc(const Graph& g,
                                   const DriverOptions& opts = {}) {
  return detail::run_driver(
      g, [&](ParentForest& pi) { return single_hook_cc_into(g, pi, opts); });
}

inline DriverResult adaptive_cc(const Graph& g, std::uint64_t segments = 0,
                                const DriverOptions& opts = {}) {
  return detail::run_driver(g, [&](ParentForest& pi) {
    return adaptive_cc_into(g, segments, pi, opts);
  });
}

}  // namespace hookcc
