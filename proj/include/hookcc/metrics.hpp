#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hookcc/forest.hpp"
#include "hookcc/graph.hpp"

namespace hookcc {

struct PhaseTimes {
  double hook_ms = 0.0;
  double compress_ms = 0.0;
};

struct RunMetrics {
  std::string algo;
  Vertex n = 0;
  std::uint64_t m = 0;
  std::uint64_t s = 1;
  bool segments_clamped = false;
  unsigned workers = 1;

  double total_ms = 0.0;  // includes forest initialization
  double hook_ms = 0.0;
  double compress_ms = 0.0;
  std::vector<PhaseTimes> segment_ms;  // per segment (adaptive) / per outer iteration (baseline)
  std::vector<KernelCounters> segment_counters;
  std::uint64_t outer_iterations = 0;

  KernelCounters counters;
  std::uint64_t components = 0;

  // graph stats echo and repetition summary, filled by the bench layer
  double avg_degree = 0.0;
  std::uint64_t max_degree = 0;
  double median_total_ms = 0.0;
  bool verified = false;
};

/// Round to 6 significant digits, the report precision for all floats.
inline double round_sig6(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  double scale = std::pow(10.0, 5.0 - std::floor(std::log10(std::fabs(x))));
  return std::round(x * scale) / scale;
}

}  // namespace hookcc
