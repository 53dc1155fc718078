#pragma once

#include <string>
#include <vector>

#include "diagen/fn/families.hpp"

namespace diagen::fn {

struct Extremum {
  double x = 0;
  double y = 0;
  bool is_max = false;
};

struct MonotoneInterval {
  double lo = 0;
  double hi = 0;
  bool increasing = false;
};

/// Everything the captioner and renderer need to talk about a graph.
struct FunctionFeatures {
  std::vector<double> zeros;            // x with f(x) = 0, ascending
  std::vector<Extremum> extrema;        // interior local extrema, ascending x
  std::vector<double> asymptotes;       // vertical asymptote positions
  std::vector<MonotoneInterval> monotone;
  double y_min = 0;                     // over the scanned samples
  double y_max = 0;
};

/// Numerically scans `spec` over its domain.  `step` <= 0 picks a grid of
/// about a thousand samples; `tol` is the slope dead-band used when deciding
/// whether the function is locally flat.
FunctionFeatures scan_features(const FunctionSpec& spec, double step = 0,
                               double tol = 1e-9);

}  // namespace diagen::fn
