#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grodep/capacity.hpp"

namespace grodep {

// Where a curve's numbers come from. Simulated curves are produced by the
// density-matrix engine; analytic curves by closed forms; bound curves by
// the width-equivalence bounds; first_order by the single-error series
// truncation.
enum class CurveSource { simulated, analytic, bound_lower, bound_upper, first_order };

std::string to_string(CurveSource s);

struct CurvePoint {
  long k = 0;
  double probability = 0.0;
  CurveSource source = CurveSource::simulated;
};

struct CurveMeta {
  int n = 0;
  std::uint64_t target = 0;
  Model model = Model::tdch;
  double width = 0.0;      // gamma for tdch, alpha for ldch
  long stop_step = 0;      // last step index included
  std::string label;       // series label for plots, e.g. "gamma=0.01"
};

// Success probability indexed by iteration count k = 0..stop_step.
struct ProbabilityCurve {
  CurveMeta meta;
  std::vector<CurvePoint> points;
};

}  // namespace grodep
