#include "grodep/curve.hpp"

namespace grodep {

std::string to_string(CurveSource s) {
  switch (s) {
    case CurveSource::simulated: return "simulated";
    case CurveSource::analytic: return "analytic";
    case CurveSource::bound_lower: return "bound_lower";
    case CurveSource::bound_upper: return "bound_upper";
    default: return "first_order";
  }
}

}  // namespace grodep
