#pragma once

#include "csm/types.hpp"

namespace csm {

/// exp(i angle), with each component nudged by at most one ulp so that
/// re^2 + im^2 is as close to 1 as double rounding allows. Phases applied
/// 10^4+ times in a row otherwise bias the norm.
Complex unit_phase(double angle) noexcept;

}  // namespace csm
