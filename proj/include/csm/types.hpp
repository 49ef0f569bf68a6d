#pragma once

#include <complex>
#include <vector>

namespace csm {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

/// Storage layout of a SpinState.
///
/// Full: 2^(n_sat+1) amplitudes, satellite i on bit i, central spin on bit
/// n_sat, bit value 0 is |+z>.
/// Symmetric: 2*(n_sat+1) amplitudes over |k>|c>, k = number of satellites
/// in |-z> within the normalized Dicke state, stored at c*(n_sat+1)+k.
enum class Backend { Full, Symmetric };

const char* backend_name(Backend backend) noexcept;

}  // namespace csm
