#include "csm/kernels.hpp"

#include <cmath>
#include <cstddef>

namespace csm::kernels {

ShearRotation ShearRotation::from_angle(double phi) {
  double r = std::remainder(phi, 2.0 * kPi);
  bool flip = false;
  if (r > kPi / 2) {
    r -= kPi;
    flip = true;
  } else if (r < -kPi / 2) {
    r += kPi;
    flip = true;
  }
  return {std::tan(r / 2), std::sin(r), flip};
}

namespace serial {

void apply_diagonal(std::span<Complex> amps, const SplitDiagonal& diag) {
  const std::size_t low_mask = diag.low.size() - 1;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    diag.low[i & low_mask].apply_phase(amps[i]);
    diag.high[i >> diag.low_bits].apply_phase(amps[i]);
  }
}

void apply_conditional_x_rotation(std::span<Complex> amps, int n_sat, const ShearRotation& rot) {
  const std::size_t half = std::size_t{1} << n_sat;
  for (std::size_t i = 0; i < half; ++i) {
    const Complex a = amps[i];
    const Complex b = amps[i + half];
    amps[i] = a + b;
    amps[i + half] = a - b;
  }
  for (int branch = 0; branch < 2; ++branch) {
    const ShearRotation r = branch == 0 ? rot : rot.reversed();
    Complex* base = amps.data() + branch * half;
    for (int q = 0; q < n_sat; ++q) {
      const std::size_t stride = std::size_t{1} << q;
      for (std::size_t i = 0; i < half; i += 2 * stride) {
        for (std::size_t j = i; j < i + stride; ++j) {
          double ar = base[j].real(), ai = base[j].imag();
          double br = base[j + stride].real(), bi = base[j + stride].imag();
          r.shear(ar, bi);
          r.shear(br, ai);
          base[j] = {ar, ai};
          base[j + stride] = {br, bi};
        }
      }
    }
  }
  const double scale = rot.flip && n_sat % 2 == 1 ? -0.5 : 0.5;
  for (std::size_t i = 0; i < half; ++i) {
    const Complex a = amps[i];
    const Complex b = amps[i + half];
    amps[i] = scale * (a + b);
    amps[i + half] = scale * (a - b);
  }
}

void floquet_period(std::span<Complex> amps, int n_sat, const SplitDiagonal& diag,
                    const ShearRotation& rot) {
  apply_diagonal(amps, diag);
  apply_conditional_x_rotation(amps, n_sat, rot);
}

double norm_squared(std::span<const Complex> amps) {
  double total = 0.0;
  for (const Complex& a : amps) total += std::norm(a);
  return total;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

double expectation_sx(std::span<const Complex> amps, int bit) {
  const std::size_t stride = std::size_t{1} << bit;
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & stride) continue;
    total += (std::conj(amps[i]) * amps[i | stride]).real();
  }
  return total;
}

double satellite_sx_sum(std::span<const Complex> amps, int n_sat) {
  double total = 0.0;
  for (int q = 0; q < n_sat; ++q) total += expectation_sx(amps, q);
  return total;
}

CentralDensity central_density(std::span<const Complex> amps, int n_sat) {
  const std::size_t half = std::size_t{1} << n_sat;
  CentralDensity rho{0.0, 0.0, {0.0, 0.0}};
  for (std::size_t i = 0; i < half; ++i) {
    rho.rho_up += std::norm(amps[i]);
    rho.rho_down += std::norm(amps[i + half]);
    rho.coherence += amps[i] * std::conj(amps[i + half]);
  }
  return rho;
}

}  // namespace serial
}  // namespace csm::kernels
