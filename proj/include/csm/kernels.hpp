#pragma once

// Full-basis state-vector kernels. Every kernel exists twice: a plain serial
// reference in csm::kernels::serial and an OpenMP version in
// csm::kernels::parallel with identical semantics. The parallel reductions sum
// fixed-size chunks and combine the partials in index order, so their result
// does not depend on the thread count.

#include <span>

#include "csm/types.hpp"

namespace csm::kernels {

/// Plane rotation (x, y) -> (x cos phi - y sin phi, x sin phi + y cos phi),
/// applied as three shears x -= t y; y += s x; x -= t y with t = tan(phi/2),
/// s = sin(phi). Every shear has unit determinant, so rounded coefficients do
/// not rescale the norm, and the reversed rotation undoes the shears one by
/// one. phi is reduced to [-pi/2, pi/2]; `flip` marks a dropped factor -1.
struct ShearRotation {
  double t = 0.0;
  double s = 0.0;
  bool flip = false;

  static ShearRotation from_angle(double phi);
  /// Rotation by -phi.
  ShearRotation reversed() const noexcept { return {-t, -s, flip}; }
  /// Rotates (x, y), ignoring `flip`.
  void shear(double& x, double& y) const noexcept {
    x -= t * y;
    y += s * x;
    x -= t * y;
  }
  /// z -> exp(i phi) z.
  void apply_phase(Complex& z) const noexcept {
    double re = z.real(), im = z.imag();
    shear(re, im);
    z = flip ? Complex{-re, -im} : Complex{re, im};
  }
};

/// Diagonal phase stored as two lookup tables: element i is multiplied by
/// exp(i phi_low) exp(i phi_high) with phi_low from low[i & (low.size()-1)] and
/// phi_high from high[i >> low_bits]. low.size() == 2^low_bits.
struct SplitDiagonal {
  std::span<const ShearRotation> low;
  std::span<const ShearRotation> high;
  int low_bits;
};

/// Reduced density matrix of the central spin (highest bit).
struct CentralDensity {
  double rho_up;    ///< <+z|rho|+z>
  double rho_down;  ///< <-z|rho|-z>
  Complex coherence;  ///< <+z|rho|-z>
};

namespace serial {

void apply_diagonal(std::span<Complex> amps, const SplitDiagonal& diag);

/// exp[+i lambda S_c^x sum_i S_i^x] on a state with n_sat satellites, given
/// rot = ShearRotation::from_angle(lambda/4). The central spin is moved to the
/// x basis, each satellite is rotated by exp(+i lambda/4 sigma^x) (the reverse
/// in the |-x>_c branch), and the central spin is moved back. On an amplitude
/// pair (a, b), exp(+i phi sigma^x) is `rot` on (Re a, Im b) and on (Re b, Im a).
void apply_conditional_x_rotation(std::span<Complex> amps, int n_sat, const ShearRotation& rot);

/// apply_diagonal followed by apply_conditional_x_rotation: one drive period.
void floquet_period(std::span<Complex> amps, int n_sat, const SplitDiagonal& diag,
                    const ShearRotation& rot);

double norm_squared(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
/// <S^x> of the spin on `bit`.
double expectation_sx(std::span<const Complex> amps, int bit);
/// sum_{i < n_sat} <S_i^x>.
double satellite_sx_sum(std::span<const Complex> amps, int n_sat);
CentralDensity central_density(std::span<const Complex> amps, int n_sat);

}  // namespace serial

namespace parallel {

void apply_diagonal(std::span<Complex> amps, const SplitDiagonal& diag);
void apply_conditional_x_rotation(std::span<Complex> amps, int n_sat, const ShearRotation& rot);
void floquet_period(std::span<Complex> amps, int n_sat, const SplitDiagonal& diag,
                    const ShearRotation& rot);
double norm_squared(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double expectation_sx(std::span<const Complex> amps, int bit);
double satellite_sx_sum(std::span<const Complex> amps, int n_sat);
CentralDensity central_density(std::span<const Complex> amps, int n_sat);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels may use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace csm::kernels
