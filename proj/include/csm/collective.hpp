#pragma once

#include <memory>
#include <vector>

#include "csm/kernels.hpp"
#include "csm/types.hpp"

namespace csm {

/// sqrt of the binomial coefficient C(n, k) for k = 0..n.
std::vector<double> sqrt_binomial_row(int n);

/// Off-diagonal element <k|J_x|k+1> = sqrt((n-k)(k+1))/2 of the collective
/// spin J = sum_i S_i in the Dicke basis of n spins, k = number of spins in |-z>.
double collective_jx_element(int n, int k) noexcept;

/// Real rotation of rows (row, row+1) of a complex vector.
struct Givens {
  int row;
  kernels::ShearRotation rot;

  void apply(Complex* v) const noexcept { rotate(v, rot); }
  void apply_inverse(Complex* v) const noexcept { rotate(v, rot.reversed()); }

 private:
  void rotate(Complex* v, const kernels::ShearRotation& r) const noexcept {
    double xr = v[row].real(), xi = v[row].imag();
    double yr = v[row + 1].real(), yi = v[row + 1].imag();
    r.shear(xr, yr);
    r.shear(xi, yi);
    const double sign = r.flip ? -1.0 : 1.0;
    v[row] = {sign * xr, sign * xi};
    v[row + 1] = {sign * yr, sign * yi};
  }
};

/// Eigenbasis of the collective J_x for n spin-1/2 particles in the Dicke basis.
/// Column a of `vectors` (row-major, (n+1)x(n+1)) is the eigenvector with
/// eigenvalue m_a = a - n/2; the matrix is real orthogonal.
/// Applying `givens` in order maps a Dicke-basis vector to its eigenbasis
/// coordinates up to a sign per coordinate, V^T = S G_m ... G_1 with S = diag(+-1).
struct CollectiveRotation {
  int n;
  std::vector<double> vectors;
  std::vector<double> eigenvalues;
  std::vector<Givens> givens;

  double at(int row, int col) const noexcept {
    return vectors[static_cast<std::size_t>(row) * static_cast<std::size_t>(n + 1) +
                   static_cast<std::size_t>(col)];
  }
};

/// Computed once per n (long-double diagonalization of J_x), then cached.
/// Thread-safe.
std::shared_ptr<const CollectiveRotation> collective_rotation(int n);

}  // namespace csm
