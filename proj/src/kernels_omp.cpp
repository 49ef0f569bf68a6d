#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "csm/kernels.hpp"

namespace csm::kernels {

namespace {

// 2^11 amplitudes (32 KiB, L1-resident) per block; qubits below this are applied
// block-locally in one sweep.
constexpr int kBlockBits = 11;

// Reductions are summed per chunk of this many amplitudes, then combined in
// chunk order.
constexpr std::size_t kChunk = std::size_t{1} << kBlockBits;

inline double re_conj_mul(Complex x, Complex y) {
  return x.real() * y.real() + x.imag() * y.imag();
}

// x -= t y; y += s x; x -= t y: a plane rotation with unit-determinant steps.
inline void shear3(double& x, double& y, double t, double s) {
  x -= t * y;
  y += s * x;
  x -= t * y;
}

// exp(+i phi sigma^x) on the pair stored at x[0..1], y[0..1].
inline void rotate_pair(double* x, double* y, double t, double s) {
  double ar = x[0], ai = x[1], br = y[0], bi = y[1];
  shear3(ar, bi, t, s);
  shear3(br, ai, t, s);
  x[0] = ar;
  x[1] = ai;
  y[0] = br;
  y[1] = bi;
}

// Rotates `count` pairs (a[k], b[k]) of non-overlapping runs. Written on the
// underlying doubles so the compiler vectorizes it.
inline void rotate_runs(Complex* a, Complex* b, std::size_t count, double t, double s) {
  double* __restrict x = reinterpret_cast<double*>(a);
  double* __restrict y = reinterpret_cast<double*>(b);
  for (std::size_t k = 0; k < 2 * count; k += 2) rotate_pair(x + k, y + k, t, s);
}

// Two qubits at once on four runs: pairs (0,1), (2,3), then (0,2), (1,3).
inline void rotate_runs4(Complex* r0, Complex* r1, Complex* r2, Complex* r3, std::size_t count,
                         double t, double s) {
  double* __restrict x0 = reinterpret_cast<double*>(r0);
  double* __restrict x1 = reinterpret_cast<double*>(r1);
  double* __restrict x2 = reinterpret_cast<double*>(r2);
  double* __restrict x3 = reinterpret_cast<double*>(r3);
  for (std::size_t k = 0; k < 2 * count; k += 2) {
    double a0r = x0[k], a0i = x0[k + 1], a1r = x1[k], a1i = x1[k + 1];
    double a2r = x2[k], a2i = x2[k + 1], a3r = x3[k], a3i = x3[k + 1];
    shear3(a0r, a1i, t, s);
    shear3(a1r, a0i, t, s);
    shear3(a2r, a3i, t, s);
    shear3(a3r, a2i, t, s);
    shear3(a0r, a2i, t, s);
    shear3(a2r, a0i, t, s);
    shear3(a1r, a3i, t, s);
    shear3(a3r, a1i, t, s);
    x0[k] = a0r;
    x0[k + 1] = a0i;
    x1[k] = a1r;
    x1[k + 1] = a1i;
    x2[k] = a2r;
    x2[k + 1] = a2i;
    x3[k] = a3r;
    x3[k + 1] = a3i;
  }
}

// Rotates the low `bits` qubits of a contiguous block.
void rotate_block(Complex* block, int bits, double t, double s) {
  const std::size_t size = std::size_t{1} << bits;
  double* d = reinterpret_cast<double*>(block);
  if (bits >= 1) {
    for (std::size_t k = 0; k < 2 * size; k += 4) rotate_pair(d + k, d + k + 2, t, s);
  }
  if (bits >= 2) {
    for (std::size_t k = 0; k < 2 * size; k += 8) {
      rotate_pair(d + k, d + k + 4, t, s);
      rotate_pair(d + k + 2, d + k + 6, t, s);
    }
  }
  for (int q = 2; q < bits; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t i = 0; i < size; i += 2 * stride) {
      rotate_runs(block + i, block + i + stride, stride, t, s);
    }
  }
}

// amps[l] -> exp(i phi_low[l]) exp(i phi_high) amps[l].
inline void phase_run(Complex* amps, const ShearRotation* low, const ShearRotation& high,
                      std::size_t count) {
  double* __restrict d = reinterpret_cast<double*>(amps);
  for (std::size_t l = 0; l < count; ++l) {
    double re = d[2 * l], im = d[2 * l + 1];
    low[l].shear(re, im);
    high.shear(re, im);
    const double sign = low[l].flip != high.flip ? -1.0 : 1.0;
    d[2 * l] = sign * re;
    d[2 * l + 1] = sign * im;
  }
}

double hadamard_scale(int n_sat, const ShearRotation& rot) {
  return rot.flip && n_sat % 2 == 1 ? -0.5 : 0.5;
}

// Column width of the tiles used for the qubits above kBlockBits.
constexpr std::size_t kTileWidth = 128;

std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

}  // namespace

int max_threads() noexcept { return omp_get_max_threads(); }

namespace parallel {

void apply_diagonal(std::span<Complex> amps, const SplitDiagonal& diag) {
  const std::size_t low_size = diag.low.size();
  const std::size_t high_size = amps.size() / low_size;
  Complex* data = amps.data();
  const ShearRotation* low = diag.low.data();
  const ShearRotation* high = diag.high.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t h = 0; h < static_cast<std::int64_t>(high_size); ++h) {
    phase_run(data + static_cast<std::size_t>(h) * low_size, low, high[h], low_size);
  }
}

void apply_conditional_x_rotation(std::span<Complex> amps, int n_sat, const ShearRotation& rot) {
  const std::size_t half = std::size_t{1} << n_sat;
  Complex* data = amps.data();

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(half); ++i) {
    const Complex a = data[i];
    const Complex b = data[i + half];
    data[i] = a + b;
    data[i + half] = a - b;
  }

  const int block_bits = std::min(n_sat, kBlockBits);
  const std::size_t block = std::size_t{1} << block_bits;
  const std::size_t blocks_per_branch = half / block;
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(2 * blocks_per_branch); ++idx) {
    const std::size_t branch = static_cast<std::size_t>(idx) / blocks_per_branch;
    const ShearRotation r = branch == 0 ? rot : rot.reversed();
    rotate_block(data + static_cast<std::size_t>(idx) * block, block_bits, r.t, r.s);
  }

  for (int q = block_bits; q < n_sat; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    // Runs of `stride` contiguous pairs; run r starts at r * 2 * stride.
    const std::int64_t runs = static_cast<std::int64_t>(half >> q);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < runs; ++r) {
      const std::size_t start = static_cast<std::size_t>(r) << (q + 1);
      const ShearRotation r = start < half ? rot : rot.reversed();
      Complex* lo = data + start;
      rotate_runs(lo, lo + stride, stride, r.t, r.s);
    }
  }

  const double scale = hadamard_scale(n_sat, rot);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(half); ++i) {
    const Complex a = data[i];
    const Complex b = data[i + half];
    data[i] = scale * (a + b);
    data[i + half] = scale * (a - b);
  }
}

void floquet_period(std::span<Complex> amps, int n_sat, const SplitDiagonal& diag,
                    const ShearRotation& rot) {
  // The state is viewed as a (rows x row) matrix: the low `low_bits`
  // satellite qubits index a row, the remaining satellites and the central
  // spin (top bit) index the rows. Sweep 1 walks column tiles and applies the
  // kick, the central change of basis and the row qubits; sweep 2 walks row
  // pairs and applies the in-row qubits and the central change back.
  const int low_bits = std::min(n_sat, kBlockBits);
  const int high_bits = n_sat + 1 - low_bits;
  const std::size_t row = std::size_t{1} << low_bits;
  const std::size_t rows = std::size_t{1} << high_bits;
  const std::size_t half_rows = rows / 2;
  const std::size_t half = half_rows * row;
  const std::size_t width = std::min(row, kTileWidth);
  const std::size_t low_mask = diag.low.size() - 1;
  const int diag_shift = diag.low_bits;
  const ShearRotation* low = diag.low.data();
  const ShearRotation* high = diag.high.data();
  Complex* data = amps.data();
  const ShearRotation rev = rot.reversed();
  const double scale = hadamard_scale(n_sat, rot);

#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(row / width); ++t) {
    const std::size_t off = static_cast<std::size_t>(t) * width;
    for (std::size_t h = 0; h < half_rows; ++h) {
      const std::size_t first = h * row + off;
      Complex* a = data + first;
      Complex* b = a + half;
      for (std::size_t w = 0; w < width; ++w) {
        const std::size_t idx = first + w;
        const ShearRotation& lw = low[idx & low_mask];
        Complex x = a[w];
        Complex y = b[w];
        lw.apply_phase(x);
        high[idx >> diag_shift].apply_phase(x);
        lw.apply_phase(y);
        high[(idx + half) >> diag_shift].apply_phase(y);
        a[w] = x + y;
        b[w] = x - y;
      }
    }
    // Row qubits 0 .. high_bits-2 are satellites, taken two at a time.
    const int row_qubits = high_bits - 1;
    for (int q = 0; q < row_qubits; q += 2) {
      const std::size_t step = std::size_t{1} << q;
      const bool pair = q + 1 < row_qubits;
      const std::size_t mask = pair ? 3 * step : step;
      for (std::size_t h = 0; h < rows; ++h) {
        if (h & mask) continue;
        const ShearRotation& r = h < half_rows ? rot : rev;
        Complex* a = data + h * row + off;
        if (pair) {
          rotate_runs4(a, a + step * row, a + 2 * step * row, a + 3 * step * row, width, r.t, r.s);
        } else {
          rotate_runs(a, a + step * row, width, r.t, r.s);
        }
      }
    }
  }

#pragma omp parallel for schedule(static)
  for (std::int64_t h = 0; h < static_cast<std::int64_t>(half_rows); ++h) {
    Complex* a = data + static_cast<std::size_t>(h) * row;
    Complex* b = a + half;
    rotate_block(a, low_bits, rot.t, rot.s);
    rotate_block(b, low_bits, rev.t, rev.s);
    for (std::size_t j = 0; j < row; ++j) {
      const Complex x = a[j];
      const Complex y = b[j];
      a[j] = scale * (x + y);
      b[j] = scale * (x - y);
    }
  }
}

double norm_squared(std::span<const Complex> amps) {
  const std::size_t chunks = chunk_count(amps.size());
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::size_t begin = static_cast<std::size_t>(ch) * kChunk;
    const std::size_t end = std::min(amps.size(), begin + kChunk);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += std::norm(amps[i]);
    partial[ch] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t chunks = chunk_count(a.size());
  std::vector<Complex> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::size_t begin = static_cast<std::size_t>(ch) * kChunk;
    const std::size_t end = std::min(a.size(), begin + kChunk);
    double re = 0.0, im = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
      im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    partial[ch] = Complex{re, im};
  }
  Complex total{0.0, 0.0};
  for (const Complex& p : partial) total += p;
  return total;
}

double expectation_sx(std::span<const Complex> amps, int bit) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t pairs = amps.size() / 2;
  const std::size_t chunks = chunk_count(pairs);
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::size_t begin = static_cast<std::size_t>(ch) * kChunk;
    const std::size_t end = std::min(pairs, begin + kChunk);
    double acc = 0.0;
    for (std::size_t r = begin; r < end; ++r) {
      const std::size_t j = ((r >> bit) << (bit + 1)) | (r & (stride - 1));
      acc += re_conj_mul(amps[j], amps[j + stride]);
    }
    partial[ch] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double satellite_sx_sum(std::span<const Complex> amps, int n_sat) {
  // Low qubits are handled inside each chunk in one sweep; higher qubits pair
  // a chunk with its partner chunk.
  const int bits = n_sat + 1;
  const int block_bits = std::min(bits, kBlockBits);
  const std::size_t block = std::size_t{1} << block_bits;
  const std::size_t chunks = amps.size() / block;
  const int local = std::min(n_sat, block_bits);
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::size_t base = static_cast<std::size_t>(ch) * block;
    const Complex* v = amps.data() + base;
    double acc = 0.0;
    for (int q = 0; q < local; ++q) {
      const std::size_t stride = std::size_t{1} << q;
      for (std::size_t i = 0; i < block; i += 2 * stride) {
        for (std::size_t j = i; j < i + stride; ++j) acc += re_conj_mul(v[j], v[j + stride]);
      }
    }
    for (int q = block_bits; q < n_sat; ++q) {
      const std::size_t stride = std::size_t{1} << q;
      if (base & stride) continue;
      const Complex* w = v + stride;
      for (std::size_t j = 0; j < block; ++j) acc += re_conj_mul(v[j], w[j]);
    }
    partial[ch] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

CentralDensity central_density(std::span<const Complex> amps, int n_sat) {
  const std::size_t half = std::size_t{1} << n_sat;
  const std::size_t chunks = chunk_count(half);
  std::vector<CentralDensity> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::int64_t ch = 0; ch < static_cast<std::int64_t>(chunks); ++ch) {
    const std::size_t begin = static_cast<std::size_t>(ch) * kChunk;
    const std::size_t end = std::min(half, begin + kChunk);
    double up = 0.0, down = 0.0, cr = 0.0, ci = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const Complex a = amps[i];
      const Complex b = amps[i + half];
      up += std::norm(a);
      down += std::norm(b);
      cr += a.real() * b.real() + a.imag() * b.imag();
      ci += a.imag() * b.real() - a.real() * b.imag();
    }
    partial[ch] = CentralDensity{up, down, Complex{cr, ci}};
  }
  CentralDensity rho{0.0, 0.0, {0.0, 0.0}};
  for (const CentralDensity& p : partial) {
    rho.rho_up += p.rho_up;
    rho.rho_down += p.rho_down;
    rho.coherence += p.coherence;
  }
  return rho;
}

}  // namespace parallel
}  // namespace csm::kernels
