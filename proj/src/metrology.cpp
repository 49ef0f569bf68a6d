#include "csm/metrology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "csm/kernels.hpp"
#include "csm/protocol.hpp"

namespace csm {

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b, Execution execution) {
  return execution == Execution::Serial ? kernels::serial::inner_product(a, b)
                                        : kernels::parallel::inner_product(a, b);
}

}  // namespace

JointBound joint_bound(double f_ll, double f_gg, double f_lg, double f_gl) {
  const double tr = f_ll + f_gg;
  const double det = f_ll * f_gg - f_lg * f_gl;
  if (!(tr > 0.0)) {
    return {std::numeric_limits<double>::quiet_NaN(), true,
            "zero Fisher information: trace " + std::to_string(tr)};
  }
  if (det < 1e-12 * tr * tr) {
    return {std::max(det, 0.0) / tr, true,
            "singular Fisher matrix: det " + std::to_string(det) + ", trace " +
                std::to_string(tr)};
  }
  return {det / tr, false, ""};
}

QfiMatrix qfi_matrix(double lambda, double g, int n_periods, int n_sat, double delta,
                     BackendChoice backend_choice, Execution execution) {
  if (!(delta > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  if (n_periods < 0) throw std::invalid_argument("negative period count");
  const Backend backend =
      resolve_backend(backend_choice, DriveParams::uniform(lambda, g), n_sat);

  // base, lambda+, lambda-, g+, g-
  const std::array<std::array<double, 2>, 5> points{{{lambda, g},
                                                     {lambda + delta, g},
                                                     {lambda - delta, g},
                                                     {lambda, g + delta},
                                                     {lambda, g - delta}}};
  const SpinState start = polarized_initial_state(n_sat, backend);
  std::vector<SpinState> states(points.size(), start);
  const bool concurrent = backend == Backend::Symmetric || execution == Execution::Serial;
#pragma omp parallel for schedule(static, 1) if (concurrent)
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    const auto& pt = points[static_cast<std::size_t>(i)];
    states[static_cast<std::size_t>(i)] =
        evolve(start, DriveParams::uniform(pt[0], pt[1]), n_periods, execution);
  }

  const auto psi = states[0].amplitudes();
  const std::size_t dim = psi.size();
  StateVector d_l(dim);
  StateVector d_g(dim);
  const double inv = 1.0 / (2.0 * delta);
  {
    const auto lp = states[1].amplitudes();
    const auto lm = states[2].amplitudes();
    const auto gp = states[3].amplitudes();
    const auto gm = states[4].amplitudes();
    for (std::size_t i = 0; i < dim; ++i) {
      d_l[i] = (lp[i] - lm[i]) * inv;
      d_g[i] = (gp[i] - gm[i]) * inv;
    }
  }
  const Complex ll = dot(d_l, d_l, execution);
  const Complex gg = dot(d_g, d_g, execution);
  const Complex lg = dot(d_l, d_g, execution);
  const Complex gl = dot(d_g, d_l, execution);
  const Complex l_psi = dot(d_l, psi, execution);
  const Complex g_psi = dot(d_g, psi, execution);
  const Complex psi_l = std::conj(l_psi);
  const Complex psi_g = std::conj(g_psi);

  QfiMatrix q;
  q.f_ll = 4.0 * (ll - l_psi * psi_l).real();
  q.f_gg = 4.0 * (gg - g_psi * psi_g).real();
  q.f_lg = 4.0 * (lg - l_psi * psi_g).real();
  q.f_gl = 4.0 * (gl - g_psi * psi_l).real();
  const JointBound b = joint_bound(q.f_ll, q.f_gg, q.f_lg, q.f_gl);
  q.g_bound = b.value;
  q.singular = b.singular;
  q.diagnostic = b.diagnostic;
  q.lambda = lambda;
  q.g = g;
  q.n_periods = n_periods;
  q.n_sat = n_sat;
  q.delta = delta;
  q.backend = backend;
  return q;
}

ScalingFit scaling_fit(std::span<const ScalingPoint> points) {
  if (points.size() < 4) {
    throw std::invalid_argument("scaling fit needs at least 4 points, got " +
                                std::to_string(points.size()));
  }
  double sx = 0.0;
  double sy = 0.0;
  for (const ScalingPoint& p : points) {
    if (!(p.size > 0.0) || !(p.value > 0.0)) {
      throw std::invalid_argument("scaling fit needs positive sizes and values");
    }
    sx += std::log(p.size);
    sy += std::log(p.value);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const ScalingPoint& p : points) {
    const double dx = std::log(p.size) - mx;
    const double dy = std::log(p.value) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("scaling fit needs at least two distinct sizes");
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.prefactor = std::exp(my - fit.exponent * mx);
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  fit.reliable = fit.r_squared >= kReliableFit;
  fit.points.assign(points.begin(), points.end());
  return fit;
}

std::vector<QfiScanRow> qfi_lambda_scan(std::span<const double> lambdas, double g, int n_periods,
                                        int n_sat, double delta, BackendChoice backend) {
  std::vector<QfiScanRow> rows(lambdas.size());
  const bool many = rows.size() > 1;
  const Execution execution = many ? Execution::Serial : Execution::Parallel;
  const auto n_rows = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic, 1) if (many)
  for (long long i = 0; i < n_rows; ++i) {
    QfiScanRow& row = rows[static_cast<std::size_t>(i)];
    row.lambda = lambdas[static_cast<std::size_t>(i)];
    try {
      row.qfi = qfi_matrix(row.lambda, g, n_periods, n_sat, delta, backend, execution);
      const DriveParams p = DriveParams::uniform(row.lambda, g);
      row.z_bar = order_parameter_Z(p, n_sat, row.qfi.backend, std::nullopt, execution);
      row.ho_dtc = std::abs(row.z_bar) >= kHoDtcThreshold;
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return rows;
}

int count_local_extrema(std::span<const double> values) {
  std::vector<double> v;
  v.reserve(values.size());
  for (double x : values) {
    if (v.empty() || x != v.back()) v.push_back(x);
  }
  int count = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const bool peak = v[i] > v[i - 1] && v[i] > v[i + 1];
    const bool dip = v[i] < v[i - 1] && v[i] < v[i + 1];
    count += (peak || dip) ? 1 : 0;
  }
  return count;
}

}  // namespace csm
