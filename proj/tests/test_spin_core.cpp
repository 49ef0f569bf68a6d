#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "csm/axis.hpp"
#include "csm/collective.hpp"
#include "csm/dense_oracle.hpp"
#include "csm/evolution.hpp"
#include "csm/kernels.hpp"
#include "csm/observables.hpp"
#include "csm/phase.hpp"
#include "helpers.hpp"

namespace csm {
namespace {

using test::as_vector;

TEST(ProductState, ComputationalBasis) {
  const SpinState s = new_product_state(1, Axis::PlusZ, Axis::PlusZ, Backend::Full);
  ASSERT_EQ(s.dimension(), 4U);
  EXPECT_EQ(s.amplitudes()[0], Complex(1.0, 0.0));
  for (int i = 1; i < 4; ++i) EXPECT_EQ(s.amplitudes()[i], Complex(0.0, 0.0));
}

TEST(ProductState, XPolarizedIsUniform) {
  const SpinState s = new_product_state(2, Axis::PlusX, Axis::PlusX, Backend::Full);
  ASSERT_EQ(s.dimension(), 8U);
  for (const Complex& a : s.amplitudes()) {
    EXPECT_NEAR(a.real(), 1.0 / std::sqrt(8.0), 1e-15);
    EXPECT_NEAR(a.imag(), 0.0, 1e-15);
  }
}

TEST(ProductState, SymmetricDickeWeights) {
  const SpinState s = new_product_state(3, Axis::PlusX, Axis::PlusX, Backend::Symmetric);
  const double binom[] = {1, 3, 3, 1};
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k <= 3; ++k) {
      const Complex a = s.amplitudes()[s.symmetric_index(k, c)];
      EXPECT_NEAR(a.real(), std::sqrt(binom[k]) / std::sqrt(8.0) / std::sqrt(2.0), 1e-15);
      EXPECT_NEAR(a.imag(), 0.0, 1e-15);
    }
  }
  const SpinState full = new_product_state(3, Axis::PlusX, Axis::PlusX, Backend::Full);
  const SymmetricProjection proj = project_full_to_symmetric(full);
  EXPECT_NEAR(proj.lost_weight, 0.0, 1e-15);
  EXPECT_LT(test::max_abs_diff(proj.state, s), 1e-15);
}

TEST(ProductState, AllAxesOnBothBackendsAgree) {
  for (Axis a : {Axis::PlusX, Axis::MinusX, Axis::PlusY, Axis::MinusY, Axis::PlusZ, Axis::MinusZ}) {
    for (Axis c : {Axis::PlusX, Axis::MinusY, Axis::MinusZ}) {
      const SpinState sym = new_product_state(4, a, c, Backend::Symmetric);
      const SpinState full = new_product_state(4, a, c, Backend::Full);
      EXPECT_NEAR(sym.norm_squared(), 1.0, 1e-14);
      EXPECT_NEAR(fidelity(embed_symmetric_in_full(sym), full), 1.0, 1e-14);
    }
  }
}

TEST(ProductState, RejectsBadSizes) {
  EXPECT_THROW(new_product_state(0, Axis::PlusX, Axis::PlusX, Backend::Full),
               std::invalid_argument);
  EXPECT_THROW(new_product_state(kMaxFullSatellites + 1, Axis::PlusX, Axis::PlusX, Backend::Full),
               std::invalid_argument);
  EXPECT_THROW(SpinState(2, Backend::Full, StateVector(7)), std::invalid_argument);
}

TEST(Axis, ParseAndName) {
  EXPECT_EQ(parse_axis("+x"), Axis::PlusX);
  EXPECT_EQ(parse_axis("-z"), Axis::MinusZ);
  EXPECT_EQ(axis_name(Axis::MinusY), "-y");
  EXPECT_EQ(opposite(Axis::PlusY), Axis::MinusY);
  EXPECT_THROW(parse_axis("x+"), std::invalid_argument);
}

TEST(UnitPhase, OnUnitCircle) {
  for (double x : {0.0, 0.1, kPi / 4, kPi / 2, kPi, 2.5 * kPi, -7.3, 1e3}) {
    EXPECT_NEAR(std::abs(unit_phase(x)), 1.0, 2e-16) << x;
    EXPECT_NEAR(unit_phase(x).real(), std::cos(x), 1e-15);
    EXPECT_NEAR(unit_phase(x).imag(), std::sin(x), 1e-15);
  }
}

// --- kick ---------------------------------------------------------------------

TEST(Kick, SingleSatelliteRotation) {
  for (double g : {0.3, 1.0, kPi / 2, 2.9}) {
    DriveParams p;
    p.g_sat = g;
    p.g_c = 0.0;
    const SpinState start = new_product_state(1, Axis::PlusX, Axis::PlusZ, Backend::Full);
    const SpinState kicked = apply_kick(start, p);
    const SpinState expected =
        superpose(std::cos(g / 2), new_product_state(1, Axis::PlusX, Axis::PlusZ, Backend::Full),
                  Complex(0.0, -std::sin(g / 2)),
                  new_product_state(1, Axis::MinusX, Axis::PlusZ, Backend::Full));
    EXPECT_NEAR(fidelity(kicked, expected), 1.0, 1e-14) << g;
  }
}

TEST(Kick, ZeroFieldIsIdentity) {
  const SpinState s = test::random_state(5, Backend::Full);
  EXPECT_EQ(test::max_abs_diff(apply_kick(s, DriveParams::uniform(1.0, 0.0)), s), 0.0);
  const SpinState sym = test::random_state(5, Backend::Symmetric);
  EXPECT_EQ(test::max_abs_diff(apply_kick(sym, DriveParams::uniform(1.0, 0.0)), sym), 0.0);
}

TEST(Kick, QuarterTurnCyclesXY) {
  const DriveParams p = DriveParams::uniform(0.0, kPi / 2);
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState px = new_product_state(3, Axis::PlusX, Axis::PlusX, b);
    EXPECT_NEAR(fidelity(apply_kick(px, p), new_product_state(3, Axis::PlusY, Axis::PlusY, b)),
                1.0, 1e-14);
    const SpinState py = new_product_state(3, Axis::PlusY, Axis::PlusY, b);
    EXPECT_NEAR(fidelity(apply_kick(py, p), new_product_state(3, Axis::MinusX, Axis::MinusX, b)),
                1.0, 1e-14);
    const SpinState mx = new_product_state(3, Axis::MinusX, Axis::MinusX, b);
    EXPECT_NEAR(fidelity(apply_kick(mx, p), new_product_state(3, Axis::MinusY, Axis::MinusY, b)),
                1.0, 1e-14);
  }
}

// --- interaction --------------------------------------------------------------

TEST(Interaction, ZeroCouplingIsIdentity) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState s = test::random_state(6, b);
    EXPECT_LT(test::max_abs_diff(apply_interaction(s, DriveParams::uniform(0.0, 1.0)), s), 1e-15);
  }
}

TEST(Interaction, XProductEigenphase) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState s = new_product_state(1, Axis::PlusX, Axis::PlusX, b);
    const SpinState out = apply_interaction(s, DriveParams::uniform(kPi, 0.0));
    const Complex overlap = inner_product(s, out);
    EXPECT_NEAR(overlap.real(), std::cos(kPi / 4), 1e-15);
    EXPECT_NEAR(overlap.imag(), std::sin(kPi / 4), 1e-15);
  }
}

TEST(Interaction, FullTurnEchoOddSatellites) {
  for (int n_sat : {1, 3, 5, 7}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DriveParams p = test::random_drive(n_sat, 2.0 * kPi);
      const SpinState s = test::random_state(n_sat, Backend::Full);
      SpinState t = s;
      for (int k = 0; k < 2; ++k) t = apply_interaction(apply_kick(t, p), p);
      EXPECT_NEAR(fidelity(t, s), 1.0, 1e-12);
    }
  }
}

// --- floquet step ---------------------------------------------------------------

TEST(FloquetStep, EchoEvenSatellitesRotatesCentral) {
  for (int n_sat : {2, 4, 6}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DriveParams p = test::random_drive(n_sat, 2.0 * kPi);
      const SpinState s = test::random_state(n_sat, Backend::Full);
      const SpinState t = evolve(s, p, 2);
      DriveParams central_only;
      central_only.g_sat = 0.0;
      central_only.g_c = 2.0 * p.g_c;
      EXPECT_NEAR(fidelity(t, apply_kick(s, central_only)), 1.0, 1e-12);
    }
  }
}

TEST(FloquetStep, BellCatAfterThreePeriods) {
  const DriveParams p = DriveParams::uniform(kPi, kPi / 2);
  // n_sat = 0 mod 4: |+x..>|-x> - i|-x..>|+x>; n_sat = 2 mod 4: |+x..>|+x> - i|-x..>|-x>.
  for (int n_sat : {4, 6, 8, 10}) {
    const int sign = n_sat % 4 == 0 ? -1 : +1;
    for (Backend b : {Backend::Full, Backend::Symmetric}) {
      const SpinState s = evolve(new_product_state(n_sat, Axis::PlusX, Axis::PlusX, b), p, 3);
      EXPECT_NEAR(fidelity(s, bell_cat_state(n_sat, sign, Complex(0, -1), b)), 1.0, 1e-12)
          << n_sat;
    }
  }
}

TEST(FloquetStep, SplitHalvesEqualFusedStep) {
  const DriveParams p = test::random_drive(9, 1.7);
  const SpinState s = test::random_state(9, Backend::Full);
  for (Execution e : {Execution::Serial, Execution::Parallel}) {
    const SpinState fused = floquet_step(s, p, e);
    const SpinState split = apply_interaction(apply_kick(s, p, e), p, e);
    EXPECT_LT(test::max_abs_diff(fused, split), 1e-14);
  }
}

TEST(FloquetStep, Errors) {
  const DriveParams p = DriveParams::uniform(1.0, 1.0);
  EXPECT_THROW(evolve(test::random_state(3, Backend::Full), p, -1), std::invalid_argument);
  const FloquetPropagator prop(p, 3, Backend::Full);
  SpinState other = test::random_state(4, Backend::Full);
  EXPECT_THROW(prop.step(other), std::invalid_argument);
  SpinState sym = test::random_state(3, Backend::Symmetric);
  EXPECT_THROW(prop.step(sym), std::invalid_argument);
  DriveParams bad;
  bad.g_sat = std::vector<double>{0.1, 0.2};
  EXPECT_THROW(FloquetPropagator(bad, 3, Backend::Full), std::invalid_argument);
  EXPECT_THROW(FloquetPropagator(test::random_drive(3, 1.0), 3, Backend::Symmetric),
               std::invalid_argument);
}

// --- backend selection ------------------------------------------------------------

TEST(Backend, Resolution) {
  const DriveParams uniform = DriveParams::uniform(1.0, 1.0);
  EXPECT_EQ(resolve_backend(BackendChoice::Auto, uniform, 14), Backend::Full);
  EXPECT_EQ(resolve_backend(BackendChoice::Auto, uniform, 15), Backend::Symmetric);
  EXPECT_EQ(resolve_backend(BackendChoice::Full, uniform, 20), Backend::Full);
  const DriveParams mixed = test::random_drive(16, 1.0);
  EXPECT_EQ(resolve_backend(BackendChoice::Auto, mixed, 16), Backend::Full);
  EXPECT_THROW(resolve_backend(BackendChoice::Symmetric, mixed, 16), std::invalid_argument);
  EXPECT_EQ(parse_backend_choice("symmetric"), BackendChoice::Symmetric);
  EXPECT_THROW(parse_backend_choice("dicke"), std::invalid_argument);
  EXPECT_STREQ(backend_choice_name(BackendChoice::Auto), "auto");
}

TEST(Drive, UniformArrayCountsAsUniform) {
  DriveParams p;
  p.g_sat = std::vector<double>{0.4, 0.4, 0.4};
  EXPECT_TRUE(p.satellites_uniform());
  EXPECT_EQ(resolve_backend(BackendChoice::Symmetric, p, 3), Backend::Symmetric);
  EXPECT_THROW(p.satellite_field(3), std::out_of_range);
}

// --- dense oracle -------------------------------------------------------------------

TEST(DenseOracle, TrivialDriveIsIdentity) {
  const Eigen::MatrixXcd u = dense_floquet_matrix(DriveParams::uniform(0.0, 0.0), 1);
  ASSERT_EQ(u.rows(), 4);
  EXPECT_LT((u - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DenseOracle, IsUnitary) {
  const Eigen::MatrixXcd u = dense_floquet_matrix(test::random_drive(4, 2.3), 4);
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                .cwiseAbs()
                .maxCoeff(),
            1e-13);
}

TEST(DenseOracle, KernelsMatchDenseMatrix) {
  for (int trial = 0; trial < 12; ++trial) {
    const int n_sat = 1 + trial % 6;
    const DriveParams p = test::random_drive(n_sat, test::uniform(0.0, 4.0 * kPi));
    const SpinState s = test::random_state(n_sat, Backend::Full);
    const Eigen::VectorXcd expected = dense_floquet_matrix(p, n_sat) * as_vector(s);
    for (Execution e : {Execution::Serial, Execution::Parallel}) {
      EXPECT_LT(test::phase_aligned_distance(as_vector(floquet_step(s, p, e)), expected), 1e-12);
    }
  }
}

TEST(DenseOracle, RejectsLargeSystems) {
  EXPECT_THROW(dense_floquet_matrix(DriveParams::uniform(1, 1), kMaxDenseSatellites + 1),
               std::invalid_argument);
}

// --- symmetric sector -----------------------------------------------------------------

TEST(SymmetricProjection, PolarizedStateIsSymmetric) {
  const SpinState s = new_product_state(7, Axis::PlusX, Axis::PlusX, Backend::Full);
  EXPECT_NEAR(project_full_to_symmetric(s).lost_weight, 0.0, 1e-15);
  EXPECT_NEAR(project_full_to_symmetric(s).state.norm_squared(), 1.0, 1e-14);
}

TEST(SymmetricProjection, DynamicsStaysSymmetric) {
  const SpinState s = new_product_state(7, Axis::PlusX, Axis::PlusX, Backend::Full);
  const SpinState t = evolve(s, DriveParams::uniform(1.234, 0.77), 50);
  EXPECT_NEAR(project_full_to_symmetric(t).state.norm_squared(), 1.0, 1e-12);
}

TEST(SymmetricProjection, SingleFlipHasHalfWeight) {
  const Axis sats[] = {Axis::MinusZ, Axis::PlusZ};
  const SymmetricProjection proj = project_full_to_symmetric(product_state(sats, Axis::PlusZ));
  EXPECT_NEAR(proj.state.norm_squared(), 0.5, 1e-15);
  EXPECT_NEAR(proj.lost_weight, 0.5, 1e-15);
}

TEST(SymmetricProjection, EmbedRoundTrip) {
  const SpinState sym = test::random_state(6, Backend::Symmetric);
  const SpinState back = project_full_to_symmetric(embed_symmetric_in_full(sym)).state;
  EXPECT_LT(test::max_abs_diff(back, sym), 1e-14);
}

// --- collective rotation ----------------------------------------------------------

// Wigner small-d matrix element d^j_{m', m}(beta).
double wigner_d(double j, double mp, double m, double beta) {
  auto lf = [](double x) { return std::lgamma(x + 1.0); };
  const double pre = 0.5 * (lf(j + mp) + lf(j - mp) + lf(j + m) + lf(j - m));
  const double c = std::cos(beta / 2);
  const double s = std::sin(beta / 2);
  double sum = 0.0;
  const int kmin = static_cast<int>(std::max(0.0, m - mp));
  const int kmax = static_cast<int>(std::min(j + m, j - mp));
  for (int k = kmin; k <= kmax; ++k) {
    const double denom = lf(j + m - k) + lf(k) + lf(mp - m + k) + lf(j - mp - k);
    const double term = std::exp(pre - denom) * std::pow(c, 2 * j + m - mp - 2 * k) *
                        std::pow(s, mp - m + 2 * k);
    sum += ((k + static_cast<int>(mp - m)) % 2 == 0 ? 1.0 : -1.0) * term;
  }
  return sum;
}

TEST(CollectiveRotation, EigenbasisOfJx) {
  for (int n : {1, 2, 5, 12, 19, 20}) {
    const auto rot = collective_rotation(n);
    for (int a = 0; a <= n; ++a) {
      // J_x v_a = m_a v_a in the Dicke basis.
      for (int k = 0; k <= n; ++k) {
        double jx_v = 0.0;
        if (k > 0) jx_v += collective_jx_element(n, k - 1) * rot->at(k - 1, a);
        if (k < n) jx_v += collective_jx_element(n, k) * rot->at(k + 1, a);
        EXPECT_NEAR(jx_v, rot->eigenvalues[a] * rot->at(k, a), 1e-13);
      }
    }
  }
}

TEST(CollectiveRotation, MagnitudesMatchWignerD) {
  for (int n : {1, 4, 9, 16}) {
    const auto rot = collective_rotation(n);
    const double j = 0.5 * n;
    for (int a = 0; a <= n; ++a) {
      for (int k = 0; k <= n; ++k) {
        EXPECT_NEAR(std::abs(rot->at(k, a)),
                    std::abs(wigner_d(j, j - k, rot->eigenvalues[a], kPi / 2)), 1e-12);
      }
    }
  }
}

TEST(CollectiveRotation, GivensSequenceDiagonalizesJx) {
  for (int n : {1, 2, 7, 19, 40}) {
    const auto rot = collective_rotation(n);
    const int dim = n + 1;
    std::vector<std::vector<Complex>> w(dim, std::vector<Complex>(dim));
    for (int k = 0; k < dim; ++k) {
      w[k][k] = 1.0;
      for (const Givens& g : rot->givens) g.apply(w[k].data());
    }
    for (int k = 0; k < dim; ++k) {
      for (int l = 0; l < dim; ++l) {
        double jx = 0.0;
        for (int a = 0; a < dim; ++a) jx += (w[k][a] * rot->eigenvalues[a] * w[l][a]).real();
        double expected = 0.0;
        if (l == k + 1) expected = collective_jx_element(n, k);
        if (k == l + 1) expected = collective_jx_element(n, l);
        EXPECT_NEAR(jx, expected, 1e-12) << n << " " << k << " " << l;
      }
      std::vector<Complex> back = w[k];
      for (auto g = rot->givens.rbegin(); g != rot->givens.rend(); ++g) g->apply_inverse(back.data());
      for (int l = 0; l < dim; ++l) EXPECT_NEAR(std::abs(back[l] - (l == k ? 1.0 : 0.0)), 0.0, 1e-14);
    }
  }
}

TEST(CollectiveRotation, IsCached) {
  EXPECT_EQ(collective_rotation(11).get(), collective_rotation(11).get());
}

// --- backend equivalence -------------------------------------------------------------

TEST(BackendEquivalence, ObservablesAgree) {
  for (int n_sat = 1; n_sat <= 10; ++n_sat) {
    const DriveParams p = DriveParams::uniform(test::uniform(0, 4 * kPi), test::uniform(0, 2 * kPi));
    SpinState full = new_product_state(n_sat, Axis::PlusX, Axis::PlusX, Backend::Full);
    SpinState sym = new_product_state(n_sat, Axis::PlusX, Axis::PlusX, Backend::Symmetric);
    const FloquetPropagator pf(p, n_sat, Backend::Full);
    const FloquetPropagator ps(p, n_sat, Backend::Symmetric);
    for (int n = 0; n < 200; ++n) {
      pf.step(full);
      ps.step(sym);
    }
    EXPECT_NEAR(magnetization_sat(full), magnetization_sat(sym), 1e-10);
    EXPECT_NEAR(magnetization_central(full), magnetization_central(sym), 1e-10);
    EXPECT_NEAR(entanglement_entropy_central(full), entanglement_entropy_central(sym), 1e-10);
    EXPECT_NEAR(fidelity(full, sym), 1.0, 1e-10);
  }
}

// --- unitarity -----------------------------------------------------------------------

TEST(Unitarity, NormOverTenThousandSteps) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const int n_sat = b == Backend::Full ? 7 : 19;
    const DriveParams p = DriveParams::uniform(2.1, 0.9);
    const FloquetPropagator prop(p, n_sat, b);
    SpinState s = test::random_state(n_sat, b);
    SpinState k = s;
    SpinState i = s;
    for (int n = 0; n < 10000; ++n) {
      prop.step(s);
      prop.kick(k);
      prop.interact(i);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(k.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(i.norm_squared(), 1.0, 1e-12);
  }
}

// --- kernel agreement ----------------------------------------------------------------

TEST(Kernels, SerialAndParallelAgree) {
  for (int n_sat : {3, 11, 14}) {
    const SpinState s = test::random_state(n_sat, Backend::Full);
    const DriveParams p = test::random_drive(n_sat, 2.7);
    const SpinState a = floquet_step(s, p, Execution::Serial);
    const SpinState b = floquet_step(s, p, Execution::Parallel);
    EXPECT_LT(test::max_abs_diff(a, b), 1e-14);
    const auto amps = a.amplitudes();
    const auto other = s.amplitudes();
    EXPECT_NEAR(kernels::serial::norm_squared(amps), kernels::parallel::norm_squared(amps), 1e-14);
    EXPECT_LT(std::abs(kernels::serial::inner_product(amps, other) -
                       kernels::parallel::inner_product(amps, other)),
              1e-14);
    for (int bit = 0; bit <= n_sat; ++bit) {
      EXPECT_NEAR(kernels::serial::expectation_sx(amps, bit),
                  kernels::parallel::expectation_sx(amps, bit), 1e-14);
    }
    EXPECT_NEAR(kernels::serial::satellite_sx_sum(amps, n_sat),
                kernels::parallel::satellite_sx_sum(amps, n_sat), 1e-13);
    const auto ds = kernels::serial::central_density(amps, n_sat);
    const auto dp = kernels::parallel::central_density(amps, n_sat);
    EXPECT_NEAR(ds.rho_up, dp.rho_up, 1e-14);
    EXPECT_NEAR(ds.rho_down, dp.rho_down, 1e-14);
    EXPECT_LT(std::abs(ds.coherence - dp.coherence), 1e-14);
  }
}

}  // namespace
}  // namespace csm
