#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "csm/evolution.hpp"
#include "csm/observables.hpp"
#include "csm/protocol.hpp"
#include "helpers.hpp"

namespace csm {
namespace {

const DriveParams kHoDtc = DriveParams::uniform(kPi, kPi / 2);

TEST(Magnetization, PolarizedState) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState s = new_product_state(19, Axis::PlusX, Axis::PlusX, b);
    EXPECT_NEAR(magnetization_sat(s), 9.5, 1e-12);
    EXPECT_NEAR(magnetization_central(s), 0.5, 1e-14);
  }
}

TEST(Magnetization, EchoRevivesAtEvenPeriods) {
  const SpinState s = polarized_initial_state(19, Backend::Symmetric);
  for (double g : {0.4, 1.9, 3.0}) {
    const SpinState t = evolve(s, DriveParams::uniform(2 * kPi, g), 6);
    EXPECT_NEAR(magnetization_sat(t), 9.5, 1e-10);
  }
}

TEST(Magnetization, SpinFlipAfterOnePeriod) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState t = evolve(polarized_initial_state(19, b), DriveParams::uniform(2 * kPi, kPi), 1);
    EXPECT_NEAR(magnetization_sat(t), -9.5, 1e-10);
  }
}

TEST(Magnetization, CentralPrecessesForEvenSatellites) {
  const double g = 0.37;
  SpinState s = polarized_initial_state(6, Backend::Full);
  const FloquetPropagator prop(DriveParams::uniform(2 * kPi, g), 6, Backend::Full);
  for (int n = 1; n <= 10; ++n) {
    prop.step(s);
    prop.step(s);
    EXPECT_NEAR(magnetization_central(s), 0.5 * std::cos(2 * n * g), 1e-10) << n;
  }
}

TEST(Magnetization, CentralAtFourPeriodsOddSatellites) {
  for (int n_sat : {5, 7, 19}) {
    const SpinState t = evolve(polarized_initial_state(n_sat, Backend::Symmetric), kHoDtc, 4);
    EXPECT_NEAR(magnetization_central(t), -0.5, 1e-10);
    EXPECT_NEAR(entanglement_entropy_central(t), 0.0, 1e-10);
  }
}

TEST(Entropy, ProductStatesAreUnentangled) {
  for (Axis a : {Axis::PlusX, Axis::MinusY, Axis::PlusZ}) {
    EXPECT_NEAR(entanglement_entropy_central(new_product_state(5, a, Axis::MinusX, Backend::Full)),
                0.0, 1e-14);
  }
}

TEST(Entropy, BellCatIsMaximal) {
  for (int sign : {+1, -1}) {
    for (Complex alpha : {Complex(0, 1), Complex(0, -1)}) {
      for (Backend b : {Backend::Full, Backend::Symmetric}) {
        const SpinState s = bell_cat_state(6, sign, alpha, b);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-14);
        EXPECT_NEAR(entanglement_entropy_central(s), test::kLn2, 1e-12);
      }
    }
  }
}

TEST(Entropy, StaysInBounds) {
  SpinState s = test::random_state(8, Backend::Full);
  const FloquetPropagator prop(DriveParams::uniform(1.3, 2.2), 8, Backend::Full);
  for (int n = 0; n < 300; ++n) {
    prop.step(s);
    const double e = entanglement_entropy_central(s);
    EXPECT_GE(e, -1e-10);
    EXPECT_LE(e, test::kLn2 + 1e-10);
  }
}

TEST(Cats, SatelliteCat) {
  for (Backend b : {Backend::Full, Backend::Symmetric}) {
    const SpinState s = satellite_cat_state(7, -1, b);
    EXPECT_NEAR(magnetization_sat(s), 0.0, 1e-14);
    EXPECT_NEAR(magnetization_central(s), -0.5, 1e-14);
    EXPECT_NEAR(entanglement_entropy_central(s), 0.0, 1e-12);
  }
  EXPECT_NEAR(fidelity(satellite_cat_state(3, +1), satellite_cat_state(3, -1)), 0.0, 1e-15);
}

TEST(Cats, SatelliteCatAfterFourPeriods) {
  for (int n_sat : {5, 9, 19}) {
    const SpinState t = evolve(polarized_initial_state(n_sat, Backend::Symmetric), kHoDtc, 4);
    EXPECT_NEAR(fidelity(t, satellite_cat_state(n_sat, -1, Backend::Symmetric)), 1.0, 1e-10);
  }
}

TEST(Cats, BellCatRequiresUnitWeight) {
  EXPECT_THROW(bell_cat_state(4, +1, Complex(0.5, 0)), std::invalid_argument);
}

TEST(Cats, FixedPointsOfTheCycle) {
  // Even n_sat: the whole orbit repeats every 12 periods.
  for (int n_sat : {4, 6}) {
    const SpinState bc = bell_cat_state(n_sat, n_sat % 4 == 0 ? -1 : +1, Complex(0, -1));
    EXPECT_NEAR(fidelity(evolve(bc, kHoDtc, 12), bc), 1.0, 1e-10);
  }
  // Odd n_sat: the satellite cat sits on a 24-period orbit.
  for (int n_sat : {5, 7}) {
    const SpinState cat = satellite_cat_state(n_sat, -1);
    EXPECT_NEAR(fidelity(evolve(cat, kHoDtc, 24), cat), 1.0, 1e-10);
  }
}

TEST(Fidelity, Basics) {
  const SpinState s = test::random_state(4, Backend::Full);
  EXPECT_NEAR(fidelity(s, s), 1.0, 1e-14);
  EXPECT_NEAR(fidelity(new_product_state(4, Axis::PlusX, Axis::PlusX, Backend::Full),
                       new_product_state(4, Axis::MinusX, Axis::MinusX, Backend::Full)),
              0.0, 1e-15);
  EXPECT_THROW(fidelity(s, test::random_state(5, Backend::Full)), std::invalid_argument);
}

TEST(Fidelity, MixedBackends) {
  const SpinState sym = test::random_state(5, Backend::Symmetric);
  EXPECT_NEAR(fidelity(sym, embed_symmetric_in_full(sym)), 1.0, 1e-14);
}

TEST(Fidelity, ReturnAfterTwelvePeriodsEvenSatellites) {
  for (int n_sat : {4, 6, 20}) {
    const SpinState s = polarized_initial_state(n_sat, Backend::Symmetric);
    EXPECT_NEAR(fidelity(evolve(s, kHoDtc, 12), s), 1.0, 1e-10);
  }
}

TEST(Observe, FillsRecord) {
  const SpinState s = polarized_initial_state(4, Backend::Full);
  const Observation o = observe(s, s, 3, true);
  EXPECT_EQ(o.period_index, 3);
  EXPECT_DOUBLE_EQ(o.time(), 3.5);
  EXPECT_NEAR(o.m_sat, 2.0, 1e-14);
  EXPECT_NEAR(o.m_sat_per_spin, 0.5, 1e-14);
  EXPECT_NEAR(o.fidelity_to_initial, 1.0, 1e-14);
}

TEST(DetectPeriod, Alternating) {
  std::vector<double> x;
  for (int n = 0; n < 30; ++n) x.push_back(n % 2 == 0 ? 0.5 : -0.5);
  EXPECT_EQ(detect_period(x, 1e-12), 2);
}

TEST(DetectPeriod, Cosine) {
  std::vector<double> x;
  for (int n = 0; n < 60; ++n) x.push_back(std::cos(kPi * n / 6));
  EXPECT_EQ(detect_period(x, 1e-12), 12);
}

TEST(DetectPeriod, ConstantAndAperiodic) {
  EXPECT_EQ(detect_period(std::vector<double>(10, 0.25), 1e-12), 1);
  std::vector<double> x;
  for (int n = 0; n < 60; ++n) x.push_back(std::cos(1.0 * n));
  EXPECT_EQ(detect_period(x, 1e-8), std::nullopt);
  EXPECT_THROW(detect_period(std::vector<double>{}, 1e-8), std::invalid_argument);
}

TEST(DetectPeriod, NeedsThreeRepetitions) {
  std::vector<double> x;
  for (int n = 0; n < 20; ++n) x.push_back(std::cos(kPi * n / 6));
  EXPECT_EQ(detect_period(x, 1e-12), std::nullopt);
}

TEST(DetectPeriod, HigherOrderCrystal) {
  const Trajectory odd = run_trajectory(kHoDtc, polarized_initial_state(19, Backend::Symmetric), 120);
  EXPECT_EQ(detect_period(odd.m_sat_series(), 1e-8), 24);
  EXPECT_EQ(detect_period(odd.m_central_series(), 1e-8), 8);
  EXPECT_EQ(detect_period(odd.entropy_series(), 1e-8), 4);
  const Trajectory even = run_trajectory(kHoDtc, polarized_initial_state(8, Backend::Full), 60);
  EXPECT_EQ(detect_period(even.m_sat_series(), 1e-8), 12);
  EXPECT_EQ(detect_period(even.m_central_series(), 1e-8), 12);
  EXPECT_EQ(detect_period(even.entropy_series(), 1e-8), 6);
}

}  // namespace
}  // namespace csm
