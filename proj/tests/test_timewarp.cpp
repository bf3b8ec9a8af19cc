#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dho/timewarp.hpp"
#include "test_util.hpp"

using namespace dho;
using dho::test::rel_err;
using dho::test::uniform;

namespace {

OscillatorParams params(double alpha, double K) { return OscillatorParams::make(alpha, 1.0, 1.0, K); }

}  // namespace

TEST(TauOfT, BasePointIsK) { EXPECT_DOUBLE_EQ(tau_of_t(params(0.005, 100.0), 0.0), 100.0); }

TEST(TauOfT, DoublesAtLn2Over2) {
  EXPECT_NEAR(tau_of_t(params(1.0, 0.5), std::log(2.0) / 2.0), 1.0, 1e-15);
}

TEST(TauOfT, MatchesHighPrecisionValue) {
  // (2/3) e^3, evaluated to 30 digits with mpmath.
  const double want = 13.3903579487917784939523531031;
  EXPECT_LT(rel_err(tau_of_t(params(0.75, 1.0 / 1.5), 2.0), want), 1e-15);
}

TEST(TauOfT, ZeroDampingIsDegenerate) {
  const auto p = OscillatorParams::make(0.0, 1.0);
  EXPECT_THROW(tau_of_t(p, 1.0), DegenerateWarpError);
  // Still a domain error for callers that only care about that.
  EXPECT_THROW(tau_of_t(p, 1.0), DomainError);
  EXPECT_THROW(t_of_tau(p, 1.0), DegenerateWarpError);
}

TEST(TauOfT, DefaultKIsHalfInverseAlpha) {
  EXPECT_DOUBLE_EQ(OscillatorParams::make(0.25, 1.0).K, 2.0);
  EXPECT_DOUBLE_EQ(tau_of_t(OscillatorParams::make(0.25, 1.0), 0.0), 2.0);
}

TEST(TOfTau, Examples) {
  EXPECT_EQ(t_of_tau(params(1.0, 1.0), 1.0), 0.0);
  EXPECT_NEAR(t_of_tau(params(0.5, 2.0), 2.0 * std::numbers::e), 1.0, 1e-15);
  EXPECT_NEAR(t_of_tau(params(0.75, 1.0), 5.0), std::log(5.0) / 1.5, 1e-15);
}

TEST(TOfTau, RejectsWrongSign) {
  EXPECT_THROW(t_of_tau(params(1.0, 1.0), 0.0), DomainError);
  EXPECT_THROW(t_of_tau(params(1.0, 1.0), -2.0), DomainError);
  EXPECT_THROW(t_of_tau(params(1.0, -1.0), 2.0), DomainError);
  // Negative K with negative tau is on the valid branch.
  EXPECT_NEAR(t_of_tau(params(1.0, -1.0), -1.0), 0.0, 1e-15);
}

TEST(TimeWarpProperty, RoundTrip) {
  for (int trial = 0; trial < 2000; ++trial) {
    const double alpha = uniform(0.01, 2.0);
    const double K = uniform(0.1, 10.0);
    const double t = uniform(-10.0, 10.0);
    const auto p = params(alpha, K);
    const double back = t_of_tau(p, tau_of_t(p, t));
    EXPECT_LE(std::abs(back - t), 1e-12 * std::abs(t) + 1e-15)
        << "alpha=" << alpha << " K=" << K << " t=" << t;
  }
}

TEST(TimeWarpProperty, StrictlyIncreasing) {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = params(uniform(0.01, 2.0), uniform(0.1, 10.0));
    double a = uniform(-10.0, 10.0), b = uniform(-10.0, 10.0);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_LT(tau_of_t(p, a), tau_of_t(p, b));
    EXPECT_GT(dtau_dt(p, a), 0.0);
  }
}

TEST(Helmholtz, TransformedEquationIsSelfAdjoint) {
  for (double alpha : {0.005, 0.75, 1.0, 2.0}) {
    auto a = [alpha](double tau) { return 4.0 * alpha * alpha * tau * tau; };
    auto b = [alpha](double tau) { return 8.0 * alpha * alpha * tau; };
    std::vector<double> taus{0.5, 1.0, 2.0};
    for (int i = 0; i < 50; ++i) taus.push_back(dho::test::log_uniform(1e-3, 1e3));
    const auto r = helmholtz_selfadjoint_residual(a, b, taus);
    for (std::size_t i = 0; i < taus.size(); ++i)
      EXPECT_LT(std::abs(r[i]), 1e-8 * (1.0 + std::abs(b(taus[i])))) << "tau=" << taus[i];
  }
}

TEST(Helmholtz, OriginalEquationFailsByTwoAlpha) {
  const double alpha = 0.75;
  const std::vector<double> taus{0.5, 1.0, 2.0};
  const auto r = helmholtz_selfadjoint_residual([](double) { return 1.0; },
                                                [&](double) { return 2.0 * alpha; }, taus);
  for (double v : r) EXPECT_EQ(v, 2.0 * alpha);
}

TEST(Helmholtz, UndampedIsConservative) {
  const std::vector<double> taus{0.5, 1.0, 2.0};
  const auto r = helmholtz_selfadjoint_residual([](double) { return 1.0; },
                                                [](double) { return 0.0; }, taus);
  for (double v : r) EXPECT_EQ(v, 0.0);
}

TEST(Helmholtz, NonFiniteSampleIsReportedNotThrown) {
  const std::vector<double> taus{1.0, 0.0, 2.0};
  const auto r = helmholtz_selfadjoint_residual([](double tau) { return std::log(tau); },
                                                [](double) { return 0.0; }, taus);
  EXPECT_TRUE(std::isfinite(r[0]));
  EXPECT_TRUE(std::isnan(r[1]));
  EXPECT_TRUE(std::isfinite(r[2]));
}

TEST(SolveWarp, ConstantAlphaCollapsesToExponential) {
  const double alpha = 0.75, K = 2.0 / 3.0;
  const auto grid = std::vector<double>{[] {
    std::vector<double> g;
    for (int i = 0; i <= 400; ++i) g.push_back(-1.0 + 0.01 * i);
    return g;
  }()};
  const auto warp = solve_warp_time_dependent([&](double) { return alpha; }, grid, K);
  const auto p = params(alpha, K);
  for (const auto& s : warp.samples()) {
    EXPECT_LT(rel_err(s.tau, tau_of_t(p, s.t)), 1e-9) << "t=" << s.t;
    EXPECT_LT(rel_err(s.dtau_dt, dtau_dt(p, s.t)), 1e-9) << "t=" << s.t;
  }
  // Interpolated values between nodes are within the solver tolerance.
  for (double t : {-0.995, 0.123, 1.777, 2.999})
    EXPECT_LT(rel_err(warp.tau(t), tau_of_t(p, t)), 1e-8);
  EXPECT_NEAR(warp.t_of(tau_of_t(p, 1.2345)), 1.2345, 1e-8);
}

TEST(SolveWarp, DecayingAlphaMatchesQuadrature) {
  // alpha(t) = a0/(1+t): tau' = 2 a0 K (1+t)^{2 a0}, integrated in closed form.
  const double a0 = 0.6, K = 1.5;
  std::vector<double> grid;
  for (int i = 0; i <= 500; ++i) grid.push_back(0.02 * i);
  const auto warp = solve_warp_time_dependent([&](double t) { return a0 / (1.0 + t); }, grid, K);
  for (const auto& s : warp.samples()) {
    const double dtau = 2.0 * a0 * K * std::pow(1.0 + s.t, 2.0 * a0);
    const double tau =
        K + 2.0 * a0 * K * (std::pow(1.0 + s.t, 2.0 * a0 + 1.0) - 1.0) / (2.0 * a0 + 1.0);
    EXPECT_LT(rel_err(s.dtau_dt, dtau), 1e-9) << "t=" << s.t;
    EXPECT_LT(rel_err(s.tau, tau), 1e-9) << "t=" << s.t;
    EXPECT_GT(s.dtau_dt, 0.0);
  }
}

TEST(SolveWarp, ZeroAlphaIsDegenerate) {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  EXPECT_THROW(solve_warp_time_dependent([](double) { return 0.0; }, grid, 1.0),
               DegenerateWarpError);
}

TEST(SolveWarp, CoarseGridReportsUsableStep) {
  const std::vector<double> grid{0.0, 2.0, 4.0};
  double suggested = 0.0;
  try {
    solve_warp_time_dependent([](double) { return 1.0; }, grid, 0.5);
    FAIL() << "expected GridTooCoarseError";
  } catch (const GridTooCoarseError& e) {
    suggested = e.max_step();
  }
  ASSERT_GT(suggested, 0.0);
  ASSERT_LT(suggested, 2.0);
  // A grid at half the suggested step passes.
  std::vector<double> fine;
  const int n = static_cast<int>(std::ceil(4.0 / (0.5 * suggested)));
  for (int i = 0; i <= n; ++i) fine.push_back(4.0 * i / n);
  EXPECT_NO_THROW(solve_warp_time_dependent([](double) { return 1.0; }, fine, 0.5));
}

TEST(SolveWarp, RejectsBadGrids) {
  EXPECT_THROW(solve_warp_time_dependent([](double) { return 1.0; }, std::vector<double>{0.0}, 1.0),
               DomainError);
  EXPECT_THROW(solve_warp_time_dependent([](double) { return 1.0; },
                                         std::vector<double>{0.0, 1.0, 1.0}, 1.0),
               DomainError);
  EXPECT_THROW(solve_warp_time_dependent([](double) { return 1.0; },
                                         std::vector<double>{0.0, 1.0}, 0.0),
               DomainError);
}
