#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dho/dynamics.hpp"
#include "dho/quadrature.hpp"
#include "dho/wavefunction.hpp"
#include "test_util.hpp"

using namespace dho;
using dho::test::rel_err;
using dho::test::uniform;

namespace {

OscillatorParams fig1() { return OscillatorParams::make(0.005, 1.0, 1.0); }

WavefunctionSample real_sample(std::vector<double> x, const std::vector<double>& v) {
  WavefunctionSample s;
  s.x = std::move(x);
  for (double y : v) s.values.emplace_back(y, 0.0);
  return s;
}

double overlap(const std::vector<double>& x, const std::vector<double>& f, const std::vector<double>& g) {
  std::vector<double> fg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) fg[i] = f[i] * g[i];
  return quad::simpson(x, fg);
}

}  // namespace

TEST(Hermite, LowOrders) {
  EXPECT_EQ(hermite(0, 3.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite(1, 0.7), 1.4);
  EXPECT_THROW(hermite(-1, 0.0), DomainError);
}

TEST(Hermite, MatchesExplicitPolynomials) {
  const double y = 1.3;
  const double y2 = y * y;
  EXPECT_NEAR(hermite(4, y), 16 * y2 * y2 - 48 * y2 + 12, 1e-12);
  EXPECT_NEAR(hermite(4, y), -23.4224, 1e-12);
  EXPECT_NEAR(hermite(5, y), 32 * y2 * y2 * y - 160 * y2 * y + 120 * y, 1e-11);
  EXPECT_NEAR(hermite(6, -0.4), 64 * std::pow(0.4, 6) - 480 * std::pow(0.4, 4) + 720 * 0.16 - 120,
              1e-11);
}

TEST(PsiTau, GaussianPeak) {
  const auto p = OscillatorParams::make(0.5, 1.0, 1.0);  // 2 w a tau / hbar = 1 at tau = 1
  EXPECT_NEAR(psi_n_tau(p, 0, 0.0, 1.0), std::pow(std::numbers::pi, -0.25), 1e-15);
  for (double tau : {0.01, 1.0, 30.0}) EXPECT_EQ(psi_n_tau(p, 1, 0.0, tau), 0.0);
  EXPECT_THROW(psi_n_tau(p, 0, 0.0, 0.0), DomainError);
}

TEST(PsiTau, SecondStateNormalizedByAdaptiveQuadrature) {
  const auto p = fig1();
  const double integral = quad::adaptive_simpson(
      [&](double x) { return std::pow(psi_n_tau(p, 2, x, p.K), 2); }, -12.0, 12.0, 1e-13);
  EXPECT_NEAR(integral, 1.0, 1e-8);
}

TEST(PsiTau, LogSpaceNormalizationAboveTwenty) {
  const auto p = OscillatorParams::make(0.5, 1.0);
  const auto x = quad::linspace(-14.0, 14.0, 8001);
  for (int n : {19, 20, 21, 30, 45}) {
    std::vector<double> v;
    for (double xi : x) v.push_back(psi_n_tau(p, n, xi, 1.0));
    EXPECT_NEAR(overlap(x, v, v), 1.0, 1e-9) << "n=" << n;
  }
}

TEST(PsiTau, RecurrenceAgreesWithDirectEvaluation) {
  const auto p = OscillatorParams::make(0.75, 1.3, 0.8, 2.0);
  for (double x : {-2.0, -0.3, 0.0, 0.77, 1.9}) {
    const auto all = eigenfunctions_tau(p, 40, x, 1.7);
    for (int n = 0; n <= 40; ++n)
      EXPECT_NEAR(all[n], psi_n_tau(p, n, x, 1.7), 1e-12) << "n=" << n << " x=" << x;
  }
}

TEST(PsiT, BasePointMatchesTauForm) {
  const auto p = OscillatorParams::make(0.3, 1.2, 1.0, 0.9);
  for (int n = 0; n < 8; ++n)
    for (double x : {-1.0, 0.25, 2.0})
      EXPECT_LT(rel_err(psi_n_t(p, n, x, 0.0), psi_n_tau(p, n, x, p.K)), 1e-13);
}

TEST(PsiT, FigureOnePeakDensity) {
  const double v = psi_n_t(fig1(), 0, 0.0, 0.0);
  EXPECT_NEAR(v * v, 1.0 / std::sqrt(std::numbers::pi), 1e-15);
}

TEST(WavefunctionProperty, CoordinateConsistency) {
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = OscillatorParams::make(uniform(0.005, 2.0), uniform(0.2, 3.0), uniform(0.5, 2.0),
                                          uniform(0.1, 5.0));
    const int n = dho::test::uniform_int(0, 15);
    const double t = uniform(-2.0, 2.0);
    const double tau = tau_of_t(p, t);
    const double width = std::sqrt(p.hbar / (2.0 * p.omega * p.alpha * tau));
    const double x = uniform(-3.0, 3.0) * width;
    const double a = psi_n_t(p, n, x, t);
    const double b = psi_n_tau(p, n, x, tau);
    // Near a node the relative error is meaningless; scale by the peak instead.
    const double peak = std::pow(2.0 * p.omega * p.alpha * tau / (std::numbers::pi * p.hbar), 0.25);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::max(std::abs(b), peak)) << "n=" << n << " t=" << t;
  }
}

TEST(WavefunctionProperty, ParityIsExact) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = dho::test::uniform_int(0, 30);
    const double x = uniform(0.0, 6.0);
    const double t = uniform(-1.0, 3.0);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_EQ(psi_n_t(p, n, -x, t), sign * psi_n_t(p, n, x, t));
    EXPECT_EQ(psi_n_tau(p, n, -x, 1.3), sign * psi_n_tau(p, n, x, 1.3));
  }
}

TEST(Orthonormality, UpToEight) {
  const auto p = fig1();
  for (double t : {0.0, 250.0}) {
    const auto x = t == 0.0 ? quad::linspace(-30.0, 30.0, 4001) : quad::linspace(-10.0, 10.0, 4001);
    std::vector<std::vector<double>> psi(9);
    for (int n = 0; n <= 8; ++n)
      for (double xi : x) psi[n].push_back(psi_n_t(p, n, xi, t));
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= 8; ++n)
        EXPECT_NEAR(overlap(x, psi[m], psi[n]), m == n ? 1.0 : 0.0, 1e-7)
            << "m=" << m << " n=" << n << " t=" << t;
  }
}

TEST(Localization, WidthShrinksAsExpMinusAlphaT) {
  const auto p = fig1();
  const auto early = sample_eigenfunction_t(p, 0, quad::linspace(-30.0, 30.0, 4001), 0.0);
  const auto late = sample_eigenfunction_t(p, 0, quad::linspace(-10.0, 10.0, 4001), 250.0);
  EXPECT_LT(rel_err(position_width(late) / position_width(early), std::exp(-1.25)), 1e-6);
  EXPECT_NEAR(quadrature_norm(early).value, 1.0, 1e-8);
  EXPECT_NEAR(quadrature_norm(late).value, 1.0, 1e-8);
  EXPECT_FALSE(quadrature_norm(early).support_warning);
  EXPECT_FALSE(quadrature_norm(late).support_warning);
}

TEST(Localization, WidthLawOverRandomTimes) {
  const auto p = OscillatorParams::make(0.2, 1.0);
  const double sigma0 = std::sqrt(p.hbar / (4.0 * p.omega * p.alpha * p.K));
  for (int trial = 0; trial < 20; ++trial) {
    const double t = uniform(-2.0, 6.0);
    const double sigma = sigma0 * std::exp(-p.alpha * t);
    const auto s = sample_eigenfunction_t(p, 0, quad::linspace(-12 * sigma, 12 * sigma, 2001), t);
    EXPECT_LT(rel_err(position_width(s), sigma), 1e-6) << "t=" << t;
  }
}

TEST(QuadratureNorm, UnitGaussian) {
  const auto x = quad::linspace(-10.0, 10.0, 2001);
  std::vector<double> v;
  for (double xi : x) v.push_back(std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi));
  const auto r = quadrature_norm(real_sample(x, v));
  EXPECT_NEAR(r.value, 1.0, 1e-10);
  EXPECT_FALSE(r.support_warning);
}

TEST(QuadratureNorm, ThirdEigenfunction) {
  const auto p = OscillatorParams::make(0.5, 1.0);
  const auto s = sample_eigenfunction_tau(p, 3, quad::linspace(-10.0, 10.0, 2001), 1.0);
  EXPECT_NEAR(quadrature_norm(s).value, 1.0, 1e-8);
}

TEST(QuadratureNorm, TruncatedGridWarns) {
  const auto p = OscillatorParams::make(0.5, 1.0);
  const auto s = sample_eigenfunction_tau(p, 0, quad::linspace(-0.5, 0.5, 101), 1.0);
  EXPECT_TRUE(quadrature_norm(s).support_warning);
}

TEST(Superpose, SingleModeAtKIsTheEigenfunction) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  const auto x = quad::linspace(-5.0, 5.0, 201);
  ModeAmplitudes c;
  c.c = {1.0, 0.0, 0.0};
  const auto s = superpose(p, c, x, p.K);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(s.values[i].real(), psi_n_tau(p, 0, x[i], p.K), 1e-15);
    EXPECT_EQ(s.values[i].imag(), 0.0);
  }
  EXPECT_FALSE(s.n.has_value());
}

TEST(Superpose, TwoModeNormalization) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  ModeAmplitudes c;
  c.c = {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0)};
  for (double tau : {p.K, 3.0, 10.0}) {
    const auto s = superpose(p, c, quad::linspace(-8.0, 8.0, 2001), tau);
    EXPECT_NEAR(quadrature_norm(s).value, 1.0, 1e-10) << "tau=" << tau;
  }
}

TEST(Superpose, ParsevalAgainstIntegratedCoefficients) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  IntegrateOptions opts;
  opts.sample_times = {5.0};
  const auto traj = integrate(p, 0, 5.0, 60, opts);
  const auto& c = traj.samples.back();
  const double tau = tau_of_t(p, 5.0);
  const auto s = superpose(p, c, quad::linspace(-1.0, 1.0, 4001), tau);
  EXPECT_NEAR(quadrature_norm(s).value, c.norm_squared(), 1e-8);
}

TEST(Superpose, RejectsNonFiniteCoefficients) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  ModeAmplitudes c;
  c.c = {1.0, Complex(std::nan(""), 0.0)};
  EXPECT_THROW(superpose(p, c, quad::linspace(-1.0, 1.0, 11), 1.0), DomainError);
}

// Matrix elements <m|d/dtau|k> of the instantaneous eigenfunctions, by
// central differences in tau and Simpson in x. The diagonal element drops
// out of the coefficient equations; the off-diagonal ones fix the coupling.
TEST(EigenfunctionOverlap, DerivativeMatrixElements) {
  const auto p = OscillatorParams::make(0.75, 1.0);
  const auto x = quad::linspace(-9.0, 9.0, 4001);
  for (double tau : {p.K, 2.0, 5.0}) {
    const double h = 1e-5 * tau;
    const int n_max = 8;
    std::vector<std::vector<double>> psi(n_max + 1), dpsi(n_max + 1);
    for (double xi : x) {
      const auto c = eigenfunctions_tau(p, n_max, xi, tau);
      const auto hi = eigenfunctions_tau(p, n_max, xi, tau + h);
      const auto lo = eigenfunctions_tau(p, n_max, xi, tau - h);
      for (int n = 0; n <= n_max; ++n) {
        psi[n].push_back(c[n]);
        dpsi[n].push_back((hi[n] - lo[n]) / (2.0 * h));
      }
    }
    for (int m = 0; m <= n_max; ++m) {
      for (int k = 0; k <= n_max; ++k) {
        double want = 0.0;
        if (k == m - 2) want = -std::sqrt(double(m) * (m - 1)) / (4.0 * tau);
        if (k == m + 2) want = std::sqrt(double(m + 2) * (m + 1)) / (4.0 * tau);
        EXPECT_NEAR(overlap(x, psi[m], dpsi[k]), want, 1e-7)
            << "m=" << m << " k=" << k << " tau=" << tau;
      }
    }

    // The coefficient equation built from these elements is rhs_tau:
    // dc_m/dtau = -sum_k c_k <m|d/dtau|k> e^{i(theta_k - theta_m)}.
    std::vector<Complex> c(n_max + 1);
    for (auto& v : c) v = {uniform(-1, 1), uniform(-1, 1)};
    const auto want = rhs_tau(p, tau, c);
    for (int m = 0; m <= n_max; ++m) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k <= n_max; ++k) {
        const double d = overlap(x, psi[m], dpsi[k]);
        acc -= c[k] * d * std::polar(1.0, phase_theta(p, k, tau) - phase_theta(p, m, tau));
      }
      EXPECT_NEAR(std::abs(acc - want[m]), 0.0, 1e-6) << "m=" << m << " tau=" << tau;
    }
  }
}
