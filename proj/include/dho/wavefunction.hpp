#pragma once

// Position-space Fock eigenfunctions in both time coordinates, superpositions
// and their quadrature norms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "dho/amplitudes.hpp"
#include "dho/errors.hpp"
#include "dho/quadrature.hpp"
#include "dho/spectrum.hpp"
#include "dho/timewarp.hpp"

namespace dho {

// Physicists' Hermite polynomial, H_{n+1} = 2y H_n - 2n H_{n-1}.
// Overflows to inf for large n and |y|; not trapped.
inline double hermite(int n, double y) {
  if (n < 0) throw DomainError("hermite: n must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * y * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace detail {

// (a/pi)^{1/4} / sqrt(2^n n!), log-space above n = 20.
inline double eigen_norm(int n, double a) {
  if (n <= 20) {
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return std::pow(a / std::numbers::pi, 0.25) / std::sqrt(std::ldexp(fact, n));
  }
  const double lg = 0.25 * std::log(a / std::numbers::pi) -
                    0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0));
  return std::exp(lg);
}

inline double scale_squared_tau(const OscillatorParams& p, double tau) {
  require_warp(p);
  if (!(tau > 0.0)) throw DomainError("wavefunction: tau must be > 0");
  const double a = 2.0 * p.omega * p.alpha * tau / p.hbar;
  if (!(a > 0.0)) throw DomainError("wavefunction: 2 omega alpha tau / hbar must be > 0");
  return a;
}

}  // namespace detail

// psi_n(x, tau) = (2 w a tau / pi hbar)^{1/4} (2^n n!)^{-1/2}
//                 H_n(sqrt(2 w a tau / hbar) x) exp(-w a tau x^2 / hbar)
inline double psi_n_tau(const OscillatorParams& p, int n, double x, double tau) {
  if (n < 0) throw DomainError("psi_n_tau: n must be >= 0");
  const double a = detail::scale_squared_tau(p, tau);
  return detail::eigen_norm(n, a) * hermite(n, std::sqrt(a) * x) * std::exp(-0.5 * a * x * x);
}

// Same eigenfunction written in t, including the exp(alpha t / 2) amplitude factor.
inline double psi_n_t(const OscillatorParams& p, int n, double x, double t) {
  require_warp(p);
  if (n < 0) throw DomainError("psi_n_t: n must be >= 0");
  if (!(p.K > 0.0)) throw DomainError("psi_n_t: K must be > 0");
  const double a = 2.0 * p.omega * p.alpha * p.K / p.hbar;
  if (!(a > 0.0)) throw DomainError("psi_n_t: 2 omega alpha K / hbar must be > 0");
  const double grow = std::exp(p.alpha * t);
  return detail::eigen_norm(n, a) * hermite(n, std::sqrt(a) * grow * x) *
         std::exp(0.5 * p.alpha * t - 0.5 * a * x * x * grow * grow);
}

// psi_0..psi_{n_max} at one point via the normalized Hermite-function recurrence.
inline std::vector<double> eigenfunctions_tau(const OscillatorParams& p, int n_max, double x,
                                              double tau) {
  const double a = detail::scale_squared_tau(p, tau);
  const double lam = std::sqrt(a);
  const double y = lam * x;
  std::vector<double> out(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  out[0] = std::sqrt(lam) * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * y * y);
  if (n_max >= 1) out[1] = std::numbers::sqrt2 * y * out[0];
  for (int n = 1; n < n_max; ++n)
    out[n + 1] = std::sqrt(2.0 / (n + 1)) * y * out[n] - std::sqrt(double(n) / (n + 1)) * out[n - 1];
  return out;
}

struct WavefunctionSample {
  std::vector<double> x;
  std::vector<Complex> values;
  TimeCoordinate coordinate = TimeCoordinate::t;
  double time = 0.0;
  std::optional<int> n;  // nullopt: superposition

  std::vector<double> probability() const {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [](const Complex& v) { return std::norm(v); });
    return out;
  }
};

namespace detail {
inline void require_grid(std::span<const double> x) {
  if (x.empty()) throw DomainError("wavefunction: empty grid");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw DomainError("wavefunction: grid must be strictly increasing");
}
}  // namespace detail

inline WavefunctionSample sample_eigenfunction_t(const OscillatorParams& p, int n,
                                                 std::span<const double> x_grid, double t) {
  detail::require_grid(x_grid);
  WavefunctionSample s;
  s.x.assign(x_grid.begin(), x_grid.end());
  s.values.reserve(x_grid.size());
  for (double x : x_grid) s.values.emplace_back(psi_n_t(p, n, x, t), 0.0);
  s.coordinate = TimeCoordinate::t;
  s.time = t;
  s.n = n;
  return s;
}

inline WavefunctionSample sample_eigenfunction_tau(const OscillatorParams& p, int n,
                                                   std::span<const double> x_grid, double tau) {
  detail::require_grid(x_grid);
  WavefunctionSample s;
  s.x.assign(x_grid.begin(), x_grid.end());
  s.values.reserve(x_grid.size());
  for (double x : x_grid) s.values.emplace_back(psi_n_tau(p, n, x, tau), 0.0);
  s.coordinate = TimeCoordinate::tau;
  s.time = tau;
  s.n = n;
  return s;
}

// Psi(x, tau) = sum_n c_n psi_n(x, tau) exp(i theta_n(tau)).
inline WavefunctionSample superpose(const OscillatorParams& p, const ModeAmplitudes& coeffs,
                                    std::span<const double> x_grid, double tau) {
  detail::require_grid(x_grid);
  if (coeffs.c.empty()) throw DomainError("superpose: no coefficients");
  for (const auto& c : coeffs.c)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("superpose: non-finite coefficient");
  const int n_max = static_cast<int>(coeffs.c.size()) - 1;
  std::vector<Complex> weights(coeffs.c.size());
  for (int n = 0; n <= n_max; ++n)
    weights[n] = coeffs.c[n] * std::polar(1.0, phase_theta(p, n, tau));

  WavefunctionSample s;
  s.x.assign(x_grid.begin(), x_grid.end());
  s.values.reserve(x_grid.size());
  for (double x : x_grid) {
    const auto basis = eigenfunctions_tau(p, n_max, x, tau);
    Complex acc{0.0, 0.0};
    for (int n = 0; n <= n_max; ++n)
      if (weights[n] != Complex{}) acc += weights[n] * basis[n];
    s.values.push_back(acc);
  }
  s.coordinate = TimeCoordinate::tau;
  s.time = tau;
  s.n = std::nullopt;
  return s;
}

struct NormResult {
  double value = 0.0;
  bool support_warning = false;  // |psi| at an endpoint >= 1e-10 of the peak
};

// Composite Simpson of |psi|^2 over the sample grid.
inline NormResult quadrature_norm(const WavefunctionSample& sample) {
  if (sample.x.size() != sample.values.size())
    throw DomainError("quadrature_norm: grid/value length mismatch");
  const auto prob = sample.probability();
  NormResult r;
  r.value = quad::simpson(sample.x, prob);
  double peak = 0.0;
  for (const auto& v : sample.values) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(sample.values.front()), std::abs(sample.values.back()));
  r.support_warning = !(edge < 1e-10 * peak);
  return r;
}

// Standard deviation of x under |psi|^2 (mean included), by Simpson quadrature.
inline double position_width(const WavefunctionSample& sample) {
  const auto prob = sample.probability();
  std::vector<double> m1(prob.size()), m2(prob.size());
  for (std::size_t i = 0; i < prob.size(); ++i) {
    m1[i] = sample.x[i] * prob[i];
    m2[i] = sample.x[i] * sample.x[i] * prob[i];
  }
  const double z = quad::simpson(sample.x, prob);
  const double mean = quad::simpson(sample.x, m1) / z;
  const double second = quad::simpson(sample.x, m2) / z;
  return std::sqrt(std::max(0.0, second - mean * mean));
}

}  // namespace dho
