#pragma once

#include <cmath>
#include <vector>

#include "dho/errors.hpp"
#include "dho/timewarp.hpp"

namespace dho {

enum class TimeCoordinate { t, tau };

inline const char* to_string(TimeCoordinate c) { return c == TimeCoordinate::t ? "t" : "tau"; }

struct EnergyLevel {
  int n = 0;
  double value = 0.0;
  TimeCoordinate coordinate = TimeCoordinate::t;
  double at = 0.0;
};

namespace detail {
inline void require_level(int n) {
  if (n < 0) throw DomainError("quantum number n must be >= 0");
}
inline void require_positive_tau(double tau) {
  if (!(tau > 0.0)) throw DomainError("warped time tau must be > 0");
}
}  // namespace detail

// E_n(tau) = hbar omega / (2 alpha tau) (n + 1/2)
inline double energy_tau(const OscillatorParams& p, int n, double tau) {
  require_warp(p);
  detail::require_level(n);
  detail::require_positive_tau(tau);
  return p.hbar * p.omega / (2.0 * p.alpha * tau) * (n + 0.5);
}

// E_n(t) = hbar omega / (2 alpha K) exp(-2 alpha t) (n + 1/2)
inline double energy_t(const OscillatorParams& p, int n, double t) {
  require_warp(p);
  detail::require_level(n);
  return p.hbar * p.omega / (2.0 * p.alpha * p.K) * std::exp(-2.0 * p.alpha * t) * (n + 0.5);
}

inline std::vector<EnergyLevel> ladder(const OscillatorParams& p, int n_max, TimeCoordinate coord,
                                       double at) {
  std::vector<EnergyLevel> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double e = coord == TimeCoordinate::t ? energy_t(p, n, at) : energy_tau(p, n, at);
    out.push_back({n, e, coord, at});
  }
  return out;
}

// Dynamical phase theta_n(tau) = -(1/hbar) int_K^tau E_n(tau') dtau'
//                              = -(omega / 2 alpha)(n + 1/2) ln(tau / K).
inline double phase_theta(const OscillatorParams& p, int n, double tau) {
  require_warp(p);
  detail::require_level(n);
  detail::require_positive_tau(tau);
  if (!(p.K > 0.0)) throw DomainError("phase_theta: K must be > 0");
  return -(p.omega / (2.0 * p.alpha)) * (n + 0.5) * std::log(tau / p.K);
}

// H = kinetic * p^2 + potential * q^2 with kinetic = 1/(8 alpha^2 tau^2), potential = omega^2/2.
struct HamiltonianCoefficients {
  double kinetic;
  double potential;
};

inline HamiltonianCoefficients hamiltonian_coefficients(const OscillatorParams& p, double tau) {
  require_warp(p);
  detail::require_positive_tau(tau);
  return {1.0 / (8.0 * p.alpha * p.alpha * tau * tau), 0.5 * p.omega * p.omega};
}

}  // namespace dho
