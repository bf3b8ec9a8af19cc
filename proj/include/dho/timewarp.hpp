#pragma once

// Oscillator parameters and the exponential time warp tau = K exp(2 alpha t)
// under which q'' + 2 alpha q' + omega^2 q = 0 becomes self-adjoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dho/errors.hpp"
#include "dho/ode.hpp"

namespace dho {

// One damped oscillator q'' + 2 alpha q' + omega^2 q = 0 (unit mass; K absorbs m).
struct OscillatorParams {
  double alpha = 0.0;  // damping coefficient, 1/time
  double omega = 1.0;  // angular frequency, 1/time
  double hbar = 1.0;
  double K = 1.0;      // warp integration constant: tau(0) = K

  // K defaults to 1/(2 alpha), which makes E_n(0) the undamped ladder.
  static OscillatorParams make(double alpha, double omega, double hbar = 1.0,
                               std::optional<double> K = std::nullopt) {
    OscillatorParams p;
    p.alpha = alpha;
    p.omega = omega;
    p.hbar = hbar;
    if (K) {
      p.K = *K;
    } else {
      p.K = alpha != 0.0 ? 1.0 / (2.0 * alpha) : 1.0;
    }
    p.validate();
    return p;
  }

  void validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(omega) || !std::isfinite(hbar) ||
        !std::isfinite(K))
      throw DomainError("OscillatorParams: non-finite parameter");
    if (omega <= 0.0) throw DomainError("OscillatorParams: omega must be > 0");
    if (hbar <= 0.0) throw DomainError("OscillatorParams: hbar must be > 0");
    if (K == 0.0) throw DomainError("OscillatorParams: K must be non-zero");
  }
};

inline void require_warp(const OscillatorParams& p) {
  p.validate();
  if (p.alpha == 0.0)
    throw DegenerateWarpError("alpha = 0: undamped oscillator needs no time warp");
}

inline double tau_of_t(const OscillatorParams& p, double t) {
  require_warp(p);
  return p.K * std::exp(2.0 * p.alpha * t);
}

inline double dtau_dt(const OscillatorParams& p, double t) {
  return 2.0 * p.alpha * tau_of_t(p, t);
}

inline double t_of_tau(const OscillatorParams& p, double tau) {
  require_warp(p);
  const double ratio = tau / p.K;
  if (!(ratio > 0.0)) throw DomainError("t_of_tau: tau/K must be > 0");
  return std::log(ratio) / (2.0 * p.alpha);
}

// ---------------------------------------------------------------------------
// Self-adjointness residual.
//
// For a(tau) q'' + b(tau) q' + g(q, tau) = 0 the second Helmholtz condition
// reduces to b = da/dtau. Returns b - da/dtau at each sample; da/dtau uses a
// central difference with step 1e-6 * |tau| (1e-6 at tau = 0). Non-finite
// evaluations come back as NaN for that sample.
inline std::vector<double> helmholtz_selfadjoint_residual(const std::function<double(double)>& a,
                                                          const std::function<double(double)>& b,
                                                          std::span<const double> tau_samples) {
  std::vector<double> out;
  out.reserve(tau_samples.size());
  for (double tau : tau_samples) {
    const double h = tau != 0.0 ? 1e-6 * std::abs(tau) : 1e-6;
    const double ap = a(tau + h);
    const double am = a(tau - h);
    const double bv = b(tau);
    const double r = bv - (ap - am) / (2.0 * h);
    out.push_back(std::isfinite(r) ? r : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

// ---------------------------------------------------------------------------

struct WarpSample {
  double t;
  double tau;
  double dtau_dt;
};

// Map t <-> tau, either the closed-form exponential or a sampled solution of
// the alpha(t) constraint interpolated by cubic Hermite splines.
class TimeWarp {
 public:
  enum class Kind { analytic_exponential, sampled };

  static TimeWarp analytic(double K, double alpha) {
    if (alpha == 0.0) throw DegenerateWarpError("TimeWarp: alpha = 0");
    if (K == 0.0 || !std::isfinite(K) || !std::isfinite(alpha))
      throw DomainError("TimeWarp: invalid K or alpha");
    if (K * alpha < 0.0) throw DomainError("TimeWarp: dtau/dt must be positive (K * alpha > 0)");
    TimeWarp w;
    w.kind_ = Kind::analytic_exponential;
    w.K_ = K;
    w.alpha_ = alpha;
    return w;
  }

  static TimeWarp sampled(std::vector<WarpSample> samples) {
    if (samples.size() < 2) throw DomainError("TimeWarp: need at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      if (!std::isfinite(s.t) || !std::isfinite(s.tau) || !std::isfinite(s.dtau_dt))
        throw DomainError("TimeWarp: non-finite sample");
      if (!(s.dtau_dt > 0.0)) throw DomainError("TimeWarp: dtau/dt must be > 0");
      if (i > 0 && !(s.t > samples[i - 1].t))
        throw DomainError("TimeWarp: sample times must be strictly increasing");
      if (i > 0 && !(s.tau > samples[i - 1].tau))
        throw DomainError("TimeWarp: tau must be strictly increasing");
    }
    TimeWarp w;
    w.kind_ = Kind::sampled;
    w.samples_ = std::move(samples);
    return w;
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<WarpSample>& samples() const noexcept { return samples_; }

  double tau(double t) const {
    if (kind_ == Kind::analytic_exponential) return K_ * std::exp(2.0 * alpha_ * t);
    const auto [i, s] = locate(t);
    const auto& a = samples_[i];
    const auto& b = samples_[i + 1];
    const double h = b.t - a.t;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * a.tau + (s3 - 2 * s2 + s) * h * a.dtau_dt +
           (-2 * s3 + 3 * s2) * b.tau + (s3 - s2) * h * b.dtau_dt;
  }

  double dtau_dt(double t) const {
    if (kind_ == Kind::analytic_exponential) return 2.0 * alpha_ * K_ * std::exp(2.0 * alpha_ * t);
    const auto [i, s] = locate(t);
    const auto& a = samples_[i];
    const auto& b = samples_[i + 1];
    const double h = b.t - a.t;
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * a.tau + (-6 * s2 + 6 * s) * b.tau) / h +
           (3 * s2 - 4 * s + 1) * a.dtau_dt + (3 * s2 - 2 * s) * b.dtau_dt;
  }

  double t_of(double tau_value) const {
    if (kind_ == Kind::analytic_exponential) {
      const double ratio = tau_value / K_;
      if (!(ratio > 0.0)) throw DomainError("TimeWarp::t_of: tau/K must be > 0");
      return std::log(ratio) / (2.0 * alpha_);
    }
    if (tau_value < samples_.front().tau || tau_value > samples_.back().tau)
      throw DomainError("TimeWarp::t_of: tau outside sampled range");
    auto it = std::upper_bound(samples_.begin(), samples_.end(), tau_value,
                               [](double v, const WarpSample& s) { return v < s.tau; });
    std::size_t i = it == samples_.begin() ? 0 : static_cast<std::size_t>(it - samples_.begin()) - 1;
    if (i + 1 >= samples_.size()) i = samples_.size() - 2;
    // Safeguarded Newton on the monotone Hermite piece.
    double lo = samples_[i].t, hi = samples_[i + 1].t;
    double t = lo + (hi - lo) * (tau_value - samples_[i].tau) /
                        (samples_[i + 1].tau - samples_[i].tau);
    for (int iter = 0; iter < 100; ++iter) {
      const double f = tau(t) - tau_value;
      if (f > 0.0) hi = t; else lo = t;
      const double d = dtau_dt(t);
      double next = t - f / d;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
      t = next;
    }
    return t;
  }

  double t_min() const {
    return kind_ == Kind::sampled ? samples_.front().t : -std::numeric_limits<double>::infinity();
  }
  double t_max() const {
    return kind_ == Kind::sampled ? samples_.back().t : std::numeric_limits<double>::infinity();
  }

 private:
  std::pair<std::size_t, double> locate(double t) const {
    if (t < samples_.front().t || t > samples_.back().t)
      throw DomainError("TimeWarp: t outside sampled range");
    auto it = std::upper_bound(samples_.begin(), samples_.end(), t,
                               [](double v, const WarpSample& s) { return v < s.t; });
    std::size_t i = it == samples_.begin() ? 0 : static_cast<std::size_t>(it - samples_.begin()) - 1;
    if (i + 1 >= samples_.size()) i = samples_.size() - 2;
    const double s = (t - samples_[i].t) / (samples_[i + 1].t - samples_[i].t);
    return {i, s};
  }

  Kind kind_ = Kind::analytic_exponential;
  double K_ = 1.0;
  double alpha_ = 0.0;
  std::vector<WarpSample> samples_;
};

// ---------------------------------------------------------------------------
// Warp for time-dependent damping alpha(t).
//
// The constraint tau'' + 2 alpha(t) tau' = d/dtau[(tau')^2] reduces to
// tau'' = 2 alpha(t) tau' because d/dtau = (1/tau') d/dt. It is integrated as
// a first-order system from
//   tau(t0)  = K exp(2 alpha(t0) t0),
//   tau'(t0) = 2 alpha(t0) tau(t0),
// which coincides with K exp(2 alpha t) when alpha is constant.
struct WarpSolveOptions {
  double tol = 1e-8;  // relative accuracy of the interpolated warp
};

inline TimeWarp solve_warp_time_dependent(const std::function<double(double)>& alpha_fn,
                                          std::span<const double> t_grid, double K,
                                          const WarpSolveOptions& opts = {}) {
  if (t_grid.size() < 2) throw DomainError("solve_warp: grid needs at least two points");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw DomainError("solve_warp: grid must be strictly increasing");
  if (K == 0.0 || !std::isfinite(K)) throw DomainError("solve_warp: K must be non-zero");

  bool all_zero = true;
  for (double t : t_grid) {
    const double a = alpha_fn(t);
    if (!std::isfinite(a)) throw DomainError("solve_warp: alpha(t) not finite on grid");
    if (a != 0.0) all_zero = false;
  }
  const double t0 = t_grid.front();
  const double a0 = alpha_fn(t0);
  if (all_zero || a0 == 0.0)
    throw DegenerateWarpError("solve_warp: alpha(t0) = 0 gives a degenerate warp");
  if (a0 * K < 0.0) throw DomainError("solve_warp: dtau/dt must be positive (alpha(t0) * K > 0)");

  const double tau0 = K * std::exp(2.0 * a0 * t0);
  ode::State<double> y0{tau0, 2.0 * a0 * tau0};
  auto rhs = [&](double t, const ode::State<double>& y, ode::State<double>& dy) {
    dy[0] = y[1];
    dy[1] = 2.0 * alpha_fn(t) * y[1];
  };

  // Grid points plus interval midpoints; the midpoints measure how well the
  // grid-only Hermite spline reproduces the integrated warp.
  std::vector<double> times;
  times.reserve(2 * t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    times.push_back(t_grid[i]);
    if (i + 1 < t_grid.size()) times.push_back(0.5 * (t_grid[i] + t_grid[i + 1]));
  }
  std::vector<std::array<double, 2>> values;
  values.reserve(times.size());
  ode::Options o;
  o.tol = {opts.tol * 1e-3, 0.0};
  o.tol.abs = 1e-300;
  ode::dopri5<double>(rhs, y0, t0, t_grid.back(), times,
                      [&](double, const ode::State<double>& y) { values.push_back({y[0], y[1]}); },
                      o);

  std::vector<WarpSample> samples;
  samples.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const auto& v = values[2 * i];
    if (!(v[1] > 0.0)) throw DomainError("solve_warp: dtau/dt lost positivity");
    samples.push_back({t_grid[i], v[0], v[1]});
  }
  TimeWarp warp = TimeWarp::sampled(samples);

  double worst = 0.0;
  double max_step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < t_grid.size(); ++i) {
    const double tm = times[2 * i + 1];
    const double exact = values[2 * i + 1][0];
    const double rel = std::abs(warp.tau(tm) - exact) / std::abs(exact);
    worst = std::max(worst, rel);
    if (rel > opts.tol) {
      // Cubic Hermite error scales as h^4.
      const double h = t_grid[i + 1] - t_grid[i];
      max_step = std::min(max_step, 0.9 * h * std::pow(opts.tol / rel, 0.25));
    }
  }
  if (worst > opts.tol)
    throw GridTooCoarseError("solve_warp: grid too coarse, interpolation error " +
                                 std::to_string(worst) + " exceeds tolerance; use steps <= " +
                                 std::to_string(max_step),
                             max_step);
  return warp;
}

}  // namespace dho
