#pragma once

// Adaptive Dormand-Prince 5(4) integrator with cubic Hermite dense output.
//
// The state is a std::vector of a real or complex scalar. The right-hand side
// is called as rhs(t, y, dydt) and must fill dydt (already sized). Results are
// delivered through callbacks so the caller decides what to keep.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dho/errors.hpp"

namespace dho::ode {

struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

struct Options {
  Tolerance tol{};
  double initial_step = 0.0;  // 0: pick automatically
  double max_step = 0.0;      // 0: unbounded
  std::size_t max_steps = 50'000'000;
};

struct Stats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evals = 0;
  double last_step = 0.0;
};

template <class T>
using State = std::vector<T>;

namespace detail {

// Butcher tableau (Dormand & Prince 1980), FSAL.
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                        b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// Difference between the 5th- and 4th-order weights.
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

template <class T>
double weighted_rms(const State<T>& v, const State<T>& y0, const State<T>& y1,
                    const Tolerance& tol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double sc = tol.abs + tol.rel * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double r = std::abs(v[i]) / sc;
    acc += r * r;
  }
  return v.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(v.size()));
}

template <class T>
double rms(const State<T>& v, const Tolerance& tol) {
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double sc = tol.abs + tol.rel * std::abs(v[i]);
    const double r = std::abs(v[i]) / sc;
    acc += r * r;
  }
  return v.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(v.size()));
}

}  // namespace detail

// Cubic Hermite interpolant through (t0, y0, f0) and (t0 + h, y1, f1).
template <class T>
void hermite_interpolate(double t0, double h, const State<T>& y0, const State<T>& f0,
                         const State<T>& y1, const State<T>& f1, double t, State<T>& out) {
  const double s = (t - t0) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = (s3 - 2.0 * s2 + s) * h;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = (s3 - s2) * h;
  out.resize(y0.size());
  for (std::size_t i = 0; i < y0.size(); ++i)
    out[i] = h00 * y0[i] + h10 * f0[i] + h01 * y1[i] + h11 * f1[i];
}

// Integrates y' = rhs(t, y) from t0 to t1 (> t0).
//
// on_sample(t, y) fires once for every entry of sample_times (sorted, inside
// [t0, t1]) with the dense-output state. on_step(t, y) fires after every
// accepted step with the step-end state. Throws StepSizeUnderflowError when the
// controller cannot satisfy the tolerance.
template <class T, class Rhs, class OnSample, class OnStep>
  requires std::invocable<OnStep&, double, const State<T>&>
Stats dopri5(Rhs&& rhs, State<T> y, double t0, double t1, std::span<const double> sample_times,
             OnSample&& on_sample, OnStep&& on_step, const Options& opt = {}) {
  using namespace detail;
  Stats stats;
  const std::size_t n = y.size();
  State<T> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n), err(n), dense(n);

  std::size_t next_sample = 0;
  auto emit_upto = [&](double t_end, bool inclusive, double ta, double h, const State<T>& ya,
                       const State<T>& fa, const State<T>& yb, const State<T>& fb) {
    while (next_sample < sample_times.size()) {
      const double ts = sample_times[next_sample];
      if (inclusive ? ts > t_end : ts >= t_end) break;
      if (h == 0.0 || ts == ta) {
        on_sample(ts, ya);
      } else if (ts == ta + h) {
        on_sample(ts, yb);
      } else {
        hermite_interpolate(ta, h, ya, fa, yb, fb, ts, dense);
        on_sample(ts, dense);
      }
      ++next_sample;
    }
  };

  double t = t0;
  rhs(t, y, k1);
  ++stats.rhs_evals;
  emit_upto(t0, true, t0, 0.0, y, k1, y, k1);
  if (t1 <= t0) return stats;

  double h = opt.initial_step;
  if (h <= 0.0) {
    // Hairer-Norsett-Wanner starting step heuristic.
    const double d0 = rms(y, opt.tol);
    double d1 = 0.0;
    {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double sc = opt.tol.abs + opt.tol.rel * std::abs(y[i]);
        acc += std::norm(k1[i]) / (sc * sc);
      }
      d1 = n ? std::sqrt(acc / static_cast<double>(n)) : 0.0;
    }
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, t1 - t0);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h0 * k1[i];
    rhs(t + h0, tmp, k2);
    ++stats.rhs_evals;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sc = opt.tol.abs + opt.tol.rel * std::abs(y[i]);
      acc += std::norm(k2[i] - k1[i]) / (sc * sc);
    }
    const double d2 = (n ? std::sqrt(acc / static_cast<double>(n)) : 0.0) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 1.0 / 5.0);
    h = std::min(100.0 * h0, h1);
  }
  if (opt.max_step > 0.0) h = std::min(h, opt.max_step);

  const double eps = std::numeric_limits<double>::epsilon();
  bool last_rejected = false;
  while (t < t1) {
    if (stats.accepted + stats.rejected >= opt.max_steps)
      throw StepSizeUnderflowError("dopri5: step budget exhausted at t = " + std::to_string(t), t);
    if (h < 16.0 * eps * std::max(1.0, std::abs(t)))
      throw StepSizeUnderflowError("dopri5: step size underflow at t = " + std::to_string(t), t);
    bool final_step = false;
    if (t + h >= t1 || t + 1.01 * h >= t1) {
      h = t1 - t;
      final_step = true;
    }

    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a21 * k1[i]);
    rhs(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const double t_new = final_step ? t1 : t + h;
    rhs(t_new, y5, k7);
    stats.rhs_evals += 6;

    for (std::size_t i = 0; i < n; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double e = weighted_rms(err, y, y5, opt.tol);

    if (e <= 1.0) {
      emit_upto(t_new, true, t, h, y, k1, y5, k7);
      t = t_new;
      y.swap(y5);
      k1.swap(k7);
      ++stats.accepted;
      stats.last_step = h;
      on_step(t, y);
      double fac = e == 0.0 ? 5.0 : 0.9 * std::pow(e, -0.2);
      fac = std::clamp(fac, 0.2, last_rejected ? 1.0 : 5.0);
      last_rejected = false;
      if (final_step) break;
      h *= fac;
    } else {
      ++stats.rejected;
      last_rejected = true;
      h *= std::max(0.2, 0.9 * std::pow(e, -0.2));
    }
    if (opt.max_step > 0.0) h = std::min(h, opt.max_step);
  }
  return stats;
}

template <class T, class Rhs, class OnSample>
Stats dopri5(Rhs&& rhs, State<T> y, double t0, double t1, std::span<const double> sample_times,
             OnSample&& on_sample, const Options& opt = {}) {
  return dopri5<T>(std::forward<Rhs>(rhs), std::move(y), t0, t1, sample_times,
                   std::forward<OnSample>(on_sample), [](double, const State<T>&) {}, opt);
}

}  // namespace dho::ode
