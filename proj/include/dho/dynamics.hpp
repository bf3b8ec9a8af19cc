#pragma once

// Transition amplitudes c_m(t) between instantaneous Fock states: the coupled
// coefficient equations (both coordinates), their adaptive integration, the
// closed forms for initial states |0> and |2>, and regime diagnostics.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "dho/amplitudes.hpp"
#include "dho/errors.hpp"
#include "dho/ode.hpp"
#include "dho/quadrature.hpp"
#include "dho/timewarp.hpp"

namespace dho {

enum class Regime { underdamped, critical, overdamped };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::underdamped: return "underdamped";
    case Regime::critical: return "critical";
    case Regime::overdamped: return "overdamped";
  }
  return "?";
}

// |alpha - omega| <= kCriticalWindow * omega counts as critical damping.
inline constexpr double kCriticalWindow = 1e-9;
// Closed forms switch to the xi -> 0 expansions below this |xi|.
inline constexpr double kCriticalSwitch = 1e-6;

inline Regime classify_regime(const OscillatorParams& p) {
  p.validate();
  if (!(p.alpha > 0.0)) throw DomainError("classify_regime: alpha must be > 0");
  const double gap = p.alpha - p.omega;
  if (std::abs(gap) <= kCriticalWindow * p.omega) return Regime::critical;
  return gap < 0.0 ? Regime::underdamped : Regime::overdamped;
}

struct ClosedFormConstants {
  Complex xi;    // sqrt(1 - omega^2 / alpha^2), principal branch
  Complex zeta;  // log(xi + i omega / alpha), principal branch
  Regime regime;
};

inline ClosedFormConstants xi_zeta(const OscillatorParams& p) {
  const Regime regime = classify_regime(p);
  const double ratio = p.omega / p.alpha;
  const Complex xi = std::sqrt(Complex{1.0 - ratio * ratio, 0.0});
  const Complex zeta = std::log(xi + Complex{0.0, ratio});
  return {xi, zeta, regime};
}

// ---------------------------------------------------------------------------
// Coefficient equations.

// dc_m/dt = (alpha/2) [c_{m-2} sqrt(m(m-1)) e^{2i omega t}
//                      - c_{m+2} sqrt((m+2)(m+1)) e^{-2i omega t}],
// indices outside 0..M read as zero.
inline void rhs_t_into(const OscillatorParams& p, double t, std::span<const Complex> c,
                       std::span<Complex> out) {
  const std::size_t n = c.size();
  const Complex up = 0.5 * p.alpha * std::polar(1.0, 2.0 * p.omega * t);
  const Complex down = 0.5 * p.alpha * std::polar(1.0, -2.0 * p.omega * t);
  for (std::size_t m = 0; m < n; ++m) {
    Complex v{0.0, 0.0};
    if (m >= 2) v += c[m - 2] * (std::sqrt(double(m) * double(m - 1)) * up);
    if (m + 2 < n) v -= c[m + 2] * (std::sqrt(double(m + 2) * double(m + 1)) * down);
    out[m] = v;
  }
}

inline std::vector<Complex> rhs_t(const OscillatorParams& p, double t, std::span<const Complex> c) {
  std::vector<Complex> out(c.size());
  rhs_t_into(p, t, c, out);
  return out;
}

// dc_m/dtau = 1/(4 tau) [c_{m-2} sqrt(m(m-1)) (tau/K)^{i omega/alpha}
//                        - c_{m+2} sqrt((m+2)(m+1)) (tau/K)^{-i omega/alpha}]
inline std::vector<Complex> rhs_tau(const OscillatorParams& p, double tau,
                                    std::span<const Complex> c) {
  require_warp(p);
  if (!(tau > 0.0)) throw DomainError("rhs_tau: tau must be > 0");
  if (!(tau / p.K > 0.0)) throw DomainError("rhs_tau: tau/K must be > 0");
  const double phase = p.omega / p.alpha * std::log(tau / p.K);
  const Complex up = std::polar(1.0, phase) / (4.0 * tau);
  const Complex down = std::polar(1.0, -phase) / (4.0 * tau);
  const std::size_t n = c.size();
  std::vector<Complex> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex v{0.0, 0.0};
    if (m >= 2) v += c[m - 2] * (std::sqrt(double(m) * double(m - 1)) * up);
    if (m + 2 < n) v -= c[m + 2] * (std::sqrt(double(m + 2) * double(m + 1)) * down);
    out[m] = v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adaptive integration.

struct IntegrateOptions {
  ode::Tolerance tol{1e-9, 1e-12};
  // Output times inside [0, t_end]; empty means 2001 uniform samples.
  std::vector<double> sample_times;
  // Tail |c_M|^2 + |c_{M-1}|^2 above tail_flag marks the trajectory; above
  // tail_limit the truncation is meaningless and integration aborts.
  double tail_flag = 1e-12;
  double tail_limit = 1e-6;
};

struct Trajectory {
  std::vector<ModeAmplitudes> samples;
  double max_tail = 0.0;
  bool tail_flagged = false;
  ode::Stats stats;
};

inline Trajectory integrate_state(const OscillatorParams& p, std::vector<Complex> c0, double t_end,
                                  const IntegrateOptions& opts = {}, int initial_n = -1) {
  p.validate();
  if (!(p.alpha > 0.0)) throw DomainError("integrate: alpha must be > 0");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw DomainError("integrate: t_end must be >= 0");
  if (c0.size() < 2) throw DomainError("integrate: need at least two modes");

  std::vector<double> times = opts.sample_times;
  if (times.empty()) times = quad::linspace(0.0, t_end, 2001);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || times[i] > t_end)
      throw DomainError("integrate: sample time outside [0, t_end]");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw DomainError("integrate: sample times must be strictly increasing");
  }

  const std::size_t n = c0.size();
  std::vector<double> up(n, 0.0), down(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    up[m] = m >= 2 ? std::sqrt(double(m) * double(m - 1)) : 0.0;
    down[m] = m + 2 < n ? std::sqrt(double(m + 2) * double(m + 1)) : 0.0;
  }
  const double half_alpha = 0.5 * p.alpha;
  auto rhs = [&](double t, const ode::State<Complex>& c, ode::State<Complex>& dc) {
    const Complex e_up = half_alpha * std::polar(1.0, 2.0 * p.omega * t);
    const Complex e_down = half_alpha * std::polar(1.0, -2.0 * p.omega * t);
    for (std::size_t m = 0; m < n; ++m) {
      Complex v{0.0, 0.0};
      if (m >= 2) v += c[m - 2] * (up[m] * e_up);
      if (m + 2 < n) v -= c[m + 2] * (down[m] * e_down);
      dc[m] = v;
    }
  };

  Trajectory traj;
  traj.samples.reserve(times.size());
  traj.max_tail = ModeAmplitudes::tail_of(c0);
  auto check_tail = [&](double t, const ode::State<Complex>& c) {
    const double tail = ModeAmplitudes::tail_of(c);
    if (tail > traj.max_tail) traj.max_tail = tail;
    if (tail > opts.tail_limit)
      throw TailOverflowError("integrate: occupation of the top modes reached " +
                                  std::to_string(tail) + " at t = " + std::to_string(t) +
                                  "; increase the truncation M (currently " +
                                  std::to_string(n - 1) + ")",
                              tail);
  };
  ode::Options o;
  o.tol = opts.tol;
  traj.stats = ode::dopri5<Complex>(
      rhs, std::move(c0), 0.0, t_end, times,
      [&](double t, const ode::State<Complex>& c) {
        ModeAmplitudes a;
        a.c = c;
        a.t = t;
        a.initial_n = initial_n;
        a.tail = ModeAmplitudes::tail_of(c);
        traj.samples.push_back(std::move(a));
      },
      check_tail, o);
  for (const auto& s : traj.samples) traj.max_tail = std::max(traj.max_tail, s.tail);
  traj.tail_flagged = traj.max_tail > opts.tail_flag;
  return traj;
}

// c_m(0) = delta_{m, n0}, modes 0..M.
inline Trajectory integrate(const OscillatorParams& p, int n0, double t_end, int M,
                            const IntegrateOptions& opts = {}) {
  if (n0 < 0) throw DomainError("integrate: n0 must be >= 0");
  if (M < n0 + 10) throw DomainError("integrate: truncation M must be >= n0 + 10");
  if ((M - n0) % 2 != 0) throw DomainError("integrate: M must have the parity of n0");
  std::vector<Complex> c0(static_cast<std::size_t>(M) + 1, Complex{0.0, 0.0});
  c0[static_cast<std::size_t>(n0)] = 1.0;
  return integrate_state(p, std::move(c0), t_end, opts, n0);
}

// ---------------------------------------------------------------------------
// Closed forms.
//
// With cosh(zeta) = xi and sinh(zeta) = i omega/alpha,
//   cosh(zeta + xi alpha t) = xi D(t),
//   D(t) = cosh(xi alpha t) + i omega s(t),   s(t) = sinh(xi alpha t) / (xi alpha),
// and sinh(xi alpha t) / cosh(zeta + xi alpha t) = alpha s / D =: r. Both D and
// s are even in xi, so the amplitudes below contain no branch cut except
// D^{1/2}, which is continued from D(0) = 1 along t.

namespace detail {

// (m-1)!! / sqrt(m!) for even m, with (-1)!! = 1.
inline double odd_double_factorial_ratio(int m) {
  double v = 1.0;
  for (int k = 0; k < m; k += 2) v *= std::sqrt((k + 1.0) / (k + 2.0));
  return v;
}

inline Complex ipow(Complex z, int k) {
  Complex out{1.0, 0.0};
  while (k > 0) {
    if (k & 1) out *= z;
    z *= z;
    k >>= 1;
  }
  return out;
}

struct ClosedFormKernel {
  Complex r;            // alpha s / D
  Complex inv_d;        // 1 / D
  Complex inv_sqrt_d;   // D^{-1/2}, continuous in t
};

inline ClosedFormKernel closed_form_kernel(const OscillatorParams& p, const ClosedFormConstants& k,
                                           double t) {
  const Complex xa = k.xi * p.alpha;
  const Complex x = xa * t;
  const Complex iw{0.0, p.omega};
  ClosedFormKernel out;
  if (std::abs(x.real()) > 20.0) {
    // Overdamped, |xi alpha t| large: factor out e^{|x|}/2.
    const double sgn = x.real() > 0.0 ? 1.0 : -1.0;
    const Complex u = sgn * x;
    const Complex em = std::exp(-2.0 * u);
    const Complex dt = (1.0 + em) + sgn * iw * (1.0 - em) / xa;  // D = e^u/2 * dt
    const Complex st = sgn * (1.0 - em) / xa;                     // s = e^u/2 * st
    out.r = p.alpha * st / dt;
    out.inv_d = 2.0 * std::exp(-u) / dt;
    out.inv_sqrt_d = std::numbers::sqrt2 * std::exp(-0.5 * u) / std::sqrt(dt);
    return out;
  }
  const Complex s = std::sinh(x) / xa;
  const Complex d = std::cosh(x) + iw * s;
  out.r = p.alpha * s / d;
  out.inv_d = 1.0 / d;
  double arg = std::arg(d);
  if (k.xi.imag() != 0.0) {
    // alpha < omega: D = cos(Wt) + i (omega/W) sin(Wt) stays in the quadrant of Wt.
    const double wt = x.imag();
    arg = wt + std::remainder(arg - wt, 2.0 * std::numbers::pi);
  }
  out.inv_sqrt_d = std::polar(1.0 / std::sqrt(std::abs(d)), -0.5 * arg);
  return out;
}

inline void require_mode(int m) {
  if (m < 0) throw DomainError("closed form: mode index m must be >= 0");
}

}  // namespace detail

// Critical damping (xi -> 0), initial state |0>:
// c_m = (m-1)!!/sqrt(m!) e^{i(m+1/2) omega t} (omega t)^{m/2} / (1 + i omega t)^{(m+1)/2}
inline Complex critical_n0(const OscillatorParams& p, int m, double t) {
  detail::require_mode(m);
  if (m % 2 != 0) return {0.0, 0.0};
  const double wt = p.omega * t;
  const Complex base{1.0, wt};
  const Complex num = detail::ipow(Complex{wt, 0.0}, m / 2);
  const Complex den = detail::ipow(base, m / 2) * std::sqrt(base);
  return detail::odd_double_factorial_ratio(m) * std::polar(1.0, (m + 0.5) * wt) * num / den;
}

// Critical damping, initial state |2>:
// c_m = (m-1)!!/sqrt(2 m!) e^{i(m+1/2) omega t} (m/(omega t) - omega t)
//       (omega t)^{m/2} / (1 + i omega t)^{(m+3)/2},
// with (m/(wt)) (wt)^{m/2} = m (wt)^{m/2-1} so t = 0 is regular.
inline Complex critical_n2(const OscillatorParams& p, int m, double t) {
  detail::require_mode(m);
  if (m % 2 != 0) return {0.0, 0.0};
  const double wt = p.omega * t;
  const Complex base{1.0, wt};
  const Complex w{wt, 0.0};
  Complex num = -detail::ipow(w, m / 2 + 1);
  if (m >= 2) num += static_cast<double>(m) * detail::ipow(w, m / 2 - 1);
  const Complex den = detail::ipow(base, m / 2 + 1) * std::sqrt(base);
  return detail::odd_double_factorial_ratio(m) / std::numbers::sqrt2 *
         std::polar(1.0, (m + 0.5) * wt) * num / den;
}

// Initial state |0>:
// c_m = (m-1)!!/sqrt(m!) sqrt(xi) e^{i(m+1/2) omega t}
//       sinh^{m/2}(xi alpha t) / cosh^{(m+1)/2}(zeta + xi alpha t)   (even m)
//     = (m-1)!!/sqrt(m!) e^{i(m+1/2) omega t} r^{m/2} D^{-1/2}.
inline Complex closed_form_n0(const OscillatorParams& p, int m, double t) {
  detail::require_mode(m);
  if (m % 2 != 0) return {0.0, 0.0};
  const auto k = xi_zeta(p);
  if (std::abs(k.xi) < kCriticalSwitch) return critical_n0(p, m, t);
  const auto ker = detail::closed_form_kernel(p, k, t);
  return detail::odd_double_factorial_ratio(m) * std::polar(1.0, (m + 0.5) * p.omega * t) *
         detail::ipow(ker.r, m / 2) * ker.inv_sqrt_d;
}

// Initial state |2>:
// c_m = (m-1)!!/sqrt(2 m!) sqrt(xi) e^{i(m+1/2) omega t}
//       sinh^{m/2} / cosh^{(m+3)/2} (m xi^2 / sinh - sinh)   (even m)
//     = (m-1)!!/sqrt(2 m!) e^{i(m+1/2) omega t} [m r^{m/2-1} / D^2 - r^{m/2+1}] D^{-1/2}.
inline Complex closed_form_n2(const OscillatorParams& p, int m, double t) {
  detail::require_mode(m);
  if (m % 2 != 0) return {0.0, 0.0};
  const auto k = xi_zeta(p);
  if (std::abs(k.xi) < kCriticalSwitch) return critical_n2(p, m, t);
  const auto ker = detail::closed_form_kernel(p, k, t);
  Complex bracket = -detail::ipow(ker.r, m / 2 + 1);
  if (m >= 2)
    bracket += static_cast<double>(m) * detail::ipow(ker.r, m / 2 - 1) * ker.inv_d * ker.inv_d;
  return detail::odd_double_factorial_ratio(m) / std::numbers::sqrt2 *
         std::polar(1.0, (m + 0.5) * p.omega * t) * bracket * ker.inv_sqrt_d;
}

// Closed-form amplitude for initial state n0 in {0, 2}.
inline Complex closed_form(const OscillatorParams& p, int n0, int m, double t) {
  if (n0 == 0) return closed_form_n0(p, m, t);
  if (n0 == 2) return closed_form_n2(p, m, t);
  throw DomainError("closed_form: closed forms exist for n0 = 0 and n0 = 2 only");
}

inline ModeAmplitudes closed_form_amplitudes(const OscillatorParams& p, int n0, int M, double t) {
  ModeAmplitudes a;
  a.c.resize(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) a.c[static_cast<std::size_t>(m)] = closed_form(p, n0, m, t);
  a.t = t;
  a.initial_n = n0;
  a.tail = ModeAmplitudes::tail_of(a.c);
  return a;
}

// Period pi / sqrt(omega^2 - alpha^2) of the transition probabilities.
inline double oscillation_period(const OscillatorParams& p) {
  if (classify_regime(p) != Regime::underdamped)
    throw RegimeError("oscillation_period: defined for the underdamped regime only");
  return std::numbers::pi / std::sqrt(p.omega * p.omega - p.alpha * p.alpha);
}

// ---------------------------------------------------------------------------
// Diagnostics on sampled probability curves.

// Interior indices i with y[i] > y[i-1] and y[i] >= y[i+1].
inline std::vector<std::size_t> local_maxima(std::span<const double> y) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) out.push_back(i);
  return out;
}

// Peak location refined by the parabola through the three samples around it.
inline double refine_peak(std::span<const double> t, std::span<const double> y, std::size_t i) {
  const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
  const double denom = y0 - 2.0 * y1 + y2;
  if (denom == 0.0) return t[i];
  const double h = 0.5 * (t[i + 1] - t[i - 1]);
  return t[i] + 0.5 * h * (y0 - y2) / denom;
}

// A curve oscillates when it has at least one interior local maximum.
inline bool is_oscillatory(std::span<const double> y) { return !local_maxima(y).empty(); }

// Mean spacing between consecutive refined peaks; 0 with fewer than two peaks.
inline double mean_peak_spacing(std::span<const double> t, std::span<const double> y) {
  const auto peaks = local_maxima(y);
  if (peaks.size() < 2) return 0.0;
  const double first = refine_peak(t, y, peaks.front());
  const double last = refine_peak(t, y, peaks.back());
  return (last - first) / static_cast<double>(peaks.size() - 1);
}

// Beating statistic. The probability curve is cut into windows of one
// oscillation period [kP, (k+1)P) lying inside the sampled range; a window
// whose curve carries two or more local maxima is a carrier oscillation under
// one envelope lobe, i.e. one local maximum of the upper envelope. Returns the
// number of such envelope maxima.
inline int envelope_maxima(std::span<const double> t, std::span<const double> y, double period) {
  if (!(period > 0.0) || t.size() < 3) return 0;
  const auto peaks = local_maxima(y);
  const double t0 = t.front();
  const int windows = static_cast<int>(std::floor((t.back() - t0) / period + 1e-12));
  int count = 0;
  for (int k = 0; k < windows; ++k) {
    const double lo = t0 + k * period;
    const double hi = lo + period;
    int inside = 0;
    for (auto i : peaks)
      if (t[i] >= lo && t[i] < hi) ++inside;
    if (inside >= 2) ++count;
  }
  return count;
}

}  // namespace dho
