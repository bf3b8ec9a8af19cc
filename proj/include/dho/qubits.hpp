#pragma once

// Phase and flux qubits in the RCSJ model, mapped onto the damped oscillator.
//
// Both circuits share the decay exponent alpha_P = alpha_F = 1/(CR): their
// spectra decay as exp(-t/(CR)). The junction phase obeys
// delta'' + delta'/(CR) + ... = 0, i.e. a core oscillator with alpha = 1/(2CR),
// so the core parameters carry alpha = alpha_P / 2. Under that map the core
// spectrum reproduces E_n^(P/F)(t) (up to the offset) and its critical point
// alpha = omega reproduces the critical resistances below.
//
// The offset terms (Omega_P^2 + (I/I0)^2 etc.) mix units; they are applied
// as written and are only meaningful in reduced units.

#include <cmath>
#include <optional>
#include <string>

#include "dho/errors.hpp"
#include "dho/spectrum.hpp"
#include "dho/timewarp.hpp"

namespace dho {

enum class UnitSystem { reduced, si };
enum class QubitKind { phase, flux };

inline const char* to_string(UnitSystem u) { return u == UnitSystem::reduced ? "reduced" : "SI"; }
inline const char* to_string(QubitKind k) { return k == QubitKind::phase ? "phase" : "flux"; }

namespace si {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
}  // namespace si

struct RcsjParams {
  double C = 1.0;        // capacitance
  double R = 1.0;        // resistance
  double I0 = 1.0;       // junction critical current
  double I = 0.0;        // bias current (phase qubit)
  double L = 0.0;        // loop inductance (flux qubit); 0 = not set
  double delta_X = 0.0;  // external flux parameter (flux qubit)
  double hbar = 1.0;
  double e = 0.5;        // reduced units: 2e = 1
  UnitSystem units = UnitSystem::reduced;

  static RcsjParams reduced() { return RcsjParams{}; }

  static RcsjParams si_units() {
    RcsjParams q;
    q.hbar = si::hbar;
    q.e = si::elementary_charge;
    q.units = UnitSystem::si;
    return q;
  }

  void validate_common() const {
    for (double v : {C, R, I0, I, L, delta_X, hbar, e})
      if (!std::isfinite(v)) throw DomainError("RcsjParams: non-finite parameter");
    if (!(C > 0.0)) throw DomainError("RcsjParams: C must be > 0");
    if (!(R > 0.0)) throw DomainError("RcsjParams: R must be > 0");
    if (!(I0 > 0.0)) throw DomainError("RcsjParams: I0 must be > 0");
    if (!(hbar > 0.0) || !(e > 0.0)) throw DomainError("RcsjParams: hbar and e must be > 0");
  }

  void validate(QubitKind kind) const {
    validate_common();
    if (kind == QubitKind::phase && std::abs(I) > I0)
      throw DomainError("RcsjParams: |I| must not exceed I0");
    if (kind == QubitKind::flux && !(L > 0.0))
      throw DomainError("RcsjParams: flux qubit needs L > 0");
  }
};

// Omega_P = sqrt(2 e I0 / (hbar C))
inline double omega_p(const RcsjParams& q) {
  q.validate_common();
  return std::sqrt(2.0 * q.e * q.I0 / (q.hbar * q.C));
}

// Omega_F = sqrt(Omega_P^2 + 1/(LC))
inline double omega_f(const RcsjParams& q) {
  if (!(q.L > 0.0)) throw DomainError("omega_f: L must be > 0");
  q.validate(QubitKind::flux);
  const double wp = std::sqrt(2.0 * q.e * q.I0 / (q.hbar * q.C));
  return std::sqrt(wp * wp + 1.0 / (q.L * q.C));
}

// alpha_P = alpha_F = 1/(CR)
inline double decay_exponent(const RcsjParams& q) { return 1.0 / (q.C * q.R); }

struct QubitOscillatorMap {
  double alpha_q = 0.0;      // 1/(CR)
  double Omega = 0.0;        // Omega_P or Omega_F
  double offset = 0.0;       // constant energy shift
  double delta_shift = 0.0;  // translation of the phase operator
};

struct QubitMapping {
  QubitOscillatorMap map;
  OscillatorParams oscillator;
  bool small_angle_warning = false;  // |delta_shift| >= 0.3
};

inline constexpr double kSmallAngleLimit = 0.3;

// K defaults to 1/alpha_q (the core default 1/(2 alpha) with alpha = alpha_q/2).
inline QubitMapping map_to_oscillator(const RcsjParams& q, QubitKind kind,
                                      std::optional<double> K = std::nullopt) {
  q.validate(kind);
  QubitMapping out;
  const double wp = omega_p(q);
  out.map.alpha_q = decay_exponent(q);
  if (kind == QubitKind::phase) {
    out.map.Omega = wp;
    out.map.delta_shift = q.I / q.I0;
    out.map.offset = -(wp * wp + out.map.delta_shift * out.map.delta_shift);
  } else {
    const double wf = omega_f(q);
    out.map.Omega = wf;
    out.map.delta_shift = q.delta_X / (q.L * q.C * wf * wf);
    out.map.offset = -(wp * wp + out.map.delta_shift * out.map.delta_shift);
  }
  out.oscillator =
      OscillatorParams::make(0.5 * out.map.alpha_q, out.map.Omega, q.hbar, K.value_or(1.0 / out.map.alpha_q));
  out.small_angle_warning = std::abs(out.map.delta_shift) >= kSmallAngleLimit;
  return out;
}

// E_n^(P)(t) = hbar Omega_P / (alpha_P K) e^{-alpha_P t} (n + 1/2) - (Omega_P^2 + (I/I0)^2)
inline double energy_phase(const RcsjParams& q, int n, double t, double K) {
  if (n < 0) throw DomainError("energy_phase: n must be >= 0");
  if (K == 0.0) throw DomainError("energy_phase: K must be non-zero");
  const auto m = map_to_oscillator(q, QubitKind::phase, K);
  return q.hbar * m.map.Omega / (m.map.alpha_q * K) * std::exp(-m.map.alpha_q * t) * (n + 0.5) +
         m.map.offset;
}

// E_n^(F)(t) = hbar Omega_F / (alpha_F K) e^{-alpha_F t} (n + 1/2)
//              - (Omega_P^2 + (delta_X / (L C Omega_F^2))^2)
inline double energy_flux(const RcsjParams& q, int n, double t, double K) {
  if (n < 0) throw DomainError("energy_flux: n must be >= 0");
  if (K == 0.0) throw DomainError("energy_flux: K must be non-zero");
  const auto m = map_to_oscillator(q, QubitKind::flux, K);
  return q.hbar * m.map.Omega / (m.map.alpha_q * K) * std::exp(-m.map.alpha_q * t) * (n + 0.5) +
         m.map.offset;
}

// R = sqrt(hbar / (8 e I0 C)); equivalently 1/(2RC) = Omega_P.
inline double critical_resistance_phase(const RcsjParams& q) {
  q.validate(QubitKind::phase);
  return std::sqrt(q.hbar / (8.0 * q.e * q.I0 * q.C));
}

// R = sqrt(hbar L / (4 C (2 e I0 L + hbar))); equivalently 1/(2RC) = Omega_F.
inline double critical_resistance_flux(const RcsjParams& q) {
  if (!(q.L > 0.0)) throw DomainError("critical_resistance_flux: L must be > 0");
  q.validate(QubitKind::flux);
  return std::sqrt(q.hbar * q.L / (4.0 * q.C * (2.0 * q.e * q.I0 * q.L + q.hbar)));
}

}  // namespace dho
