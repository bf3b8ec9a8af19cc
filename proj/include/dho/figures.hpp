#pragma once

// Built-in presets that regenerate the data behind the reference figures.
//
//   fig1a, fig1b  |psi_n(x, t)|^2, n in {0, 1}, omega = 1, alpha = 0.005,
//                 hbar = 1, K = 1/(2 alpha), at t = 0 and t = 250
//   fig2a/b/c     |c_m(t)|^2 from |0>, m in {0, 2, 4, 6}, omega = 1,
//                 alpha = 0.75 / 1 / 2
//   fig3a/b/c     same from |2>
//
// Amplitude figures use the closed forms on 2001 points over t in [0, 20].

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dho/dynamics.hpp"
#include "dho/errors.hpp"
#include "dho/io.hpp"
#include "dho/quadrature.hpp"
#include "dho/wavefunction.hpp"

namespace dho::figures {

inline constexpr std::array<std::string_view, 8> kNames = {
    "fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c"};

inline constexpr double kFig1Alpha = 0.005;
inline constexpr double kFig1LateTime = 250.0;
inline constexpr std::size_t kFig1Points = 4001;
inline constexpr double kAmplitudeTEnd = 20.0;
inline constexpr std::size_t kAmplitudeSamples = 2001;
inline constexpr std::array<int, 4> kModes = {0, 2, 4, 6};

inline bool is_known(std::string_view name) {
  for (auto n : kNames)
    if (n == name) return true;
  return false;
}

inline OscillatorParams fig1_params() { return OscillatorParams::make(kFig1Alpha, 1.0, 1.0); }

inline std::vector<WavefunctionSample> fig1_samples(bool late) {
  const auto p = fig1_params();
  const auto x = late ? quad::linspace(-10.0, 10.0, kFig1Points)
                      : quad::linspace(-30.0, 30.0, kFig1Points);
  const double t = late ? kFig1LateTime : 0.0;
  return {sample_eigenfunction_t(p, 0, x, t), sample_eigenfunction_t(p, 1, x, t)};
}

// alpha for panel a/b/c with omega = 1.
inline double panel_alpha(char panel) {
  switch (panel) {
    case 'a': return 0.75;
    case 'b': return 1.0;
    case 'c': return 2.0;
  }
  throw DomainError(std::string("unknown figure panel ") + panel);
}

inline std::vector<ModeAmplitudes> amplitude_samples(int n0, double alpha) {
  const auto p = OscillatorParams::make(alpha, 1.0, 1.0);
  const auto ts = quad::linspace(0.0, kAmplitudeTEnd, kAmplitudeSamples);
  std::vector<ModeAmplitudes> out;
  out.reserve(ts.size());
  for (double t : ts) out.push_back(closed_form_amplitudes(p, n0, kModes.back(), t));
  return out;
}

inline std::string figure_csv(std::string_view name) {
  if (!is_known(name)) throw ConfigError("unknown figure '" + std::string(name) + "'");
  std::ostringstream os;
  if (name.starts_with("fig1")) {
    const auto samples = fig1_samples(name == "fig1b");
    io::write_wavefunctions_csv(os, samples);
  } else {
    const int n0 = name.starts_with("fig2") ? 0 : 2;
    const auto traj = amplitude_samples(n0, panel_alpha(name.back()));
    io::write_trajectory_csv(os, traj, kModes);
  }
  return os.str();
}

}  // namespace dho::figures
