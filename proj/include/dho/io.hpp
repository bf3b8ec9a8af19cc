#pragma once

// CSV and JSON exports. Numbers are written with 17 significant digits so a
// value round-trips and identical inputs give byte-identical files.

#include <cstdio>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dho/amplitudes.hpp"
#include "dho/spectrum.hpp"
#include "dho/wavefunction.hpp"

namespace dho::io {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_wavefunction_csv(std::ostream& os, const WavefunctionSample& s) {
  os << "x,re,im,prob\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const auto& v = s.values[i];
    os << format_double(s.x[i]) << ',' << format_double(v.real()) << ','
       << format_double(v.imag()) << ',' << format_double(std::norm(v)) << '\n';
  }
}

// Several eigenfunctions in one file, keyed by a leading n column.
inline void write_wavefunctions_csv(std::ostream& os, std::span<const WavefunctionSample> samples) {
  os << "n,x,re,im,prob\n";
  for (const auto& s : samples) {
    const int n = s.n.value_or(-1);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const auto& v = s.values[i];
      os << n << ',' << format_double(s.x[i]) << ',' << format_double(v.real()) << ','
         << format_double(v.imag()) << ',' << format_double(std::norm(v)) << '\n';
    }
  }
}

// Rows ordered by t, then by m. modes empty means every mode.
inline void write_trajectory_csv(std::ostream& os, std::span<const ModeAmplitudes> traj,
                                 std::span<const int> modes = {}) {
  os << "t,m,re_c,im_c,prob\n";
  for (const auto& a : traj) {
    auto row = [&](int m) {
      const auto& c = a.c[static_cast<std::size_t>(m)];
      os << format_double(a.t) << ',' << m << ',' << format_double(c.real()) << ','
         << format_double(c.imag()) << ',' << format_double(std::norm(c)) << '\n';
    };
    if (modes.empty()) {
      for (int m = 0; m < static_cast<int>(a.c.size()); ++m) row(m);
    } else {
      for (int m : modes)
        if (m >= 0 && m < static_cast<int>(a.c.size())) row(m);
    }
  }
}

inline void write_spectrum_csv(std::ostream& os, std::span<const EnergyLevel> levels) {
  os << "t_or_tau,n,energy\n";
  for (const auto& l : levels)
    os << format_double(l.at) << ',' << l.n << ',' << format_double(l.value) << '\n';
}

inline nlohmann::json trajectory_json(std::span<const ModeAmplitudes> traj,
                                      std::span<const int> modes = {}) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& a : traj) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array(),
                   m_idx = nlohmann::json::array();
    auto push = [&](int m) {
      m_idx.push_back(m);
      re.push_back(a.c[static_cast<std::size_t>(m)].real());
      im.push_back(a.c[static_cast<std::size_t>(m)].imag());
    };
    if (modes.empty()) {
      for (int m = 0; m < static_cast<int>(a.c.size()); ++m) push(m);
    } else {
      for (int m : modes)
        if (m >= 0 && m < static_cast<int>(a.c.size())) push(m);
    }
    samples.push_back({{"t", a.t}, {"m", m_idx}, {"re_c", re}, {"im_c", im}, {"tail", a.tail}});
  }
  return samples;
}

inline nlohmann::json wavefunction_json(const WavefunctionSample& s) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const auto& v : s.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  nlohmann::json j{{"coordinate", to_string(s.coordinate)}, {"time", s.time}, {"x", s.x},
                   {"re", re}, {"im", im}};
  if (s.n) j["n"] = *s.n; else j["n"] = "superposition";
  return j;
}

inline nlohmann::json spectrum_json(std::span<const EnergyLevel> levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : levels)
    out.push_back({{"coordinate", to_string(l.coordinate)}, {"at", l.at}, {"n", l.n},
                   {"energy", l.value}});
  return out;
}

}  // namespace dho::io
