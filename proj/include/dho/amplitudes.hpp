#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dho {

using Complex = std::complex<double>;

// Truncated coefficient vector {c_m}, m = 0..M, of the instantaneous Fock basis.
struct ModeAmplitudes {
  std::vector<Complex> c;
  double t = 0.0;
  int initial_n = -1;  // -1: arbitrary initial vector
  double tail = 0.0;   // |c_M|^2 + |c_{M-1}|^2

  std::size_t truncation() const noexcept { return c.empty() ? 0 : c.size() - 1; }

  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return s;
  }

  static double tail_of(const std::vector<Complex>& c) noexcept {
    const std::size_t n = c.size();
    if (n == 0) return 0.0;
    return std::norm(c[n - 1]) + (n >= 2 ? std::norm(c[n - 2]) : 0.0);
  }
};

}  // namespace dho
