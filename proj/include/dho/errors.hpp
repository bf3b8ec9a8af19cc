#pragma once

#include <stdexcept>
#include <string>

namespace dho {

// Every failure raised by the library derives from Error and carries a short,
// stable category tag that the CLI maps onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept { return "error"; }
};

// Argument outside the mathematical domain of an operation (tau <= 0, L <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "domain"; }
};

// alpha == 0 (or alpha(t) == 0): the warp tau = K exp(2 alpha t) does not exist.
class DegenerateWarpError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* category() const noexcept override { return "degenerate-warp"; }
};

// Operation only defined for one damping regime.
class RegimeError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "regime"; }
};

// Occupation leaked into the top of the truncated mode ladder.
class TailOverflowError : public Error {
 public:
  TailOverflowError(const std::string& what, double tail)
      : Error(what), tail_(tail) {}
  const char* category() const noexcept override { return "tail-overflow"; }
  double tail() const noexcept { return tail_; }

 private:
  double tail_;
};

class StepSizeUnderflowError : public Error {
 public:
  StepSizeUnderflowError(const std::string& what, double t)
      : Error(what), t_(t) {}
  const char* category() const noexcept override { return "step-underflow"; }
  double time() const noexcept { return t_; }

 private:
  double t_;
};

// Sample grid of a numerically solved warp cannot be interpolated to tolerance.
class GridTooCoarseError : public Error {
 public:
  GridTooCoarseError(const std::string& what, double max_step)
      : Error(what), max_step_(max_step) {}
  const char* category() const noexcept override { return "grid-too-coarse"; }
  double max_step() const noexcept { return max_step_; }

 private:
  double max_step_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "schema"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "io"; }
};

}  // namespace dho
