#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace casimir {

/// Argument outside the domain of an operation (x <= 0, bad geometry, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A truncated series could not reach the requested tolerance within its
/// point budget. Carries the series name and the tolerance actually reached.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(std::string series, double reached, double requested)
      : std::runtime_error(series + ": reached relative tolerance " + format(reached) + ", requested " +
                           format(requested)),
        series_(std::move(series)), reached_(reached), requested_(requested) {}

  const std::string& series() const noexcept { return series_; }
  double reached() const noexcept { return reached_; }
  double requested() const noexcept { return requested_; }

private:
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }

  std::string series_;
  double reached_;
  double requested_;
};

/// Richardson levels of a finite-difference derivative disagree.
class DerivativeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace casimir
