#pragma once

#include <casimir/error.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace casimir {

struct RichardsonResult {
  double value;        // extrapolated derivative
  double coarse;       // central difference with step h
  double fine;         // central difference with step h/2
  double disagreement; // |coarse - fine| / scale
};

/// Central difference at steps h and h/2 combined by one Richardson step,
/// (4 D(h/2) - D(h)) / 3, cancelling the O(h^2) error.
///
/// `scale` is the magnitude the disagreement is measured against; callers
/// pass the natural size of the derivative (e.g. |E|/a) so that derivatives
/// passing through zero do not trip the check.
template <typename F>
RichardsonResult richardson_derivative(F&& f, double x, double h, double scale) {
  const double coarse = (f(x + h) - f(x - h)) / (2.0 * h);
  const double hh = 0.5 * h;
  const double fine = (f(x + hh) - f(x - hh)) / (2.0 * hh);
  const double value = (4.0 * fine - coarse) / 3.0;
  const double denom = std::max({std::abs(value), std::abs(scale), 1e-300});
  return {value, coarse, fine, std::abs(coarse - fine) / denom};
}

/// As richardson_derivative, throwing DerivativeError when the two levels
/// disagree by more than `agreement`.
template <typename F>
double checked_derivative(F&& f, double x, double h, double scale, double agreement, const char* what) {
  const auto r = richardson_derivative(std::forward<F>(f), x, h, scale);
  if (!(r.disagreement <= agreement))
    throw DerivativeError(std::string(what) + ": Richardson levels disagree by " + std::to_string(r.disagreement));
  return r.value;
}

} // namespace casimir
