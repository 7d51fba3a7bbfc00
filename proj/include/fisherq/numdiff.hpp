#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "fisherq/errors.hpp"

namespace fisherq::numdiff {

inline constexpr double kDefaultRelativeStep = 1e-5;

/// Step of size rel * |x|. Throws NumericPrecisionError if it is not a
/// normal positive double.
inline double relative_step(double x, double rel = kDefaultRelativeStep) {
  const double h = rel * std::abs(x);
  if (!std::isnormal(h) || x + h == x)
    throw NumericPrecisionError("finite-difference step underflows at x = " +
                                std::to_string(x));
  return h;
}

/// Central difference of fn along coordinate i of point. `Point` needs a
/// mutable operator[].
template <class Fn, class Point>
double central_partial(Fn&& fn, Point point, std::size_t i,
                       double rel = kDefaultRelativeStep) {
  const double x0 = point[i];
  const double h = relative_step(x0, rel);
  point[i] = x0 + h;
  const double up = fn(point);
  point[i] = x0 - h;
  const double down = fn(point);
  return (up - down) / (2.0 * h);
}

/// Second central difference along coordinate i, (f(x+h) - 2f(x) + f(x-h))/h^2.
template <class Fn, class Point>
double central_second(Fn&& fn, Point point, std::size_t i,
                      double rel = 1e-4) {
  const double x0 = point[i];
  const double h = relative_step(x0, rel);
  const double mid = fn(point);
  point[i] = x0 + h;
  const double up = fn(point);
  point[i] = x0 - h;
  const double down = fn(point);
  return (up - 2.0 * mid + down) / (h * h);
}

}  // namespace fisherq::numdiff
