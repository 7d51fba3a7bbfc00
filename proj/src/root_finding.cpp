#include "fisherq/root_finding.hpp"

#include <cmath>
#include <utility>

#include "fisherq/errors.hpp"

namespace fisherq {

RootResult find_root_bracketed(const std::function<double(double)>& fn,
                               double lo, double hi, double x_tol,
                               int max_evaluations) {
  if (lo > hi) std::swap(lo, hi);
  double a = lo, b = hi;
  double fa = fn(a), fb = fn(b);
  int evals = 2;
  if (fa == 0.0) return {a, fa, evals};
  if (fb == 0.0) return {b, fb, evals};
  if (std::signbit(fa) == std::signbit(fb))
    throw DomainError("find_root_bracketed: interval does not bracket a root");

  double last_width = b - a;
  while (b - a > x_tol && evals < max_evaluations) {
    const double width = b - a;
    double x = b - fb * (b - a) / (fb - fa);
    const bool secant_ok = std::isfinite(x) && x > a && x < b &&
                           width <= 0.5 * last_width;
    if (!secant_ok) x = 0.5 * (a + b);
    // Adjacent doubles: the bracket cannot shrink further.
    if (x <= a || x >= b) break;
    last_width = width;

    const double fx = fn(x);
    ++evals;
    if (fx == 0.0) return {x, fx, evals};
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  }
  if (b - a > x_tol)
    throw InternalError("find_root_bracketed: evaluation budget exhausted");
  const double root = 0.5 * (a + b);
  return {root, fn(root), evals + 1};
}

}  // namespace fisherq
