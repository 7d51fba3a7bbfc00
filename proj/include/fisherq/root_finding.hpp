#pragma once

#include <functional>

namespace fisherq {

struct RootResult {
  double root;
  double residual;  // fn(root)
  int evaluations;
};

/// Root of fn inside [lo, hi], which must bracket a sign change.
/// Bisection with a safeguarded secant step: the secant point is used while
/// it lands inside the bracket and the bracket keeps halving, otherwise the
/// midpoint. Stops once the bracket is narrower than x_tol.
/// Throws DomainError if fn(lo) and fn(hi) have the same sign.
RootResult find_root_bracketed(const std::function<double(double)>& fn,
                               double lo, double hi, double x_tol,
                               int max_evaluations = 400);

}  // namespace fisherq
