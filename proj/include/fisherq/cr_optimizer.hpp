#pragma once

#include <array>

#include "fisherq/indexed.hpp"

// Selection of the reference weights F_k by extremizing the Cramer-Rao
// product f = I (<x^2> - <x>^2) on the normalization surface
// phi = sum_k F_k^(2/k) = 1.
//
// Only even potentials are handled, so <x> = 0 and the variance is <x^2>.
// For the quartic case (orders {2, 4}) the stationarity system
// grad f = mu grad phi, phi = 1 reduces to the scalar equation
//
//   g(F2) = F2^(-1/2) (1 - F2)^(-1/3) (7 F2 - 3) = 3 |lambda2|^(1/2) |lambda4|^(-1/3)
//
// with F4 = (1 - F2)^2, which has a single root on (3/7, 1).
namespace fisherq {

/// Quartic problem. lambda2 <= 0, lambda4 <= 0, not both zero.
class CrProblem {
 public:
  CrProblem(double lambda2, double lambda4);
  /// Throws DomainError unless orders are exactly {2, 4}.
  explicit CrProblem(const MultiplierVector& multipliers);

  double lambda2() const { return lambda2_; }
  double lambda4() const { return lambda4_; }
  bool harmonic() const { return lambda4_ == 0.0; }
  bool pure_quartic() const { return lambda2_ == 0.0; }

 private:
  double lambda2_;
  double lambda4_;
};

struct CrSolution {
  double f2;
  double f4;
  /// Multiplier of the normalization constraint at the critical point.
  double multiplier_mu;
  /// Cramer-Rao product there (+inf in the pure-quartic case, where <x^2>
  /// diverges).
  double f_value;
};

/// f = I <x^2> with <x^k> the conjugate moments of `multipliers` under
/// `weights`. Orders must contain 2; every lambda_k < 0.
double cr_objective(const ReferenceWeights& weights,
                    const MultiplierVector& multipliers);

/// phi = sum_k F_k^(2/k)
double cr_constraint(const ReferenceWeights& weights);

/// g(F2) on the open interval (3/7, 1); DomainError outside.
double critical_equation_lhs(double f2);

/// 3 |lambda2|^(1/2) |lambda4|^(-1/3)
double critical_equation_rhs(const CrProblem& problem);

inline constexpr double kPureQuarticF2 = 3.0 / 7.0;
inline constexpr double kCriticalTolerance = 1e-13;

/// Critical point of f on phi = 1. The harmonic (lambda4 = 0) and
/// pure-quartic (lambda2 = 0) cases use their closed-form limits.
CrSolution solve_critical_point(const CrProblem& problem);

/// Lagrange multiplier mu = df/dF2 at (f2, f4) (dphi/dF2 = 1).
double lagrange_multiplier(const CrProblem& problem, double f2, double f4);

/// grad f - mu grad phi by central differences in (F2, F4) for quartic
/// problems, or over all orders in the general case.
std::vector<double> stationarity_residual(const ReferenceWeights& weights,
                                          const MultiplierVector& multipliers,
                                          double mu);

/// Least-squares mu from finite-difference gradients of f and phi.
double fit_lagrange_multiplier(const ReferenceWeights& weights,
                               const MultiplierVector& multipliers);

}  // namespace fisherq
