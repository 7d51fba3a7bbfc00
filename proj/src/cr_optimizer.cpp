#include "fisherq/cr_optimizer.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "fisherq/errors.hpp"
#include "fisherq/fisher_core.hpp"
#include "fisherq/numdiff.hpp"
#include "fisherq/root_finding.hpp"

namespace fisherq {

CrProblem::CrProblem(double lambda2, double lambda4)
    : lambda2_(lambda2), lambda4_(lambda4) {
  if (!std::isfinite(lambda2) || !std::isfinite(lambda4))
    throw DomainError("CrProblem: multipliers must be finite");
  if (lambda2 > 0.0 || lambda4 > 0.0)
    throw DomainError("CrProblem: multipliers must be non-positive");
  if (lambda2 == 0.0 && lambda4 == 0.0)
    throw DomainError("CrProblem: lambda2 and lambda4 are both zero");
}

CrProblem::CrProblem(const MultiplierVector& multipliers)
    : CrProblem(
          [&] {
            require_same_orders(multipliers.orders(), MomentOrderSet{2, 4},
                                "CrProblem");
            return multipliers.at(2);
          }(),
          multipliers.at(4)) {}

double cr_objective(const ReferenceWeights& weights,
                    const MultiplierVector& multipliers) {
  const MomentVector moments = conjugate_moments(weights, multipliers);
  // <x> = 0 for even potentials, so the variance is <x^2>.
  return fim_closed_form(weights, moments) * moments.at(2);
}

double cr_constraint(const ReferenceWeights& weights) {
  double phi = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    phi += std::pow(weights.f(i), 2.0 / weights.orders()[i]);
  return phi;
}

double critical_equation_lhs(double f2) {
  if (!(f2 > kPureQuarticF2 && f2 < 1.0))
    throw DomainError("critical_equation_lhs: F2 outside (3/7, 1)");
  return std::pow(f2, -0.5) * std::pow(1.0 - f2, -1.0 / 3.0) * (7.0 * f2 - 3.0);
}

double critical_equation_rhs(const CrProblem& problem) {
  return 3.0 * std::sqrt(-problem.lambda2()) *
         std::pow(-problem.lambda4(), -1.0 / 3.0);
}

double lagrange_multiplier(const CrProblem& problem, double f2, double f4) {
  if (problem.harmonic()) return 1.0;
  const double b = std::pow(-problem.lambda4(), 1.0 / 3.0) /
                   std::sqrt(-problem.lambda2());
  return 1.0 + b * std::pow(f4, 1.0 / 3.0) / std::sqrt(f2);
}

namespace {

// Quartic CR product in closed form; valid for lambda2 < 0.
double quartic_product(const CrProblem& p, double f2, double f4) {
  return f2 + 2.0 * std::sqrt(f2) * std::cbrt(f4) *
                  std::cbrt(-p.lambda4()) / std::sqrt(-p.lambda2());
}

}  // namespace

CrSolution solve_critical_point(const CrProblem& problem) {
  if (problem.harmonic()) return CrSolution{1.0, 0.0, 1.0, 1.0};
  if (problem.pure_quartic()) {
    const double f2 = kPureQuarticF2;
    const double f4 = (1.0 - f2) * (1.0 - f2);
    return CrSolution{f2, f4, std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
  }

  const double rhs = critical_equation_rhs(problem);
  // g is strictly increasing from 0+ to +inf on (3/7, 1); pull the ends in
  // so neither endpoint evaluation is singular.
  const double lo = kPureQuarticF2 + 1e-15;
  const double hi = 1.0 - 1e-15;
  RootResult root;
  try {
    root = find_root_bracketed(
        [rhs](double f2) { return critical_equation_lhs(f2) - rhs; }, lo, hi,
        kCriticalTolerance);
  } catch (const DomainError& e) {
    throw InternalError(std::string("solve_critical_point: ") + e.what());
  }
  const double f2 = root.root;
  const double f4 = (1.0 - f2) * (1.0 - f2);
  return CrSolution{f2, f4, lagrange_multiplier(problem, f2, f4),
                    quartic_product(problem, f2, f4)};
}

namespace {

std::vector<double> objective_gradient(const ReferenceWeights& weights,
                                       const MultiplierVector& multipliers) {
  std::vector<double> grad(weights.size());
  std::vector<double> f(weights.f_values().begin(), weights.f_values().end());
  for (std::size_t i = 0; i < grad.size(); ++i) {
    auto objective = [&](const std::vector<double>& fv) {
      return cr_objective(ReferenceWeights(weights.orders(), fv), multipliers);
    };
    grad[i] = numdiff::central_partial(objective, f, i);
  }
  return grad;
}

// d/dF_k of F_k^(2/k), analytic.
std::vector<double> constraint_gradient(const ReferenceWeights& weights) {
  std::vector<double> grad(weights.size());
  for (std::size_t i = 0; i < grad.size(); ++i) {
    const double p = 2.0 / weights.orders()[i];
    grad[i] = p * std::pow(weights.f(i), p - 1.0);
  }
  return grad;
}

}  // namespace

std::vector<double> stationarity_residual(const ReferenceWeights& weights,
                                          const MultiplierVector& multipliers,
                                          double mu) {
  const auto gf = objective_gradient(weights, multipliers);
  const auto gphi = constraint_gradient(weights);
  std::vector<double> r(gf.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = gf[i] - mu * gphi[i];
  return r;
}

double fit_lagrange_multiplier(const ReferenceWeights& weights,
                               const MultiplierVector& multipliers) {
  const auto gf = objective_gradient(weights, multipliers);
  const auto gphi = constraint_gradient(weights);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < gf.size(); ++i) {
    num += gf[i] * gphi[i];
    den += gphi[i] * gphi[i];
  }
  return num / den;
}

}  // namespace fisherq
