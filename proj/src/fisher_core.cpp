#include "fisherq/fisher_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fisherq/errors.hpp"
#include "fisherq/numdiff.hpp"

namespace fisherq {

namespace {

double relative_error(double value, double target) {
  const double scale = std::max(std::abs(target), 1e-300);
  return std::abs(value - target) / scale;
}

}  // namespace

double fim_closed_form(const ReferenceWeights& weights,
                       const MomentVector& moments) {
  require_same_orders(weights.orders(), moments.orders(), "fim_closed_form");
  double sum = 0.0;
  for (std::size_t i = 0; i < moments.size(); ++i) {
    const double m = std::abs(moments[i]);
    if (!(m > 0.0) || !std::isfinite(m))
      throw DomainError("fim_closed_form: <x^" +
                        std::to_string(moments.order(i)) +
                        "> must be nonzero and finite");
    const double k = moments.order(i);
    sum += 0.5 * k * std::pow(weights.f(i) / m, 2.0 / k);
  }
  return sum;
}

double fim_from_multipliers(const ReferenceWeights& weights,
                            const MultiplierVector& multipliers) {
  require_same_orders(weights.orders(), multipliers.orders(),
                      "fim_from_multipliers");
  double sum = 0.0;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const double k = multipliers.order(i);
    sum += 0.5 * k *
           std::pow(weights.f(i) * std::abs(multipliers[i]), 2.0 / (2.0 + k));
  }
  return sum;
}

double alpha_closed_form(const ReferenceWeights& weights,
                         const MultiplierVector& multipliers) {
  require_same_orders(weights.orders(), multipliers.orders(),
                      "alpha_closed_form");
  double sum = 0.0;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const double k = multipliers.order(i);
    sum += 0.5 * (k + 2.0) *
           std::pow(weights.f(i) * std::abs(multipliers[i]), 2.0 / (2.0 + k));
  }
  return sum;
}

MultiplierVector conjugate_multipliers(const ReferenceWeights& weights,
                                       const MomentVector& moments) {
  require_same_orders(weights.orders(), moments.orders(),
                      "conjugate_multipliers");
  std::vector<double> lambdas(moments.size());
  for (std::size_t i = 0; i < moments.size(); ++i) {
    const double m = moments[i];
    if (!(m > 0.0) || !std::isfinite(m))
      throw DomainError("conjugate_multipliers: <x^" +
                        std::to_string(moments.order(i)) +
                        "> must be positive");
    const double k = moments.order(i);
    lambdas[i] = -(2.0 / k) * weights.c(i) * std::pow(m, -(2.0 + k) / k);
  }
  return MultiplierVector(moments.orders(), std::move(lambdas));
}

MomentVector conjugate_moments(const ReferenceWeights& weights,
                               const MultiplierVector& multipliers) {
  require_same_orders(weights.orders(), multipliers.orders(),
                      "conjugate_moments");
  std::vector<double> moments(multipliers.size());
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const double lambda = multipliers[i];
    if (!(lambda < 0.0) || !std::isfinite(lambda))
      throw DomainError("conjugate_moments: lambda_" +
                        std::to_string(multipliers.order(i)) +
                        " must be negative");
    const double k = multipliers.order(i);
    moments[i] = (2.0 / (2.0 + k)) * weights.d(i) *
                 std::pow(-lambda, -k / (2.0 + k));
  }
  return MomentVector(multipliers.orders(), std::move(moments));
}

ScenarioPoint self_consistent_point(const ReferenceWeights& weights,
                                    const MultiplierVector& multipliers) {
  MomentVector moments = conjugate_moments(weights, multipliers);
  const double fisher = fim_closed_form(weights, moments);
  const double alpha = alpha_closed_form(weights, multipliers);
  return ScenarioPoint{multipliers, std::move(moments), fisher, alpha};
}

double legendre_residual(const ScenarioPoint& point) {
  require_same_orders(point.multipliers.orders(), point.moments.orders(),
                      "legendre_residual");
  double r = point.fisher_info - point.alpha;
  for (std::size_t i = 0; i < point.moments.size(); ++i)
    r -= point.multipliers[i] * point.moments[i];
  return r;
}

VirialResiduals virial_residuals(const ScenarioPoint& point) {
  require_same_orders(point.multipliers.orders(), point.moments.orders(),
                      "virial_residuals");
  VirialResiduals r{point.fisher_info, point.alpha};
  for (std::size_t i = 0; i < point.moments.size(); ++i) {
    const double k = point.moments.order(i);
    const double term = point.multipliers[i] * point.moments[i];
    r.fisher += 0.5 * k * term;
    r.alpha += (1.0 + 0.5 * k) * term;
  }
  return r;
}

double conjugacy_residual(const ReferenceWeights& weights,
                          const MultiplierVector& multipliers,
                          const MomentVector& moments) {
  require_same_orders(weights.orders(), multipliers.orders(),
                      "conjugacy_residual");
  require_same_orders(weights.orders(), moments.orders(), "conjugacy_residual");
  double worst = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double k = weights.orders()[i];
    // Compare in log space; the raw products over/underflow for large k.
    const double lhs = 2.0 * std::log(weights.f(i));
    const double rhs = k * std::log(std::abs(multipliers[i])) +
                       (2.0 + k) * std::log(std::abs(moments[i]));
    worst = std::max(worst, std::abs(std::expm1(lhs - rhs)));
  }
  return worst;
}

double pde_residual_i(const MomentFunction& fisher, const MomentVector& at) {
  double r = fisher(at);
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double k = at.order(i);
    r += 0.5 * k * at[i] * numdiff::central_partial(fisher, at, i);
  }
  return r;
}

double pde_residual_i(const ReferenceWeights& weights,
                      const MomentVector& moments) {
  return pde_residual_i(
      [&weights](const MomentVector& m) { return fim_closed_form(weights, m); },
      moments);
}

double pde_residual_alpha(const MultiplierFunction& alpha,
                          const MultiplierVector& at) {
  double r = alpha(at);
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double k = at.order(i);
    r -= (1.0 + 0.5 * k) * at[i] * numdiff::central_partial(alpha, at, i);
  }
  return r;
}

double pde_residual_alpha(const ReferenceWeights& weights,
                          const MultiplierVector& multipliers) {
  return pde_residual_alpha(
      [&weights](const MultiplierVector& l) {
        return alpha_closed_form(weights, l);
      },
      multipliers);
}

std::vector<double> alpha_gradient(const ReferenceWeights& weights,
                                   const MultiplierVector& multipliers) {
  auto fn = [&weights](const MultiplierVector& l) {
    return alpha_closed_form(weights, l);
  };
  std::vector<double> grad(multipliers.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    grad[i] = numdiff::central_partial(fn, multipliers, i);
  return grad;
}

std::vector<double> fim_gradient(const ReferenceWeights& weights,
                                 const MomentVector& moments) {
  auto fn = [&weights](const MomentVector& m) {
    return fim_closed_form(weights, m);
  };
  std::vector<double> grad(moments.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    grad[i] = numdiff::central_partial(fn, moments, i);
  return grad;
}

ReciprocityResiduals reciprocity_residuals(
    const ReferenceWeights& weights, const MultiplierVector& multipliers) {
  const ScenarioPoint point = self_consistent_point(weights, multipliers);
  ReciprocityResiduals out{0.0, 0.0, 0.0};

  const auto da = alpha_gradient(weights, multipliers);
  const auto di = fim_gradient(weights, point.moments);
  for (std::size_t k = 0; k < multipliers.size(); ++k) {
    out.alpha_moments = std::max(out.alpha_moments,
                                 relative_error(da[k], -point.moments[k]));
    out.fim_multipliers = std::max(out.fim_multipliers,
                                   relative_error(di[k], multipliers[k]));
  }

  // Fisher-Euler: I as a function of the multipliers through the conjugate
  // moments, against the chain sum_k lambda_k d<x^k>/dlambda_i.
  auto fisher_of_lambda = [&weights](const MultiplierVector& l) {
    return fim_closed_form(weights, conjugate_moments(weights, l));
  };
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const double lhs =
        numdiff::central_partial(fisher_of_lambda, multipliers, i);
    double rhs = 0.0;
    for (std::size_t k = 0; k < multipliers.size(); ++k) {
      auto moment_k = [&weights, k](const MultiplierVector& l) {
        return conjugate_moments(weights, l)[k];
      };
      rhs += multipliers[k] *
             numdiff::central_partial(moment_k, multipliers, i);
    }
    out.euler = std::max(out.euler, relative_error(lhs, rhs));
  }
  return out;
}

}  // namespace fisherq
