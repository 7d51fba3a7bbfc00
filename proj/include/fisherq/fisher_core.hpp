#pragma once

#include <functional>
#include <vector>

#include "fisherq/indexed.hpp"

// Closed-form solutions of the linear first-order PDEs obeyed by the Fisher
// information I(<x^k>) and the normalization multiplier alpha(lambda_k),
// together with the Legendre-structure identities linking them:
//
//   I     = sum_k (k/2)     (F_k / |<x^k>|)^(2/k)
//   alpha = sum_k ((k+2)/2) (F_k |lambda_k|)^(2/(2+k))
//   I     = alpha + sum_k lambda_k <x^k>
//
// Everything here is a pure function of its arguments.
namespace fisherq {

/// One point of the {I, <x^k>} <-> {alpha, lambda_k} correspondence.
struct ScenarioPoint {
  MultiplierVector multipliers;
  MomentVector moments;
  double fisher_info;
  double alpha;
};

/// I from moments. Throws DomainError on a zero or non-finite moment.
double fim_closed_form(const ReferenceWeights& weights,
                       const MomentVector& moments);

/// I expressed through the multipliers, sum_k (k/2) (F_k |lambda_k|)^(2/(2+k)).
/// Agrees with fim_closed_form on conjugate moments.
double fim_from_multipliers(const ReferenceWeights& weights,
                            const MultiplierVector& multipliers);

double alpha_closed_form(const ReferenceWeights& weights,
                         const MultiplierVector& multipliers);

/// lambda_k = dI/d<x^k> = -(2/k) C_k <x^k>^(-(2+k)/k). Requires <x^k> > 0.
MultiplierVector conjugate_multipliers(const ReferenceWeights& weights,
                                       const MomentVector& moments);

/// <x^k> = -dalpha/dlambda_k = (2/(2+k)) D_k |lambda_k|^(-k/(2+k)).
/// Requires lambda_k < 0.
MomentVector conjugate_moments(const ReferenceWeights& weights,
                               const MultiplierVector& multipliers);

/// Builds the point whose moments, I and alpha all derive from `weights` and
/// `multipliers` through the closed forms.
ScenarioPoint self_consistent_point(const ReferenceWeights& weights,
                                    const MultiplierVector& multipliers);

/// I - alpha - sum_k lambda_k <x^k>.
double legendre_residual(const ScenarioPoint& point);

struct VirialResiduals {
  double fisher;  // I + sum_k (k/2) lambda_k <x^k>
  double alpha;   // alpha + sum_k (1 + k/2) lambda_k <x^k>
};

VirialResiduals virial_residuals(const ScenarioPoint& point);

/// max_k |F_k^2 / (|lambda_k|^k |<x^k>|^(2+k)) - 1|
double conjugacy_residual(const ReferenceWeights& weights,
                          const MultiplierVector& multipliers,
                          const MomentVector& moments);

using MomentFunction = std::function<double(const MomentVector&)>;
using MultiplierFunction = std::function<double(const MultiplierVector&)>;

/// I + sum_k (k/2) <x^k> dI/d<x^k>, derivatives by central differences.
double pde_residual_i(const MomentFunction& fisher, const MomentVector& at);
double pde_residual_i(const ReferenceWeights& weights,
                      const MomentVector& moments);

/// alpha - sum_k (1 + k/2) lambda_k dalpha/dlambda_k.
double pde_residual_alpha(const MultiplierFunction& alpha,
                          const MultiplierVector& at);
double pde_residual_alpha(const ReferenceWeights& weights,
                          const MultiplierVector& multipliers);

/// Finite-difference gradients of the closed forms.
std::vector<double> alpha_gradient(const ReferenceWeights& weights,
                                   const MultiplierVector& multipliers);
std::vector<double> fim_gradient(const ReferenceWeights& weights,
                                 const MomentVector& moments);

/// Largest relative violations of the three reciprocity relations at the
/// self-consistent point generated by (weights, multipliers):
///   dalpha/dlambda_k = -<x^k>,  dI/d<x^k> = lambda_k,
///   dI/dlambda_i = sum_k lambda_k d<x^k>/dlambda_i.
struct ReciprocityResiduals {
  double alpha_moments;
  double fim_multipliers;
  double euler;
};

ReciprocityResiduals reciprocity_residuals(const ReferenceWeights& weights,
                                           const MultiplierVector& multipliers);

}  // namespace fisherq
