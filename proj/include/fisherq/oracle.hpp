#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fisherq/fisher_core.hpp"
#include "fisherq/indexed.hpp"
#include "fisherq/quartic.hpp"

// Reference Schrodinger solver for even polynomial potentials in the
// unit-mass Fisher form
//
//   -4 psi'' - sum_k lambda_k x^k psi = alpha psi,     E = alpha / 8,
//
// diagonalized in a frequency-scaled harmonic-oscillator basis (even-parity
// block only), plus wavefunction analytics on a uniform grid.
namespace fisherq {

struct SolverConfig {
  /// Number of Hermite functions (both parities) in the primary basis. The
  /// refinement solve uses twice as many.
  int basis_size = 256;
  /// Basis length scale s (psi_n(x) = sqrt(s) h_n(s x)). Empty: pick the s
  /// minimizing the energy of the Gaussian h_0.
  std::optional<double> scale;
  /// Odd, so the grid is symmetric about x = 0 and contains it.
  int grid_points = 4001;
  /// Largest accepted |E(N) - E(2N)|.
  double convergence_tolerance = 1e-7;

  void validate() const;
};

struct SpectralSolution {
  MultiplierVector multipliers;
  double alpha;
  double eigenvalue;  // alpha / 8
  double refinement_shift;
  int basis_size;
  double scale;

  double grid_step;
  std::vector<double> grid;
  std::vector<double> psi;

  double mean_x;
  double x2;
  double x4;
  double fisher_info;        // 4 int psi'^2
  double momentum_variance;  // -int psi psi''
  double mean_momentum;      // int psi psi' (<p> = -i times this)

  /// int x^k psi^2 dx on the grid.
  double moment(int k) const;
  double norm() const;
};

/// Lowest eigenpair for `multipliers`: every order even, every lambda_k <= 0,
/// at least one < 0. Throws ConvergenceError if the refinement shift
/// exceeds config.convergence_tolerance.
SpectralSolution solve_ground_state(const MultiplierVector& multipliers,
                                    const SolverConfig& config = {});
SpectralSolution solve_ground_state(const OscillatorSpec& spec,
                                    const SolverConfig& config = {});

/// Lowest eigenvalue alpha in a basis of `basis_size` functions, without
/// building the grid.
double ground_alpha(const MultiplierVector& multipliers, int basis_size,
                    std::optional<double> scale = std::nullopt);

/// Scale s used when SolverConfig::scale is empty.
double variational_scale(const MultiplierVector& multipliers);

/// 4 sum (psi')^2 dx with psi' from an eighth-order central difference.
/// Throws DomainError if psi is not normalized to 1e-6.
double fisher_from_wavefunction(double grid_step, std::span<const double> psi);
double fisher_from_wavefunction(const SpectralSolution& sol);

/// -4 sum psi psi'' dx, the curvature form of the same quantity.
double fisher_from_curvature(double grid_step, std::span<const double> psi);

/// I (<x^2> - <x>^2).
double cramer_rao_check(const SpectralSolution& sol);

/// |(alpha(lambda_k + h) - alpha(lambda_k - h)) / 2h + <x^k>| for the state
/// of `spec`.
double hellmann_feynman_check(const OscillatorSpec& spec,
                              const SolverConfig& config, int order,
                              double step);

/// Oracle quantities as a ScenarioPoint (alpha = 8 E, moments over the
/// solution's orders).
ScenarioPoint oracle_point(const SpectralSolution& sol);

/// Virial identities with oracle I, moments and alpha. Throws DomainError
/// if `multipliers` are not the ones the state was solved for.
VirialResiduals virial_check(const SpectralSolution& sol,
                             const MultiplierVector& multipliers);

}  // namespace fisherq
