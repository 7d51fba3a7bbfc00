#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "fisherq/errors.hpp"
#include "fisherq/oracle.hpp"
#include "fisherq/reference_table.hpp"

using namespace fisherq;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("harmonic ground state is exact", "[oracle]") {
  const SpectralSolution sol = solve_ground_state(OscillatorSpec{1.0, 0.0});
  CHECK_THAT(sol.eigenvalue, WithinAbs(1.0, 1e-12));
  // psi = (2/pi)^(1/4) exp(-x^2): <x^2> = 1/4, <x^4> = 3/16, I = 4.
  CHECK_THAT(sol.x2, WithinAbs(0.25, 1e-12));
  CHECK_THAT(sol.x4, WithinAbs(3.0 / 16.0, 1e-12));
  CHECK_THAT(sol.fisher_info, WithinAbs(4.0, 1e-9));
  CHECK_THAT(cramer_rao_check(sol), WithinAbs(1.0, 1e-6));
  const double peak = std::pow(2.0 / std::numbers::pi, 0.25);
  CHECK_THAT(sol.psi[sol.psi.size() / 2], WithinAbs(peak, 1e-10));
}

TEST_CASE("tabulated eigenvalues", "[oracle]") {
  CHECK_THAT(solve_ground_state(OscillatorSpec{1.0, 1.0}).eigenvalue,
             WithinAbs(1.392351, 1e-5));
  CHECK_THAT(solve_ground_state(OscillatorSpec{1.0, 1000.0}).eigenvalue,
             WithinAbs(10.639788, 1e-5));
  // Paper convention halves the Hamiltonian.
  CHECK_THAT(
      solve_ground_state(OscillatorSpec{1.0, 1.0, Convention::Paper}).eigenvalue,
      WithinAbs(1.392351 / 2.0, 1e-5));
}

TEST_CASE("solution invariants", "[oracle]") {
  for (const auto& row : reference_table()) {
    const SpectralSolution sol = solve_ground_state(OscillatorSpec{1.0, row.lambda});
    REQUIRE(sol.refinement_shift <= 1e-8);
    REQUIRE_THAT(sol.norm(), WithinAbs(1.0, 1e-8));
    const std::size_t n = sol.psi.size();
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(sol.grid[i] == -sol.grid[n - 1 - i]);
      REQUIRE(std::abs(sol.psi[i] - sol.psi[n - 1 - i]) <= 1e-8);
    }
    REQUIRE(std::abs(sol.psi.front()) < 1e-10);
    REQUIRE_THAT(sol.momentum_variance, WithinAbs(sol.fisher_info / 4.0, 1e-8));
    REQUIRE(std::abs(sol.mean_momentum) <= 1e-10);
    REQUIRE_THAT(fisher_from_curvature(sol.grid_step, sol.psi),
                 WithinAbs(sol.fisher_info, 1e-6));
    REQUIRE(cramer_rao_check(sol) >= 1.0 - 1e-8);
    // Uncertainty form of the same bound.
    REQUIRE(sol.x2 * sol.momentum_variance >= 0.25 - 1e-8);
    // Legendre identity with alpha = 8 E.
    REQUIRE(std::abs(legendre_residual(oracle_point(sol))) <= 1e-5);
  }
}

TEST_CASE("fisher_from_wavefunction", "[oracle]") {
  const SpectralSolution sol = solve_ground_state(OscillatorSpec{1.0, 1.0});
  const double i = fisher_from_wavefunction(sol);
  CHECK(i == sol.fisher_info);
  CHECK(i * sol.x2 >= 1.0);

  std::vector<double> flipped = sol.psi;
  for (double& p : flipped) p = -p;
  CHECK(fisher_from_wavefunction(sol.grid_step, flipped) == i);

  std::vector<double> scaled = sol.psi;
  for (double& p : scaled) p *= 1.1;
  CHECK_THROWS_AS(fisher_from_wavefunction(sol.grid_step, scaled), DomainError);
}

TEST_CASE("anharmonic states do not saturate the CR bound", "[oracle]") {
  const SpectralSolution sol = solve_ground_state(OscillatorSpec{1.0, 100.0});
  CHECK(cramer_rao_check(sol) > 1.0);
}

TEST_CASE("Hellmann-Feynman", "[oracle]") {
  const SolverConfig config;
  CHECK(hellmann_feynman_check({1.0, 1.0}, config, 4, 1e-4 * 32.0) <= 1e-4);
  CHECK(hellmann_feynman_check({1.0, 0.1}, config, 2, 1e-4 * 16.0) <= 1e-4);
  CHECK(hellmann_feynman_check({1.0, 0.0}, config, 2, 1e-4 * 16.0) <= 1e-6);
  CHECK_THROWS_AS(hellmann_feynman_check({1.0, 1.0}, config, 4, 0.0),
                  DomainError);
}

TEST_CASE("virial_check", "[oracle]") {
  const SpectralSolution h = solve_ground_state(OscillatorSpec{1.0, 0.0});
  const VirialResiduals vh = virial_check(h, h.multipliers);
  CHECK(std::abs(vh.fisher) <= 1e-8);
  CHECK(std::abs(vh.alpha) <= 1e-8);

  const SpectralSolution one = solve_ground_state(OscillatorSpec{1.0, 1.0});
  const VirialResiduals v1 = virial_check(one, one.multipliers);
  CHECK(std::abs(v1.fisher) <= 1e-5);
  CHECK(std::abs(v1.alpha) <= 1e-5);

  const SpectralSolution big = solve_ground_state(OscillatorSpec{1.0, 1000.0});
  const VirialResiduals vb = virial_check(big, big.multipliers);
  CHECK(std::abs(vb.fisher) <= 1e-4);
  CHECK(std::abs(vb.alpha) <= 1e-4);

  CHECK_THROWS_AS(virial_check(one, MultiplierVector{{2, -16.0}, {4, -31.0}}),
                  DomainError);
  CHECK_THROWS_AS(virial_check(one, MultiplierVector{{2, -16.0}}), DomainError);
}

TEST_CASE("general even potentials", "[oracle]") {
  // Pure sextic: still confining, parity-even.
  const SpectralSolution s =
      solve_ground_state(MultiplierVector{{2, -16.0}, {6, -8.0}});
  const VirialResiduals v = virial_check(s, s.multipliers);
  CHECK(std::abs(v.fisher) <= 1e-6);
  CHECK(std::abs(v.alpha) <= 1e-6);

  CHECK_THROWS_AS(solve_ground_state(MultiplierVector{{1, -1.0}, {2, -1.0}}),
                  DomainError);
  CHECK_THROWS_AS(solve_ground_state(MultiplierVector{{2, 1.0}}), DomainError);
  CHECK_THROWS_AS(solve_ground_state(MultiplierVector{{2, 0.0}}), DomainError);
}

TEST_CASE("configuration and convergence errors", "[oracle]") {
  SolverConfig bad;
  bad.basis_size = 8;
  CHECK_THROWS_AS(solve_ground_state(OscillatorSpec{1.0, 1.0}, bad), DomainError);
  bad = {};
  bad.grid_points = 1000;
  CHECK_THROWS_AS(solve_ground_state(OscillatorSpec{1.0, 1.0}, bad), DomainError);
  bad = {};
  bad.scale = -1.0;
  CHECK_THROWS_AS(solve_ground_state(OscillatorSpec{1.0, 1.0}, bad), DomainError);

  // A badly mismatched basis scale with a small basis cannot converge.
  SolverConfig poor;
  poor.basis_size = 16;
  poor.scale = 0.05;
  CHECK_THROWS_AS(solve_ground_state(OscillatorSpec{1.0, 1000.0}, poor),
                  ConvergenceError);
}

TEST_CASE("refinement invariance of the eigenvalue", "[oracle]") {
  for (const auto& row : reference_table()) {
    const auto l = map_multipliers({1.0, row.lambda});
    const double s = variational_scale(l);
    const double a1 = ground_alpha(l, 256, s);
    const double a2 = ground_alpha(l, 512, s);
    REQUIRE(std::abs(a1 - a2) / 8.0 <= 1e-8);
  }
}

TEST_CASE("inference underestimates the solver eigenvalue", "[oracle]") {
  double prev_gap = 0.0;
  for (const auto& row : reference_table()) {
    const OscillatorSpec spec{1.0, row.lambda};
    const double gap =
        solve_ground_state(spec).eigenvalue - infer_ground_state(spec).energy;
    REQUIRE(gap >= 0.0);
    REQUIRE(gap > prev_gap);
    prev_gap = gap;
  }
}
