#include "fisherq/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fisherq/errors.hpp"
#include "fisherq/root_finding.hpp"

namespace fisherq {

namespace {

// Decay exponent int kappa dx at the grid edge; psi(L) ~ e^-32 ~ 1e-14.
constexpr double kWkbExponent = 32.0;

void validate_potential(const MultiplierVector& m) {
  bool confining = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.order(i) % 2 != 0)
      throw DomainError("oracle: odd moment order " +
                        std::to_string(m.order(i)) + " not supported");
    if (!std::isfinite(m[i]) || m[i] > 0.0)
      throw DomainError("oracle: multipliers must be finite and <= 0");
    confining = confining || m[i] < 0.0;
  }
  if (!confining) throw DomainError("oracle: potential is identically zero");
}

double double_factorial_odd(int k) {  // (k-1)!! for even k
  double r = 1.0;
  for (int j = k - 1; j > 1; j -= 2) r *= j;
  return r;
}

// Applies the position operator (ladder form, xi = (a + a^dagger)/sqrt 2)
// from the left to a dense matrix.
Eigen::MatrixXd apply_position(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, m.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i > 0) out.row(i) += std::sqrt(0.5 * double(i)) * m.row(i - 1);
    if (i + 1 < n) out.row(i) += std::sqrt(0.5 * double(i + 1)) * m.row(i + 1);
  }
  return out;
}

// Hamiltonian restricted to even Hermite functions h_0, h_2, ... below
// `basis_size`, in units where the eigenvalue is alpha.
Eigen::MatrixXd even_hamiltonian(const MultiplierVector& lambdas,
                                 int basis_size, double s) {
  const int max_order = lambdas.orders()[lambdas.size() - 1];
  const Eigen::Index ext = basis_size + max_order + 1;
  const Eigen::Index n_even = (basis_size + 1) / 2;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_even, n_even);
  // Kinetic term 4 s^2 p_xi^2.
  for (Eigen::Index a = 0; a < n_even; ++a) {
    const double i = 2.0 * a;
    h(a, a) += 4.0 * s * s * (i + 0.5);
    if (a + 1 < n_even) {
      const double off = -4.0 * s * s * 0.5 * std::sqrt((i + 1.0) * (i + 2.0));
      h(a, a + 1) += off;
      h(a + 1, a) += off;
    }
  }

  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(ext, ext);
  int current = 0;
  for (std::size_t idx = 0; idx < lambdas.size(); ++idx) {
    const int k = lambdas.order(idx);
    while (current < k) {
      power = apply_position(power);
      ++current;
    }
    const double coeff = -lambdas[idx] / std::pow(s, k);
    if (coeff == 0.0) continue;
    for (Eigen::Index a = 0; a < n_even; ++a)
      for (Eigen::Index b = 0; b < n_even; ++b)
        h(a, b) += coeff * power(2 * a, 2 * b);
  }
  return h;
}

struct EvenEigenpair {
  double alpha;
  Eigen::VectorXd coeffs;  // over h_0, h_2, ...
};

EvenEigenpair lowest_even(const MultiplierVector& lambdas, int basis_size,
                          double s, bool want_vector) {
  const Eigen::MatrixXd h = even_hamiltonian(lambdas, basis_size, s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, want_vector ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("oracle: symmetric eigensolver failed", 0.0);
  EvenEigenpair out{solver.eigenvalues()(0), {}};
  if (want_vector) out.coeffs = solver.eigenvectors().col(0);
  return out;
}

double potential(const MultiplierVector& lambdas, double x) {
  double v = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    v -= lambdas[i] * std::pow(x, lambdas.order(i));
  return v;
}

// Half-width L with int_{x_t}^{L} sqrt((V - alpha)/4) dx = kWkbExponent.
double wkb_extent(const MultiplierVector& lambdas, double alpha) {
  double turning = 1.0;
  while (potential(lambdas, turning) < alpha) turning *= 2.0;
  turning = find_root_bracketed(
                [&](double x) { return potential(lambdas, x) - alpha; }, 0.0,
                turning, 1e-12 * turning)
                .root;
  const double dx = 1e-3 * turning;
  double x = turning, integral = 0.0;
  double prev = 0.0;
  while (integral < kWkbExponent) {
    x += dx;
    const double kappa =
        0.5 * std::sqrt(std::max(potential(lambdas, x) - alpha, 0.0));
    integral += 0.5 * (prev + kappa) * dx;
    prev = kappa;
  }
  return x;
}

// Eighth-order central stencils; psi is taken as zero outside the grid.
constexpr std::array<double, 5> kFirst = {0.0, 4.0 / 5.0, -1.0 / 5.0,
                                          4.0 / 105.0, -1.0 / 280.0};
constexpr std::array<double, 5> kSecond = {-205.0 / 72.0, 8.0 / 5.0,
                                           -1.0 / 5.0, 8.0 / 315.0,
                                           -1.0 / 560.0};

double sample(std::span<const double> psi, std::ptrdiff_t i) {
  if (i < 0 || i >= static_cast<std::ptrdiff_t>(psi.size())) return 0.0;
  return psi[static_cast<std::size_t>(i)];
}

std::vector<double> first_derivative(double h, std::span<const double> psi) {
  std::vector<double> d(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto c = static_cast<std::ptrdiff_t>(i);
    double acc = 0.0;
    for (std::ptrdiff_t j = 1; j <= 4; ++j)
      acc += kFirst[j] * (sample(psi, c + j) - sample(psi, c - j));
    d[i] = acc / h;
  }
  return d;
}

std::vector<double> second_derivative(double h, std::span<const double> psi) {
  std::vector<double> d(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto c = static_cast<std::ptrdiff_t>(i);
    double acc = kSecond[0] * psi[i];
    for (std::ptrdiff_t j = 1; j <= 4; ++j)
      acc += kSecond[j] * (sample(psi, c + j) + sample(psi, c - j));
    d[i] = acc / (h * h);
  }
  return d;
}

double grid_norm(double h, std::span<const double> psi) {
  double s = 0.0;
  for (double p : psi) s += p * p;
  return s * h;
}

bool same_multipliers(const MultiplierVector& a, const MultiplierVector& b) {
  if (!(a.orders() == b.orders())) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1.0});
    if (std::abs(a[i] - b[i]) > 1e-12 * scale) return false;
  }
  return true;
}

}  // namespace

void SolverConfig::validate() const {
  if (basis_size < 16) throw DomainError("basis size must be >= 16");
  if (scale && !(*scale > 0.0 && std::isfinite(*scale)))
    throw DomainError("basis scale must be positive");
  if (grid_points < 101 || grid_points % 2 == 0)
    throw DomainError("grid point count must be odd and >= 101");
  if (!(convergence_tolerance > 0.0))
    throw DomainError("convergence tolerance must be positive");
}

double SpectralSolution::moment(int k) const {
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    s += std::pow(grid[i], k) * psi[i] * psi[i];
  return s * grid_step;
}

double SpectralSolution::norm() const { return grid_norm(grid_step, psi); }

double variational_scale(const MultiplierVector& multipliers) {
  validate_potential(multipliers);
  // d/dt of 2t + sum_k a_k (k-1)!! (2t)^(-k/2), t = s^2, in u = ln t.
  auto slope = [&](double u) {
    const double t = std::exp(u);
    double d = 2.0;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
      const int k = multipliers.order(i);
      const double a = -multipliers[i];
      d -= a * double_factorial_odd(k) * 0.5 * k * std::pow(2.0, -0.5 * k) *
           std::pow(t, -0.5 * k - 1.0);
    }
    return d;
  };
  const double u = find_root_bracketed(slope, -80.0, 80.0, 1e-12).root;
  return std::exp(0.5 * u);
}

double ground_alpha(const MultiplierVector& multipliers, int basis_size,
                    std::optional<double> scale) {
  validate_potential(multipliers);
  const double s = scale ? *scale : variational_scale(multipliers);
  return lowest_even(multipliers, basis_size, s, false).alpha;
}

SpectralSolution solve_ground_state(const MultiplierVector& multipliers,
                                    const SolverConfig& config) {
  config.validate();
  validate_potential(multipliers);
  const double s = config.scale ? *config.scale : variational_scale(multipliers);

  const EvenEigenpair primary =
      lowest_even(multipliers, config.basis_size, s, true);
  const double refined =
      lowest_even(multipliers, 2 * config.basis_size, s, false).alpha;
  const double shift = std::abs(primary.alpha - refined) / 8.0;
  if (!(shift <= config.convergence_tolerance))
    throw ConvergenceError("oracle: eigenvalue moved by " +
                               std::to_string(shift) +
                               " on doubling the basis (size " +
                               std::to_string(config.basis_size) +
                               ", scale " + std::to_string(s) + ")",
                           shift);

  SpectralSolution sol{multipliers,
                       primary.alpha,
                       primary.alpha / 8.0,
                       shift,
                       config.basis_size,
                       s,
                       0.0,
                       {},
                       {},
                       0.0,
                       0.0,
                       0.0,
                       0.0,
                       0.0,
                       0.0};

  const double extent = wkb_extent(multipliers, primary.alpha);
  const int half = (config.grid_points - 1) / 2;
  sol.grid_step = extent / half;
  sol.grid.resize(config.grid_points);
  sol.psi.resize(config.grid_points);

  const Eigen::Index n_even = primary.coeffs.size();
  const Eigen::Index n_full = 2 * n_even;
  const double h0_norm = std::pow(std::numbers::pi, -0.25);
  for (int i = 0; i < config.grid_points; ++i) {
    const double x = (i - half) * sol.grid_step;
    const double xi = s * x;
    // h_n(xi) by the stable three-term recurrence.
    double prev = 0.0;
    double cur = h0_norm * std::exp(-0.5 * xi * xi);
    double value = primary.coeffs(0) * cur;
    for (Eigen::Index n = 0; n + 1 < n_full; ++n) {
      const double next = std::sqrt(2.0 / (n + 1.0)) * xi * cur -
                          std::sqrt(double(n) / (n + 1.0)) * prev;
      prev = cur;
      cur = next;
      if ((n + 1) % 2 == 0) value += primary.coeffs((n + 1) / 2) * cur;
    }
    sol.grid[i] = x;
    sol.psi[i] = std::sqrt(s) * value;
  }

  const double scale_to_unit = 1.0 / std::sqrt(sol.norm());
  const double sign = sol.psi[half] < 0.0 ? -1.0 : 1.0;
  for (double& p : sol.psi) p *= sign * scale_to_unit;

  const auto d1 = first_derivative(sol.grid_step, sol.psi);
  const auto d2 = second_derivative(sol.grid_step, sol.psi);
  double kinetic = 0.0, curvature = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < sol.psi.size(); ++i) {
    kinetic += d1[i] * d1[i];
    curvature += sol.psi[i] * d2[i];
    drift += sol.psi[i] * d1[i];
  }
  sol.mean_x = sol.moment(1);
  sol.x2 = sol.moment(2);
  sol.x4 = sol.moment(4);
  sol.fisher_info = 4.0 * kinetic * sol.grid_step;
  sol.momentum_variance = -curvature * sol.grid_step;
  sol.mean_momentum = drift * sol.grid_step;
  return sol;
}

SpectralSolution solve_ground_state(const OscillatorSpec& spec,
                                    const SolverConfig& config) {
  return solve_ground_state(map_multipliers(spec), config);
}

double fisher_from_wavefunction(double grid_step,
                                std::span<const double> psi) {
  if (!(grid_step > 0.0)) throw DomainError("grid step must be positive");
  if (std::abs(grid_norm(grid_step, psi) - 1.0) > 1e-6)
    throw DomainError("fisher_from_wavefunction: psi is not normalized");
  const auto d1 = first_derivative(grid_step, psi);
  double s = 0.0;
  for (double d : d1) s += d * d;
  return 4.0 * s * grid_step;
}

double fisher_from_wavefunction(const SpectralSolution& sol) {
  return fisher_from_wavefunction(sol.grid_step, sol.psi);
}

double fisher_from_curvature(double grid_step, std::span<const double> psi) {
  if (!(grid_step > 0.0)) throw DomainError("grid step must be positive");
  const auto d2 = second_derivative(grid_step, psi);
  double s = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) s += psi[i] * d2[i];
  return -4.0 * s * grid_step;
}

double cramer_rao_check(const SpectralSolution& sol) {
  return sol.fisher_info * (sol.x2 - sol.mean_x * sol.mean_x);
}

double hellmann_feynman_check(const OscillatorSpec& spec,
                              const SolverConfig& config, int order,
                              double step) {
  config.validate();
  if (!(step > 0.0)) throw DomainError("Hellmann-Feynman step must be > 0");
  const MultiplierVector base = map_multipliers(spec);
  const SpectralSolution sol = solve_ground_state(base, config);

  MultiplierVector up = base, down = base;
  up.at(order) += step;
  down.at(order) -= step;
  const double a_up = ground_alpha(up, config.basis_size, sol.scale);
  const double a_down = ground_alpha(down, config.basis_size, sol.scale);
  const double slope = (a_up - a_down) / (2.0 * step);
  return std::abs(slope + sol.moment(order));
}

ScenarioPoint oracle_point(const SpectralSolution& sol) {
  std::vector<double> moments(sol.multipliers.size());
  for (std::size_t i = 0; i < moments.size(); ++i)
    moments[i] = sol.moment(sol.multipliers.order(i));
  return ScenarioPoint{sol.multipliers,
                       MomentVector(sol.multipliers.orders(), moments),
                       sol.fisher_info, sol.alpha};
}

VirialResiduals virial_check(const SpectralSolution& sol,
                             const MultiplierVector& multipliers) {
  if (!same_multipliers(sol.multipliers, multipliers))
    throw DomainError("virial_check: multipliers do not match the solved state");
  return virial_residuals(oracle_point(sol));
}

}  // namespace fisherq
