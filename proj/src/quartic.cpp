#include "fisherq/quartic.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "fisherq/cr_optimizer.hpp"
#include "fisherq/errors.hpp"
#include "fisherq/fisher_core.hpp"

namespace fisherq {

std::string_view to_string(Convention c) {
  return c == Convention::Literature ? "literature" : "paper";
}

Convention parse_convention(std::string_view name) {
  if (name == "literature") return Convention::Literature;
  if (name == "paper") return Convention::Paper;
  throw DomainError("unknown convention '" + std::string(name) + "'");
}

void OscillatorSpec::validate() const {
  if (!std::isfinite(k_harmonic) || !std::isfinite(lambda_anharmonic))
    throw DomainError("oscillator coefficients must be finite");
  if (k_harmonic < 0.0) throw DomainError("k must be >= 0");
  if (lambda_anharmonic < 0.0) throw DomainError("lambda must be >= 0");
  if (k_harmonic == 0.0 && lambda_anharmonic == 0.0)
    throw DomainError("k and lambda cannot both be zero");
}

MultiplierVector map_multipliers(const OscillatorSpec& spec) {
  spec.validate();
  const bool lit = spec.convention == Convention::Literature;
  const double l2 = (lit ? -16.0 : -4.0) * spec.k_harmonic;
  const double l4 = (lit ? -32.0 : -4.0) * spec.lambda_anharmonic;
  // Avoid -0.0 leaking into output.
  return MultiplierVector{{2, l2 == 0.0 ? 0.0 : l2},
                          {4, l4 == 0.0 ? 0.0 : l4}};
}

InferenceResult infer_ground_state(const OscillatorSpec& spec) {
  const MultiplierVector lambdas = map_multipliers(spec);
  const CrProblem problem(lambdas);
  const CrSolution sol = solve_critical_point(problem);

  // Restrict the closed forms to the orders that are actually present.
  std::vector<int> orders;
  std::vector<double> weights, active;
  if (!problem.pure_quartic()) {
    orders.push_back(2);
    weights.push_back(sol.f2);
    active.push_back(problem.lambda2());
  }
  if (!problem.harmonic()) {
    orders.push_back(4);
    weights.push_back(sol.f4);
    active.push_back(problem.lambda4());
  }
  const MomentOrderSet set(orders);
  const ScenarioPoint point = self_consistent_point(
      ReferenceWeights(set, weights), MultiplierVector(set, active));

  InferenceResult r{};
  r.f2 = sol.f2;
  r.f4 = sol.f4;
  r.alpha = point.alpha;
  r.energy = point.alpha / 8.0;
  r.fisher_info = point.fisher_info;
  r.lambda2 = problem.lambda2();
  r.lambda4 = problem.lambda4();
  r.x2 = problem.pure_quartic() ? std::numeric_limits<double>::infinity()
                                : point.moments.at(2);
  // lambda4 -> 0+: 1 - F2 ~ (4/rhs)^3, so <x^4> -> 16 / (9 |lambda2|).
  r.x4 = problem.harmonic() ? 16.0 / (9.0 * -problem.lambda2())
                            : point.moments.at(4);
  r.cr_product = r.fisher_info * r.x2;
  return r;
}

std::vector<SweepEntry> sweep(const OscillatorSpec& tmpl,
                              std::span<const double> lambdas) {
  std::vector<SweepEntry> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    OscillatorSpec spec = tmpl;
    spec.lambda_anharmonic = lambda;
    SweepEntry entry{lambda, std::nullopt, {}};
    try {
      entry.result = infer_ground_state(spec);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace fisherq
