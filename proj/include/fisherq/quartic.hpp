#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fisherq/indexed.hpp"

namespace fisherq {

/// How (k, lambda) become multipliers.
///
/// Literature: H = -d^2/dy^2 + k y^2 + lambda y^4. Rescaling y = sqrt(2) x
/// brings it to the unit-mass Fisher form, giving lambda2 = -16 k and
/// lambda4 = -32 lambda. Energies are directly comparable with the standard
/// tabulated quartic-oscillator eigenvalues.
///
/// Paper: H = -(1/2) d^2/dx^2 + (k/2) x^2 + (lambda/2) x^4 with
/// lambda2 = -4 k and lambda4 = -4 lambda. This H is half the Literature
/// one, so every energy is exactly half.
enum class Convention { Literature, Paper };

std::string_view to_string(Convention c);
/// Accepts "literature" or "paper"; DomainError otherwise.
Convention parse_convention(std::string_view name);

struct OscillatorSpec {
  double k_harmonic = 1.0;
  double lambda_anharmonic = 0.0;
  Convention convention = Convention::Literature;

  /// Throws DomainError on negative, non-finite or all-zero coefficients.
  void validate() const;
};

/// Orders {2, 4}. Zero entries are kept (harmonic or pure-quartic limits).
MultiplierVector map_multipliers(const OscillatorSpec& spec);

struct InferenceResult {
  double f2;
  double f4;
  double alpha;
  double energy;       // alpha / 8
  double fisher_info;  // I
  double x2;           // <x^2>, +inf when k = 0
  double x4;           // <x^4>; for lambda = 0 the lambda -> 0+ limit
  double cr_product;   // I <x^2>
  double lambda2;
  double lambda4;
};

InferenceResult infer_ground_state(const OscillatorSpec& spec);

struct SweepEntry {
  double lambda;
  std::optional<InferenceResult> result;
  std::string error;  // set when result is empty
};

/// One entry per lambda, in order; `tmpl` supplies k and the convention.
/// Failures are recorded per entry.
std::vector<SweepEntry> sweep(const OscillatorSpec& tmpl,
                              std::span<const double> lambdas);

}  // namespace fisherq
