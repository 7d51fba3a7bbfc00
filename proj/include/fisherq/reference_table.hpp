#pragma once

#include <optional>
#include <span>

namespace fisherq {

/// Tabulated ground-state values for H = -d^2/dy^2 + y^2 + lambda y^4
/// (k = 1, Literature convention), six decimals.
struct ReferenceRow {
  double lambda;
  double e_numerical;  // direct numerical solution
  double e_inferred;   // alpha / 8 from the Fisher inference
  double cr_product;   // I <x^2>
};

std::span<const ReferenceRow> reference_table();

/// Row whose lambda equals `lambda` exactly, if any.
std::optional<ReferenceRow> reference_row(double lambda);

}  // namespace fisherq
