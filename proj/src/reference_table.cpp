#include "fisherq/reference_table.hpp"

#include <array>

namespace fisherq {

namespace {

constexpr std::array<ReferenceRow, 8> kRows = {{
    {0.0001, 1.000074, 1.000074, 1.000059},
    {0.001, 1.000748, 1.000739, 1.000591},
    {0.01, 1.007373, 1.007263, 1.005824},
    {0.1, 1.065285, 1.063047, 1.051255},
    {1.0, 1.392351, 1.353533, 1.296590},
    {10.0, 2.449174, 2.213973, 2.040974},
    {100.0, 4.999417, 4.212932, 3.782394},
    {1000.0, 10.639788, 8.587748, 7.599439},
}};

}  // namespace

std::span<const ReferenceRow> reference_table() { return kRows; }

std::optional<ReferenceRow> reference_row(double lambda) {
  for (const auto& row : kRows)
    if (row.lambda == lambda) return row;
  return std::nullopt;
}

}  // namespace fisherq
