#pragma once

// Shared Taylor data for the coth/cot-type scalar functions.

#include <array>

namespace wznw::detail {

// z coth z = 1 + sum_k kChiEven[k] z^{2k}, k = 1..6.
inline constexpr std::array<double, 7> kChiEven = {
    1.0,
    1.0 / 3.0,
    -1.0 / 45.0,
    2.0 / 945.0,
    -1.0 / 4725.0,
    2.0 / 93555.0,
    -1382.0 / 638512875.0,
};

// |z| below this uses the truncated series (truncation error < 1e-15 here).
inline constexpr double kSeriesRadius = 1e-2;

}  // namespace wznw::detail
