#pragma once

#include <optional>
#include <utility>

#include "erdos/model.hpp"

namespace erdos {

enum class FamilyKind {
  TwoBig,         // 1^{n-2}, n+1, 2n^2-n
  ThreeNMinus2,   // 1^{n-2}, 2n, 3n-2
  ShiuSquare,     // n = m^2: 1^{m^2-4}, m, m, m, m+4
  CubeFamily,     // n = m^3+3m^2-4m: 1^{n-6}, m-1, m, m, m+1, m+2, m+4
};

// Verified constructive solution for the given parameter (n for the first
// two kinds, m for the last two). Parameters below 2 are rejected.
Solution family_solution(FamilyKind kind, long long parameter);

// Smallest largest-part witness among the families applicable at this n,
// certifying an upper bound on g(n).
std::optional<std::pair<Solution, long long>> g_upper_bound_witness(const BigInt& n);

}  // namespace erdos
