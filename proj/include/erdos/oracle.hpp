#pragma once

#include <vector>

#include "erdos/model.hpp"

namespace erdos {

// Brute-force reference solvers for cross-checking the main pipeline on
// small instances. They share only model/numerics with the enumerator.

// All solutions with largest part <= x_max and n <= n_max, found by direct
// multiset enumeration of the non-one parts. Each solution's instance is
// its own largest part.
std::vector<Solution> brute_force_by_multiset(long long n_max, int x_max);

// All solutions of the counts-form equation with every a_i <= a_cap, found
// by trial over the divisors of the product (no discriminant, no square
// test, to keep failure modes independent of the main path).
std::vector<Solution> brute_force_by_counts(int a_cap, const Instance& inst);

}  // namespace erdos
