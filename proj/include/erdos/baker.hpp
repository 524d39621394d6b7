#pragma once

#include <string>

#include "erdos/model.hpp"

namespace erdos {

struct BakerBound {
  Instance instance;
  BigInt B0;              // largest b still satisfying the crossing inequality
  std::string rhs_at_B0;  // decimal witness of the (upward-rounded) right side at B0
};

// 1.4 * 30^{l+3} * l^{4.5} * D^2 * (1 + log D), upward-rounded.
// For D = 1 the log factor is exactly 1.
double matveev_constant(int l, int D);

// Upward-rounded right-hand side of the exponent inequality:
//   2.8*30^{k+3}*k^{4.5} * (log p_2)...(log p_k) * (1+log b) + 2*log((x_n-1)*b)/log 2.
double baker_rhs(const Instance& inst, const BigInt& b);

// True while b < rhs(b) still holds (rhs evaluated with upward rounding,
// so the eventual bound can only err on the safe side).
bool rhs_exceeds(const Instance& inst, const BigInt& b);

// Largest integer B0 with B0 < rhs(B0), by doubling then binary search.
BakerBound baker_bound(const Instance& inst);

}  // namespace erdos
