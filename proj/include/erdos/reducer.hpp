#pragma once

#include <optional>
#include <string>
#include <vector>

#include "erdos/lll.hpp"
#include "erdos/model.hpp"

namespace erdos {

// C3 = log(log_base) / divisor, kept symbolic so directed rounding stays exact.
struct LogRatio {
  unsigned long log_base = 2;
  Rational divisor = 2;
};

struct ReductionConfig {
  int m = 0;
  std::vector<BigInt> X;  // per-variable bounds |x_i| <= X_i
  BigInt C;
  Rational C2;
  LogRatio C3;
  unsigned q = 1;
};

struct IterationRecord {
  std::string target;  // "b" or "b_j"
  BigInt C;
  std::vector<BigInt> X;
  Rational C1_squared;
  Rational S;
  Rational T;
  std::optional<BigInt> H;
  // Bound adopted after the pass; in replay mode the published value that H
  // certifies, in auto mode H clamped to the floor cutoff.
  std::optional<BigInt> accepted;
};

struct BoundSet {
  Instance instance;
  long long total_bound = 0;
  // per_prime[j-1] bounds b_j; per_prime[0] equals total_bound.
  std::vector<long long> per_prime;
  int floor_cutoff = 16;
  std::vector<IterationRecord> provenance;
};

enum class ReduceMode { AutoC, Replay };

// m x m matrix: identity block, last row = certified floor(C*log p_i),
// last column zero except the last entry.
LatticeBasis build_lattice(const Instance& inst, const BigInt& C);

// floor(H) from the reduction lemma with q = 1, upward-rounded, or nullopt
// when the shortest-vector condition C1^2 > T^2 + S fails.
std::optional<BigInt> svp_height_bound(const ReductionConfig& cfg, const Rational& C1_squared);

// One LLL + reduction-lemma pass for the given X; fills a provenance record.
std::optional<BigInt> reduction_pass(const Instance& inst, const BigInt& C, const BigInt& X,
                                     const Rational& C2, const LogRatio& C3,
                                     const std::string& target, std::vector<IterationRecord>& log);

BoundSet reduce_total_bound(const Instance& inst, const BigInt& B0,
                            ReduceMode mode = ReduceMode::AutoC);
BoundSet reduce_per_prime_bounds(const Instance& inst, BoundSet bs,
                                 ReduceMode mode = ReduceMode::AutoC);

// Full reduction: total bound then per-prime bounds.
BoundSet reduce(const Instance& inst, const BigInt& B0, ReduceMode mode = ReduceMode::AutoC);

std::string provenance_to_json(const BoundSet& bs);

}  // namespace erdos
