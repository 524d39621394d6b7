#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace erdos {

using BigInt = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long overloads; all 64-bit counters funnel through here.
inline BigInt to_big(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
  return BigInt(static_cast<long>(v));
}

// floor(sqrt(m)); throws std::invalid_argument for m < 0.
BigInt integer_sqrt(const BigInt& m);

// Nonnegative root if m is a perfect square, nullopt otherwise (and for m < 0).
std::optional<BigInt> is_perfect_square(const BigInt& m);

// Cheap quadratic-residue filter: false means m is certainly not a square.
// Exposed so the enumerator can run it on machine-word residues.
bool square_filter_pass(const BigInt& m);
bool square_filter_pass_u64(uint64_t m_mod_2_64, uint64_t m_mod_small);

// Modulus used by the second-stage residue filter: 63*65*11*13*17.
inline constexpr uint64_t kSquareFilterModulus = 9954945;

// Largest u with p^u | m; throws for m == 0.
unsigned long p_adic_valuation(unsigned long p, const BigInt& m);

struct ScaledLog {
  BigInt value;  // floor(10^scale_exponent * log p) when certified
  unsigned long base_p = 0;
  int scale_exponent = 0;
  bool certified = false;
};

// floor(10^scale_exponent * log p), evaluated by interval arithmetic at
// precision_digits and precision_digits + 10 decimal digits; certified only
// when every endpoint agrees on the floor.
ScaledLog scaled_log(unsigned long p, int scale_exponent, int precision_digits);

// floor(C * log p) for arbitrary C >= 1. Starts at digits(C) + 20 guard
// digits and doubles the precision until the floor certifies.
BigInt floor_c_log(unsigned long p, const BigInt& C);

// Process-wide floor on the starting precision of floor_c_log; wired to the
// CLI --precision-digits flag.
void set_min_log_digits(int digits);

}  // namespace erdos
