#include "erdos/numerics.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <stdexcept>

#include "mpfr_real.hpp"

namespace erdos {

namespace {

// Residue tables for the perfect-square pre-filter. Together the moduli
// reject ~99.8% of non-squares before the integer sqrt runs.
struct SquareTables {
  std::bitset<64> mod64;
  std::bitset<63> mod63;
  std::bitset<65> mod65;
  std::bitset<11> mod11;
  std::bitset<13> mod13;
  std::bitset<17> mod17;
  SquareTables() {
    for (int i = 0; i < 65; ++i) {
      mod64[(i * i) % 64] = true;
      mod63[(i * i) % 63] = true;
      mod65[(i * i) % 65] = true;
      mod11[(i * i) % 11] = true;
      mod13[(i * i) % 13] = true;
      mod17[(i * i) % 17] = true;
    }
  }
};

const SquareTables& tables() {
  static const SquareTables t;
  return t;
}

}  // namespace

BigInt integer_sqrt(const BigInt& m) {
  if (sgn(m) < 0) throw std::invalid_argument("integer_sqrt: negative input");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool square_filter_pass_u64(uint64_t m_mod_2_64, uint64_t m_mod_small) {
  const SquareTables& t = tables();
  if (!t.mod64[m_mod_2_64 & 63]) return false;
  if (!t.mod63[m_mod_small % 63]) return false;
  if (!t.mod65[m_mod_small % 65]) return false;
  if (!t.mod11[m_mod_small % 11]) return false;
  if (!t.mod13[m_mod_small % 13]) return false;
  return t.mod17[m_mod_small % 17];
}

bool square_filter_pass(const BigInt& m) {
  if (sgn(m) < 0) return false;
  uint64_t low = mpz_fdiv_ui(m.get_mpz_t(), 64);
  uint64_t small = mpz_fdiv_ui(m.get_mpz_t(), kSquareFilterModulus);
  return square_filter_pass_u64(low, small);
}

std::optional<BigInt> is_perfect_square(const BigInt& m) {
  if (sgn(m) < 0) return std::nullopt;
  if (!square_filter_pass(m)) return std::nullopt;
  BigInt r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

unsigned long p_adic_valuation(unsigned long p, const BigInt& m) {
  if (sgn(m) == 0) throw std::invalid_argument("p_adic_valuation: zero input");
  BigInt quotient;
  BigInt prime(static_cast<unsigned long>(p));
  return mpz_remove(quotient.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
}

namespace {

// floor(C * log p) by interval evaluation at one working precision.
// Returns the floor if both interval endpoints land on the same integer.
std::optional<BigInt> floor_c_log_at(unsigned long p, const BigInt& C, int digits) {
  using detail::Real;
  mpfr_prec_t prec = detail::bits_for_digits(digits);
  Real lo(prec), hi(prec);
  lo.log_ui(p, MPFR_RNDD);
  hi.log_ui(p, MPFR_RNDU);
  lo.mul_z(lo, C, MPFR_RNDD);
  hi.mul_z(hi, C, MPFR_RNDU);
  BigInt flo = lo.floor_z();
  BigInt fhi = hi.floor_z();
  if (flo != fhi) return std::nullopt;
  return flo;
}

}  // namespace

ScaledLog scaled_log(unsigned long p, int scale_exponent, int precision_digits) {
  if (scale_exponent < 1) throw std::invalid_argument("scaled_log: scale_exponent < 1");
  if (precision_digits < scale_exponent + 15)
    throw std::invalid_argument("scaled_log: precision_digits too small");
  BigInt C;
  mpz_ui_pow_ui(C.get_mpz_t(), 10, scale_exponent);
  ScaledLog out;
  out.base_p = p;
  out.scale_exponent = scale_exponent;
  auto a = floor_c_log_at(p, C, precision_digits);
  auto b = floor_c_log_at(p, C, precision_digits + 10);
  if (a && b && *a == *b) {
    out.value = *a;
    out.certified = true;
  } else if (b) {
    out.value = *b;  // best effort; caller should retry with more digits
  }
  return out;
}

namespace {
int g_min_log_digits = 0;
}

void set_min_log_digits(int digits) { g_min_log_digits = digits; }

BigInt floor_c_log(unsigned long p, const BigInt& C) {
  if (sgn(C) <= 0) throw std::invalid_argument("floor_c_log: C must be positive");
  int digits = static_cast<int>(mpz_sizeinbase(C.get_mpz_t(), 10)) + 20;
  digits = std::max(digits, g_min_log_digits);
  for (int attempt = 0; attempt < 12; ++attempt) {
    auto a = floor_c_log_at(p, C, digits);
    auto b = floor_c_log_at(p, C, digits + 10);
    if (a && b && *a == *b) return *a;
    digits *= 2;
  }
  throw std::runtime_error("floor_c_log: failed to certify floor");
}

}  // namespace erdos
