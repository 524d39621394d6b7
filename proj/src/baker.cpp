#include "erdos/baker.hpp"

#include <stdexcept>

#include "mpfr_real.hpp"

namespace erdos {

namespace {

constexpr mpfr_prec_t kPrec = 256;

using detail::Real;

// 1.4 * 30^{l+3} * l^{4.5} * D^2 * (1+log D), every step rounded up.
void matveev_constant_up(Real& out, int l, int D) {
  BigInt pow30;
  mpz_ui_pow_ui(pow30.get_mpz_t(), 30, static_cast<unsigned long>(l + 3));
  Rational base = Rational(7, 5) * Rational(pow30) * Rational(BigInt(D) * D);
  out.set_q(base, MPFR_RNDU);

  // l^{4.5} = l^4 * sqrt(l)
  BigInt l4 = BigInt(l) * l * l * l;
  Real sq(kPrec), tmp(kPrec);
  sq.set_ui(static_cast<unsigned long>(l), MPFR_RNDU);
  sq.sqrt(sq, MPFR_RNDU);
  sq.mul_z(sq, l4, MPFR_RNDU);
  out.mul(out, sq, MPFR_RNDU);

  if (D > 1) {
    tmp.log_ui(static_cast<unsigned long>(D), MPFR_RNDU);
    Real one(kPrec);
    one.set_ui(1, MPFR_RNDN);
    tmp.add(tmp, one, MPFR_RNDU);
    out.mul(out, tmp, MPFR_RNDU);
  }
}

// Upper bound of rhs(b); see header for the formula.
void rhs_up(Real& out, const Instance& inst, const BigInt& b) {
  Real term(kPrec), logb(kPrec), tmp(kPrec), one(kPrec);
  one.set_ui(1, MPFR_RNDN);

  matveev_constant_up(out, inst.k, 1);
  out.mul_z(out, BigInt(2), MPFR_RNDU);  // 2*C(k,1) = 2.8*30^{k+3} k^{4.5}
  for (int j = 1; j < inst.k; ++j) {
    term.log_ui(static_cast<unsigned long>(inst.primes[j]), MPFR_RNDU);
    out.mul(out, term, MPFR_RNDU);
  }
  logb.set_z(b, MPFR_RNDU);
  logb.log(logb, MPFR_RNDU);
  tmp.add(one, logb, MPFR_RNDU);
  out.mul(out, tmp, MPFR_RNDU);

  // + 2*log((x_n-1)*b) / log 2, denominator rounded down.
  Real num(kPrec), den(kPrec);
  num.set_z(b * (inst.x_n - 1), MPFR_RNDU);
  num.log(num, MPFR_RNDU);
  num.mul_z(num, BigInt(2), MPFR_RNDU);
  den.log_ui(2, MPFR_RNDD);
  num.div(num, den, MPFR_RNDU);
  out.add(out, num, MPFR_RNDU);
}

}  // namespace

double matveev_constant(int l, int D) {
  if (l < 1 || D < 1) throw std::invalid_argument("matveev_constant: l, D >= 1 required");
  Real out(kPrec);
  matveev_constant_up(out, l, D);
  return out.to_double(MPFR_RNDU);
}

double baker_rhs(const Instance& inst, const BigInt& b) {
  Real out(kPrec);
  rhs_up(out, inst, b);
  return out.to_double(MPFR_RNDU);
}

bool rhs_exceeds(const Instance& inst, const BigInt& b) {
  Real out(kPrec);
  rhs_up(out, inst, b);
  return out.cmp_z(b) > 0;
}

BakerBound baker_bound(const Instance& inst) {
  if (inst.x_n < 3) throw std::invalid_argument("baker_bound: x_n >= 3 required");
  BigInt lo = 2;
  if (!rhs_exceeds(inst, lo)) throw std::runtime_error("baker_bound: inequality fails at b=2");
  BigInt hi = lo;
  while (rhs_exceeds(inst, hi)) {
    lo = hi;
    hi *= 2;
  }
  // lo satisfies b < rhs(b), hi does not; rhs is increasing and sublinear so
  // the crossing above the constant term is unique.
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (rhs_exceeds(inst, mid))
      lo = mid;
    else
      hi = mid;
  }
  BakerBound out;
  out.instance = inst;
  out.B0 = lo;
  Real r(kPrec);
  rhs_up(r, inst, lo);
  out.rhs_at_B0 = r.floor_z().get_str();
  return out;
}

}  // namespace erdos
