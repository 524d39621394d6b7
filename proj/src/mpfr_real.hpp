#pragma once

// Thin RAII wrapper around mpfr_t. Every operation takes an explicit
// rounding mode; the callers use directed rounding to keep derived
// bounds on the safe side.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace erdos::detail {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  void set_ui(unsigned long x, mpfr_rnd_t r) { mpfr_set_ui(v_, x, r); }
  void set_z(const mpz_class& x, mpfr_rnd_t r) { mpfr_set_z(v_, x.get_mpz_t(), r); }
  void set_q(const mpq_class& x, mpfr_rnd_t r) { mpfr_set_q(v_, x.get_mpq_t(), r); }

  void log_ui(unsigned long x, mpfr_rnd_t r) {
    mpfr_set_ui(v_, x, MPFR_RNDN);
    mpfr_log(v_, v_, r);
  }
  void log(const Real& x, mpfr_rnd_t r) { mpfr_log(v_, x.v_, r); }
  void sqrt(const Real& x, mpfr_rnd_t r) { mpfr_sqrt(v_, x.v_, r); }
  void add(const Real& a, const Real& b, mpfr_rnd_t r) { mpfr_add(v_, a.v_, b.v_, r); }
  void sub(const Real& a, const Real& b, mpfr_rnd_t r) { mpfr_sub(v_, a.v_, b.v_, r); }
  void mul(const Real& a, const Real& b, mpfr_rnd_t r) { mpfr_mul(v_, a.v_, b.v_, r); }
  void div(const Real& a, const Real& b, mpfr_rnd_t r) { mpfr_div(v_, a.v_, b.v_, r); }
  void mul_z(const Real& a, const mpz_class& b, mpfr_rnd_t r) {
    mpfr_mul_z(v_, a.v_, b.get_mpz_t(), r);
  }

  int sgn() const { return mpfr_sgn(v_); }
  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  int cmp_z(const mpz_class& o) const { return mpfr_cmp_z(v_, o.get_mpz_t()); }

  mpz_class floor_z() const {
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDD);
    return out;
  }
  double to_double(mpfr_rnd_t r) const { return mpfr_get_d(v_, r); }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t bits_for_digits(int digits) {
  // log2(10) = 3.3219...; a few spare bits for intermediate roundings.
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
}

}  // namespace erdos::detail
