#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "erdos/numerics.hpp"

using namespace erdos;

TEST_CASE("integer_sqrt basics") {
  CHECK(integer_sqrt(BigInt(0)) == 0);
  CHECK(integer_sqrt(BigInt(729)) == 27);
  CHECK(integer_sqrt(BigInt(730)) == 27);
  CHECK(integer_sqrt(BigInt(1)) == 1);
  CHECK_THROWS_AS(integer_sqrt(BigInt(-1)), std::invalid_argument);
}

TEST_CASE("integer_sqrt sandwich property on random inputs") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345ul);
  for (int i = 0; i < 2000; ++i) {
    BigInt m = rng.get_z_bits(1 + i % 256);
    BigInt r = integer_sqrt(m);
    CHECK(r * r <= m);
    CHECK((r + 1) * (r + 1) > m);
  }
}

TEST_CASE("is_perfect_square recognizes squares and rejects near-squares") {
  CHECK(*is_perfect_square(BigInt(144)) == 12);
  CHECK(!is_perfect_square(BigInt(145)));
  CHECK(!is_perfect_square(BigInt(-4)));
  CHECK(*is_perfect_square(BigInt(0)) == 0);
  // discriminant of the n=9 tuple with largest part 3: 9^2 + 4*2*3^4 = 729
  CHECK(*is_perfect_square(BigInt(81 + 4 * 162)) == 27);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(777ul);
  for (int i = 0; i < 5000; ++i) {
    BigInt m = rng.get_z_bits(16 + i % 1024) + 1;
    BigInt sq = m * m;
    auto root = is_perfect_square(sq);
    REQUIRE(root);
    CHECK(*root == m);
    CHECK(!is_perfect_square(sq + 1));
  }
}

TEST_CASE("square residue filter is sound and word/bignum variants agree") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(31337ul);
  for (int i = 0; i < 20000; ++i) {
    BigInt m = rng.get_z_bits(8 + i % 200);
    bool pass = square_filter_pass(m);
    // the filter may pass non-squares but must never reject a square
    if (is_perfect_square(m)) CHECK(pass);
    uint64_t low = mpz_fdiv_ui(m.get_mpz_t(), 64);
    uint64_t small = mpz_fdiv_ui(m.get_mpz_t(), kSquareFilterModulus);
    CHECK(square_filter_pass_u64(low, small) == pass);
  }
}

TEST_CASE("p_adic_valuation") {
  CHECK(p_adic_valuation(2, BigInt(8)) == 3);
  CHECK(p_adic_valuation(3, BigInt(10)) == 0);
  CHECK(p_adic_valuation(2, BigInt(6)) == 1);
  CHECK(p_adic_valuation(7, BigInt(-49)) == 2);
  CHECK_THROWS_AS(p_adic_valuation(2, BigInt(0)), std::invalid_argument);

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(99ul);
  for (int i = 0; i < 500; ++i) {
    unsigned long p = (i % 2) ? 3 : 5;
    unsigned long u = i % 17;
    BigInt q = rng.get_z_bits(64) * p + (p - 1);  // q not divisible by p
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, u);
    CHECK(p_adic_valuation(p, pw * q) == u);
  }
}

TEST_CASE("scaled_log certified values") {
  ScaledLog l2 = scaled_log(2, 4, 25);
  CHECK(l2.certified);
  CHECK(l2.value == 6931);
  ScaledLog l3 = scaled_log(3, 4, 25);
  CHECK(l3.certified);
  CHECK(l3.value == 10986);
  ScaledLog small = scaled_log(2, 1, 20);
  CHECK(small.certified);
  CHECK(small.value == 6);
  CHECK_THROWS_AS(scaled_log(2, 0, 25), std::invalid_argument);
  CHECK_THROWS_AS(scaled_log(2, 10, 12), std::invalid_argument);
}

TEST_CASE("scaled_log certification is stable under extra precision") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (int e : {1, 4, 10, 30}) {
      ScaledLog base = scaled_log(p, e, e + 20);
      REQUIRE(base.certified);
      ScaledLog more = scaled_log(p, e, e + 70);
      REQUIRE(more.certified);
      CHECK(base.value == more.value);
    }
  }
}

TEST_CASE("floor_c_log matches scaled_log for powers of ten and brackets C*log p") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    BigInt C;
    mpz_ui_pow_ui(C.get_mpz_t(), 10, 67);
    BigInt v = floor_c_log(p, C);
    ScaledLog ref = scaled_log(p, 67, 90);
    REQUIRE(ref.certified);
    CHECK(v == ref.value);
  }
  // non-power-of-ten scale: floor(2*10^12 log 5) = floor(floor(10^13 log 5)/5)
  // since floor(x/5) = floor(floor(x)/5) for integer 5
  BigInt C2 = BigInt("2000000000000");
  BigInt v = floor_c_log(5, C2);
  ScaledLog tenth = scaled_log(5, 13, 40);
  REQUIRE(tenth.certified);
  BigInt expect;
  mpz_fdiv_q_ui(expect.get_mpz_t(), tenth.value.get_mpz_t(), 5);
  CHECK(v == expect);
}
