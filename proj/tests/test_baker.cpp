#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <cmath>

#include "erdos/baker.hpp"

using namespace erdos;

TEST_CASE("matveev_constant spot values") {
  CHECK(matveev_constant(1, 1) == doctest::Approx(1134000.0).epsilon(1e-9));
  // 1.4 * 30^5 * 2^{4.5}
  CHECK(matveev_constant(2, 1) ==
        doctest::Approx(1.4 * 243e5 * std::pow(2.0, 4.5)).epsilon(1e-9));
  // D only contributes D^2 * (1 + log D)
  double base = matveev_constant(3, 1);
  CHECK(matveev_constant(3, 2) ==
        doctest::Approx(base * 4.0 * (1 + std::log(2.0))).epsilon(1e-9));
}

TEST_CASE("baker_rhs structure") {
  Instance i4 = Instance::make(4);
  // at b=1 the (1+log b) factor collapses to 1
  double at1 = baker_rhs(i4, BigInt(1));
  double expect = 2.8 * std::pow(30.0, 5) * std::pow(2.0, 4.5) * std::log(3.0) +
                  2.0 * std::log(3.0) / std::log(2.0);
  CHECK(at1 == doctest::Approx(expect).epsilon(1e-6));
  // rhs grows in b but only logarithmically
  double a = baker_rhs(i4, BigInt(1000));
  double b = baker_rhs(i4, BigInt(2000));
  CHECK(b > a);
  CHECK(b - a < 2e9 * std::log(2.0));
  // published cutoff: at b = 4.4e10 the inequality b < rhs(b) has failed
  CHECK(!rhs_exceeds(i4, BigInt("44000000000")));
}

TEST_CASE("baker_bound within published cutoffs and above sanity floor") {
  struct Row {
    int x_n;
    const char* cap;
  };
  const Row rows[] = {{3, "44000000000"},  {4, "44000000000"},
                      {5, "16000000000000"}, {6, "16000000000000"},
                      {7, "4000000000000000"}, {8, "4000000000000000"},
                      {9, "4000000000000000"}, {10, "4000000000000000"}};
  for (const Row& r : rows) {
    BakerBound bb = baker_bound(Instance::make(r.x_n));
    CHECK(bb.B0 <= BigInt(r.cap));
    CHECK(bb.B0 >= BigInt(100000000));
    CHECK(rhs_exceeds(bb.instance, bb.B0));
    CHECK(!rhs_exceeds(bb.instance, bb.B0 + 1));
  }
}

TEST_CASE("bound is safe on a swath above B0") {
  for (int x_n : {3, 5, 7}) {
    Instance inst = Instance::make(x_n);
    BakerBound bb = baker_bound(inst);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(x_n));
    for (int i = 0; i < 100; ++i) {
      BigInt span = 9 * bb.B0;
      BigInt b = bb.B0 + 1 + BigInt(rng.get_z_range(span));
      CHECK(!rhs_exceeds(inst, b));
    }
  }
}

TEST_CASE("bound grows with the prime count") {
  BigInt b3 = baker_bound(Instance::make(3)).B0;
  BigInt b5 = baker_bound(Instance::make(5)).B0;
  BigInt b7 = baker_bound(Instance::make(7)).B0;
  CHECK(b3 < b5);
  CHECK(b5 < b7);
}
