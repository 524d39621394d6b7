#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erdos/baker.hpp"
#include "erdos/reducer.hpp"

using namespace erdos;

TEST_CASE("build_lattice layout") {
  Instance i3 = Instance::make(3);
  LatticeBasis L = build_lattice(i3, BigInt(10000));
  REQUIRE(L.dim == 2);
  CHECK(L.cols[0][0] == 1);
  CHECK(L.cols[0][1] == 6931);
  CHECK(L.cols[1][0] == 0);
  CHECK(L.cols[1][1] == 10986);

  Instance i5 = Instance::make(5);
  LatticeBasis L5 = build_lattice(i5, BigInt(10));
  REQUIRE(L5.dim == 3);
  CHECK(L5.cols[0][2] == 6);
  CHECK(L5.cols[1][2] == 10);
  CHECK(L5.cols[2][2] == 16);
  CHECK(L5.cols[2][0] == 0);
  CHECK(L5.cols[2][1] == 0);

  Instance i10 = Instance::make(10);
  BigInt C67;
  mpz_ui_pow_ui(C67.get_mpz_t(), 10, 67);
  LatticeBasis L10 = build_lattice(i10, C67);
  REQUIRE(L10.dim == 4);
  CHECK(mpz_sizeinbase(L10.cols[3][3].get_mpz_t(), 10) >= 67);

  CHECK_THROWS_AS(build_lattice(i3, BigInt(5)), std::invalid_argument);
}

namespace {

std::optional<BigInt> lemma3_at(const Instance& inst, const BigInt& X, const BigInt& C,
                                const Rational& C2, const LogRatio& C3, bool exact_svp) {
  ReducedBasis rb = lll_reduce(build_lattice(inst, C));
  ReductionConfig cfg;
  cfg.m = inst.k;
  cfg.X.assign(inst.k, X);
  cfg.C = C;
  cfg.C2 = C2;
  cfg.C3 = C3;
  Rational c1sq =
      exact_svp ? shortest_vector_norm_squared(rb) : shortest_vector_lower_bound(rb);
  return svp_height_bound(cfg, c1sq);
}

}  // namespace

TEST_CASE("svp_height_bound reproduces published spot values") {
  const LogRatio c3_total{2, Rational(21, 10)};
  Instance i3 = Instance::make(3);
  auto h97 = lemma3_at(i3, BigInt("44000000000"), BigInt("100000000000000000000000"),
                       Rational(138), c3_total, false);
  REQUIRE(h97);
  CHECK(*h97 == 97);

  auto h33 = lemma3_at(i3, BigInt(37), BigInt(10000), Rational(138), c3_total, false);
  REQUIRE(h33);
  CHECK(*h33 == 33);

  Instance i10 = Instance::make(10);
  auto h30 = lemma3_at(i10, BigInt(87), BigInt("2000000000000"), Rational(1566),
                       LogRatio{7, Rational(2)}, false);
  REQUIRE(h30);
  CHECK(*h30 == 30);
  // the exact shortest vector can only tighten the result
  auto h30e = lemma3_at(i10, BigInt(87), BigInt("2000000000000"), Rational(1566),
                        LogRatio{7, Rational(2)}, true);
  REQUIRE(h30e);
  CHECK(*h30e <= 30);
}

TEST_CASE("svp_height_bound signals when the shortest vector is too short") {
  // X so large that T^2 + S dwarfs any C1 from a small lattice
  Instance i3 = Instance::make(3);
  ReductionConfig cfg;
  cfg.m = 2;
  cfg.X.assign(2, BigInt("44000000000"));
  cfg.C = BigInt(10000);
  cfg.C2 = 138;
  cfg.C3 = LogRatio{2, Rational(21, 10)};
  CHECK(!svp_height_bound(cfg, Rational(9972)));
  cfg.q = 2;
  CHECK_THROWS_AS(svp_height_bound(cfg, Rational(9972)), std::invalid_argument);
}

TEST_CASE("replay pipeline lands on the published bounds") {
  struct Row {
    int x_n;
    const char* B0;
    long long total;
    std::vector<long long> per_prime;
  };
  const Row rows[] = {
      {3, "44000000000", 33, {33, 18}},
      {4, "44000000000", 33, {33, 18}},
      {5, "16000000000000", 60, {60, 32, 21}},
      {6, "16000000000000", 60, {60, 32, 21}},
      {7, "4000000000000000", 87, {87, 49, 31, 25}},
      {10, "4000000000000000", 87, {87, 49, 31, 25}},
  };
  for (const Row& r : rows) {
    BoundSet bs = reduce(Instance::make(r.x_n), BigInt(r.B0), ReduceMode::Replay);
    CHECK(bs.total_bound == r.total);
    CHECK(bs.per_prime == r.per_prime);
  }
}

TEST_CASE("replay provenance: precondition held and bounds decrease monotonically") {
  BoundSet bs = reduce(Instance::make(7), BigInt("4000000000000000"), ReduceMode::Replay);
  BigInt prev_total = BigInt("4000000000000001");
  for (const IterationRecord& rec : bs.provenance) {
    REQUIRE(rec.H);  // every pass satisfied C1^2 > T^2 + S
    CHECK(rec.C1_squared > rec.T * rec.T + rec.S);
    REQUIRE(rec.accepted);
    if (rec.target == "b") {
      CHECK(*rec.accepted < prev_total);
      prev_total = *rec.accepted;
    }
    CHECK(*rec.H <= *rec.accepted);
  }
}

TEST_CASE("replay intermediate chain matches the published tables") {
  BoundSet bs = reduce(Instance::make(5), BigInt("16000000000000"), ReduceMode::Replay);
  std::vector<std::pair<std::string, long long>> expected = {
      {"b", 219}, {"b", 66}, {"b", 60},
      {"b_2", 35}, {"b_2", 32},
      {"b_3", 24}, {"b_3", 21},
  };
  REQUIRE(bs.provenance.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(bs.provenance[i].target == expected[i].first);
    CHECK(*bs.provenance[i].accepted == to_big(expected[i].second));
  }
}

TEST_CASE("auto mode is at least as strong as the published bounds plus slack") {
  struct Row {
    int x_n;
    long long total;
    std::vector<long long> per_prime;
  };
  const Row rows[] = {
      {3, 33, {33, 18}},
      {5, 60, {60, 32, 21}},
      {7, 87, {87, 49, 31, 25}},
  };
  for (const Row& r : rows) {
    Instance inst = Instance::make(r.x_n);
    BoundSet bs = reduce(inst, baker_bound(inst).B0, ReduceMode::AutoC);
    CHECK(bs.total_bound <= r.total + 2);
    CHECK(bs.total_bound >= 16);
    REQUIRE(bs.per_prime.size() == r.per_prime.size());
    for (size_t j = 1; j < r.per_prime.size(); ++j) {
      CHECK(bs.per_prime[j] <= r.per_prime[j] + 2);
      CHECK(bs.per_prime[j] <= bs.total_bound);
      CHECK(bs.per_prime[j] >= 16);
    }
  }
}

TEST_CASE("bounds are clamped at the floor cutoff") {
  // a tiny starting bound cannot drop below 16
  BoundSet bs = reduce_total_bound(Instance::make(3), BigInt(17), ReduceMode::AutoC);
  CHECK(bs.total_bound >= 16);
  CHECK(bs.floor_cutoff == 16);
}
