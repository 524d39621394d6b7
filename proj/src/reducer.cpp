#include "erdos/reducer.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

#include "mpfr_real.hpp"

namespace erdos {

namespace {

constexpr mpfr_prec_t kPrec = 384;
constexpr int kMaxEscalations = 5;
constexpr int kMaxIterations = 10;

using detail::Real;

BigInt big(const char* s) { return BigInt(s); }

// Smallest power of ten with C >= X0^m. H grows like (1 - 1/m) log C, so the
// scale is kept minimal and enlarged only when the shortest-vector condition
// fails.
BigInt auto_scale(int m, const BigInt& X0) {
  BigInt X0m;
  mpz_pow_ui(X0m.get_mpz_t(), X0.get_mpz_t(), static_cast<unsigned long>(m));
  size_t digits = mpz_sizeinbase(X0m.get_mpz_t(), 10);
  BigInt C;
  mpz_ui_pow_ui(C.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return C;
}

struct ReplayStep {
  const char* X;
  const char* C;
  // Published outcome of the pass; our H certifies it (H <= result required)
  // and the pipeline adopts it so the replayed chain is reproduced verbatim.
  const char* result;
};

struct ReplaySchedule {
  int class_x_n;  // largest x_n of the class; fixes the replayed C2
  std::vector<ReplayStep> total;
  // per_prime[j-2] is the schedule for b_j, j = 2..k.
  std::vector<std::vector<ReplayStep>> per_prime;
};

const ReplaySchedule& replay_schedule(int k) {
  static const ReplaySchedule k2{
      4,
      {{"44000000000", "100000000000000000000000", "97"},
       {"97", "100000", "37"},
       {"37", "10000", "33"}},
      {{{"33", "10000", "20"}, {"20", "10000", "18"}}}};
  static const ReplaySchedule k3{
      6,
      {{"16000000000000", "1000000000000000000000000000000000000000000", "219"},
       {"219", "10000000000", "66"},
       {"66", "500000000", "60"}},
      {{{"60", "50000000", "35"}, {"35", "5000000", "32"}},
       {{"60", "50000000", "24"}, {"24", "5000000", "21"}}}};
  static const ReplaySchedule k4{
      10,
      {{"4000000000000000",
        "10000000000000000000000000000000000000000000000000000000000000000000", "372"},
       {"372", "100000000000000", "101"},
       {"101", "2000000000000", "87"}},
      {{{"87", "2000000000000", "54"}, {"54", "20000000000", "49"}},
       {{"87", "2000000000000", "37"}, {"37", "7000000000", "31"}},
       {{"87", "2000000000000", "30"}, {"54", "5000000000", "25"}}}};
  switch (k) {
    case 2: return k2;
    case 3: return k3;
    case 4: return k4;
    default: throw std::invalid_argument("replay_schedule: only k in {2,3,4} supported");
  }
}

}  // namespace

LatticeBasis build_lattice(const Instance& inst, const BigInt& C) {
  if (C < 10) throw std::invalid_argument("build_lattice: C >= 10 required");
  const int m = inst.k;
  std::vector<std::vector<BigInt>> cols(m, std::vector<BigInt>(m, 0));
  for (int j = 0; j < m; ++j) {
    if (j < m - 1) cols[j][j] = 1;
    cols[j][m - 1] = floor_c_log(static_cast<unsigned long>(inst.primes[j]), C);
  }
  return LatticeBasis::from_columns(std::move(cols));
}

std::optional<BigInt> svp_height_bound(const ReductionConfig& cfg, const Rational& C1_squared) {
  if (cfg.q != 1) throw std::invalid_argument("svp_height_bound: only q = 1 supported");
  Rational S = 0, sumX = 0;
  for (int i = 0; i < cfg.m; ++i) {
    if (i < cfg.m - 1) S += Rational(cfg.X[i] * cfg.X[i]);
    sumX += Rational(cfg.X[i]);
  }
  Rational T = Rational(1, 2) + Rational(1, 2) * sumX;
  if (C1_squared <= T * T + S) return std::nullopt;

  // H <= (log(C*C2) - log(sqrt(C1^2 - S) - T)) / C3, rounded so the result
  // can only over-estimate.
  Real up(kPrec), inner(kPrec), t_up(kPrec), c3(kPrec), div(kPrec);
  up.set_q(Rational(cfg.C) * cfg.C2, MPFR_RNDU);
  up.log(up, MPFR_RNDU);

  inner.set_q(C1_squared - S, MPFR_RNDD);
  inner.sqrt(inner, MPFR_RNDD);
  t_up.set_q(T, MPFR_RNDU);
  inner.sub(inner, t_up, MPFR_RNDD);
  if (inner.sgn() <= 0) return std::nullopt;  // rounding ate the margin
  inner.log(inner, MPFR_RNDD);

  up.sub(up, inner, MPFR_RNDU);

  c3.log_ui(cfg.C3.log_base, MPFR_RNDD);
  div.set_q(cfg.C3.divisor, MPFR_RNDU);
  c3.div(c3, div, MPFR_RNDD);
  up.div(up, c3, MPFR_RNDU);
  return up.floor_z();
}

std::optional<BigInt> reduction_pass(const Instance& inst, const BigInt& C, const BigInt& X,
                                     const Rational& C2, const LogRatio& C3,
                                     const std::string& target,
                                     std::vector<IterationRecord>& log) {
  ReductionConfig cfg;
  cfg.m = inst.k;
  cfg.X.assign(inst.k, X);
  cfg.C = C;
  cfg.C2 = C2;
  cfg.C3 = C3;

  ReducedBasis rb = lll_reduce(build_lattice(inst, C));
  // The exact shortest vector is cheap at these dimensions and is never worse
  // than the 2^{(1-m)/2}*||b_1|| bound; a few replayed steps need the margin.
  Rational c1sq = shortest_vector_norm_squared(rb);
  auto H = svp_height_bound(cfg, c1sq);

  IterationRecord rec;
  rec.target = target;
  rec.C = C;
  rec.X = cfg.X;
  rec.C1_squared = c1sq;
  Rational sumX = 0;
  for (const auto& x : cfg.X) {
    rec.S += Rational(x * x);
    sumX += Rational(x);
  }
  rec.S -= Rational(cfg.X.back() * cfg.X.back());
  rec.T = Rational(1, 2) + Rational(1, 2) * sumX;
  rec.H = H;
  log.push_back(rec);
  return H;
}

BoundSet reduce_total_bound(const Instance& inst, const BigInt& B0, ReduceMode mode) {
  BoundSet bs;
  bs.instance = inst;
  const Rational c2_auto = Rational(46) * (inst.x_n - 1);
  const LogRatio c3{2, Rational(21, 10)};

  BigInt X = B0;
  if (mode == ReduceMode::Replay) {
    const ReplaySchedule& sched = replay_schedule(inst.k);
    Rational c2 = Rational(46) * (sched.class_x_n - 1);
    for (const ReplayStep& step : sched.total) {
      auto H = reduction_pass(inst, big(step.C), big(step.X), c2, c3, "b", bs.provenance);
      if (!H) throw std::runtime_error("reduce_total_bound: replay precondition failed");
      if (*H > big(step.result))
        throw std::runtime_error("reduce_total_bound: pass does not certify the published bound");
      X = big(step.result);
      bs.provenance.back().accepted = X;
    }
  } else {
    for (int it = 0; it < kMaxIterations; ++it) {
      BigInt C = auto_scale(inst.k, X);
      std::optional<BigInt> H;
      int esc = 0;
      for (; esc <= kMaxEscalations; ++esc) {
        H = reduction_pass(inst, C, X, c2_auto, c3, "b", bs.provenance);
        if (H) break;
        C *= 100;
      }
      if (!H)
        throw std::runtime_error("reduce_total_bound: shortest-vector condition kept failing");
      BigInt next = *H > 16 ? *H : BigInt(16);
      if (next >= X) break;
      X = next;
      bs.provenance.back().accepted = X;
      if (X == 16) break;
    }
  }
  if (X < 16) X = 16;
  bs.total_bound = X.get_si();
  bs.per_prime.assign(inst.k, bs.total_bound);
  return bs;
}

BoundSet reduce_per_prime_bounds(const Instance& inst, BoundSet bs, ReduceMode mode) {
  const BigInt total = to_big(bs.total_bound);
  if (mode == ReduceMode::Replay) {
    const ReplaySchedule& sched = replay_schedule(inst.k);
    for (int j = 2; j <= inst.k; ++j) {
      const LogRatio c3{static_cast<unsigned long>(inst.primes[j - 1]), Rational(2)};
      BigInt X = total;
      char label[8];
      std::snprintf(label, sizeof(label), "b_%d", j);
      const Rational c2 = Rational(2) * (sched.class_x_n - 1) * total;
      for (const ReplayStep& step : sched.per_prime[j - 2]) {
        auto H = reduction_pass(inst, big(step.C), big(step.X), c2, c3, label, bs.provenance);
        if (!H) throw std::runtime_error("reduce_per_prime_bounds: replay precondition failed");
        if (*H > big(step.result))
          throw std::runtime_error(
              "reduce_per_prime_bounds: pass does not certify the published bound");
        X = big(step.result);
        bs.provenance.back().accepted = X;
      }
      if (X < 16) X = 16;
      if (X > total) X = total;
      bs.per_prime[j - 1] = X.get_si();
    }
  } else {
    for (int j = 2; j <= inst.k; ++j) {
      const LogRatio c3{static_cast<unsigned long>(inst.primes[j - 1]), Rational(2)};
      BigInt X = total;
      char label[8];
      std::snprintf(label, sizeof(label), "b_%d", j);
      const Rational c2 = Rational(2) * (inst.x_n - 1) * total;
      for (int it = 0; it < 2; ++it) {
        BigInt C = auto_scale(inst.k, X);
        std::optional<BigInt> H;
        for (int esc = 0; esc <= kMaxEscalations; ++esc) {
          H = reduction_pass(inst, C, X, c2, c3, label, bs.provenance);
          if (H) break;
          C *= 100;
        }
        if (!H)
          throw std::runtime_error("reduce_per_prime_bounds: shortest-vector condition kept failing");
        BigInt next = *H > 16 ? *H : BigInt(16);
        if (next >= X) break;
        X = next;
        bs.provenance.back().accepted = X;
        if (X == 16) break;
      }
      if (X > total) X = total;
      bs.per_prime[j - 1] = X.get_si();
    }
  }
  return bs;
}

BoundSet reduce(const Instance& inst, const BigInt& B0, ReduceMode mode) {
  return reduce_per_prime_bounds(inst, reduce_total_bound(inst, B0, mode), mode);
}

std::string provenance_to_json(const BoundSet& bs) {
  nlohmann::json out = nlohmann::json::array();
  for (const IterationRecord& rec : bs.provenance) {
    nlohmann::json j;
    j["target"] = rec.target;
    j["C"] = rec.C.get_str();
    j["X"] = rec.X.front().get_str();
    j["C1_squared"] = rec.C1_squared.get_str();
    j["S"] = rec.S.get_str();
    j["T"] = rec.T.get_str();
    j["H"] = rec.H ? rec.H->get_str() : "none";
    j["accepted"] = rec.accepted ? rec.accepted->get_str() : "none";
    out.push_back(j);
  }
  return out.dump();
}

}  // namespace erdos
