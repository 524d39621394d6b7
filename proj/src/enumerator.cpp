#include "erdos/enumerator.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace erdos {

namespace {

constexpr uint64_t kM = kSquareFilterModulus;

// Depth-first walk of the counts box. Products and residues are maintained
// incrementally down the nest; the innermost level never touches bignums
// until the word-sized residue filter passes.
class Searcher {
 public:
  Searcher(const SearchSpace& space, const LoopPlan& plan)
      : space_(space), x_n_(space.instance.x_n), k_(space.instance.k) {
    for (int v : plan.order) {
      for (const WeightEntry& e : space.weights)
        if (e.value == v) vars_.push_back(&e);
    }
    if (static_cast<int>(vars_.size()) != x_n_ - 1)
      throw std::logic_error("Searcher: loop plan does not cover all variables");
    caps_.assign(k_, 0);
    for (int j = 0; j < k_; ++j) caps_[j] = space.bounds.per_prime[j];
    cap_total_ = space.bounds.total_bound;
    counts_.assign(x_n_ + 1, 0);
    P_ = 1;
  }

  long long outer_lo() const { return vars_[0]->value == x_n_ ? 1 : 0; }
  long long outer_hi() const { return limit(*vars_[0]); }

  // Full subtree under a fixed value of the outermost variable.
  std::vector<Solution> run_outer(long long outer_value) {
    results_.clear();
    const WeightEntry& e = *vars_[0];
    if (outer_value < outer_lo() || outer_value > outer_hi()) return {};
    Saved sv = save();
    for (long long t = 0; t < outer_value; ++t) step(e);
    dfs(1);
    restore(sv, e, outer_value);
    return std::move(results_);
  }

 private:
  struct Saved {
    long long s, sum_a, cap_total;
    uint64_t plow, pmod;
  };

  Saved save() const { return {s_, sum_a_, cap_total_, plow_, pmod_}; }

  void step(const WeightEntry& e) {
    for (int j = 0; j < k_; ++j) caps_[j] -= e.nu[j];
    cap_total_ -= e.omega;
    s_ += e.value - 1;
    sum_a_ += 1;
    counts_[e.value] += 1;
    P_ *= e.value;
    plow_ *= static_cast<uint64_t>(e.value);
    pmod_ = pmod_ * static_cast<uint64_t>(e.value) % kM;
  }

  void restore(const Saved& sv, const WeightEntry& e, long long taken) {
    for (int j = 0; j < k_; ++j) caps_[j] += e.nu[j] * taken;
    cap_total_ = sv.cap_total;
    s_ = sv.s;
    sum_a_ = sv.sum_a;
    counts_[e.value] -= taken;
    plow_ = sv.plow;
    pmod_ = sv.pmod;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), e.value, static_cast<unsigned long>(taken));
    mpz_divexact(P_.get_mpz_t(), P_.get_mpz_t(), pw.get_mpz_t());
  }

  long long limit(const WeightEntry& e) const {
    long long hi = cap_total_ / e.omega;
    for (int j = 0; j < k_; ++j)
      if (e.nu[j] > 0) hi = std::min(hi, caps_[j] / e.nu[j]);
    return hi;
  }

  void dfs(size_t d) {
    if (d + 1 == vars_.size()) {
      innermost(*vars_[d]);
      return;
    }
    const WeightEntry& e = *vars_[d];
    long long lo = e.value == x_n_ ? 1 : 0;
    long long hi = limit(e);
    if (lo > hi) return;
    Saved sv = save();
    for (long long t = 0; t < lo; ++t) step(e);
    for (long long a = lo;; ++a) {
      dfs(d + 1);
      if (a == hi) break;
      step(e);
    }
    restore(sv, e, hi);
  }

  // The innermost variable is scanned with word arithmetic only; P_ is
  // reconstructed from the exponent when a candidate survives the filter.
  void innermost(const WeightEntry& e) {
    long long lo = e.value == x_n_ ? 1 : 0;
    long long hi = limit(e);
    if (lo > hi) return;
    const uint64_t v = static_cast<uint64_t>(e.value);
    long long s = s_;
    uint64_t plow = plow_, pmod = pmod_;
    for (long long t = 0; t < lo; ++t) {
      s += e.value - 1;
      plow *= v;
      pmod = pmod * v % kM;
    }
    for (long long a = lo;; ++a) {
      const uint64_t su = static_cast<uint64_t>(s);
      const uint64_t dlow = su * su + 4 * plow;
      const uint64_t dmod = (su * su + 4 * pmod) % kM;
      if (square_filter_pass_u64(dlow, dmod)) try_candidate(e, a, s);
      if (a == hi) break;
      s += e.value - 1;
      plow *= v;
      pmod = pmod * v % kM;
    }
  }

  void try_candidate(const WeightEntry& e, long long a, long long s) {
    BigInt P = P_;
    if (a > 0) {
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), e.value, static_cast<unsigned long>(a));
      P *= pw;
    }
    BigInt discr = to_big(s) * to_big(s) + 4 * P;
    auto root = is_perfect_square(discr);
    if (!root) return;
    // t^2 = s^2 + 4P forces t = s (mod 2) and t > s, so n is a positive integer.
    BigInt t = *root;
    if ((t - to_big(s)) % 2 != 0) throw std::logic_error("enumerator: parity violated");
    BigInt n = (t - to_big(s)) / 2;
    if (n <= 0) throw std::logic_error("enumerator: nonpositive n");
    BigInt a1 = n - to_big(sum_a_ + a);
    if (a1 < 0) return;
    if (!a1.fits_slong_p()) throw std::overflow_error("enumerator: a_1 exceeds machine range");

    Solution sol;
    sol.n = n;
    sol.counts.instance = space_.instance;
    sol.counts.a.assign(x_n_, 0);
    sol.counts.a[0] = a1.get_si();
    for (int i = 2; i <= x_n_; ++i) sol.counts.a[i - 1] = counts_[i];
    sol.counts.a[e.value - 1] += a;
    if (!verify_solution(sol)) throw std::logic_error("enumerator: emitted unverifiable solution");
    results_.push_back(std::move(sol));
  }

  const SearchSpace& space_;
  int x_n_, k_;
  std::vector<const WeightEntry*> vars_;
  std::vector<long long> caps_;
  long long cap_total_ = 0;
  long long s_ = 0;
  long long sum_a_ = 0;
  std::vector<long long> counts_;
  BigInt P_;
  uint64_t plow_ = 1, pmod_ = 1;
  std::vector<Solution> results_;
};

struct Checkpoint {
  std::map<long long, std::vector<Solution>> completed;

  static Checkpoint load(const std::string& path, int x_n) {
    Checkpoint cp;
    std::ifstream in(path);
    if (!in) return cp;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      if (j.at("x_n").get<int>() != x_n)
        throw std::runtime_error("checkpoint: x_n mismatch");
      std::vector<Solution> sols;
      for (const auto& js : j.at("solutions")) sols.push_back(solution_from_json_line(js.dump()));
      cp.completed[j.at("outer_value").get<long long>()] = std::move(sols);
    }
    return cp;
  }
};

}  // namespace

SearchSpace make_search_space(const Instance& inst, const BoundSet& bounds) {
  SearchSpace space;
  space.instance = inst;
  space.bounds = bounds;
  for (int i = 2; i <= inst.x_n; ++i) {
    WeightEntry e;
    e.value = i;
    e.nu.assign(inst.k, 0);
    for (int j = 0; j < inst.k; ++j) {
      long p = inst.primes[j];
      for (long m = i; m % p == 0; m /= p) ++e.nu[j];
      e.omega += e.nu[j];
    }
    space.weights.push_back(e);
  }
  return space;
}

LoopPlan loop_plan(const SearchSpace& space, bool pinned_order) {
  LoopPlan plan;
  if (pinned_order && space.instance.x_n == 10) {
    plan.order = {10, 7, 5, 9, 6, 3, 8, 4, 2};
    return plan;
  }
  for (const WeightEntry& e : space.weights) plan.order.push_back(e.value);
  std::sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
    const WeightEntry *ea = nullptr, *eb = nullptr;
    for (const WeightEntry& e : space.weights) {
      if (e.value == a) ea = &e;
      if (e.value == b) eb = &e;
    }
    if (ea->omega != eb->omega) return ea->omega > eb->omega;
    return a > b;
  });
  return plan;
}

std::vector<WorkSlice> partition_work(const SearchSpace& space, int shards, bool pinned_order) {
  if (shards < 1) throw std::invalid_argument("partition_work: shards >= 1 required");
  LoopPlan plan = loop_plan(space, pinned_order);
  Searcher probe(space, plan);
  std::vector<WorkSlice> slices(shards);
  int idx = 0;
  for (long long v = probe.outer_lo(); v <= probe.outer_hi(); ++v)
    slices[idx++ % shards].outer_values.push_back(v);
  return slices;
}

std::vector<Solution> enumerate_solutions(const SearchSpace& space, const EnumOptions& opts) {
  if (space.instance.x_n < 3)
    throw std::invalid_argument("enumerate_solutions: x_n >= 3 required (use enumerate_trivial)");
  LoopPlan plan = loop_plan(space, opts.pinned_order);
  std::vector<WorkSlice> slices = partition_work(space, opts.shards, opts.pinned_order);

  Checkpoint cp;
  if (!opts.checkpoint_path.empty()) cp = Checkpoint::load(opts.checkpoint_path, space.instance.x_n);

  std::vector<Solution> all;
  for (auto& [v, sols] : cp.completed)
    for (Solution& s : sols) all.push_back(std::move(s));

  std::mutex merge_mutex;
  std::ofstream ckpt;
  if (!opts.checkpoint_path.empty()) ckpt.open(opts.checkpoint_path, std::ios::app);

  auto run_slice = [&](const WorkSlice& slice) {
    Searcher searcher(space, plan);
    for (long long v : slice.outer_values) {
      if (cp.completed.count(v)) continue;
      std::vector<Solution> found = searcher.run_outer(v);
      std::lock_guard<std::mutex> lock(merge_mutex);
      if (ckpt.is_open()) {
        nlohmann::json j;
        j["x_n"] = space.instance.x_n;
        j["outer_value"] = v;
        j["solutions"] = nlohmann::json::array();
        for (const Solution& s : found)
          j["solutions"].push_back(nlohmann::json::parse(solution_to_json_line(s)));
        ckpt << j.dump() << "\n" << std::flush;
      }
      for (Solution& s : found) all.push_back(std::move(s));
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  int threads = opts.threads > 0 ? opts.threads
                                 : static_cast<int>(std::min<unsigned>(hw, slices.size()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(slices.size())));
  if (threads == 1) {
    for (const WorkSlice& slice : slices) run_slice(slice);
  } else {
    std::vector<std::thread> pool;
    std::mutex queue_mutex;
    size_t next = 0;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t mine;
          {
            std::lock_guard<std::mutex> lock(queue_mutex);
            if (next >= slices.size()) return;
            mine = next++;
          }
          run_slice(slices[mine]);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::sort(all.begin(), all.end(), solution_less);
  return all;
}

std::vector<Solution> enumerate_trivial(int x_n) {
  if (x_n == 1) return {make_solution(1, 1, {1})};
  if (x_n == 2) return {make_solution(2, 1, {0, 1})};
  throw std::invalid_argument("enumerate_trivial: x_n must be 1 or 2");
}

}  // namespace erdos
