// Command-line front end: bound -> reduce -> solve pipeline for the
// fixed-largest-part equation n(x_1+...+x_n) = x_1...x_n, plus solution
// verification and constructive family witnesses.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "erdos/baker.hpp"
#include "erdos/enumerator.hpp"
#include "erdos/families.hpp"
#include "erdos/model.hpp"
#include "erdos/oracle.hpp"
#include "erdos/reducer.hpp"

using namespace erdos;

namespace {

BigInt table_b0(int x_n) {
  if (x_n <= 4) return BigInt("44000000000");
  if (x_n <= 6) return BigInt("16000000000000");
  return BigInt("4000000000000000");
}

int env_threads() {
  const char* env = std::getenv("ERDOS_SOLVER_THREADS");
  if (!env) return 0;
  int v = std::atoi(env);
  return v > 0 ? v : 0;
}

int cmd_bound(int x_n, bool json) {
  Instance inst = Instance::make(x_n);
  BakerBound bb = baker_bound(inst);
  bool within = bb.B0 <= table_b0(x_n);
  if (json) {
    nlohmann::json j;
    j["x_n"] = x_n;
    j["k"] = inst.k;
    j["primes"] = inst.primes;
    j["matveev_constant"] = matveev_constant(inst.k, 1);
    j["B0"] = bb.B0.get_str();
    j["rhs_at_B0"] = bb.rhs_at_B0;
    j["within_published_bound"] = within;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "x_n = " << x_n << ", k = " << inst.k << ", primes =";
    for (long p : inst.primes) std::cout << " " << p;
    std::cout << "\nMatveev C(k,1) = " << matveev_constant(inst.k, 1) << "\nB0 = "
              << bb.B0.get_str() << " (published bound " << table_b0(x_n).get_str()
              << (within ? ", satisfied" : ", EXCEEDED") << ")\n";
  }
  return within ? 0 : 1;
}

int cmd_reduce(int x_n, ReduceMode mode, bool json) {
  Instance inst = Instance::make(x_n);
  BakerBound bb = baker_bound(inst);
  BigInt b0 = mode == ReduceMode::Replay ? table_b0(x_n) : bb.B0;
  BoundSet bs = reduce(inst, b0, mode);
  if (json) {
    nlohmann::json j;
    j["x_n"] = x_n;
    j["mode"] = mode == ReduceMode::Replay ? "replay" : "auto-C";
    j["B0"] = b0.get_str();
    j["total_bound"] = bs.total_bound;
    j["per_prime"] = bs.per_prime;
    j["provenance"] = nlohmann::json::parse(provenance_to_json(bs));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "x_n = " << x_n << ": b <= " << bs.total_bound;
    for (int jx = 2; jx <= inst.k; ++jx)
      std::cout << ", b_" << jx << " <= " << bs.per_prime[jx - 1];
    std::cout << "\n";
  }
  return 0;
}

int cmd_solve(int x_n, int shards, const std::string& checkpoint, bool replay,
              const std::string& out_path, bool json_manifest) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Solution> sols;
  nlohmann::json manifest;
  manifest["schema_version"] = 1;
  manifest["x_n"] = x_n;
  if (x_n <= 2) {
    sols = enumerate_trivial(x_n);
    if (x_n == 2)
      manifest["note"] =
          "n=1 with x_1=2 satisfies the equation; reported even though the "
          "classical statement counts only the trivial solution";
  } else {
    Instance inst = Instance::make(x_n);
    ReduceMode mode = replay ? ReduceMode::Replay : ReduceMode::AutoC;
    BigInt b0 = replay ? table_b0(x_n) : baker_bound(inst).B0;
    BoundSet bs = reduce(inst, b0, mode);
    SearchSpace space = make_search_space(inst, bs);
    EnumOptions opts;
    opts.shards = shards;
    opts.threads = env_threads();
    opts.checkpoint_path = checkpoint;
    opts.pinned_order = replay;
    sols = enumerate_solutions(space, opts);
    manifest["B0"] = b0.get_str();
    manifest["total_bound"] = bs.total_bound;
    manifest["per_prime"] = bs.per_prime;
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    out = &file;
  }
  BigInt max_n = 0;
  for (const Solution& s : sols) {
    *out << solution_to_json_line(s) << "\n";
    if (s.n > max_n) max_n = s.n;
  }
  manifest["shards"] = shards;
  manifest["solution_count"] = sols.size();
  manifest["max_n"] = max_n.get_str();
  manifest["wall_time_s"] = dt;
  manifest["mode"] = replay ? "replay" : "auto-C";
  if (json_manifest || !out_path.empty()) std::cout << manifest.dump() << "\n";
  else std::cerr << manifest.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& path, bool oracle, long long n_max) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Solution> sols;
  std::string line;
  int lineno = 0, failures = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Solution sol = solution_from_json_line(line);
      if (!verify_solution(sol)) {
        std::cerr << "line " << lineno << ": equation check failed\n";
        ++failures;
      } else {
        sols.push_back(std::move(sol));
      }
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": malformed (" << e.what() << ")\n";
      ++failures;
    }
  }
  if (oracle && !sols.empty()) {
    int x_n = sols.front().counts.instance.x_n;
    auto reference = brute_force_by_multiset(n_max, x_n);
    for (const Solution& s : sols) {
      if (s.n > to_big(n_max) || s.counts.instance.x_n != x_n) continue;
      bool found = false;
      for (const Solution& r : reference)
        if (r.counts.instance.x_n == x_n && solution_equal(r, s)) { found = true; break; }
      if (!found) {
        std::cerr << "oracle: solution n=" << s.n.get_str() << " not reproduced\n";
        ++failures;
      }
    }
  }
  std::cout << "verified " << sols.size() << " solutions, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_families(const std::string& kind, long long pmin, long long pmax,
                 long long witness_n) {
  if (witness_n > 0) {
    auto w = g_upper_bound_witness(to_big(witness_n));
    if (!w) return 1;
    std::cout << solution_to_json_line(w->first) << "\n";
    std::cerr << "g(" << witness_n << ") <= " << w->second << "\n";
    return 0;
  }
  std::vector<std::pair<std::string, FamilyKind>> kinds = {
      {"two-big", FamilyKind::TwoBig},
      {"three-n-minus-2", FamilyKind::ThreeNMinus2},
      {"shiu-square", FamilyKind::ShiuSquare},
      {"cube", FamilyKind::CubeFamily},
  };
  for (const auto& [name, k] : kinds) {
    if (!kind.empty() && kind != name) continue;
    for (long long p = pmin; p <= pmax; ++p)
      std::cout << solution_to_json_line(family_solution(k, p)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for n(x_1+...+x_n) = x_1...x_n with fixed largest part"};
  app.require_subcommand(1);
  int precision_digits = 0;
  app.add_option("--precision-digits", precision_digits, "minimum log precision (decimal digits)");

  int x_n = 0;
  bool json = false, replay = false, auto_c = false;

  auto* bound = app.add_subcommand("bound", "Baker-type bound B0 on b");
  bound->add_option("x_n", x_n)->required()->check(CLI::Range(3, 10));
  bound->add_flag("--json", json);

  auto* reduce_cmd = app.add_subcommand("reduce", "LLL bound reduction");
  reduce_cmd->add_option("x_n", x_n)->required()->check(CLI::Range(3, 10));
  reduce_cmd->add_flag("--replay", replay);
  reduce_cmd->add_flag("--auto-C", auto_c);
  reduce_cmd->add_flag("--json", json);

  int shards = 1;
  std::string checkpoint, out_path;
  auto* solve = app.add_subcommand("solve", "full pipeline: bound, reduce, enumerate");
  solve->add_option("x_n", x_n)->required()->check(CLI::Range(1, 10));
  solve->add_option("--shards", shards)->check(CLI::PositiveNumber);
  solve->add_option("--checkpoint", checkpoint);
  solve->add_option("-o,--output", out_path);
  solve->add_flag("--replay", replay);
  solve->add_flag("--json", json);

  std::string verify_path;
  bool oracle = false;
  long long n_max = 300;
  auto* verify = app.add_subcommand("verify", "re-verify a solutions file");
  verify->add_option("file", verify_path)->required();
  verify->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
  verify->add_option("--n-max", n_max, "oracle range");

  std::string kind;
  long long pmin = 2, pmax = 2, witness_n = 0;
  auto* fam = app.add_subcommand("families", "constructive solution families");
  fam->add_option("--kind", kind);
  fam->add_option("--param", pmin);
  fam->add_option("--param-max", pmax, "emit the whole parameter range");
  fam->add_option("--witness", witness_n, "emit the best g(n) witness for this n");

  CLI11_PARSE(app, argc, argv);
  if (precision_digits > 0) set_min_log_digits(precision_digits);

  try {
    if (*bound) return cmd_bound(x_n, json);
    if (*reduce_cmd)
      return cmd_reduce(x_n, replay ? ReduceMode::Replay : ReduceMode::AutoC, json);
    if (*solve) return cmd_solve(x_n, shards, checkpoint, replay, out_path, json);
    if (*verify) return cmd_verify(verify_path, oracle, n_max);
    if (*fam) return cmd_families(kind, pmin, std::max(pmin, pmax), witness_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
