#include "erdos/model.hpp"

#include <json.hpp>

#include <stdexcept>

namespace erdos {

Instance Instance::make(int x_n) {
  if (x_n < 1) throw std::invalid_argument("Instance: x_n must be >= 1");
  Instance inst;
  inst.x_n = x_n;
  std::vector<bool> composite(x_n + 1, false);
  for (long p = 2; p <= x_n; ++p) {
    if (composite[p]) continue;
    inst.primes.push_back(p);
    for (long q = p * p; q <= x_n; q += p) composite[q] = true;
  }
  inst.k = static_cast<int>(inst.primes.size());
  return inst;
}

ExponentVector counts_to_exponents(const CountsVector& c) {
  ExponentVector ev;
  ev.instance = c.instance;
  ev.b.assign(c.instance.k, 0);
  for (int i = 2; i <= c.instance.x_n; ++i) {
    long long ai = c.at(i);
    if (ai == 0) continue;
    for (int j = 0; j < c.instance.k; ++j) {
      long v = c.instance.primes[j];
      int nu = 0;
      for (long m = i; m % v == 0; m /= v) ++nu;
      ev.b[j] += static_cast<long long>(nu) * ai;
    }
  }
  return ev;
}

BigInt weighted_sum(const CountsVector& c) {
  BigInt s = 0;
  for (int i = 2; i <= c.instance.x_n; ++i)
    if (c.at(i) != 0) s += BigInt(i - 1) * to_big(c.at(i));
  return s;
}

BigInt counts_product(const CountsVector& c) {
  BigInt prod = 1;
  BigInt pw;
  for (int i = 2; i <= c.instance.x_n; ++i) {
    long long ai = c.at(i);
    if (ai == 0) continue;
    mpz_ui_pow_ui(pw.get_mpz_t(), i, static_cast<unsigned long>(ai));
    prod *= pw;
  }
  return prod;
}

bool verify_solution(const Solution& sol) {
  const CountsVector& c = sol.counts;
  if (static_cast<int>(c.a.size()) != c.instance.x_n) return false;
  if (c.at(c.instance.x_n) < 1) return false;
  BigInt total = 0;
  for (long long ai : c.a) {
    if (ai < 0) return false;
    if (ai != 0) total += to_big(ai);
  }
  if (total != sol.n) return false;
  BigInt s = weighted_sum(c);
  return sol.n * (sol.n + s) == counts_product(c);
}

std::vector<long long> expand_solution(const Solution& sol) {
  if (!verify_solution(sol)) throw std::invalid_argument("expand_solution: unverified solution");
  std::vector<long long> parts;
  for (int i = 1; i <= sol.counts.instance.x_n; ++i)
    for (long long r = 0; r < sol.counts.at(i); ++r) parts.push_back(i);
  return parts;
}

bool solution_less(const Solution& lhs, const Solution& rhs) {
  if (lhs.n != rhs.n) return lhs.n < rhs.n;
  return lhs.counts.a < rhs.counts.a;
}

bool solution_equal(const Solution& lhs, const Solution& rhs) {
  return lhs.n == rhs.n && lhs.counts.instance.x_n == rhs.counts.instance.x_n &&
         lhs.counts.a == rhs.counts.a;
}

std::string solution_to_json_line(const Solution& sol) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["x_n"] = sol.counts.instance.x_n;
  j["n"] = sol.n.get_str();
  j["a"] = sol.counts.a;
  return j.dump();
}

Solution solution_from_json_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  Solution sol;
  sol.n = BigInt(j.at("n").get<std::string>());
  sol.counts.instance = Instance::make(j.at("x_n").get<int>());
  sol.counts.a = j.at("a").get<std::vector<long long>>();
  if (static_cast<int>(sol.counts.a.size()) != sol.counts.instance.x_n)
    throw std::invalid_argument("solution_from_json_line: counts length mismatch");
  return sol;
}

Solution make_solution(int x_n, const BigInt& n, const std::vector<long long>& a) {
  Solution sol;
  sol.n = n;
  sol.counts.instance = Instance::make(x_n);
  sol.counts.a = a;
  return sol;
}

}  // namespace erdos
