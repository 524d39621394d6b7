#include "erdos/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace erdos {

std::vector<Solution> brute_force_by_multiset(long long n_max, int x_max) {
  if (n_max > 2000) throw std::invalid_argument("brute_force_by_multiset: n_max <= 2000");
  if (x_max > 10) throw std::invalid_argument("brute_force_by_multiset: x_max <= 10");
  std::vector<Solution> out;

  std::vector<long long> counts(x_max + 1, 0);
  for (long long n = 1; n <= n_max; ++n) {
    const long long limit = n * (n + (x_max - 1) * n);
    long long product = 1, weighted = 0, parts = 0;

    std::function<void(int)> rec = [&](int max_value) {
      if (product == n * (n + weighted) && parts <= n) {
        int largest = 1;
        for (int v = x_max; v >= 2; --v)
          if (counts[v] > 0) { largest = v; break; }
        if (largest > 1 || n == 1) {
          Solution sol;
          sol.n = to_big(n);
          sol.counts.instance = Instance::make(largest);
          sol.counts.a.assign(largest, 0);
          sol.counts.a[0] = n - parts;
          for (int v = 2; v <= largest; ++v) sol.counts.a[v - 1] = counts[v];
          if (verify_solution(sol)) out.push_back(std::move(sol));
        }
      }
      for (int v = std::min(max_value, x_max); v >= 2; --v) {
        if (product > limit / v || parts == n) continue;
        product *= v;
        weighted += v - 1;
        ++parts;
        ++counts[v];
        rec(v);
        --counts[v];
        --parts;
        weighted -= v - 1;
        product /= v;
      }
    };
    rec(x_max);
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

std::vector<Solution> brute_force_by_counts(int a_cap, const Instance& inst) {
  if (a_cap > 25) throw std::invalid_argument("brute_force_by_counts: a_cap <= 25");
  if (inst.x_n < 3) throw std::invalid_argument("brute_force_by_counts: x_n >= 3 required");
  std::vector<Solution> out;
  const int x_n = inst.x_n;
  std::vector<long long> a(x_n, 0);  // a[i-1] = a_i, a[0] filled per candidate n

  // Trial over divisors d of the product with d <= sqrt(P): d(d+s) = P has at
  // most one root since the left side is strictly increasing in d.
  auto find_n = [&](const BigInt& P, const BigInt& s) -> std::optional<BigInt> {
    CountsVector c{inst, a};
    ExponentVector ev = counts_to_exponents(c);
    BigInt bound = integer_sqrt(P);
    std::optional<BigInt> hit;
    std::function<void(int, BigInt)> divisors = [&](int j, BigInt d) {
      if (d > bound) return;
      if (j == inst.k) {
        if (d * (d + s) == P) hit = d;
        return;
      }
      for (long long e = 0; e <= ev.b[j]; ++e) {
        divisors(j + 1, d);
        d *= inst.primes[j];
        if (d > bound) break;
      }
    };
    divisors(0, BigInt(1));
    return hit;
  };

  std::function<void(int)> sweep = [&](int value) {
    if (value > x_n) {
      if (a[x_n - 1] < 1) return;
      CountsVector c{inst, a};
      BigInt P = counts_product(c);
      BigInt s = weighted_sum(c);
      auto n = find_n(P, s);
      if (!n) return;
      BigInt others = 0;
      for (int i = 2; i <= x_n; ++i) others += to_big(a[i - 1]);
      if (*n < others) return;  // a_1 would be negative
      BigInt a1 = *n - others;
      if (!a1.fits_slong_p()) throw std::overflow_error("brute_force_by_counts: a_1 overflow");
      Solution sol;
      sol.n = *n;
      sol.counts.instance = inst;
      sol.counts.a = a;
      sol.counts.a[0] = a1.get_si();
      if (verify_solution(sol)) out.push_back(std::move(sol));
      return;
    }
    for (int v = 0; v <= a_cap; ++v) {
      a[value - 1] = v;
      sweep(value + 1);
    }
    a[value - 1] = 0;
  };
  sweep(2);
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

}  // namespace erdos
