#pragma once

#include <string>
#include <vector>

#include "erdos/numerics.hpp"

namespace erdos {

// A fixed largest part x_n together with the primes up to x_n.
struct Instance {
  int x_n = 0;
  std::vector<long> primes;  // ascending, exactly the primes <= x_n
  int k = 0;                 // pi(x_n)

  static Instance make(int x_n);
};

// Multiplicities a_1..a_{x_n} of the values 1..x_n among x_1..x_n.
// a[i-1] holds a_i.
struct CountsVector {
  Instance instance;
  std::vector<long long> a;

  long long at(int value) const { return a[value - 1]; }
};

// Prime exponents of 2^{a_2} 3^{a_3} ... x_n^{a_{x_n}}.
struct ExponentVector {
  Instance instance;
  std::vector<long long> b;
};

struct Solution {
  BigInt n;
  CountsVector counts;
};

// b_j = sum_{i=2}^{x_n} nu_{p_j}(i) * a_i.
ExponentVector counts_to_exponents(const CountsVector& c);

// s = sum_{i=2}^{x_n} (i-1) * a_i.
BigInt weighted_sum(const CountsVector& c);

// Value of 2^{a_2} 3^{a_3} ... x_n^{a_{x_n}}.
BigInt counts_product(const CountsVector& c);

// True iff n*(n+s) equals the counts product, sum a_i = n and a_{x_n} >= 1.
bool verify_solution(const Solution& sol);

// Multiset expansion x_1 <= ... <= x_n; rejects unverified solutions.
std::vector<long long> expand_solution(const Solution& sol);

// Canonical order: by n, then lexicographically by a.
bool solution_less(const Solution& lhs, const Solution& rhs);
bool solution_equal(const Solution& lhs, const Solution& rhs);

// One JSON object per line: {"schema_version":1,"x_n":..,"n":"..","a":[..]}.
std::string solution_to_json_line(const Solution& sol);
Solution solution_from_json_line(const std::string& line);

// Convenience for tests: build a solution from an (n, counts) tuple
// [n, a_1, ..., a_{x_n}].
Solution make_solution(int x_n, const BigInt& n, const std::vector<long long>& a);

}  // namespace erdos
