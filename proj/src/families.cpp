#include "erdos/families.hpp"

#include <stdexcept>

namespace erdos {

namespace {

Solution build(int x_n, long long n, long long ones, std::initializer_list<long long> parts) {
  Solution sol;
  sol.n = to_big(n);
  sol.counts.instance = Instance::make(x_n);
  sol.counts.a.assign(x_n, 0);
  sol.counts.a[0] = ones;
  for (long long p : parts) sol.counts.a[p - 1] += 1;
  if (!verify_solution(sol)) throw std::logic_error("family_solution: identity check failed");
  return sol;
}

}  // namespace

Solution family_solution(FamilyKind kind, long long parameter) {
  if (parameter < 2) throw std::invalid_argument("family_solution: parameter >= 2 required");
  const long long p = parameter;
  switch (kind) {
    case FamilyKind::TwoBig:
      return build(static_cast<int>(2 * p * p - p), p, p - 2, {p + 1, 2 * p * p - p});
    case FamilyKind::ThreeNMinus2:
      return build(static_cast<int>(3 * p - 2), p, p - 2, {2 * p, 3 * p - 2});
    case FamilyKind::ShiuSquare:
      return build(static_cast<int>(p + 4), p * p, p * p - 4, {p, p, p, p + 4});
    case FamilyKind::CubeFamily: {
      // n = m^3 + 3m^2 - 4m; then n + 6m = m(m+1)(m+2) and
      // n(n+6m) = m^2(m-1)(m+1)(m+2)(m+4), the product of the six parts.
      long long n = p * p * p + 3 * p * p - 4 * p;
      return build(static_cast<int>(p + 4), n, n - 6, {p - 1, p, p, p + 1, p + 2, p + 4});
    }
  }
  throw std::invalid_argument("family_solution: unknown kind");
}

std::optional<std::pair<Solution, long long>> g_upper_bound_witness(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("g_upper_bound_witness: n >= 2 required");
  if (!n.fits_slong_p()) throw std::overflow_error("g_upper_bound_witness: n too large");
  const long long nv = n.get_si();

  std::optional<std::pair<Solution, long long>> best;
  auto offer = [&](Solution sol) {
    long long xn = sol.counts.instance.x_n;
    if (!best || xn < best->second) best = {{std::move(sol), xn}};
  };

  // Cube family applies when n = m^3 + 3m^2 - 4m for some integer m >= 2.
  BigInt root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3);
  for (long long m = std::max<long long>(2, root.get_si() - 2); m <= root.get_si() + 2; ++m)
    if (m * m * m + 3 * m * m - 4 * m == nv) offer(family_solution(FamilyKind::CubeFamily, m));

  BigInt sq = integer_sqrt(n);
  if (sq * sq == n && sq >= 2) offer(family_solution(FamilyKind::ShiuSquare, sq.get_si()));

  offer(family_solution(FamilyKind::ThreeNMinus2, nv));
  return best;
}

}  // namespace erdos
