#include "erdos/lll.hpp"

#include <stdexcept>
#include <utility>

namespace erdos {

namespace {

struct GramSchmidt {
  // mu[i][j] for j < i; B[i] = ||b_i*||^2, all exact rationals.
  std::vector<std::vector<Rational>> mu;
  std::vector<Rational> B;
};

Rational dot(const std::vector<BigInt>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

// Exact rational Gram-Schmidt over the columns; throws on rank deficiency.
GramSchmidt gram_schmidt(const std::vector<std::vector<BigInt>>& cols) {
  const int m = static_cast<int>(cols.size());
  GramSchmidt gs;
  gs.mu.assign(m, std::vector<Rational>(m, Rational(0)));
  gs.B.assign(m, Rational(0));
  std::vector<std::vector<Rational>> star(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < m; ++r) star[i][r] = Rational(cols[i][r]);
    for (int j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(cols[i], star[j]) / gs.B[j];
      for (int r = 0; r < m; ++r) star[i][r] -= gs.mu[i][j] * star[j][r];
    }
    for (int r = 0; r < m; ++r) gs.B[i] += star[i][r] * star[i][r];
    if (gs.B[i] == 0) throw std::invalid_argument("lll_reduce: rank-deficient basis");
  }
  return gs;
}

// Nearest integer; halves round toward +inf (either choice keeps |mu| <= 1/2).
BigInt round_rational(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  return fl;
}

void sub_scaled(std::vector<BigInt>& target, const std::vector<BigInt>& src, const BigInt& r) {
  for (size_t i = 0; i < target.size(); ++i) target[i] -= r * src[i];
}

}  // namespace

LatticeBasis LatticeBasis::from_columns(std::vector<std::vector<BigInt>> columns) {
  LatticeBasis b;
  b.dim = static_cast<int>(columns.size());
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) != b.dim)
      throw std::invalid_argument("LatticeBasis: matrix must be square");
  b.cols = std::move(columns);
  return b;
}

Rational column_norm_squared(const std::vector<BigInt>& col) {
  Rational s = 0;
  for (const BigInt& x : col) s += Rational(x * x);
  return s;
}

ReducedBasis lll_reduce(const LatticeBasis& basis) {
  const int m = basis.dim;
  auto cols = basis.cols;
  std::vector<std::vector<BigInt>> U(m, std::vector<BigInt>(m, 0));
  for (int i = 0; i < m; ++i) U[i][i] = 1;

  GramSchmidt gs = gram_schmidt(cols);  // also validates full rank
  int k = 1;
  while (k < m) {
    for (int j = k - 1; j >= 0; --j) {
      BigInt r = round_rational(gs.mu[k][j]);
      if (r != 0) {
        sub_scaled(cols[k], cols[j], r);
        sub_scaled(U[k], U[j], r);
        gs = gram_schmidt(cols);
      }
    }
    Rational lhs = gs.B[k] + gs.mu[k][k - 1] * gs.mu[k][k - 1] * gs.B[k - 1];
    if (lhs >= Rational(3, 4) * gs.B[k - 1]) {
      ++k;
    } else {
      std::swap(cols[k], cols[k - 1]);
      std::swap(U[k], U[k - 1]);
      gs = gram_schmidt(cols);
      k = std::max(k - 1, 1);
    }
  }

  ReducedBasis out;
  out.basis.dim = m;
  out.basis.cols = std::move(cols);
  out.transform = std::move(U);
  return out;
}

Rational shortest_vector_lower_bound(const ReducedBasis& rb) {
  Rational n2 = column_norm_squared(rb.basis.cols[0]);
  BigInt denom = 1;
  denom <<= (rb.basis.dim - 1);
  return n2 / Rational(denom);
}

namespace {

struct SvpSearch {
  const GramSchmidt& gs;
  int m;
  Rational best;  // strict upper bound being improved; achieved by a lattice vector
  std::vector<BigInt> c;

  void descend(int i, const Rational& partial) {
    if (i < 0) {
      if (partial != 0) best = partial;
      return;
    }
    Rational center = 0;
    for (int j = i + 1; j < m; ++j) center += gs.mu[j][i] * Rational(c[j]);
    Rational budget = (best - partial) / gs.B[i];  // admissible y_i^2
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), budget.get_num().get_mpz_t(), budget.get_den().get_mpz_t());
    BigInt radius = integer_sqrt(fl) + 1;
    BigInt mid;
    {
      Rational neg = -center;
      mpz_fdiv_q(mid.get_mpz_t(), neg.get_num().get_mpz_t(), neg.get_den().get_mpz_t());
    }
    for (BigInt ci = mid - radius; ci <= mid + radius + 1; ++ci) {
      Rational y = Rational(ci) + center;
      Rational contrib = y * y * gs.B[i];
      if (partial + contrib >= best) continue;
      c[i] = ci;
      descend(i - 1, partial + contrib);
    }
    c[i] = 0;
  }
};

}  // namespace

Rational shortest_vector_norm_squared(const ReducedBasis& rb) {
  const int m = rb.basis.dim;
  if (m > 8) throw std::invalid_argument("shortest_vector_norm_squared: dim > 8");
  GramSchmidt gs = gram_schmidt(rb.basis.cols);
  Rational best = column_norm_squared(rb.basis.cols[0]);
  for (int j = 1; j < m; ++j) {
    Rational n2 = column_norm_squared(rb.basis.cols[j]);
    if (n2 < best) best = n2;
  }
  SvpSearch search{gs, m, best, std::vector<BigInt>(m, 0)};
  search.descend(m - 1, Rational(0));
  return search.best;
}

bool is_size_reduced(const LatticeBasis& basis) {
  GramSchmidt gs = gram_schmidt(basis.cols);
  for (int i = 1; i < basis.dim; ++i)
    for (int j = 0; j < i; ++j)
      if (abs(gs.mu[i][j]) > Rational(1, 2)) return false;
  return true;
}

bool satisfies_lovasz(const LatticeBasis& basis) {
  GramSchmidt gs = gram_schmidt(basis.cols);
  for (int i = 1; i < basis.dim; ++i) {
    Rational lhs = gs.B[i] + gs.mu[i][i - 1] * gs.mu[i][i - 1] * gs.B[i - 1];
    if (lhs < Rational(3, 4) * gs.B[i - 1]) return false;
  }
  return true;
}

}  // namespace erdos
