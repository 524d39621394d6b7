#pragma once

#include <vector>

#include "erdos/numerics.hpp"

namespace erdos {

// Square integer matrix; the columns generate the lattice.
struct LatticeBasis {
  int dim = 0;
  std::vector<std::vector<BigInt>> cols;  // cols[j][i]

  static LatticeBasis from_columns(std::vector<std::vector<BigInt>> columns);
};

struct ReducedBasis {
  LatticeBasis basis;
  // basis.cols = original.cols * transform, |det transform| = 1.
  std::vector<std::vector<BigInt>> transform;
};

// Exact-arithmetic LLL with delta = 3/4; rejects rank-deficient input.
// No floating point anywhere in the decision path.
ReducedBasis lll_reduce(const LatticeBasis& basis);

// C1^2 = ||b_1||^2 / 2^{m-1}, a lower bound on the squared length of every
// nonzero lattice vector.
Rational shortest_vector_lower_bound(const ReducedBasis& rb);

// Exact squared length of a shortest nonzero vector, by Fincke-Pohst style
// enumeration over the reduced basis. Intended for small dimensions; throws
// for dim > 8.
Rational shortest_vector_norm_squared(const ReducedBasis& rb);

// Exact recomputation of the reducedness conditions; used by tests.
bool is_size_reduced(const LatticeBasis& basis);
bool satisfies_lovasz(const LatticeBasis& basis);

Rational column_norm_squared(const std::vector<BigInt>& col);

}  // namespace erdos
