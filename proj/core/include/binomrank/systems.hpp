#pragma once

#include <cstdint>

#include "binomrank/gf2.hpp"
#include "binomrank/parity.hpp"

namespace binomrank {

// Window problem on the parity row of M: which (k, l) make the banded
// system below solvable. Validated on construction.
struct ProblemIInstance {
  std::uint64_t m = 1;
  std::int64_t j = 0, k = 1, l = 1;

  ProblemIInstance(std::uint64_t m, std::int64_t j, std::int64_t k, std::int64_t l);
};

// Split variant: M = alpha + delta with extra convolution rows on top.
struct ProblemIIInstance {
  std::int64_t alpha = 1, delta = 1;
  std::int64_t j = 0, k = 1, l = 1, q = 1;

  ProblemIIInstance(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                    std::int64_t l, std::int64_t q);
  std::uint64_t m() const { return static_cast<std::uint64_t>(alpha + delta); }
};

struct LinearSystem {
  Gf2Matrix a;
  Gf2Vector b;
};

// (l+1) x (k+1), constant along anti-diagonals: A[r][c] is the parity of
// C(M, j+l+k-r-c); rhs is the last unit vector.
LinearSystem build_problem_i(const ProblemIInstance& inst);

// Exact sum_s C(m, s) * C(n, j - s) = C(m + n, j).
BigInt vandermonde(std::uint64_t m, std::uint64_t n, std::uint64_t j);

// Parity of the truncated convolution
//   sum_{s=0}^{j+k+l-r} C(alpha, s) * C(delta, j+k+l+i-r-s).
// The upper limit stops short of the full Vandermonde range, so this only
// collapses to the parity of C(alpha+delta, j+k+l+i-r) when the dropped
// tail is all zero. Requires i >= 1 and 0 <= r <= k.
bool heart(std::int64_t alpha, std::int64_t delta, std::int64_t i, std::int64_t r, std::int64_t j,
           std::int64_t k, std::int64_t l);

// (l+q+1) x (k+1): q heart rows (i = q at the top, down to i = 1), then the
// full problem-I block for M = alpha + delta; rhs is the last unit vector.
LinearSystem build_problem_ii(const ProblemIIInstance& inst);

}  // namespace binomrank
