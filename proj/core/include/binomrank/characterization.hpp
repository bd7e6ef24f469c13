#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomrank/parity.hpp"

namespace binomrank {

// Which branch of the case analysis produced a candidate.
enum class Subcase {
  i_a,
  i_b_either,
  i_b_or,
  ii_a_either,
  ii_a_or,
  ii_b,
  ii_c_main,
  ii_c_nontrivial_i,
  ii_c_nontrivial_ii,
  ii_c_nontrivial_iii,
};

const char* to_string(Subcase s);

// One emitted (k, l[, q]) with the branch that produced it and the branch's
// free parameters, so the emission can be replayed by hand.
struct CandidateSolution {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t q = 0;  // 0 when not applicable
  Subcase subcase = Subcase::i_a;
  std::vector<std::pair<std::string, std::int64_t>> choices;  // sorted by key

  friend bool operator==(const CandidateSolution&, const CandidateSolution&) = default;
};

bool candidate_less(const CandidateSolution& a, const CandidateSolution& b);

struct EnumerationBounds {
  std::int64_t kmax = 16;
  std::int64_t lmax = 16;
  std::int64_t qmax = 8;
};

// The three parity conditions conjectured equivalent to solvability of the
// problem-I system: boundary flip at j vs j+k+1, period k+1 inside the
// window, and an even count of odd entries in the first block.
bool restated_conditions_i(std::uint64_t m, std::int64_t j, std::int64_t k, std::int64_t l);

// Case split on the entry C(M, j): odd entries route through case I, even
// ones through case II. Emissions are clipped to the bounds, deduplicated,
// and sorted by (k, l, subcase, choices).
std::vector<CandidateSolution> enumerate_case_i(std::uint64_t m, std::int64_t j,
                                                const EnumerationBounds& bounds);
std::vector<CandidateSolution> enumerate_case_ii(std::uint64_t m, std::int64_t j,
                                                 const EnumerationBounds& bounds);
std::vector<CandidateSolution> enumerate_problem_i(std::uint64_t m, std::int64_t j,
                                                   const EnumerationBounds& bounds);

// Parity of C(z, j+l+a) + C(z, j+l+a+1) + .. + C(z, j+k+l+a). Computed by
// direct summation; the prefix identity is kept as a cross-check, not used
// here. Requires a >= 1.
bool string_sum_parity(std::uint64_t z, std::int64_t j, std::int64_t k, std::int64_t l,
                       std::int64_t a);

// First split condition: the a = 1 string sums for M = alpha + delta and
// for alpha alone must agree in parity.
bool condition_star(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                    std::int64_t l);

// Closed-form variant of condition_star as worked out in prose; kept
// separate because it disagrees with the direct sums on some instances
// (its prefix split is off by one). Reports surface where they differ.
bool condition_star_closed_form(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                                std::int64_t k, std::int64_t l);

// Higher split conditions, a = 2 .. q: the M-vs-alpha string sums must
// differ exactly when sum_{p=1}^{a-1} C(delta, p) * S_alpha(a-p) is odd.
bool condition_double_star(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                           std::int64_t l, std::int64_t q);

bool restated_conditions_ii(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                            std::int64_t k, std::int64_t l, std::int64_t q);

// Problem-II candidates: problem-I emissions for M = alpha + delta crossed
// with every q <= qmax passing condition_star and condition_double_star.
std::vector<CandidateSolution> enumerate_problem_ii(std::int64_t alpha, std::int64_t delta,
                                                    std::int64_t j,
                                                    const EnumerationBounds& bounds);

}  // namespace binomrank
