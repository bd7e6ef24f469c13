#include "binomrank/systems.hpp"

#include <stdexcept>
#include <string>

namespace binomrank {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

ProblemIInstance::ProblemIInstance(std::uint64_t m_, std::int64_t j_, std::int64_t k_,
                                   std::int64_t l_)
    : m(m_), j(j_), k(k_), l(l_) {
  require(m >= 1, "ProblemIInstance: M must be >= 1");
  require(j >= 0, "ProblemIInstance: j must be >= 0");
  require(k >= 1, "ProblemIInstance: k must be >= 1");
  require(l >= 1, "ProblemIInstance: l must be >= 1");
}

ProblemIIInstance::ProblemIIInstance(std::int64_t alpha_, std::int64_t delta_, std::int64_t j_,
                                     std::int64_t k_, std::int64_t l_, std::int64_t q_)
    : alpha(alpha_), delta(delta_), j(j_), k(k_), l(l_), q(q_) {
  require(alpha >= 1, "ProblemIIInstance: alpha must be >= 1");
  require(delta >= 1, "ProblemIIInstance: delta must be >= 1");
  require(j >= 0, "ProblemIIInstance: j must be >= 0");
  require(k >= 1, "ProblemIIInstance: k must be >= 1");
  require(l >= 1, "ProblemIIInstance: l must be >= 1");
  require(q >= 1, "ProblemIIInstance: q must be >= 1");
}

LinearSystem build_problem_i(const ProblemIInstance& inst) {
  const std::size_t rows = static_cast<std::size_t>(inst.l) + 1;
  const std::size_t cols = static_cast<std::size_t>(inst.k) + 1;
  LinearSystem sys{Gf2Matrix(rows, cols), Gf2Vector(rows)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::uint64_t n = static_cast<std::uint64_t>(inst.j + inst.l + inst.k) -
                              static_cast<std::uint64_t>(r + c);
      sys.a.set(r, c, binom_parity(inst.m, n));
    }
  }
  sys.b.set(rows - 1, true);
  return sys;
}

BigInt vandermonde(std::uint64_t m, std::uint64_t n, std::uint64_t j) {
  BigInt acc = 0;
  for (std::uint64_t s = 0; s <= j; ++s)
    acc += exact_binomial(m, s) * exact_binomial(n, j - s);
  return acc;
}

bool heart(std::int64_t alpha, std::int64_t delta, std::int64_t i, std::int64_t r, std::int64_t j,
           std::int64_t k, std::int64_t l) {
  require(alpha >= 1 && delta >= 1, "heart: alpha and delta must be >= 1");
  require(i >= 1, "heart: i must be >= 1");
  require(r >= 0 && r <= k, "heart: r must lie in [0, k]");
  require(j >= 0 && k >= 1 && l >= 1, "heart: bad instance parameters");
  const std::int64_t hi = j + k + l - r;
  const std::uint64_t ua = static_cast<std::uint64_t>(alpha);
  const std::uint64_t ud = static_cast<std::uint64_t>(delta);
  bool acc = false;
  for (std::int64_t s = 0; s <= hi; ++s) {
    acc ^= binom_parity(ua, static_cast<std::uint64_t>(s)) &&
           binom_parity(ud, static_cast<std::uint64_t>(hi + i - s));
  }
  return acc;
}

LinearSystem build_problem_ii(const ProblemIIInstance& inst) {
  const std::size_t rows = static_cast<std::size_t>(inst.l + inst.q) + 1;
  const std::size_t cols = static_cast<std::size_t>(inst.k) + 1;
  LinearSystem sys{Gf2Matrix(rows, cols), Gf2Vector(rows)};
  for (std::int64_t r = 0; r < inst.q; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      sys.a.set(static_cast<std::size_t>(r), c,
                heart(inst.alpha, inst.delta, inst.q - r, static_cast<std::int64_t>(c), inst.j,
                      inst.k, inst.l));
  const LinearSystem base =
      build_problem_i(ProblemIInstance(inst.m(), inst.j, inst.k, inst.l));
  for (std::size_t r = 0; r <= static_cast<std::size_t>(inst.l); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      sys.a.set(static_cast<std::size_t>(inst.q) + r, c, base.a.get(r, c));
  sys.b.set(rows - 1, true);
  return sys;
}

}  // namespace binomrank
