#include "binomrank/characterization.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace binomrank {

const char* to_string(Subcase s) {
  switch (s) {
    case Subcase::i_a: return "I.a";
    case Subcase::i_b_either: return "I.b.either";
    case Subcase::i_b_or: return "I.b.or";
    case Subcase::ii_a_either: return "II.a.either";
    case Subcase::ii_a_or: return "II.a.or";
    case Subcase::ii_b: return "II.b";
    case Subcase::ii_c_main: return "II.c.main";
    case Subcase::ii_c_nontrivial_i: return "II.c.nontrivial.i";
    case Subcase::ii_c_nontrivial_ii: return "II.c.nontrivial.ii";
    case Subcase::ii_c_nontrivial_iii: return "II.c.nontrivial.iii";
  }
  return "?";
}

bool candidate_less(const CandidateSolution& a, const CandidateSolution& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.l != b.l) return a.l < b.l;
  if (a.q != b.q) return a.q < b.q;
  if (a.subcase != b.subcase) return a.subcase < b.subcase;
  return a.choices < b.choices;
}

bool restated_conditions_i(std::uint64_t m, std::int64_t j, std::int64_t k, std::int64_t l) {
  if (j < 0 || k < 1 || l < 1 || m < 1)
    throw std::invalid_argument("restated_conditions_i: bad parameters");
  auto par = [m](std::int64_t n) { return binom_parity(m, static_cast<std::uint64_t>(n)); };
  if (par(j) == par(j + k + 1)) return false;
  const std::int64_t end = j + l + k;
  for (std::int64_t t = 1; t <= k + 1; ++t)
    for (std::int64_t idx = j + t + (k + 1); idx <= end; idx += k + 1)
      if (par(j + t) != par(idx)) return false;
  int odd = 0;
  for (std::int64_t t = 1; t <= k + 1; ++t) odd += par(j + t);
  return odd % 2 == 0;
}

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

// 1-based row position; anything past M+1 counts as even (the row is zero
// there).
bool odd_at(std::uint64_t m, std::int64_t pos) {
  return pos <= static_cast<std::int64_t>(m) + 1 &&
         binom_parity(m, static_cast<std::uint64_t>(pos - 1));
}

// Run counts that tolerate positions past the end of the row: evens
// continue forever there, odds stop immediately.
std::int64_t odd_run_at(std::uint64_t m, std::int64_t pos) {
  if (pos > static_cast<std::int64_t>(m) + 1) return 0;
  return static_cast<std::int64_t>(odd_run_from(m, static_cast<std::uint64_t>(pos)));
}

std::int64_t even_run_at(std::uint64_t m, std::int64_t pos) {
  if (pos > static_cast<std::int64_t>(m) + 1) return kUnbounded;
  return static_cast<std::int64_t>(even_run_from(m, static_cast<std::uint64_t>(pos)));
}

using Choices = std::vector<std::pair<std::string, std::int64_t>>;

struct Emitter {
  const EnumerationBounds& bounds;
  std::vector<CandidateSolution> out;

  void emit(std::int64_t k, std::int64_t l, Subcase tag, Choices choices) {
    if (k < 1 || k > bounds.kmax || l < 1 || l > bounds.lmax) return;
    std::sort(choices.begin(), choices.end());
    out.push_back({k, l, 0, tag, std::move(choices)});
  }

  // l ranges over [1, cap]; cap may be kUnbounded.
  void emit_range(std::int64_t k, std::int64_t l_cap, Subcase tag, const Choices& choices) {
    const std::int64_t hi = std::min(l_cap, bounds.lmax);
    for (std::int64_t l = 1; l <= hi; ++l) emit(k, l, tag, choices);
  }

  std::vector<CandidateSolution> done() {
    std::sort(out.begin(), out.end(), candidate_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// Positions of the odd entries, 1-based both in the list and in the row.
struct OddPosView {
  std::vector<std::uint64_t> pos;

  std::int64_t count() const { return static_cast<std::int64_t>(pos.size()); }
  std::int64_t at(std::int64_t i) const { return static_cast<std::int64_t>(pos[i - 1]); }
  // Even entries strictly between odd position i and the next odd entry;
  // unbounded after the last one.
  std::int64_t gap_after(std::int64_t i) const {
    if (i >= count()) return kUnbounded;
    return at(i + 1) - at(i) - 1;
  }
  std::int64_t index_of(std::int64_t row_pos) const {
    auto it = std::lower_bound(pos.begin(), pos.end(), static_cast<std::uint64_t>(row_pos));
    if (it == pos.end() || *it != static_cast<std::uint64_t>(row_pos)) return 0;
    return static_cast<std::int64_t>(it - pos.begin()) + 1;
  }
};

// Shared between I.a and I.b-or: blocks ending inside (or at the far edge
// of) the gap after a later odd entry reached by an even step s >= 2.
// odd_rule selects which parity of trailing entry forces l = 1.
void scan_even_steps(std::uint64_t m, const OddPosView& odds, std::int64_t i, bool block_odd_rule,
                     Emitter& em, Subcase tag) {
  for (std::int64_t s = 2; i + s <= odds.count(); s += 2) {
    const std::int64_t gap = odds.gap_after(i + s);
    if (gap <= 0) continue;
    // k grows with L, so the k bound clips L directly.
    const std::int64_t l_from_k = em.bounds.kmax + odds.at(i) + 1 - odds.at(i + s);
    const std::int64_t l_hi = std::min(gap, l_from_k);
    for (std::int64_t L = 1; L <= l_hi; ++L) {
      const std::int64_t k = odds.at(i + s) + L - odds.at(i) - 1;
      const std::int64_t after = odds.at(i + s) + L + 1;
      const Choices choices{{"L", L}, {"s", s}};
      if (odd_at(m, after) != block_odd_rule) {
        em.emit(k, 1, tag, choices);
      } else if (block_odd_rule) {
        const std::int64_t p = odd_run_at(m, odds.at(i) + 1);
        const std::int64_t q = odd_run_at(m, after);
        em.emit_range(k, 1 + std::min(p, q), tag, choices);
      } else {
        const std::int64_t p = even_run_at(m, odds.at(i) + 1);
        const std::int64_t q = even_run_at(m, after);
        em.emit_range(k, 1 + std::min(p, q), tag, choices);
      }
    }
  }
}

}  // namespace

std::vector<CandidateSolution> enumerate_case_i(std::uint64_t m, std::int64_t j,
                                                const EnumerationBounds& bounds) {
  if (j < 0 || !binom_parity(m, static_cast<std::uint64_t>(j)))
    throw std::invalid_argument("enumerate_case_i: C(M, j) must be odd");
  OddPosView odds{odd_positions(m).positions()};
  const std::int64_t i = odds.index_of(j + 1);
  Emitter em{bounds, {}};

  if (odds.gap_after(i) == 0) {
    // I.a: the entry right after j+1 is odd too. Blocks end inside a later
    // gap; trailing even entry pins l = 1, trailing odd entry allows l up
    // to 1 + min of the two odd runs flanking the block.
    scan_even_steps(m, odds, i, /*block_odd_rule=*/true, em, Subcase::i_a);
  } else {
    // I.b: a positive (possibly unbounded) gap follows j+1.
    const std::int64_t gap = odds.gap_after(i);
    // Either: the block stays inside the gap. The l bound is the distance
    // to the next odd position minus the block, i.e. gap - k.
    for (std::int64_t k = 1; k <= std::min(gap - 1, bounds.kmax); ++k)
      em.emit_range(k, gap == kUnbounded ? kUnbounded : gap - k, Subcase::i_b_either, {});
    // Or: same stepping as I.a with the parity roles swapped.
    scan_even_steps(m, odds, i, /*block_odd_rule=*/false, em, Subcase::i_b_or);
  }
  return em.done();
}

std::vector<CandidateSolution> enumerate_case_ii(std::uint64_t m, std::int64_t j,
                                                 const EnumerationBounds& bounds) {
  if (j < 0 || binom_parity(m, static_cast<std::uint64_t>(j)))
    throw std::invalid_argument("enumerate_case_ii: C(M, j) must be even");
  OddPosView odds{odd_positions(m).positions()};
  Emitter em{bounds, {}};
  const std::int64_t i = odds.index_of(j + 2);

  if (i != 0) {
    // II.a: the odd run starting at j+2 has even length u+1.
    const std::int64_t u = odd_run_at(m, odds.at(i)) - 1;
    if (u >= 1 && u % 2 == 1) {
      for (std::int64_t k = 1; k <= std::min(u, bounds.kmax); k += 2)
        em.emit_range(k, u + 1 - k, Subcase::ii_a_either, {{"u", u}});
      for (std::int64_t s = 1; i + s <= odds.count(); s += 2) {
        const std::int64_t k = odds.at(i + s) - odds.at(i);
        const std::int64_t after = odds.at(i + s) + 1;
        const Choices choices{{"s", s}};
        if (!odd_at(m, after)) {
          em.emit(k, 1, Subcase::ii_a_or, choices);
        } else {
          const std::int64_t p = odd_run_at(m, odds.at(i));
          const std::int64_t qq = odd_run_at(m, after);
          em.emit_range(k, 1 + std::min(p, qq), Subcase::ii_a_or, choices);
        }
      }
    }
    // II.b: the odd entry at j+2 is isolated (a gap follows immediately).
    if (odds.gap_after(i) > 0) {
      for (std::int64_t s = 1; i + s <= odds.count(); s += 2)
        em.emit(odds.at(i + s) - odds.at(i), 1, Subcase::ii_b, {{"s", s}});
    }
  } else {
    // II.c: j+2 sits inside an even run.
    std::int64_t i0 = 0;
    for (std::int64_t t = 1; t <= odds.count(); ++t) {
      if (j + 2 < odds.at(t)) {
        i0 = t;
        break;
      }
    }
    if (i0 != 0) {
      for (std::int64_t s = 1; i0 + s <= odds.count(); s += 2) {
        const std::int64_t k = odds.at(i0 + s) - j - 2;
        const std::int64_t after = odds.at(i0 + s) + 1;
        const Choices choices{{"i0", i0}, {"s", s}};
        if (odd_at(m, after)) {
          em.emit(k, 1, Subcase::ii_c_main, choices);
        } else {
          const std::int64_t p = even_run_at(m, j + 2);
          const std::int64_t qq = even_run_at(m, after);
          em.emit_range(k, 1 + std::min(p, qq), Subcase::ii_c_main, choices);
        }
      }
    }

    // Non-trivial family: j determined by a proper subset sum x of the top
    // powers above a >1 jump in the exponent list.
    const BinaryExpansion exp = BinaryExpansion::of(m);
    std::vector<std::int64_t> asc(exp.exponents.rbegin(), exp.exponents.rend());
    const std::int64_t r = static_cast<std::int64_t>(asc.size());
    std::int64_t s0 = 0;  // 1-based index of least exponent >= 2
    for (std::int64_t b = 1; b <= r; ++b) {
      if (asc[b - 1] >= 2) {
        s0 = b;
        break;
      }
    }
    std::vector<std::int64_t> jumps;  // 1-based b with asc[b] - asc[b-1] > 1
    for (std::int64_t b = 1; b < r; ++b)
      if (asc[b] - asc[b - 1] > 1) jumps.push_back(b);

    for (std::int64_t d = 1; d <= static_cast<std::int64_t>(jumps.size()); ++d) {
      const std::int64_t sd = jumps[d - 1];
      const std::int64_t nsd = asc[sd - 1];
      const std::int64_t top_count = r - sd;  // exponents with index > sd
      const std::int64_t step = std::int64_t{1} << (1 + nsd);
      for (std::int64_t mask = 0; mask < (std::int64_t{1} << top_count); ++mask) {
        if (mask + 1 == (std::int64_t{1} << top_count)) continue;  // proper subsets only
        std::int64_t x = 0;
        for (std::int64_t t = 0; t < top_count; ++t)
          if ((mask >> t) & 1) x += std::int64_t{1} << asc[sd + t];
        if (static_cast<std::int64_t>(m) - x - step != j) continue;
        const std::int64_t p = even_run_at(m, j + 2);
        const std::int64_t qq = even_run_at(m, j + step + 2);
        const std::int64_t mn = std::min(p, qq);
        em.emit_range((std::int64_t{1} << nsd) - 1, 1 + (std::int64_t{1} << nsd) + mn,
                      Subcase::ii_c_nontrivial_i, {{"d", d}, {"x", x}});
        if (d > 1) {
          const std::int64_t lo = asc[jumps[d - 2] - 1];
          for (std::int64_t z : asc) {
            if (z <= lo || z >= nsd) continue;
            em.emit_range((std::int64_t{1} << z) - 1,
                          1 + (std::int64_t{1} << z) * ((std::int64_t{1} << (nsd - z + 1)) - 1) +
                              mn,
                          Subcase::ii_c_nontrivial_ii, {{"d", d}, {"x", x}, {"z", z}});
          }
        } else if (s0 != 0 && nsd > asc[s0 - 1]) {
          for (std::int64_t z : asc) {
            if (z < asc[s0 - 1] || z >= nsd) continue;
            em.emit_range((std::int64_t{1} << z) - 1,
                          1 + (std::int64_t{1} << z) * ((std::int64_t{1} << (nsd - z + 1)) - 1) +
                              mn,
                          Subcase::ii_c_nontrivial_iii, {{"d", d}, {"x", x}, {"z", z}});
          }
        }
      }
    }
  }
  return em.done();
}

std::vector<CandidateSolution> enumerate_problem_i(std::uint64_t m, std::int64_t j,
                                                   const EnumerationBounds& bounds) {
  if (j < 0) throw std::invalid_argument("enumerate_problem_i: j must be >= 0");
  if (binom_parity(m, static_cast<std::uint64_t>(j))) return enumerate_case_i(m, j, bounds);
  return enumerate_case_ii(m, j, bounds);
}

bool string_sum_parity(std::uint64_t z, std::int64_t j, std::int64_t k, std::int64_t l,
                       std::int64_t a) {
  if (j < 0 || k < 1 || l < 1 || a < 1)
    throw std::invalid_argument("string_sum_parity: bad parameters");
  bool acc = false;
  for (std::int64_t t = j + l + a; t <= j + k + l + a; ++t)
    acc ^= binom_parity(z, static_cast<std::uint64_t>(t));
  return acc;
}

bool condition_star(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                    std::int64_t l) {
  if (alpha < 1 || delta < 1) throw std::invalid_argument("condition_star: bad split");
  const std::uint64_t m = static_cast<std::uint64_t>(alpha + delta);
  return string_sum_parity(m, j, k, l, 1) ==
         string_sum_parity(static_cast<std::uint64_t>(alpha), j, k, l, 1);
}

bool condition_star_closed_form(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                                std::int64_t k, std::int64_t l) {
  if (alpha < 1 || delta < 1 || j < 0 || k < 1 || l < 1)
    throw std::invalid_argument("condition_star_closed_form: bad parameters");
  const std::uint64_t m = static_cast<std::uint64_t>(alpha + delta);
  const auto side = [&](std::uint64_t z) {
    return binom_parity(z - 1, static_cast<std::uint64_t>(j + k + l)) ^
           binom_parity(z - 1, static_cast<std::uint64_t>(j + l - 1));
  };
  return side(m) == side(static_cast<std::uint64_t>(alpha));
}

bool condition_double_star(std::int64_t alpha, std::int64_t delta, std::int64_t j, std::int64_t k,
                           std::int64_t l, std::int64_t q) {
  if (alpha < 1 || delta < 1 || q < 1)
    throw std::invalid_argument("condition_double_star: bad parameters");
  const std::uint64_t m = static_cast<std::uint64_t>(alpha + delta);
  const std::uint64_t ua = static_cast<std::uint64_t>(alpha);
  const std::uint64_t ud = static_cast<std::uint64_t>(delta);
  for (std::int64_t a = 2; a <= q; ++a) {
    const bool differ = string_sum_parity(m, j, k, l, a) != string_sum_parity(ua, j, k, l, a);
    bool rhs = false;
    for (std::int64_t p = 1; p < a; ++p)
      rhs ^= binom_parity(ud, static_cast<std::uint64_t>(p)) &&
             string_sum_parity(ua, j, k, l, a - p);
    if (differ != rhs) return false;
  }
  return true;
}

bool restated_conditions_ii(std::int64_t alpha, std::int64_t delta, std::int64_t j,
                            std::int64_t k, std::int64_t l, std::int64_t q) {
  return restated_conditions_i(static_cast<std::uint64_t>(alpha + delta), j, k, l) &&
         condition_star(alpha, delta, j, k, l) &&
         condition_double_star(alpha, delta, j, k, l, q);
}

std::vector<CandidateSolution> enumerate_problem_ii(std::int64_t alpha, std::int64_t delta,
                                                    std::int64_t j,
                                                    const EnumerationBounds& bounds) {
  if (alpha < 1 || delta < 1) throw std::invalid_argument("enumerate_problem_ii: bad split");
  const std::uint64_t m = static_cast<std::uint64_t>(alpha + delta);
  std::vector<CandidateSolution> out;
  for (const CandidateSolution& c : enumerate_problem_i(m, j, bounds)) {
    if (!condition_star(alpha, delta, j, c.k, c.l)) continue;
    // The a-conditions form a prefix-monotone conjunction over q.
    for (std::int64_t q = 1; q <= bounds.qmax; ++q) {
      if (q > 1 && !condition_double_star(alpha, delta, j, c.k, c.l, q)) break;
      CandidateSolution cq = c;
      cq.q = q;
      out.push_back(std::move(cq));
    }
  }
  std::sort(out.begin(), out.end(), candidate_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace binomrank
