#include "binomrank/parity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "binomrank/errors.hpp"

namespace binomrank {

bool binom_parity(std::uint64_t m, std::uint64_t n) { return (n & ~m) == 0; }

BigInt exact_binomial(std::uint64_t m, std::uint64_t n, std::uint64_t max_m) {
  if (m > max_m)
    throw RefusalError("exact_binomial: m = " + std::to_string(m) + " exceeds limit " +
                       std::to_string(max_m));
  if (n > m) return 0;
  const std::uint64_t r = std::min(n, m - n);
  BigInt acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc *= m - r + i;
    acc /= i;  // exact: any prefix of the product is divisible by i!
  }
  return acc;
}

BinaryExpansion BinaryExpansion::of(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("BinaryExpansion: m must be positive");
  BinaryExpansion e;
  e.value = m;
  for (int bit = 63; bit >= 0; --bit)
    if ((m >> bit) & 1u) e.exponents.push_back(static_cast<unsigned>(bit));
  return e;
}

std::vector<std::uint64_t> OddIndex::positions() const {
  std::vector<std::uint64_t> out;
  out.reserve(entries.size());
  for (const OddEntry& e : entries) out.push_back(e.position);
  return out;
}

OddIndex odd_positions(std::uint64_t m) {
  const BinaryExpansion exp = BinaryExpansion::of(m);
  const std::size_t bits = exp.popcount();
  OddIndex idx;
  idx.m = m;
  idx.entries.reserve(std::size_t{1} << bits);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    OddEntry e;
    e.tuple.reserve(bits + 1);
    e.tuple.push_back(1);
    std::uint64_t sum = 1;
    // exp.exponents is descending, so selected powers come out descending.
    for (std::size_t i = 0; i < bits; ++i) {
      if ((mask >> i) & 1u) {
        const std::uint64_t p = std::uint64_t{1} << exp.exponents[i];
        e.tuple.push_back(p);
        sum += p;
      }
    }
    e.tuple.resize(bits + 1, 0);
    e.position = sum;
    idx.entries.push_back(std::move(e));
  }
  std::sort(idx.entries.begin(), idx.entries.end(),
            [](const OddEntry& a, const OddEntry& b) { return a.position < b.position; });
  return idx;
}

RunProfile even_run_profile(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("even_run_profile: m must be positive");
  RunProfile p;
  p.m = m;
  std::uint64_t pos = 1;
  while (pos <= m + 1) {
    const bool odd = binom_parity(m, pos - 1);
    std::uint64_t len = 1;
    while (pos + len <= m + 1 && binom_parity(m, pos + len - 1) == odd) ++len;
    p.runs.push_back({pos, len, odd});
    pos += len;
  }
  return p;
}

namespace {

// Ascending form lengths: F(g) = 2^e_g - 2^e_{g-1} - .. - 2^e_1 - 1 where
// e_1 < e_2 < .. are the ascending exponents of m.
std::vector<std::uint64_t> form_lengths(std::uint64_t m) {
  BinaryExpansion e = BinaryExpansion::of(m);
  std::vector<unsigned> asc(e.exponents.rbegin(), e.exponents.rend());
  std::vector<std::uint64_t> f;
  std::uint64_t lower = 0;
  for (unsigned ex : asc) {
    f.push_back((std::uint64_t{1} << ex) - lower - 1);
    lower += std::uint64_t{1} << ex;
  }
  return f;
}

}  // namespace

StructureAuditReport audit_structure_facts(std::uint64_t m) {
  StructureAuditReport rep;
  rep.m = m;
  const RunProfile profile = even_run_profile(m);
  const std::vector<std::uint64_t> forms = form_lengths(m);
  const std::set<std::uint64_t> form_set(forms.begin(), forms.end());

  for (const Run& r : profile.runs) {
    if (r.odd) continue;
    if (!form_set.count(r.length)) {
      rep.fact1.pass = false;
      std::ostringstream os;
      os << "even run at position " << r.start << " has length " << r.length
         << " outside the form set";
      rep.fact1.counterexample = os.str();
      break;
    }
  }

  const std::size_t n = profile.runs.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Run& a = profile.runs[i];
    const Run& b = profile.runs[n - 1 - i];
    if (a.length != b.length || a.odd != b.odd) {
      rep.fact2.pass = false;
      std::ostringstream os;
      os << "run " << i << " (length " << a.length << ", " << (a.odd ? "odd" : "even")
         << ") does not mirror run " << n - 1 - i << " (length " << b.length << ", "
         << (b.odd ? "odd" : "even") << ")";
      rep.fact2.counterexample = os.str();
      break;
    }
  }

  std::vector<std::uint64_t> even_lengths;
  for (const Run& r : profile.runs)
    if (!r.odd) even_lengths.push_back(r.length);
  for (std::size_t g = 1; g <= forms.size() && rep.fact3.pass; ++g) {
    const std::uint64_t want = forms[g - 1];
    const std::uint64_t expect = (std::uint64_t{1} << g) - 1;
    std::size_t prev = even_lengths.size();
    for (std::size_t i = 0; i < even_lengths.size(); ++i) {
      if (even_lengths[i] != want) continue;
      if (prev != even_lengths.size()) {
        std::uint64_t between = 0;
        for (std::size_t t = prev + 1; t < i; ++t)
          if (even_lengths[t] != want) ++between;
        if (between != expect) {
          rep.fact3.pass = false;
          std::ostringstream os;
          os << "g=" << g << ": even runs #" << prev << " and #" << i << " of length " << want
             << " enclose " << between << " other-length runs, expected " << expect;
          rep.fact3.counterexample = os.str();
          break;
        }
      }
      prev = i;
    }
  }
  return rep;
}

namespace {
std::uint64_t run_from(std::uint64_t m, std::uint64_t pos, bool odd) {
  if (pos < 1 || pos > m + 1)
    throw std::out_of_range("run_from: position " + std::to_string(pos) + " outside row of " +
                            std::to_string(m));
  std::uint64_t n = 0;
  while (pos + n <= m + 1 && binom_parity(m, pos + n - 1) == odd) ++n;
  return n;
}
}  // namespace

std::uint64_t odd_run_from(std::uint64_t m, std::uint64_t pos) { return run_from(m, pos, true); }
std::uint64_t even_run_from(std::uint64_t m, std::uint64_t pos) { return run_from(m, pos, false); }

bool prefix_sum_parity(std::uint64_t z, std::uint64_t y) {
  if (z < 1 || y < 1) throw std::invalid_argument("prefix_sum_parity: z and y must be positive");
  return binom_parity(z - 1, y - 1);
}

}  // namespace binomrank
