#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binomrank/characterization.hpp"
#include "binomrank/gf2.hpp"
#include "binomrank/json_writer.hpp"
#include "binomrank/parity.hpp"
#include "binomrank/systems.hpp"

namespace binomrank {

inline constexpr const char* kVersion = "0.1.0";

// Exact solvability of one instance, decided by elimination.
bool oracle_solvable_i(std::uint64_t m, std::uint64_t j, std::int64_t k, std::int64_t l);
bool oracle_solvable_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j,
                        std::int64_t k, std::int64_t l, std::int64_t q);

struct SweepCell {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t q = 0;  // 0 when the instance has no top block
  bool oracle = false;
  bool restated = false;
  bool enumerated = false;
  std::size_t rank = 0;
  std::size_t rank_aug = 0;
};

struct SweepGrid {
  std::string problem;  // "I" or "II"
  std::uint64_t m = 0;
  std::uint64_t alpha = 0;
  std::uint64_t delta = 0;
  std::uint64_t j = 0;
  EnumerationBounds bounds;
  std::vector<SweepCell> cells;  // (k, l[, q]) ascending, last coordinate fastest
};

// Dense verdict grid: elimination verdict and ranks, the restated conditions,
// and membership in the enumerated solution set, for every point in range.
// Cells are computed in parallel by index and assembled in order, so the
// result is identical for any thread count.
SweepGrid sweep_i(std::uint64_t m, std::uint64_t j, std::int64_t kmax, std::int64_t lmax,
                  unsigned threads = 1);
SweepGrid sweep_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j, std::int64_t kmax,
                   std::int64_t lmax, std::int64_t qmax, unsigned threads = 1);

std::string to_csv(const SweepGrid& grid);
Json to_json(const SweepGrid& grid);

struct ClassCounts {
  std::uint64_t both_yes = 0;
  std::uint64_t both_no = 0;
  std::uint64_t oracle_only = 0;  // solver says yes, predicate says no
  std::uint64_t paper_only = 0;   // predicate says yes, solver says no
};

struct Discrepancy {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t q = 0;  // 0 when the instance has no top block
  bool oracle = false;
  bool restated = false;
  bool enumerated = false;
  std::vector<std::string> subcases;  // tags of enumeration hits at this point
};

struct StarSample {
  std::int64_t k = 0;
  std::int64_t l = 0;
  bool direct = false;
  bool closed = false;
};

// Direct summation vs the closed-form shortcut for the first agreement
// condition; the two are expected to differ on some instances and the
// disagreements are reported as data.
struct StarClosedFormCheck {
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  std::vector<StarSample> samples;  // capped
};

struct ValidationOptions {
  EnumerationBounds bounds;
  unsigned threads = 1;
  std::size_t max_discrepancies_per_class = 100;
};

struct ValidationReport {
  std::string problem;  // "I" or "II"
  std::uint64_t m = 0;
  std::uint64_t alpha = 0;  // problem II only
  std::uint64_t delta = 0;  // problem II only
  std::uint64_t j = 0;
  EnumerationBounds bounds;
  std::uint64_t points = 0;
  ClassCounts restated_classes;
  ClassCounts enumerated_classes;
  std::vector<Discrepancy> discrepancies;  // capped per class/kind bucket
  std::size_t discrepancy_cap = 100;
  StarClosedFormCheck star;  // problem II only
  StructureAuditReport audit;  // run-length facts for this instance's modulus
};

// Compares the elimination verdict against the restated conditions and
// against membership in the enumerated solution set over the whole grid.
// Disagreements are data, not errors.
ValidationReport cross_validate_i(std::uint64_t m, std::uint64_t j,
                                  const ValidationOptions& opts = {});
ValidationReport cross_validate_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j,
                                   const ValidationOptions& opts = {});

struct AuditViolation {
  std::uint64_t m = 0;
  int fact = 0;  // 1, 2 or 3
  std::string detail;
};

struct AuditSummary {
  std::uint64_t mmax = 0;
  std::uint64_t fact1_pass = 0;
  std::uint64_t fact2_pass = 0;
  std::uint64_t fact3_pass = 0;
  std::uint64_t fact1_violations = 0;
  std::uint64_t fact2_violations = 0;
  std::uint64_t fact3_violations = 0;
  std::uint64_t index_scan_mismatches = 0;  // odd-position index vs direct row scan
  std::uint64_t total_odd_positions = 0;    // sum over m of 2^popcount(m)
  std::vector<AuditViolation> samples;      // capped
  std::size_t sample_cap = 100;
};

// Runs the run-length structure audit and the odd-position index/scan
// agreement check for every modulus in [1, mmax].
AuditSummary audit_all(std::uint64_t mmax, unsigned threads = 1);

Json to_json(const SolveReport& report);
Json to_json(const StructureAuditReport& report);
Json to_json(const ValidationReport& report);
Json to_json(const AuditSummary& summary);
Json to_json(const CandidateSolution& candidate, bool with_q);
Json to_json(const std::vector<CandidateSolution>& candidates, bool with_q);

}  // namespace binomrank
