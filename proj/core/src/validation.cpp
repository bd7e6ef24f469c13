#include "binomrank/validation.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

namespace binomrank {

namespace {

// Runs fn(0..n-1) over `threads` workers in contiguous index chunks. The
// caller writes results into a preallocated slot per index, so the outcome
// does not depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = n * t / threads;
    std::size_t hi = n * (t + 1) / threads;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

using PointKey = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::map<PointKey, std::vector<std::string>> index_candidates(
    const std::vector<CandidateSolution>& candidates) {
  std::map<PointKey, std::vector<std::string>> out;
  for (const auto& c : candidates) {
    auto& tags = out[{c.k, c.l, c.q}];
    std::string tag = to_string(c.subcase);
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
  }
  for (auto& [key, tags] : out) std::sort(tags.begin(), tags.end());
  return out;
}

void tally(ClassCounts& counts, bool oracle, bool predicate) {
  if (oracle && predicate) ++counts.both_yes;
  else if (!oracle && !predicate) ++counts.both_no;
  else if (oracle) ++counts.oracle_only;
  else ++counts.paper_only;
}

// Buckets: {restated, enumerated} x {oracle_only, paper_only}.
constexpr std::size_t kBuckets = 4;

std::size_t bucket_of(bool enumerated_kind, bool oracle) {
  return (enumerated_kind ? 2u : 0u) + (oracle ? 0u : 1u);
}

struct DiscrepancyCollector {
  std::size_t cap;
  std::size_t recorded[kBuckets] = {0, 0, 0, 0};
  std::vector<Discrepancy> out;

  void consider(const Discrepancy& d) {
    bool want = false;
    std::size_t hits[kBuckets];
    std::size_t nhits = 0;
    if (d.oracle != d.restated) hits[nhits++] = bucket_of(false, d.oracle);
    if (d.oracle != d.enumerated) hits[nhits++] = bucket_of(true, d.oracle);
    for (std::size_t i = 0; i < nhits; ++i)
      if (recorded[hits[i]] < cap) want = true;
    if (!want) return;
    for (std::size_t i = 0; i < nhits; ++i) ++recorded[hits[i]];
    out.push_back(d);
  }
};

}  // namespace

bool oracle_solvable_i(std::uint64_t m, std::uint64_t j, std::int64_t k, std::int64_t l) {
  LinearSystem sys = build_problem_i({m, static_cast<std::int64_t>(j), k, l});
  return is_consistent(sys.a, sys.b);
}

bool oracle_solvable_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j,
                        std::int64_t k, std::int64_t l, std::int64_t q) {
  LinearSystem sys = build_problem_ii({static_cast<std::int64_t>(alpha),
                                       static_cast<std::int64_t>(delta),
                                       static_cast<std::int64_t>(j), k, l, q});
  return is_consistent(sys.a, sys.b);
}

SweepGrid sweep_i(std::uint64_t m, std::uint64_t j, std::int64_t kmax, std::int64_t lmax,
                  unsigned threads) {
  if (kmax < 1 || lmax < 1) throw std::invalid_argument("sweep_i: bounds must be positive");
  SweepGrid grid;
  grid.problem = "I";
  grid.m = m;
  grid.j = j;
  grid.bounds = {kmax, lmax, 0};
  auto membership = index_candidates(enumerate_problem_i(m, j, {kmax, lmax, 1}));
  std::size_t nl = static_cast<std::size_t>(lmax);
  std::size_t n = static_cast<std::size_t>(kmax) * nl;
  grid.cells.resize(n);
  parallel_for(n, threads, [&](std::size_t idx) {
    std::int64_t k = static_cast<std::int64_t>(idx / nl) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx % nl) + 1;
    LinearSystem sys = build_problem_i({m, static_cast<std::int64_t>(j), k, l});
    SolveReport report = solve_report(sys.a, sys.b);
    SweepCell& cell = grid.cells[idx];
    cell = {k, l, 0, report.solvable, restated_conditions_i(m, j, k, l),
            membership.count({k, l, 0}) != 0, report.rank, report.rank_aug};
  });
  return grid;
}

SweepGrid sweep_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j, std::int64_t kmax,
                   std::int64_t lmax, std::int64_t qmax, unsigned threads) {
  if (kmax < 1 || lmax < 1 || qmax < 1)
    throw std::invalid_argument("sweep_ii: bounds must be positive");
  SweepGrid grid;
  grid.problem = "II";
  grid.alpha = alpha;
  grid.delta = delta;
  grid.m = alpha + delta;
  grid.j = j;
  grid.bounds = {kmax, lmax, qmax};
  auto membership = index_candidates(enumerate_problem_ii(alpha, delta, j, {kmax, lmax, qmax}));
  std::size_t nl = static_cast<std::size_t>(lmax);
  std::size_t nq = static_cast<std::size_t>(qmax);
  std::size_t n = static_cast<std::size_t>(kmax) * nl * nq;
  grid.cells.resize(n);
  parallel_for(n, threads, [&](std::size_t idx) {
    std::int64_t q = static_cast<std::int64_t>(idx % nq) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx / nq % nl) + 1;
    std::int64_t k = static_cast<std::int64_t>(idx / nq / nl) + 1;
    LinearSystem sys = build_problem_ii({static_cast<std::int64_t>(alpha),
                                         static_cast<std::int64_t>(delta),
                                         static_cast<std::int64_t>(j), k, l, q});
    SolveReport report = solve_report(sys.a, sys.b);
    SweepCell& cell = grid.cells[idx];
    cell = {k, l, q, report.solvable, restated_conditions_ii(alpha, delta, j, k, l, q),
            membership.count({k, l, q}) != 0, report.rank, report.rank_aug};
  });
  return grid;
}

std::string to_csv(const SweepGrid& grid) {
  bool two = grid.problem == "II";
  std::string out = two ? "k,l,q,oracle,restated,enumerated,rank,rank_aug\n"
                        : "k,l,oracle,restated,enumerated,rank,rank_aug\n";
  for (const auto& cell : grid.cells) {
    out += std::to_string(cell.k);
    out += ',';
    out += std::to_string(cell.l);
    out += ',';
    if (two) {
      out += std::to_string(cell.q);
      out += ',';
    }
    out += cell.oracle ? '1' : '0';
    out += ',';
    out += cell.restated ? '1' : '0';
    out += ',';
    out += cell.enumerated ? '1' : '0';
    out += ',';
    out += std::to_string(cell.rank);
    out += ',';
    out += std::to_string(cell.rank_aug);
    out += '\n';
  }
  return out;
}

Json to_json(const SweepGrid& grid) {
  bool two = grid.problem == "II";
  Json out = Json::object();
  out.add("problem", grid.problem);
  if (two) {
    out.add("alpha", grid.alpha);
    out.add("delta", grid.delta);
  }
  out.add("m", grid.m);
  out.add("j", grid.j);
  out.add("kmax", grid.bounds.kmax);
  out.add("lmax", grid.bounds.lmax);
  if (two) out.add("qmax", grid.bounds.qmax);
  Json cells = Json::array();
  for (const auto& cell : grid.cells) {
    Json item = Json::object();
    item.add("k", cell.k);
    item.add("l", cell.l);
    if (two) item.add("q", cell.q);
    item.add("oracle", cell.oracle);
    item.add("restated", cell.restated);
    item.add("enumerated", cell.enumerated);
    item.add("rank", static_cast<std::uint64_t>(cell.rank));
    item.add("rank_aug", static_cast<std::uint64_t>(cell.rank_aug));
    cells.push(std::move(item));
  }
  out.add("cells", std::move(cells));
  return out;
}

ValidationReport cross_validate_i(std::uint64_t m, std::uint64_t j,
                                  const ValidationOptions& opts) {
  const auto& b = opts.bounds;
  if (b.kmax < 1 || b.lmax < 1)
    throw std::invalid_argument("cross_validate_i: bounds must be positive");
  ValidationReport report;
  report.problem = "I";
  report.m = m;
  report.j = j;
  report.bounds = b;
  report.discrepancy_cap = opts.max_discrepancies_per_class;
  report.audit = audit_structure_facts(m);

  auto membership = index_candidates(enumerate_problem_i(m, j, b));

  std::size_t nl = static_cast<std::size_t>(b.lmax);
  std::size_t n = static_cast<std::size_t>(b.kmax) * nl;
  report.points = n;
  std::vector<std::uint8_t> oracle_bits(n), restated_bits(n);
  parallel_for(n, opts.threads, [&](std::size_t idx) {
    std::int64_t k = static_cast<std::int64_t>(idx / nl) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx % nl) + 1;
    oracle_bits[idx] = oracle_solvable_i(m, j, k, l) ? 1 : 0;
    restated_bits[idx] = restated_conditions_i(m, j, k, l) ? 1 : 0;
  });

  DiscrepancyCollector collector{opts.max_discrepancies_per_class, {}, {}};
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::int64_t k = static_cast<std::int64_t>(idx / nl) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx % nl) + 1;
    bool oracle = oracle_bits[idx] != 0;
    bool restated = restated_bits[idx] != 0;
    auto hit = membership.find({k, l, 0});
    bool enumerated = hit != membership.end();
    tally(report.restated_classes, oracle, restated);
    tally(report.enumerated_classes, oracle, enumerated);
    if (oracle != restated || oracle != enumerated) {
      Discrepancy d{k, l, 0, oracle, restated, enumerated, {}};
      if (enumerated) d.subcases = hit->second;
      collector.consider(d);
    }
  }
  report.discrepancies = std::move(collector.out);
  return report;
}

ValidationReport cross_validate_ii(std::uint64_t alpha, std::uint64_t delta, std::uint64_t j,
                                   const ValidationOptions& opts) {
  const auto& b = opts.bounds;
  if (b.kmax < 1 || b.lmax < 1 || b.qmax < 1)
    throw std::invalid_argument("cross_validate_ii: bounds must be positive");
  ValidationReport report;
  report.problem = "II";
  report.alpha = alpha;
  report.delta = delta;
  report.m = alpha + delta;
  report.j = j;
  report.bounds = b;
  report.discrepancy_cap = opts.max_discrepancies_per_class;
  report.audit = audit_structure_facts(report.m);

  auto membership = index_candidates(enumerate_problem_ii(alpha, delta, j, b));

  std::size_t nk = static_cast<std::size_t>(b.kmax);
  std::size_t nl = static_cast<std::size_t>(b.lmax);
  std::size_t nq = static_cast<std::size_t>(b.qmax);
  std::size_t n = nk * nl * nq;
  report.points = n;
  std::vector<std::uint8_t> oracle_bits(n), restated_bits(n);
  parallel_for(n, opts.threads, [&](std::size_t idx) {
    std::int64_t q = static_cast<std::int64_t>(idx % nq) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx / nq % nl) + 1;
    std::int64_t k = static_cast<std::int64_t>(idx / nq / nl) + 1;
    oracle_bits[idx] = oracle_solvable_ii(alpha, delta, j, k, l, q) ? 1 : 0;
    restated_bits[idx] = restated_conditions_ii(alpha, delta, j, k, l, q) ? 1 : 0;
  });

  DiscrepancyCollector collector{opts.max_discrepancies_per_class, {}, {}};
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::int64_t q = static_cast<std::int64_t>(idx % nq) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx / nq % nl) + 1;
    std::int64_t k = static_cast<std::int64_t>(idx / nq / nl) + 1;
    bool oracle = oracle_bits[idx] != 0;
    bool restated = restated_bits[idx] != 0;
    auto hit = membership.find({k, l, q});
    bool enumerated = hit != membership.end();
    tally(report.restated_classes, oracle, restated);
    tally(report.enumerated_classes, oracle, enumerated);
    if (oracle != restated || oracle != enumerated) {
      Discrepancy d{k, l, q, oracle, restated, enumerated, {}};
      if (enumerated) d.subcases = hit->second;
      collector.consider(d);
    }
  }
  report.discrepancies = std::move(collector.out);

  // Closed-form shortcut check runs per (k, l); the condition ignores q.
  std::size_t nstar = nk * nl;
  std::vector<std::uint8_t> direct_bits(nstar), closed_bits(nstar);
  parallel_for(nstar, opts.threads, [&](std::size_t idx) {
    std::int64_t k = static_cast<std::int64_t>(idx / nl) + 1;
    std::int64_t l = static_cast<std::int64_t>(idx % nl) + 1;
    direct_bits[idx] = condition_star(alpha, delta, j, k, l) ? 1 : 0;
    closed_bits[idx] = condition_star_closed_form(alpha, delta, j, k, l) ? 1 : 0;
  });
  report.star.checked = nstar;
  for (std::size_t idx = 0; idx < nstar; ++idx) {
    if (direct_bits[idx] == closed_bits[idx]) continue;
    ++report.star.disagreements;
    if (report.star.samples.size() < opts.max_discrepancies_per_class) {
      std::int64_t k = static_cast<std::int64_t>(idx / nl) + 1;
      std::int64_t l = static_cast<std::int64_t>(idx % nl) + 1;
      report.star.samples.push_back({k, l, direct_bits[idx] != 0, closed_bits[idx] != 0});
    }
  }
  return report;
}

AuditSummary audit_all(std::uint64_t mmax, unsigned threads) {
  if (mmax < 1) throw std::invalid_argument("audit_all: mmax must be positive");
  AuditSummary summary;
  summary.mmax = mmax;
  std::vector<StructureAuditReport> reports(mmax);
  std::vector<std::uint8_t> scan_ok(mmax);
  parallel_for(static_cast<std::size_t>(mmax), threads, [&](std::size_t idx) {
    std::uint64_t m = static_cast<std::uint64_t>(idx) + 1;
    reports[idx] = audit_structure_facts(m);
    std::vector<std::uint64_t> scanned;
    for (std::uint64_t n = 0; n <= m; ++n)
      if (binom_parity(m, n)) scanned.push_back(n + 1);
    scan_ok[idx] = odd_positions(m).positions() == scanned ? 1 : 0;
  });
  for (std::uint64_t m = 1; m <= mmax; ++m)
    summary.total_odd_positions += std::uint64_t{1} << __builtin_popcountll(m);
  for (std::size_t idx = 0; idx < reports.size(); ++idx) {
    const auto& r = reports[idx];
    if (!scan_ok[idx]) {
      ++summary.index_scan_mismatches;
      if (summary.samples.size() < summary.sample_cap)
        summary.samples.push_back({r.m, 0, "odd-position index disagrees with direct row scan"});
    }
    const std::pair<int, const FactCheck*> facts[] = {
        {1, &r.fact1}, {2, &r.fact2}, {3, &r.fact3}};
    for (const auto& [id, check] : facts) {
      if (check->pass) {
        if (id == 1) ++summary.fact1_pass;
        else if (id == 2) ++summary.fact2_pass;
        else ++summary.fact3_pass;
        continue;
      }
      if (id == 1) ++summary.fact1_violations;
      else if (id == 2) ++summary.fact2_violations;
      else ++summary.fact3_violations;
      if (summary.samples.size() < summary.sample_cap)
        summary.samples.push_back({r.m, id, check->counterexample});
    }
  }
  return summary;
}

Json to_json(const SolveReport& report) {
  Json out = Json::object();
  out.add("solvable", report.solvable);
  if (report.x) {
    Json x = Json::array();
    for (std::size_t i = 0; i < report.x->size(); ++i)
      x.push(static_cast<std::int64_t>(report.x->get(i) ? 1 : 0));
    out.add("x", std::move(x));
  }
  out.add("rank", static_cast<std::uint64_t>(report.rank));
  out.add("rank_aug", static_cast<std::uint64_t>(report.rank_aug));
  return out;
}

namespace {

Json fact_json(const FactCheck& check) {
  Json out = Json::object();
  out.add("pass", check.pass);
  if (!check.pass) out.add("counterexample", check.counterexample);
  return out;
}

Json classes_json(const ClassCounts& counts) {
  Json out = Json::object();
  out.add("both_yes", counts.both_yes);
  out.add("both_no", counts.both_no);
  out.add("oracle_only", counts.oracle_only);
  out.add("paper_only", counts.paper_only);
  return out;
}

}  // namespace

Json to_json(const StructureAuditReport& report) {
  Json out = Json::object();
  out.add("m", report.m);
  out.add("fact1", fact_json(report.fact1));
  out.add("fact2", fact_json(report.fact2));
  out.add("fact3", fact_json(report.fact3));
  return out;
}

Json to_json(const ValidationReport& report) {
  bool two = report.problem == "II";
  Json instance = Json::object();
  instance.add("problem", report.problem);
  if (two) {
    instance.add("alpha", report.alpha);
    instance.add("delta", report.delta);
  }
  instance.add("m", report.m);
  instance.add("j", report.j);
  instance.add("version", kVersion);

  Json bounds = Json::object();
  bounds.add("kmax", report.bounds.kmax);
  bounds.add("lmax", report.bounds.lmax);
  if (two) bounds.add("qmax", report.bounds.qmax);

  Json classes = Json::object();
  classes.add("restated", classes_json(report.restated_classes));
  classes.add("enumerated", classes_json(report.enumerated_classes));

  Json discrepancies = Json::array();
  for (const auto& d : report.discrepancies) {
    Json item = Json::object();
    item.add("k", d.k);
    item.add("l", d.l);
    item.add("q", d.q);
    item.add("oracle", d.oracle);
    item.add("restated", d.restated);
    item.add("enumerated", d.enumerated);
    Json tags = Json::array();
    for (const auto& tag : d.subcases) tags.push(tag);
    item.add("subcases", std::move(tags));
    discrepancies.push(std::move(item));
  }

  Json out = Json::object();
  out.add("instance", std::move(instance));
  out.add("bounds", std::move(bounds));
  out.add("points", report.points);
  out.add("classes", std::move(classes));
  out.add("discrepancy_cap", static_cast<std::uint64_t>(report.discrepancy_cap));
  out.add("discrepancies", std::move(discrepancies));
  if (two) {
    Json samples = Json::array();
    for (const auto& s : report.star.samples) {
      Json item = Json::object();
      item.add("k", s.k);
      item.add("l", s.l);
      item.add("direct", s.direct);
      item.add("closed", s.closed);
      samples.push(std::move(item));
    }
    Json star = Json::object();
    star.add("checked", report.star.checked);
    star.add("disagreements", report.star.disagreements);
    star.add("samples", std::move(samples));
    out.add("star_closed_form", std::move(star));
  }
  out.add("audit", to_json(report.audit));
  return out;
}

Json to_json(const AuditSummary& summary) {
  Json samples = Json::array();
  for (const auto& s : summary.samples) {
    Json item = Json::object();
    item.add("m", s.m);
    item.add("fact", static_cast<std::int64_t>(s.fact));
    item.add("detail", s.detail);
    samples.push(std::move(item));
  }
  Json out = Json::object();
  out.add("mmax", summary.mmax);
  Json facts = Json::object();
  const std::pair<const char*, std::pair<std::uint64_t, std::uint64_t>> rows[] = {
      {"fact1", {summary.fact1_pass, summary.fact1_violations}},
      {"fact2", {summary.fact2_pass, summary.fact2_violations}},
      {"fact3", {summary.fact3_pass, summary.fact3_violations}},
  };
  for (const auto& [name, counts] : rows) {
    Json fact = Json::object();
    fact.add("pass", counts.first);
    fact.add("fail", counts.second);
    facts.add(name, std::move(fact));
  }
  out.add("facts", std::move(facts));
  out.add("index_scan_mismatches", summary.index_scan_mismatches);
  out.add("total_odd_positions", summary.total_odd_positions);
  out.add("sample_cap", static_cast<std::uint64_t>(summary.sample_cap));
  out.add("samples", std::move(samples));
  return out;
}

Json to_json(const CandidateSolution& candidate, bool with_q) {
  Json out = Json::object();
  out.add("k", candidate.k);
  out.add("l", candidate.l);
  if (with_q) out.add("q", candidate.q);
  out.add("subcase", to_string(candidate.subcase));
  Json choices = Json::object();
  for (const auto& [key, val] : candidate.choices) choices.add(key, val);
  out.add("choices", std::move(choices));
  return out;
}

Json to_json(const std::vector<CandidateSolution>& candidates, bool with_q) {
  Json out = Json::array();
  for (const auto& c : candidates) out.push(to_json(c, with_q));
  return out;
}

}  // namespace binomrank
