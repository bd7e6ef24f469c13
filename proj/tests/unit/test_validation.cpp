#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "binomrank/characterization.hpp"
#include "binomrank/json_writer.hpp"
#include "binomrank/validation.hpp"

using namespace binomrank;

TEST_CASE("json writer matches the wire format byte for byte") {
  Json report = Json::object();
  report.add("solvable", true);
  Json x = Json::array();
  x.push(0).push(1);
  report.add("x", std::move(x));
  report.add("rank", 2);
  report.add("rank_aug", 2);
  CHECK(report.dump() == "{\"solvable\": true, \"x\": [0,1], \"rank\": 2, \"rank_aug\": 2}");
}

TEST_CASE("json writer scalars and containers") {
  CHECK(Json().dump() == "null");
  CHECK(Json(nullptr).dump() == "null");
  CHECK(Json(false).dump() == "false");
  CHECK(Json(std::int64_t{-7}).dump() == "-7");
  CHECK(Json(std::uint64_t{18446744073709551615ull}).dump() == "18446744073709551615");
  CHECK(Json::object().dump() == "{}");
  CHECK(Json::array().dump() == "[]");
  Json arr = Json::array();
  arr.push(1).push(2).push(3);
  CHECK(arr.dump() == "[1,2,3]");
  Json nested = Json::object();
  nested.add("a", Json::array().push(Json::object().add("b", "c")));
  CHECK(nested.dump() == "{\"a\": [{\"b\": \"c\"}]}");
}

TEST_CASE("json writer escapes strings") {
  CHECK(Json("a\"b\\c\nd\te\rf").dump() == "\"a\\\"b\\\\c\\nd\\te\\rf\"");
  CHECK(Json(std::string("\x01", 1)).dump() == "\"\\u0001\"");
}

TEST_CASE("json writer rejects mismatched mutations") {
  Json arr = Json::array();
  CHECK_THROWS_AS(arr.add("k", 1), std::logic_error);
  Json obj = Json::object();
  CHECK_THROWS_AS(obj.push(1), std::logic_error);
}

TEST_CASE("solver verdicts on pinned instances") {
  CHECK(oracle_solvable_i(2, 0, 1, 1));
  CHECK(!oracle_solvable_i(2, 0, 1, 2));
  CHECK(oracle_solvable_i(1, 0, 1, 1));
  CHECK(!oracle_solvable_ii(1, 1, 0, 1, 1, 1));
  CHECK(oracle_solvable_ii(1, 1, 0, 2, 1, 1));
}

TEST_CASE("stacked solvability implies base solvability") {
  for (std::uint64_t alpha = 1; alpha <= 3; ++alpha)
    for (std::uint64_t delta = 1; delta <= 3; ++delta)
      for (std::uint64_t j = 0; j <= 3; ++j)
        for (std::int64_t k = 1; k <= 3; ++k)
          for (std::int64_t l = 1; l <= 3; ++l)
            for (std::int64_t q = 1; q <= 2; ++q)
              if (oracle_solvable_ii(alpha, delta, j, k, l, q))
                CHECK(oracle_solvable_i(alpha + delta, j, k, l));
}

TEST_CASE("sweep grid cells carry verdicts and ranks") {
  SweepGrid grid = sweep_i(2, 0, 2, 2);
  CHECK(grid.problem == "I");
  CHECK(grid.m == 2);
  CHECK(grid.cells.size() == 4);
  auto cell = [&](std::size_t i) { return grid.cells[i]; };
  // l fastest: (1,1), (1,2), (2,1), (2,2)
  CHECK(cell(0).k == 1);
  CHECK(cell(0).l == 1);
  CHECK(cell(0).oracle);
  CHECK(!cell(0).restated);
  CHECK(!cell(0).enumerated);
  CHECK(cell(0).rank == 2);
  CHECK(cell(0).rank_aug == 2);
  CHECK(!cell(1).oracle);
  CHECK(cell(1).rank == 2);
  CHECK(cell(1).rank_aug == 3);
  CHECK(cell(3).rank == 3);
  CHECK(cell(3).rank_aug == 3);
  CHECK(to_csv(grid) ==
        "k,l,oracle,restated,enumerated,rank,rank_aug\n"
        "1,1,1,0,0,2,2\n"
        "1,2,0,0,0,2,3\n"
        "2,1,1,0,0,2,2\n"
        "2,2,1,0,0,3,3\n");
}

TEST_CASE("sweep output does not depend on the thread count") {
  SweepGrid a = sweep_i(6, 1, 5, 5, 1);
  SweepGrid b = sweep_i(6, 1, 5, 5, 3);
  CHECK(to_csv(a) == to_csv(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  SweepGrid c = sweep_ii(2, 3, 1, 3, 3, 2, 1);
  SweepGrid d = sweep_ii(2, 3, 1, 3, 3, 2, 4);
  CHECK(to_csv(c) == to_csv(d));
}

TEST_CASE("sweep cells agree with pointwise recomputation") {
  SweepGrid grid = sweep_ii(2, 1, 1, 3, 3, 2);
  CHECK(grid.cells.size() == 18);
  auto cands = enumerate_problem_ii(2, 1, 1, grid.bounds);
  for (const SweepCell& cell : grid.cells) {
    CHECK(cell.oracle == oracle_solvable_ii(2, 1, 1, cell.k, cell.l, cell.q));
    CHECK(cell.restated == restated_conditions_ii(2, 1, 1, cell.k, cell.l, cell.q));
    bool member = std::any_of(cands.begin(), cands.end(), [&](const CandidateSolution& c) {
      return c.k == cell.k && c.l == cell.l && c.q == cell.q;
    });
    CHECK(cell.enumerated == member);
  }
}

TEST_CASE("cross validation pinned report") {
  ValidationOptions opts;
  opts.bounds = {2, 2, 8};
  ValidationReport rep = cross_validate_i(2, 0, opts);
  CHECK(rep.problem == "I");
  CHECK(rep.m == 2);
  CHECK(rep.j == 0);
  CHECK(rep.points == 4);
  CHECK(rep.restated_classes.both_yes == 0);
  CHECK(rep.restated_classes.both_no == 1);
  CHECK(rep.restated_classes.oracle_only == 3);
  CHECK(rep.restated_classes.paper_only == 0);
  CHECK(rep.enumerated_classes.oracle_only == 3);
  CHECK(rep.discrepancies.size() == 3);
  CHECK(rep.discrepancies[0].k == 1);
  CHECK(rep.discrepancies[0].l == 1);
  CHECK(rep.discrepancies[0].q == 0);
  CHECK(rep.discrepancies[0].oracle);
  CHECK(!rep.discrepancies[0].restated);
  CHECK(rep.discrepancies[0].subcases.empty());
  CHECK(rep.audit.m == 2);
  CHECK(rep.audit.fact1.pass);
}

TEST_CASE("cross validation classes sum to the grid size") {
  for (std::uint64_t m : {3ull, 5ull, 12ull}) {
    for (std::uint64_t j = 0; j <= 3; ++j) {
      ValidationOptions opts;
      opts.bounds = {4, 4, 8};
      ValidationReport rep = cross_validate_i(m, j, opts);
      for (const ClassCounts& c : {rep.restated_classes, rep.enumerated_classes})
        CHECK(c.both_yes + c.both_no + c.oracle_only + c.paper_only == rep.points);
    }
  }
}

TEST_CASE("every listed discrepancy reverifies in isolation") {
  ValidationOptions opts;
  opts.bounds = {5, 5, 8};
  ValidationReport rep = cross_validate_i(6, 2, opts);
  auto cands = enumerate_problem_i(6, 2, opts.bounds);
  for (const Discrepancy& d : rep.discrepancies) {
    CHECK(d.oracle == oracle_solvable_i(6, 2, d.k, d.l));
    CHECK(d.restated == restated_conditions_i(6, 2, d.k, d.l));
    bool member = std::any_of(cands.begin(), cands.end(), [&](const CandidateSolution& c) {
      return c.k == d.k && c.l == d.l;
    });
    CHECK(d.enumerated == member);
    CHECK((d.oracle != d.restated || d.oracle != d.enumerated));
  }
}

TEST_CASE("discrepancy list respects the per-bucket cap") {
  ValidationOptions opts;
  opts.bounds = {2, 2, 8};
  opts.max_discrepancies_per_class = 1;
  ValidationReport rep = cross_validate_i(2, 0, opts);
  CHECK(rep.discrepancy_cap == 1);
  CHECK(rep.restated_classes.oracle_only == 3);
  REQUIRE(rep.discrepancies.size() == 1);
  CHECK(rep.discrepancies[0].k == 1);
  CHECK(rep.discrepancies[0].l == 1);
}

TEST_CASE("cross validation json is identical across runs and thread counts") {
  ValidationOptions a;
  a.bounds = {6, 6, 8};
  a.threads = 1;
  ValidationOptions b = a;
  b.threads = 4;
  std::string first = to_json(cross_validate_i(9, 1, a)).dump();
  CHECK(first == to_json(cross_validate_i(9, 1, b)).dump());
  CHECK(first == to_json(cross_validate_i(9, 1, a)).dump());

  ValidationOptions c;
  c.bounds = {3, 3, 2};
  c.threads = 1;
  ValidationOptions d = c;
  d.threads = 4;
  std::string second = to_json(cross_validate_ii(2, 2, 1, c)).dump();
  CHECK(second == to_json(cross_validate_ii(2, 2, 1, d)).dump());
}

TEST_CASE("split cross validation reports the closed form comparison") {
  ValidationOptions opts;
  opts.bounds = {2, 2, 2};
  ValidationReport rep = cross_validate_ii(1, 1, 0, opts);
  CHECK(rep.problem == "II");
  CHECK(rep.alpha == 1);
  CHECK(rep.delta == 1);
  CHECK(rep.m == 2);
  CHECK(rep.points == 8);
  CHECK(rep.star.checked == 4);
  CHECK(rep.star.disagreements == 4);
  REQUIRE(!rep.star.samples.empty());
  CHECK(rep.star.samples[0].k == 1);
  CHECK(rep.star.samples[0].l == 1);
  CHECK(!rep.star.samples[0].direct);
  CHECK(rep.star.samples[0].closed);
  for (const StarSample& s : rep.star.samples) {
    CHECK(s.direct == condition_star(1, 1, 0, s.k, s.l));
    CHECK(s.closed == condition_star_closed_form(1, 1, 0, s.k, s.l));
    CHECK(s.direct != s.closed);
  }
  CHECK(rep.restated_classes.oracle_only == 4);
  CHECK(rep.enumerated_classes.oracle_only == 4);
}

TEST_CASE("structure audit summary over a range of moduli") {
  AuditSummary s = audit_all(64);
  CHECK(s.mmax == 64);
  CHECK(s.fact1_pass == 64);
  CHECK(s.fact1_violations == 0);
  CHECK(s.fact2_pass == 64);
  CHECK(s.fact2_violations == 0);
  CHECK(s.fact3_pass + s.fact3_violations == 64);
  CHECK(s.fact3_violations > 0);
  CHECK(s.index_scan_mismatches == 0);
  std::uint64_t expected_total = 0;
  for (std::uint64_t m = 1; m <= 64; ++m)
    expected_total += std::uint64_t{1} << std::popcount(m);
  CHECK(s.total_odd_positions == expected_total);
  CHECK(s.samples.size() == s.fact3_violations);
  for (const AuditViolation& v : s.samples) {
    CHECK(v.fact == 3);
    CHECK(v.m >= 1);
    CHECK(v.m <= 64);
    CHECK(!v.detail.empty());
    CHECK(!audit_structure_facts(v.m).fact3.pass);
  }
  AuditSummary threaded = audit_all(64, 4);
  CHECK(to_json(threaded).dump() == to_json(s).dump());
}

TEST_CASE("solve report json shapes") {
  LinearSystem sys = build_problem_i({2, 0, 1, 1});
  CHECK(to_json(solve_report(sys.a, sys.b)).dump() ==
        "{\"solvable\": true, \"x\": [0,1], \"rank\": 2, \"rank_aug\": 2}");
  LinearSystem bad = build_problem_i({2, 0, 1, 2});
  CHECK(to_json(solve_report(bad.a, bad.b)).dump() ==
        "{\"solvable\": false, \"rank\": 2, \"rank_aug\": 3}");
}

TEST_CASE("candidate json includes q only when asked") {
  CandidateSolution c{2, 1, 3, Subcase::ii_c_main, {{"i0", 3}, {"s", 1}}};
  CHECK(to_json(c, false).dump() ==
        "{\"k\": 2, \"l\": 1, \"subcase\": \"II.c.main\", \"choices\": {\"i0\": 3, \"s\": 1}}");
  CHECK(to_json(c, true).dump() ==
        "{\"k\": 2, \"l\": 1, \"q\": 3, \"subcase\": \"II.c.main\", "
        "\"choices\": {\"i0\": 3, \"s\": 1}}");
}
