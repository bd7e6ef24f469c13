#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "binomrank/characterization.hpp"
#include "binomrank/parity.hpp"

using namespace binomrank;

namespace {

CandidateSolution cand(std::int64_t k, std::int64_t l, std::int64_t q, Subcase s,
                       std::vector<std::pair<std::string, std::int64_t>> choices = {}) {
  return CandidateSolution{k, l, q, s, std::move(choices)};
}

}  // namespace

TEST_CASE("restated conditions on pinned instances") {
  CHECK(restated_conditions_i(4, 0, 1, 1));
  CHECK(restated_conditions_i(4, 0, 2, 1));
  CHECK(!restated_conditions_i(4, 0, 1, 3));
  CHECK(!restated_conditions_i(4, 0, 3, 1));
  CHECK(!restated_conditions_i(2, 0, 1, 1));
  CHECK(!restated_conditions_i(1, 0, 1, 1));
}

TEST_CASE("restated conditions reject bad parameters") {
  CHECK_THROWS_AS(restated_conditions_i(0, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(restated_conditions_i(2, -1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(restated_conditions_i(2, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(restated_conditions_i(2, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("enumeration pinned sets") {
  EnumerationBounds b;
  CHECK(enumerate_problem_i(4, 0, b) ==
        std::vector<CandidateSolution>{cand(1, 1, 0, Subcase::i_b_either),
                                       cand(1, 2, 0, Subcase::i_b_either),
                                       cand(2, 1, 0, Subcase::i_b_either)});
  CHECK(enumerate_problem_i(3, 0, b).empty());
  CHECK(enumerate_problem_i(2, 0, b).empty());
  CHECK(enumerate_problem_i(4, 1, b).empty());
  CHECK(enumerate_problem_i(5, 2, b) ==
        std::vector<CandidateSolution>{
            cand(2, 1, 0, Subcase::ii_c_main, {{"i0", 3}, {"s", 1}}),
            cand(2, 2, 0, Subcase::ii_c_main, {{"i0", 3}, {"s", 1}})});
}

TEST_CASE("case routing matches the parity of the pivotal entry") {
  EnumerationBounds b;
  // C(4,0) is odd: case I applies, case II refuses.
  CHECK_NOTHROW(enumerate_case_i(4, 0, b));
  CHECK_THROWS_AS(enumerate_case_ii(4, 0, b), std::invalid_argument);
  // C(5,2) is even: the other way round.
  CHECK_NOTHROW(enumerate_case_ii(5, 2, b));
  CHECK_THROWS_AS(enumerate_case_i(5, 2, b), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_problem_i(4, -1, b), std::invalid_argument);
}

TEST_CASE("enumeration respects the bounds") {
  CHECK(enumerate_problem_i(4, 0, {1, 16, 8}) ==
        std::vector<CandidateSolution>{cand(1, 1, 0, Subcase::i_b_either),
                                       cand(1, 2, 0, Subcase::i_b_either)});
  CHECK(enumerate_problem_i(4, 0, {16, 1, 8}) ==
        std::vector<CandidateSolution>{cand(1, 1, 0, Subcase::i_b_either),
                                       cand(2, 1, 0, Subcase::i_b_either)});
}

TEST_CASE("enumeration output is sorted, unique, and in bounds") {
  EnumerationBounds b{5, 5, 8};
  for (std::uint64_t m = 1; m <= 24; ++m) {
    for (std::int64_t j = 0; j <= static_cast<std::int64_t>(m) + 2; ++j) {
      auto out = enumerate_problem_i(m, j, b);
      for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out[i].k >= 1);
        CHECK(out[i].k <= b.kmax);
        CHECK(out[i].l >= 1);
        CHECK(out[i].l <= b.lmax);
        CHECK(out[i].q == 0);
        if (i > 0) CHECK(candidate_less(out[i - 1], out[i]));
      }
    }
  }
}

TEST_CASE("subcase names") {
  CHECK(std::string(to_string(Subcase::i_a)) == "I.a");
  CHECK(std::string(to_string(Subcase::i_b_either)) == "I.b.either");
  CHECK(std::string(to_string(Subcase::i_b_or)) == "I.b.or");
  CHECK(std::string(to_string(Subcase::ii_a_either)) == "II.a.either");
  CHECK(std::string(to_string(Subcase::ii_a_or)) == "II.a.or");
  CHECK(std::string(to_string(Subcase::ii_b)) == "II.b");
  CHECK(std::string(to_string(Subcase::ii_c_main)) == "II.c.main");
  CHECK(std::string(to_string(Subcase::ii_c_nontrivial_i)) == "II.c.nontrivial.i");
  CHECK(std::string(to_string(Subcase::ii_c_nontrivial_ii)) == "II.c.nontrivial.ii");
  CHECK(std::string(to_string(Subcase::ii_c_nontrivial_iii)) == "II.c.nontrivial.iii");
}

TEST_CASE("string sum parity pinned values and validation") {
  CHECK(string_sum_parity(2, 0, 1, 1, 1));
  CHECK(string_sum_parity(4, 0, 3, 1, 1));
  CHECK_THROWS_AS(string_sum_parity(2, 0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(string_sum_parity(2, -1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(string_sum_parity(2, 0, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(string_sum_parity(2, 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("string sum parity agrees with the prefix decomposition") {
  for (std::uint64_t z = 1; z <= 64; ++z)
    for (std::int64_t j = 0; j <= 4; ++j)
      for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t l = 1; l <= 3; ++l)
          for (std::int64_t a = 1; a <= 4; ++a) {
            bool split = prefix_sum_parity(z, static_cast<std::uint64_t>(j + k + l + a + 1)) !=
                         prefix_sum_parity(z, static_cast<std::uint64_t>(j + l + a));
            CHECK(string_sum_parity(z, j, k, l, a) == split);
          }
}

TEST_CASE("first split condition and its closed form") {
  CHECK(!condition_star(1, 1, 0, 1, 1));
  CHECK(condition_star_closed_form(1, 1, 0, 1, 1));
  CHECK(!condition_star(2, 2, 0, 1, 1));
  CHECK(!condition_star_closed_form(2, 2, 0, 1, 1));
  CHECK_THROWS_AS(condition_star(0, 1, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(condition_star(1, 0, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("higher split condition is vacuous at depth one and monotone in q") {
  CHECK(condition_double_star(1, 1, 0, 1, 1, 1));
  CHECK(condition_double_star(1, 1, 0, 1, 1, 2));
  CHECK_THROWS_AS(condition_double_star(1, 1, 0, 1, 1, 0), std::invalid_argument);
  for (std::int64_t alpha = 1; alpha <= 4; ++alpha)
    for (std::int64_t delta = 1; delta <= 4; ++delta)
      for (std::int64_t j = 0; j <= 3; ++j)
        for (std::int64_t k = 1; k <= 3; ++k)
          for (std::int64_t l = 1; l <= 3; ++l) {
            CHECK(condition_double_star(alpha, delta, j, k, l, 1));
            for (std::int64_t q = 1; q <= 4; ++q)
              if (condition_double_star(alpha, delta, j, k, l, q + 1))
                CHECK(condition_double_star(alpha, delta, j, k, l, q));
          }
}

TEST_CASE("split restated conditions pinned values") {
  CHECK(restated_conditions_ii(1, 1, 2, 1, 1, 1));
  CHECK(!restated_conditions_ii(1, 1, 0, 1, 1, 1));
  CHECK(!restated_conditions_ii(1, 1, 1, 1, 1, 1));
}

TEST_CASE("split restated conditions compose the pieces") {
  for (std::int64_t alpha = 1; alpha <= 3; ++alpha)
    for (std::int64_t delta = 1; delta <= 3; ++delta)
      for (std::int64_t j = 0; j <= 3; ++j)
        for (std::int64_t k = 1; k <= 3; ++k)
          for (std::int64_t l = 1; l <= 3; ++l)
            for (std::int64_t q = 1; q <= 3; ++q) {
              bool expect =
                  restated_conditions_i(static_cast<std::uint64_t>(alpha + delta), j, k, l) &&
                  condition_star(alpha, delta, j, k, l) &&
                  condition_double_star(alpha, delta, j, k, l, q);
              CHECK(restated_conditions_ii(alpha, delta, j, k, l, q) == expect);
            }
}

TEST_CASE("split enumeration pinned sets") {
  EnumerationBounds b{16, 16, 3};
  auto out = enumerate_problem_ii(1, 1, 2, b);
  for (std::int64_t q = 1; q <= 3; ++q) {
    auto want = cand(1, 1, q, Subcase::i_b_either);
    CHECK(std::find(out.begin(), out.end(), want) != out.end());
  }
  CHECK(enumerate_problem_ii(1, 1, 0, b).empty());
}

TEST_CASE("split enumeration crosses base candidates with valid depths") {
  EnumerationBounds b{4, 4, 3};
  for (std::int64_t alpha = 1; alpha <= 4; ++alpha)
    for (std::int64_t delta = 1; delta <= 4; ++delta)
      for (std::int64_t j = 0; j <= 4; ++j) {
        auto base = enumerate_problem_i(static_cast<std::uint64_t>(alpha + delta), j, b);
        auto out = enumerate_problem_ii(alpha, delta, j, b);
        std::size_t expected = 0;
        for (const auto& c : base) {
          if (!condition_star(alpha, delta, j, c.k, c.l)) continue;
          for (std::int64_t q = 1; q <= b.qmax; ++q) {
            if (!condition_double_star(alpha, delta, j, c.k, c.l, q)) break;
            ++expected;
            auto want = c;
            want.q = q;
            CHECK(std::find(out.begin(), out.end(), want) != out.end());
          }
        }
        CHECK(out.size() == expected);
        for (std::size_t i = 1; i < out.size(); ++i) CHECK(candidate_less(out[i - 1], out[i]));
      }
}
