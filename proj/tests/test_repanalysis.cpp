#include <catch2/catch_amalgamated.hpp>

#include "facealg/characters.hpp"
#include "facealg/repanalysis.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace facealg;

TEST_CASE("projected characters at n = 4") {
  CHECK(projected_character(4, {4}, {2, 1, 1}) == s({4}) + s({3, 1}) * Rational(2) + s({2, 2}) + s({2, 1, 1}));
  CHECK(projected_character(4, {2, 2}, {2, 1, 1}) == s({3, 1}) + s({2, 1, 1}));
  CHECK(projected_character(4, {2, 1, 1}, {2, 1, 1}) == s({4}) + s({3, 1}) + s({2, 2}));
  CHECK(projected_character(4, {1, 1, 1, 1}, {1, 1, 1, 1}) == s({4}));
}

TEST_CASE("projected spaces: vanishing, dimensions, routes") {
  for (int n = 1; n <= 4; ++n) {
    Integer total = 0;
    for (auto const& lambda : partitions_of(n)) {
      for (auto const& mu : partitions_of(n)) {
        auto const space = projected_space(n, lambda, mu);
        CHECK(space.rank >= 0);
        CHECK(Integer(space.rank) == space.dimension);
        if (!refines(mu, lambda)) {
          CHECK(space.dimension == 0);
        }
        total += space.dimension;

        AnalysisOptions full;
        full.route       = Route::full;
        auto const other = projected_space(n, lambda, mu, full);
        CHECK(other.traces == space.traces);
        CHECK(Integer(other.rank) == other.dimension);
      }
    }
    CHECK(total == oracle::ordered_bell(n));
    CHECK(projected_space(n, {n}, {n}).dimension == 1);
  }
  CHECK(projected_space(2, {1, 1}, {1, 1}).traces.size() == 2);
  CHECK(projected_character(2, {1, 1}, {1, 1}) == higher_lie({1, 1}));
  CHECK(projected_character(2, {2}, {1, 1}) == higher_lie({2}));
}

TEST_CASE("character of CF_n E_mu") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(ch_of_right_module(n, {n}) == h(n));
    CHECK(ch_of_right_module(n, Partition::rectangle(1, n)) == p(Partition::rectangle(1, n)));
  }
  CHECK(ch_of_right_module(4, {2, 1, 1}) == h_of(Partition{2, 1, 1}) * Rational(3));
  // Above rank_check_up_to the diagonal is read off fiber sums.
  AnalysisOptions fast;
  fast.rank_check_up_to = 0;
  CHECK(ch_of_right_module(5, {3, 2}, fast) == h_of(Partition{3, 2}) * Rational(2));
}

TEST_CASE("isotypic dimensions") {
  CHECK(isotypic_dimension(4, {3, 1}, {2, 1, 1}) == 18);
  for (int n = 1; n <= 4; ++n) {
    CHECK(isotypic_dimension(n, Partition::rectangle(1, n), Partition::rectangle(1, n)) == 1);
    for (auto const& nu : partitions_of(n)) {
      for (auto const& mu : partitions_of(n)) {
        Integer const d = isotypic_dimension(n, nu, mu);
        CHECK(d == dimension(nu) * count_compositions_rearranging_to(mu)
                       * oracle::kostka(nu.parts(), mu.parts()));
        if (!dominates(nu, mu)) {
          CHECK(d == 0);
        }
      }
    }
  }
}

TEST_CASE("the n = 4 table") {
  auto const table = golden::n4_table();
  for (auto const& nu : partitions_of(4)) {
    for (auto const& mu : partitions_of(4)) {
      auto const it = table.find({nu, mu});
      for (auto const& lambda : partitions_of(4)) {
        int expected = 0;
        if (it != table.end() && it->second.count(lambda)) {
          expected = it->second.at(lambda);
        }
        INFO("nu = " << nu.label() << ", mu = " << mu.label() << ", lambda = " << lambda.label());
        CHECK(composition_multiplicity(4, nu, mu, lambda) == expected);
      }
    }
  }
  CHECK(composition_multiplicity(4, {3, 1}, {2, 1, 1}, {4}) == 6);
  CHECK(composition_multiplicity(4, {1, 1, 1, 1}, {1, 1, 1, 1}, {2, 2}) == 1);
}

TEST_CASE("sign isotypic label") {
  CHECK(sign_isotypic_type(1) == Partition{1});
  CHECK(sign_isotypic_type(2) == Partition{2});
  CHECK(sign_isotypic_type(3) == Partition{2, 1});
  CHECK(sign_isotypic_type(4) == Partition{2, 2});
  CHECK(sign_isotypic_type(5) == Partition{2, 2, 1});
  for (int n = 1; n <= 5; ++n) {
    CHECK(sign_isotypic_type(n) == cycle_type(Permutation::reversal(n)));
  }
}

TEST_CASE("analysis report") {
  auto const report = analyze(4, {4}, {2, 1, 1});
  CHECK(report.dimension == 1 + 2 * 3 + 2 + 3);
  CHECK(report.isotypic_dims.at({3, 1}) == 6);
  CHECK(report.isotypic_dims.at({4}) == 1);
  CHECK(report.multiplicities.size() == 4);
  for (auto const& m : report.multiplicities) {
    CHECK(m.lambda == Partition{4});
    CHECK(m.value == composition_multiplicity(4, m.nu, {2, 1, 1}, {4}));
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(projected_space(6, {6}, {6}), std::out_of_range);
  CHECK_THROWS_AS(projected_space(4, {3}, {4}), std::invalid_argument);
  CHECK_THROWS_AS(isotypic_dimension(4, {3}, {4}), std::invalid_argument);
  AnalysisOptions threaded;
  threaded.jobs = 4;
  CHECK(projected_character(3, {2, 1}, {1, 1, 1}, threaded) == projected_character(3, {2, 1}, {1, 1, 1}));
}
