#include <catch2/catch_amalgamated.hpp>

#include "facealg/combinatorics.hpp"
#include "oracles.hpp"

using namespace facealg;

TEST_CASE("partitions_of enumerates in reverse lexicographic order") {
  REQUIRE(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(0).front().label() == "()");
  REQUIRE(partitions_of(4)
          == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions_of(8).size() == 22);
  for (int n = 0; n <= 14; ++n) {
    auto const parts = partitions_of(n);
    CHECK(static_cast<std::int64_t>(parts.size()) == oracle::partition_count(n));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].size() == n);
      CHECK(parts[i].parts() == oracle::partitions(n)[i]);
    }
  }
}

TEST_CASE("partition construction validates parts") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition::rectangle(2, 3) == Partition{2, 2, 2});
  CHECK(Partition{3, 1}.scaled(2) == Partition{6, 2});
  CHECK((Partition{3, 1} + Partition{2}) == Partition{3, 2, 1});
  CHECK(Partition{12, 1}.label() == "12,1");
}

TEST_CASE("dominance") {
  CHECK(dominates({4}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK(dominates({2, 1, 1}, {2, 1, 1}));
  CHECK_THROWS_AS(dominates({3}, {2, 1, 1}), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    auto const parts = partitions_of(n);
    for (auto const& a : parts) {
      CHECK(dominates({n}, a));
      CHECK(dominates(a, Partition::rectangle(1, n)));
      for (auto const& b : parts) {
        if (a != b && dominates(a, b)) {
          CHECK_FALSE(dominates(b, a));
        }
        for (auto const& c : parts) {
          if (dominates(a, b) && dominates(b, c)) {
            CHECK(dominates(a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("refinement of partitions") {
  CHECK(refines({2, 1, 1}, {3, 1}));
  CHECK_FALSE(refines({3, 1}, {2, 2}));
  CHECK(refines({2, 2, 1, 1}, {3, 3}));
  CHECK_THROWS_AS(refines({2}, {1}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    auto const parts = partitions_of(n);
    for (auto const& lambda : parts) {
      CHECK(refines(Partition::rectangle(1, n), lambda));
      CHECK(refines(lambda, lambda));
      for (auto const& mu : parts) {
        CHECK(refines(mu, lambda) == oracle::refines(mu.parts(), lambda.parts()));
      }
    }
  }
  for (auto const& a : partitions_of(6)) {
    for (auto const& b : partitions_of(6)) {
      for (auto const& c : partitions_of(6)) {
        if (refines(a, b) && refines(b, c)) {
          CHECK(refines(a, c));
        }
      }
    }
  }
}

TEST_CASE("compositions rearranging to a partition") {
  auto const c = compositions_rearranging_to({2, 1, 1});
  REQUIRE(c.size() == 3);
  CHECK(std::find(c.begin(), c.end(), Composition{2, 1, 1}) != c.end());
  CHECK(std::find(c.begin(), c.end(), Composition{1, 2, 1}) != c.end());
  CHECK(std::find(c.begin(), c.end(), Composition{1, 1, 2}) != c.end());
  CHECK(compositions_rearranging_to({5}) == std::vector<Composition>{{5}});
  CHECK(compositions_rearranging_to({2, 2}) == std::vector<Composition>{{2, 2}});
  for (int n = 1; n <= 8; ++n) {
    std::size_t total = 0;
    for (auto const& mu : partitions_of(n)) {
      auto const list = compositions_rearranging_to(mu);
      CHECK(Integer(list.size()) == count_compositions_rearranging_to(mu));
      for (auto const& alpha : list) {
        CHECK(alpha.sorted() == mu);
      }
      total += list.size();
    }
    CHECK(total == compositions_of(n).size());
    CHECK(compositions_of(n).size() == (std::size_t{1} << (n - 1)));
  }
}

TEST_CASE("set partitions, meet and order") {
  CHECK(set_partitions_of(3).size() == 5);
  for (int n = 1; n <= 8; ++n) {
    CHECK(static_cast<std::int64_t>(set_partitions_of(n).size()) == oracle::bell(n));
  }
  CHECK_THROWS_AS(set_partitions_of(9), std::out_of_range);

  SetPartition const x(7, {{1, 5}, {2, 3, 6}, {4}, {7}});
  CHECK(block_size_type(x) == Partition{3, 2, 1, 1});
  CHECK(x.label() == "{15,236,4,7}");
  CHECK(meet(x, x) == x);
  CHECK(leq(x, top_set_partition(7)));

  auto const all = set_partitions_of(4);
  for (auto const& a : all) {
    for (auto const& b : all) {
      auto const m = meet(a, b);
      CHECK(m == meet(b, a));
      CHECK(leq(m, a));
      CHECK(leq(m, b));
      for (auto const& c : all) {
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        if (leq(c, a) && leq(c, b)) {
          CHECK(leq(c, m));
        }
      }
    }
  }
  for (auto const& pi : all_permutations(4)) {
    for (auto const& a : all) {
      CHECK(block_size_type(act(pi, a)) == block_size_type(a));
    }
  }
}

TEST_CASE("permutations and conjugacy classes") {
  CHECK(cycle_type(Permutation::identity(4)) == Partition{1, 1, 1, 1});
  auto const s3 = conjugacy_class_data(3);
  REQUIRE(s3.size() == 3);
  std::map<Partition, Integer> sizes;
  for (auto const& c : s3) {
    sizes[c.type] = c.size;
  }
  CHECK(sizes.at({1, 1, 1}) == 1);
  CHECK(sizes.at({2, 1}) == 3);
  CHECK(sizes.at({3}) == 2);
  CHECK(conjugacy_class_data(5).size() == 7);

  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (auto const& c : conjugacy_class_data(n)) {
      CHECK(cycle_type(c.representative) == c.type);
      CHECK(c.size * z_coefficient(c.type) == factorial(n));
      total += c.size;
    }
    CHECK(total == factorial(n));
  }
  for (int n = 1; n <= 6; ++n) {
    std::map<Partition, Integer> counted;
    for (auto const& p : oracle::permutations(n)) {
      counted[Partition(oracle::cycle_type(p))] += 1;
    }
    for (auto const& c : conjugacy_class_data(n)) {
      CHECK(counted.at(c.type) == c.size);
    }
  }

  Permutation const a({2, 3, 1});
  Permutation const b({2, 1, 3});
  CHECK((a * b)(1) == a(b(1)));
  CHECK(a * a.inverse() == Permutation::identity(3));
  CHECK(Permutation::reversal(4).descent_set() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::adjacent_transposition(4, 2).sign() == -1);
}
