#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "facealg/characters.hpp"
#include "oracles.hpp"

using namespace facealg;

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 8; ++n) {
    for (auto const& rho : partitions_of(n)) {
      CHECK(character_value({n}, rho) == 1);
      int const sign = (n - rho.length()) % 2 == 0 ? 1 : -1;
      CHECK(character_value(Partition::rectangle(1, n), rho) == sign);
    }
  }
  CHECK(character_value({2, 1}, {3}) == -1);
  CHECK_THROWS_AS(character_value({2, 1}, {2}), std::invalid_argument);
}

TEST_CASE("dimensions by hook lengths") {
  CHECK(dimension({3, 1}) == 3);
  CHECK(dimension({5}) == 1);
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (auto const& lambda : partitions_of(n)) {
      Integer const f = dimension(lambda);
      CHECK(f == character_value(lambda, Partition::rectangle(1, n)));
      total += f * f;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("orthogonality relations") {
  for (int n = 1; n <= 8; ++n) {
    auto const& table = character_table(n);
    auto const  parts = partitions_of(n);
    for (auto const& rho : parts) {
      for (auto const& sigma : parts) {
        Integer column = 0;
        for (auto const& lambda : parts) {
          column += table.value(lambda, rho) * table.value(lambda, sigma);
        }
        CHECK(column == (rho == sigma ? z_coefficient(rho) : Integer(0)));
      }
    }
    for (auto const& a : parts) {
      for (auto const& b : parts) {
        Rational row = 0;
        for (auto const& rho : parts) {
          row += Rational(table.value(a, rho) * table.value(b, rho)) / Rational(z_coefficient(rho));
        }
        CHECK(row == (a == b ? 1 : 0));
      }
    }
  }
}

TEST_CASE("characters match permutation-module decomposition") {
  for (int n = 1; n <= 6; ++n) {
    auto const expected = oracle::character_table(n);
    for (auto const& [key, value] : expected) {
      CHECK(character_value(Partition(key.first), Partition(key.second)) == value);
    }
  }
}

TEST_CASE("character table cache is safe under concurrent first use") {
  std::vector<std::thread> threads;
  std::vector<Integer>     seen(6);
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] { seen[t] = character_table(9).value({5, 4}, {3, 3, 3}); });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (auto const& v : seen) {
    CHECK(v == seen.front());
  }
  CHECK(&character_table(9) == &character_table(9));
}
