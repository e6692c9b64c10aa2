#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "facealg/lyndon.hpp"
#include "facealg/symfunc.hpp"
#include "oracles.hpp"

using namespace facealg;

namespace {
  // All words with letter sum <= max_size.
  std::vector<Word> all_words(int max_size) {
    std::vector<Word>        out;
    std::vector<int>         w;
    std::function<void(int)> extend = [&](int room) {
      if (!w.empty()) {
        out.emplace_back(w);
      }
      for (int a = 1; a <= room; ++a) {
        w.push_back(a);
        extend(room - a);
        w.pop_back();
      }
    };
    extend(max_size);
    return out;
  }
}  // namespace

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon({1, 1, 2}));
  CHECK(is_lyndon({1, 2, 1, 3}));
  CHECK_FALSE(is_lyndon({1, 2, 1, 2}));
  CHECK_FALSE(is_lyndon({2, 1}));
  CHECK(is_lyndon({4}));
  for (auto const& w : all_words(7)) {
    CHECK(is_lyndon(w) == oracle::is_lyndon(w.parts()));
  }
}

TEST_CASE("Duval factorization") {
  std::vector<Word> const expected{{2, 4, 3}, {1, 1, 2, 2, 2, 3}, {1, 1, 2}, {1}};
  CHECK(duval_factorization({2, 4, 3, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1}) == expected);
  CHECK(duval_factorization({1, 2, 1}) == std::vector<Word>{{1, 2}, {1}});
  CHECK(lyndon_type({1, 2, 1}) == Partition{3, 1});
  CHECK(lyndon_type({2, 4, 3, 1, 1, 2, 2, 2, 3, 1, 1, 2, 1}) == Partition{11, 9, 4, 1});
  CHECK(lyndon_type({3, 3}) == Partition{3, 3});
  CHECK(duval_factorization({}).empty());

  for (auto const& w : all_words(7)) {
    auto const        factors = duval_factorization(w);
    std::vector<int>  joined;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(is_lyndon(factors[i]));
      if (i > 0) {
        CHECK_FALSE(factors[i - 1].parts() < factors[i].parts());
      }
      joined.insert(joined.end(), factors[i].begin(), factors[i].end());
    }
    CHECK(joined == w.parts());
    CHECK(lyndon_type(w).size() == w.size());
  }
}

TEST_CASE("Lyndon words by size") {
  CHECK(lyndon_words_up_to(2) == std::vector<Word>{{1}, {2}});
  CHECK(lyndon_words_up_to(3) == std::vector<Word>{{1}, {2}, {1, 2}, {3}});
  CHECK(lyndon_words_up_to(4)
        == std::vector<Word>{{1}, {2}, {1, 2}, {3}, {1, 1, 2}, {1, 3}, {4}});
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> brute, listed;
    for (auto const& w : all_words(n)) {
      if (oracle::is_lyndon(w.parts())) {
        brute.insert(w.parts());
      }
    }
    auto const words = lyndon_words_up_to(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      listed.insert(words[i].parts());
      if (i > 0) {
        CHECK(words[i - 1].size() <= words[i].size());
      }
    }
    CHECK(listed == brute);
    CHECK(listed.size() == words.size());
  }
}

TEST_CASE("necklaces and the f map") {
  LetterNecklace const a({2, 1, 1, 2});
  LetterNecklace const b({1, 2, 2, 1});
  CHECK(a == b);
  CHECK(a.beads() == std::vector<int>{1, 1, 2, 2});
  CHECK(a.is_primitive());
  CHECK(LetterNecklace({1, 2, 1, 2}).period() == 2);
  CHECK_THROWS_AS(LetterNecklace(std::vector<int>{}), std::invalid_argument);

  LetterNecklace const eta({2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1});
  auto const [w, i] = f_map(eta);
  CHECK(w == Word{1, 1, 2, 2});
  CHECK(i == 3);

  for (auto const& word : all_words(6)) {
    LetterNecklace const n(word.parts());
    auto const [lw, power] = f_map(n);
    CHECK(is_lyndon(lw));
    std::vector<int> repeated;
    for (int k = 0; k < power; ++k) {
      repeated.insert(repeated.end(), lw.begin(), lw.end());
    }
    CHECK(LetterNecklace(repeated) == n);
    CHECK(repeated == n.beads());
  }
}

TEST_CASE("psi on the worked example") {
  Partition const x244{4, 4, 2}, x44{4, 4}, x23{3, 2}, x266{6, 6, 2}, x246{6, 4, 2};
  PartitionNecklace const eta({x244, x44, x23, x266, x44, x23, x246, x44, x23});
  TupleNecklace const     expected({{x44, x23, x266}, {x44, x23, x246}, {x44, x23, x244}});
  CHECK(z_necklace(eta) == LetterNecklace({3, 2, 2, 3, 2, 2, 3, 2, 2}));
  auto const tau = psi(eta);
  CHECK(tau == expected);
  CHECK(theta(tau) == eta);
  CHECK(eval(tau) == eval(eta));
  CHECK(eval(eta).z == Partition{3, 3, 3, 2, 2, 2, 2, 2, 2});
}

TEST_CASE("psi on a single bead") {
  PartitionNecklace const eta({Partition{2, 1}});
  auto const              tau = psi(eta);
  REQUIRE(tau.size() == 1);
  CHECK(tau.beads().front() == PartitionTuple{Partition{2, 1}});
  CHECK(theta(tau) == eta);
}

TEST_CASE("psi and theta are inverse") {
  auto const all = primitive_partition_necklaces(6);
  CHECK_FALSE(all.empty());
  for (auto const& eta : all) {
    int total = 0;
    for (auto const& nu : eta.beads()) {
      total += nu.size();
    }
    CHECK(total <= 6);
    auto const tau = psi(eta);
    CHECK(tau.is_primitive());
    CHECK(theta(tau) == eta);
    CHECK(eval(tau) == eval(eta));
    for (auto const& tuple : tau.beads()) {
      std::vector<int> lengths;
      for (auto const& nu : tuple) {
        lengths.push_back(nu.length());
      }
      CHECK(is_lyndon(Word(lengths)));
    }
  }
  PartitionNecklace const twice({Partition{1}, Partition{1}});
  CHECK_THROWS_AS(psi(twice), std::invalid_argument);
  TupleNecklace const bad({{Partition{1, 1}, Partition{1}}});
  CHECK_THROWS_AS(theta(bad), std::invalid_argument);
}

TEST_CASE("primitive necklaces by content") {
  for (int k = 1; k <= 7; ++k) {
    for (auto const& content : partitions_of(k)) {
      auto const found = primitive_necklaces_with_content(content);
      CHECK(static_cast<std::int64_t>(found.size()) == oracle::primitive_necklaces(content.parts()));
      if (k <= 6) {
        CHECK(Rational(static_cast<long>(found.size())) == monomial_coefficient(lie(k), content));
      }
      for (auto const& n : found) {
        CHECK(n.is_primitive());
        CHECK(static_cast<int>(n.size()) == k);
      }
    }
  }
}
