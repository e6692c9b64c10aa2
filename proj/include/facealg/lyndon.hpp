#pragma once

// Lyndon words, Lyndon factorization and type, and necklaces on three kinds
// of beads: letters, partitions and tuples of partitions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "facealg/combinatorics.hpp"

namespace facealg {

  // Words on {1, 2, ...} share the Composition type.
  using Word = Composition;

  bool              is_lyndon(Word const& w);
  // Duval's algorithm. Factors are Lyndon and weakly decreasing.
  std::vector<Word> duval_factorization(Word const& w);
  // Sorted sizes (letter sums) of the Lyndon factors.
  Partition         lyndon_type(Composition const& alpha);
  // Lyndon words with letter sum <= max_size, by size then lexicographic.
  std::vector<Word> lyndon_words_up_to(int max_size);

  // A tuple bead: a fixed-length sequence of partitions.
  using PartitionTuple = std::vector<Partition>;

  // Total order on beads. Letters by value; partitions by size, then in
  // enumeration order (larger lexicographically first); tuples
  // lexicographically in the partition order.
  std::strong_ordering compare_beads(int a, int b);
  std::strong_ordering compare_beads(Partition const& a, Partition const& b);
  std::strong_ordering compare_beads(PartitionTuple const& a, PartitionTuple const& b);

  // Cyclic word stored as its minimal rotation under compare_beads.
  template <typename Bead>
  class Necklace {
   public:
    Necklace() = default;
    explicit Necklace(std::vector<Bead> word) : _beads(std::move(word)) {
      if (_beads.empty()) {
        throw std::invalid_argument("necklaces are nonempty");
      }
      std::rotate(_beads.begin(),
                  _beads.begin() + static_cast<std::ptrdiff_t>(least_rotation(_beads)),
                  _beads.end());
    }

    std::vector<Bead> const& beads() const noexcept {
      return _beads;
    }
    std::size_t size() const noexcept {
      return _beads.size();
    }
    // Smallest d such that the word is a power of its first d beads.
    std::size_t period() const {
      std::size_t const k = _beads.size();
      for (std::size_t d = 1; d < k; ++d) {
        if (k % d != 0) {
          continue;
        }
        bool repeats = true;
        for (std::size_t i = d; i < k && repeats; ++i) {
          repeats = compare_beads(_beads[i], _beads[i - d]) == 0;
        }
        if (repeats) {
          return d;
        }
      }
      return k;
    }
    bool is_primitive() const {
      return period() == _beads.size();
    }

    bool operator==(Necklace const& other) const {
      return compare(other) == 0;
    }
    bool operator<(Necklace const& other) const {
      return compare(other) < 0;
    }

    // Start of the lexicographically least rotation (two-pointer scan,
    // linear time).
    static std::size_t least_rotation(std::vector<Bead> const& w) {
      std::size_t const n = w.size();
      std::size_t       i = 0, j = 1, k = 0;
      while (i < n && j < n && k < n) {
        auto const c = compare_beads(w[(i + k) % n], w[(j + k) % n]);
        if (c == 0) {
          ++k;
          continue;
        }
        if (c > 0) {
          i += k + 1;
        } else {
          j += k + 1;
        }
        if (i == j) {
          ++j;
        }
        k = 0;
      }
      return std::min(i, j);
    }

   private:
    std::strong_ordering compare(Necklace const& other) const {
      std::size_t const m = std::min(_beads.size(), other._beads.size());
      for (std::size_t i = 0; i < m; ++i) {
        if (auto c = compare_beads(_beads[i], other._beads[i]); c != 0) {
          return c;
        }
      }
      return _beads.size() <=> other._beads.size();
    }

    std::vector<Bead> _beads;
  };

  using LetterNecklace    = Necklace<int>;
  using PartitionNecklace = Necklace<Partition>;
  using TupleNecklace     = Necklace<PartitionTuple>;

  // (w, i) with w Lyndon and w^i the minimal representative word.
  std::pair<Word, int> f_map(LetterNecklace const& eta);

  // Monomial z_{l(nu(1))} x_{nu(1)} z_{l(nu(2))} x_{nu(2)} ... as the
  // multiset of z subscripts and the multiset of x subscripts.
  struct Evaluation {
    Partition z;
    Partition x;
    bool      operator==(Evaluation const&) const = default;
  };
  Evaluation eval(PartitionNecklace const& eta);
  Evaluation eval(TupleNecklace const& tau);

  // z(eta) = [l(nu(1)), ..., l(nu(k))].
  LetterNecklace z_necklace(PartitionNecklace const& eta);

  // Rotate eta so its z-subscripts read w^m, w the Lyndon word of f(z(eta)),
  // then group consecutive runs of |w| beads. Throws std::invalid_argument
  // unless eta is primitive.
  TupleNecklace psi(PartitionNecklace const& eta);
  // Concatenates the tuples. Throws std::invalid_argument unless tau is
  // primitive and the lengths in every tuple spell one Lyndon word.
  PartitionNecklace theta(TupleNecklace const& tau);

  // Primitive necklaces whose letters have multiplicities content[0],
  // content[1], ... (letter i + 1 used content[i] times).
  std::vector<LetterNecklace> primitive_necklaces_with_content(Partition const& content);
  // Primitive partition-bead necklaces with sum of |nu(i)| <= max_total.
  std::vector<PartitionNecklace> primitive_partition_necklaces(int max_total);

}  // namespace facealg
