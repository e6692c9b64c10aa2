#pragma once

// Index objects shared by every other module: integer partitions,
// compositions, set partitions of [n] and permutations of [n].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "facealg/rational.hpp"

namespace facealg {

  // Default largest n for which set partitions of [n] are enumerated.
  inline constexpr int kDefaultSetPartitionCap = 8;

  // Weakly decreasing sequence of positive integers. The empty partition is
  // allowed and denotes the partition of 0.
  class Partition {
   public:
    Partition() = default;
    // Throws std::invalid_argument unless `parts` is weakly decreasing and
    // positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // Sorts `parts` into a partition; parts must be positive.
    static Partition from_unsorted(std::vector<int> parts);
    // (k, k, ..., k) with `copies` parts.
    static Partition rectangle(int part, int copies);

    std::vector<int> const& parts() const noexcept {
      return _parts;
    }
    int size() const noexcept {
      return _size;
    }
    int length() const noexcept {
      return static_cast<int>(_parts.size());
    }
    bool empty() const noexcept {
      return _parts.empty();
    }
    int operator[](std::size_t i) const {
      return _parts[i];
    }
    auto begin() const noexcept {
      return _parts.begin();
    }
    auto end() const noexcept {
      return _parts.end();
    }
    // Number of parts equal to `part`.
    int multiplicity(int part) const;
    // Multiset union of the parts.
    Partition operator+(Partition const& other) const;
    // Every part multiplied by `factor`.
    Partition scaled(int factor) const;

    // Compact label: "211" when every part is a single digit, else "10,2".
    std::string label() const;

    bool operator==(Partition const&) const = default;
    // Lexicographic on the parts, so "reverse lexicographic" enumeration is
    // descending order.
    std::strong_ordering operator<=>(Partition const& other) const {
      return _parts <=> other._parts;
    }

   private:
    std::vector<int> _parts;
    int              _size = 0;
  };

  // Finite sequence of positive integers. Also used for words on the
  // alphabet {1, 2, ...}.
  class Composition {
   public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    std::vector<int> const& parts() const noexcept {
      return _parts;
    }
    int size() const noexcept {
      return _size;
    }
    int length() const noexcept {
      return static_cast<int>(_parts.size());
    }
    bool empty() const noexcept {
      return _parts.empty();
    }
    int operator[](std::size_t i) const {
      return _parts[i];
    }
    auto begin() const noexcept {
      return _parts.begin();
    }
    auto end() const noexcept {
      return _parts.end();
    }
    Partition sorted() const {
      return Partition::from_unsorted(_parts);
    }
    // Concatenation of `times` copies.
    Composition power(int times) const;
    Composition operator+(Composition const& other) const;
    std::string label() const;

    bool operator==(Composition const&) const = default;
    std::strong_ordering operator<=>(Composition const& other) const {
      return _parts <=> other._parts;
    }

   private:
    std::vector<int> _parts;
    int              _size = 0;
  };

  // Unordered set partition of {1..n}. Canonical form: blocks sorted by their
  // minimum element, elements ascending within each block. Stored as the
  // restricted growth string (block index of each element), so equality is
  // structural.
  class SetPartition {
   public:
    SetPartition() = default;
    // Throws std::invalid_argument unless the blocks are disjoint, nonempty
    // and cover {1..n}.
    SetPartition(int n, std::vector<std::vector<int>> const& blocks);
    // Canonicalizes arbitrary block labels: elements i and j share a block
    // iff labels[i] == labels[j].
    static SetPartition from_labels(std::vector<int> const& labels);

    int degree() const noexcept {
      return static_cast<int>(_rgs.size());
    }
    int block_count() const noexcept {
      return _blocks;
    }
    // 0-based block index of element i (1-based).
    int block_of(int i) const {
      return _rgs[i - 1];
    }
    std::vector<std::uint8_t> const& rgs() const noexcept {
      return _rgs;
    }
    std::vector<std::vector<int>> blocks() const;
    std::string label() const;

    bool operator==(SetPartition const&) const = default;
    std::strong_ordering operator<=>(SetPartition const& other) const {
      return _rgs <=> other._rgs;
    }

   private:
    std::vector<std::uint8_t> _rgs;
    int                       _blocks = 0;
  };

  // Permutation of {1..n} in one-line notation.
  class Permutation {
   public:
    Permutation() = default;
    // Throws std::invalid_argument unless `images` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    // Longest element n, n-1, ..., 1.
    static Permutation reversal(int n);
    // Adjacent transposition (i, i+1).
    static Permutation adjacent_transposition(int n, int i);
    // A permutation with the given cycle type, cycles on consecutive integers.
    static Permutation with_cycle_type(Partition const& type);

    int degree() const noexcept {
      return static_cast<int>(_images.size());
    }
    int operator()(int i) const {
      return _images[i - 1];
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }
    Permutation inverse() const;
    // (this * other)(i) = this(other(i)).
    Permutation operator*(Permutation const& other) const;
    // Right descent set {i : pi(i) > pi(i + 1)}.
    std::vector<int> descent_set() const;
    int              sign() const;

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<int> _images;
  };

  struct ConjugacyClass {
    Partition   type;
    Integer     size;
    Permutation representative;
  };

  Integer factorial(int n);
  // z_rho = prod_i i^{m_i} m_i!; n! / z_rho is the class size.
  Integer z_coefficient(Partition const& rho);

  // All partitions of n, reverse lexicographic ([4, 31, 22, 211, 1111]).
  std::vector<Partition> partitions_of(int n);
  // All compositions of n, lexicographic.
  std::vector<Composition> compositions_of(int n);

  // Partial sums of nu weakly exceed those of mu. Throws on size mismatch.
  bool dominates(Partition const& nu, Partition const& mu);
  // The parts of mu can be grouped into blocks whose sums are the parts of
  // lambda. Throws on size mismatch.
  bool refines(Partition const& mu, Partition const& lambda);

  // Distinct orderings of the parts of mu, lexicographic.
  std::vector<Composition> compositions_rearranging_to(Partition const& mu);
  // l(mu)! / prod_i m_i(mu)!.
  Integer count_compositions_rearranging_to(Partition const& mu);

  // Restricted growth string order. Throws std::out_of_range when n > cap.
  std::vector<SetPartition> set_partitions_of(int n,
                                              int cap = kDefaultSetPartitionCap);
  Partition    block_size_type(SetPartition const& x);
  SetPartition meet(SetPartition const& x, SetPartition const& y);
  // Every block of x lies inside a block of y.
  bool         leq(SetPartition const& x, SetPartition const& y);
  SetPartition act(Permutation const& pi, SetPartition const& x);
  // The single-block partition, maximum of the lattice.
  SetPartition top_set_partition(int n);

  Partition                   cycle_type(Permutation const& pi);
  std::vector<Permutation>    all_permutations(int n);
  // One entry per cycle type, in partitions_of order.
  std::vector<ConjugacyClass> conjugacy_class_data(int n);

}  // namespace facealg
