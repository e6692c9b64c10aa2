#pragma once

// Face monoid of the braid arrangement: ordered set partitions of {1..n}
// under the Tits product, and the face algebra over the rationals.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "facealg/combinatorics.hpp"
#include "facealg/rational.hpp"

namespace facealg {

  inline constexpr int kDefaultFaceCap = 6;
  // The packed encoding below holds at most 8 elements.
  inline constexpr int kMaxFaceDegree = 8;

  // Ordered set partition of {1..n}. Packed: 4 bits per element holding its
  // block index. Ordering is by degree, then block count, then lexicographic
  // on the block sequence (each block an ascending sequence).
  class Face {
   public:
    Face() = default;
    // Throws std::invalid_argument unless the blocks are disjoint, nonempty
    // and cover {1..n}.
    Face(int n, std::vector<std::vector<int>> const& blocks);
    // labels[i] is the block position of element i + 1; must take every
    // value in 0..k-1.
    static Face from_labels(std::vector<int> const& labels);
    // The one-block face (12...n), identity of the monoid.
    static Face identity(int n);

    int degree() const noexcept {
      return _n;
    }
    int block_count() const noexcept {
      return _k;
    }
    // 0-based block position of element i (1-based).
    int block_of(int i) const noexcept {
      return static_cast<int>((_code >> (4 * (i - 1))) & 0xF);
    }
    std::uint32_t code() const noexcept {
      return _code;
    }
    std::vector<std::vector<int>> blocks() const;
    // Block sizes in order.
    Composition composition() const;
    // "(4,15,7,236)".
    std::string label() const;

    bool operator==(Face const& other) const noexcept {
      return _n == other._n && _code == other._code;
    }
    std::strong_ordering operator<=>(Face const& other) const noexcept {
      if (auto c = _n <=> other._n; c != 0) {
        return c;
      }
      if (auto c = _k <=> other._k; c != 0) {
        return c;
      }
      return _lex <=> other._lex;
    }

   private:
    void finish();

    std::uint32_t _code = 0;
    std::uint64_t _lex  = 0;
    std::uint8_t  _n    = 0;
    std::uint8_t  _k    = 0;
  };

  struct FaceHash {
    std::size_t operator()(Face const& f) const noexcept {
      return std::hash<std::uint64_t>{}(
          (static_cast<std::uint64_t>(f.degree()) << 32) | f.code());
    }
  };

  Face         tits_product(Face const& f, Face const& g);
  SetPartition support(Face const& f);
  Face         act(Permutation const& pi, Face const& f);
  // Throws std::out_of_range when n > cap.
  std::vector<Face> enumerate_faces(int n, int cap = kDefaultFaceCap);
  // Faces with the given support, blocks of x in every order.
  std::vector<Face> faces_with_support(SetPartition const& x);

  // Sparse rational combination of faces of one degree. Zero coefficients
  // are never stored.
  class FaceAlgebraElement {
   public:
    using Terms = std::map<Face, Rational>;

    FaceAlgebraElement() = default;
    explicit FaceAlgebraElement(int n) : _n(n) {}
    FaceAlgebraElement(Face const& f, Rational c = 1);
    static FaceAlgebraElement identity(int n) {
      return FaceAlgebraElement(Face::identity(n));
    }

    int degree() const noexcept {
      return _n;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    std::size_t size() const noexcept {
      return _terms.size();
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    Rational coefficient(Face const& f) const;
    // Adds c * f in place.
    void add_term(Face const& f, Rational const& c);

    FaceAlgebraElement& operator+=(FaceAlgebraElement const& other);
    FaceAlgebraElement& operator-=(FaceAlgebraElement const& other);
    FaceAlgebraElement  operator+(FaceAlgebraElement const& other) const;
    FaceAlgebraElement  operator-(FaceAlgebraElement const& other) const;
    FaceAlgebraElement  operator*(Rational const& c) const;
    // Bilinear extension of the Tits product.
    FaceAlgebraElement operator*(FaceAlgebraElement const& other) const;

    bool operator==(FaceAlgebraElement const& other) const {
      return _n == other._n && _terms == other._terms;
    }

   private:
    void require_degree(int n) const;

    int   _n = 0;
    Terms _terms;
  };

  FaceAlgebraElement add(FaceAlgebraElement const& x,
                         FaceAlgebraElement const& y);
  FaceAlgebraElement scale(FaceAlgebraElement const& x, Rational const& c);
  FaceAlgebraElement multiply(FaceAlgebraElement const& x,
                              FaceAlgebraElement const& y);
  FaceAlgebraElement act_linear(Permutation const&        pi,
                                FaceAlgebraElement const& x);

  // Sum of the faces whose block sizes, in order, are the composition with
  // descent set J. J is a subset of {1..n-1}.
  FaceAlgebraElement bidigare_image(int n, std::vector<int> const& J);

  // Indexed face basis of one degree, for dense kernels. Index order is the
  // enumeration order.
  class FaceBasis {
   public:
    FaceBasis(int n, int cap = kDefaultFaceCap);

    int degree() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _faces.size();
    }
    Face const& face(std::size_t i) const {
      return _faces[i];
    }
    std::vector<Face> const& faces() const noexcept {
      return _faces;
    }
    std::size_t index(Face const& f) const;
    // Index of face(i) * face(j).
    std::size_t product(std::size_t i, std::size_t j) const {
      return index(tits_product(_faces[i], _faces[j]));
    }
    // Position of support(face(i)) in set_partitions_of(n).
    std::size_t support_index(std::size_t i) const {
      return _support[i];
    }
    std::vector<SetPartition> const& set_partitions() const noexcept {
      return _set_partitions;
    }

    std::vector<Rational> to_dense(FaceAlgebraElement const& x) const;
    FaceAlgebraElement    from_dense(std::vector<Rational> const& v) const;

   private:
    int                                          _n;
    std::vector<Face>                            _faces;
    std::vector<SetPartition>                    _set_partitions;
    std::vector<std::size_t>                     _support;
    std::unordered_map<std::uint32_t, std::size_t> _index;
  };

}  // namespace facealg
