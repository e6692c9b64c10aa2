#pragma once

// Dense scratch vector over a face basis, reporting its nonzero entries.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "facealg/face.hpp"
#include "facealg/rational.hpp"

namespace facealg::detail {

  // (face index, coefficient), sorted by index.
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;

  class Accumulator {
   public:
    explicit Accumulator(std::size_t size) : _acc(size), _seen(size, false) {}

    void add(std::size_t i, Rational const& c) {
      if (!_seen[i]) {
        _seen[i] = true;
        _touched.push_back(i);
      }
      _acc[i] += c;
    }

    // Nonzero entries; leaves the accumulator empty.
    Sparse take() {
      Sparse out;
      for (std::size_t i : _touched) {
        _seen[i] = false;
        if (_acc[i] != 0) {
          out.emplace_back(i, _acc[i]);
          _acc[i] = 0;
        }
      }
      _touched.clear();
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      return out;
    }

   private:
    std::vector<Rational>    _acc;
    std::vector<bool>        _seen;
    std::vector<std::size_t> _touched;
  };

  inline Sparse to_sparse(FaceBasis const& basis, FaceAlgebraElement const& x) {
    Sparse out;
    out.reserve(x.size());
    for (auto const& [f, c] : x.terms()) {
      out.emplace_back(basis.index(f), c);
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    return out;
  }

  inline FaceAlgebraElement from_sparse(FaceBasis const& basis, Sparse const& v) {
    FaceAlgebraElement out(basis.degree());
    for (auto const& [i, c] : v) {
      out.add_term(basis.face(i), c);
    }
    return out;
  }

  inline Rational lookup(Sparse const& v, std::size_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](auto const& e, std::size_t k) {
      return e.first < k;
    });
    return it != v.end() && it->first == i ? it->second : Rational(0);
  }

}  // namespace facealg::detail
