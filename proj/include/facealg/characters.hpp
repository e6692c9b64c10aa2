#pragma once

// Irreducible characters of S_n by the Murnaghan-Nakayama rule.

#include <map>
#include <utility>

#include "facealg/combinatorics.hpp"

namespace facealg {

  class CharacterTable {
   public:
    explicit CharacterTable(int n);

    int degree() const noexcept {
      return _n;
    }
    // chi^lambda(rho).
    Integer value(Partition const& lambda, Partition const& rho) const;
    std::map<std::pair<Partition, Partition>, Integer> const& values() const {
      return _values;
    }

   private:
    int                                                _n;
    std::map<std::pair<Partition, Partition>, Integer> _values;
  };

  // Memoized; safe to call from several threads. Throws on size mismatch.
  Integer character_value(Partition const& lambda, Partition const& rho);
  // Cached per n, built on first use under a lock.
  CharacterTable const& character_table(int n);
  // Hook-length formula.
  Integer dimension(Partition const& lambda);

}  // namespace facealg
