#include "facealg/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace facealg {

  namespace {
    // Beta-set of lambda with exactly `beads` beads.
    std::vector<int> beta_set(std::vector<int> const& parts, int beads) {
      std::vector<int> out(beads);
      for (int i = 0; i < beads; ++i) {
        int part   = i < static_cast<int>(parts.size()) ? parts[i] : 0;
        out[i]     = part + beads - 1 - i;
      }
      return out;  // strictly decreasing
    }

    std::vector<int> from_beta_set(std::vector<int> beta) {
      std::sort(beta.begin(), beta.end(), std::greater<>());
      int const        beads = static_cast<int>(beta.size());
      std::vector<int> parts;
      for (int i = 0; i < beads; ++i) {
        int part = beta[i] - (beads - 1 - i);
        if (part > 0) {
          parts.push_back(part);
        }
      }
      return parts;
    }

    std::mutex                                          value_mutex;
    std::map<std::pair<Partition, Partition>, Integer>  value_cache;

    // Removes the first part of rho as a border strip in every possible way.
    Integer mn_recurse(Partition const& lambda, Partition const& rho) {
      if (rho.empty()) {
        return 1;
      }
      {
        std::lock_guard lock(value_mutex);
        auto            it = value_cache.find({lambda, rho});
        if (it != value_cache.end()) {
          return it->second;
        }
      }
      int const        r     = rho[0];
      Partition const  rest(std::vector<int>(rho.begin() + 1, rho.end()));
      int const        beads = lambda.length();
      auto const       beta  = beta_set(lambda.parts(), beads);
      Integer          total = 0;
      for (int i = 0; i < beads; ++i) {
        int const target = beta[i] - r;
        if (target < 0
            || std::find(beta.begin(), beta.end(), target) != beta.end()) {
          continue;
        }
        // Height of the strip: beads strictly between target and beta[i].
        int between = 0;
        for (int b : beta) {
          between += b > target && b < beta[i];
        }
        auto moved = beta;
        moved[i]   = target;
        Integer sub = mn_recurse(Partition(from_beta_set(moved)), rest);
        total += between % 2 == 0 ? sub : Integer(-sub);
      }
      std::lock_guard lock(value_mutex);
      value_cache.emplace(std::make_pair(lambda, rho), total);
      return total;
    }

    std::mutex                                        table_mutex;
    std::map<int, std::unique_ptr<CharacterTable>>    table_cache;
  }  // namespace

  Integer character_value(Partition const& lambda, Partition const& rho) {
    if (lambda.size() != rho.size()) {
      throw std::invalid_argument("character_value: size mismatch "
                                  + lambda.label() + " vs " + rho.label());
    }
    return mn_recurse(lambda, rho);
  }

  CharacterTable::CharacterTable(int n) : _n(n) {
    auto const parts = partitions_of(n);
    for (auto const& lambda : parts) {
      for (auto const& rho : parts) {
        _values.emplace(std::make_pair(lambda, rho), character_value(lambda, rho));
      }
    }
  }

  Integer CharacterTable::value(Partition const& lambda,
                                Partition const& rho) const {
    auto it = _values.find({lambda, rho});
    if (it == _values.end()) {
      throw std::invalid_argument("CharacterTable: index not of degree "
                                  + std::to_string(_n));
    }
    return it->second;
  }

  CharacterTable const& character_table(int n) {
    std::lock_guard lock(table_mutex);
    auto&           slot = table_cache[n];
    if (!slot) {
      slot = std::make_unique<CharacterTable>(n);
    }
    return *slot;
  }

  Integer dimension(Partition const& lambda) {
    std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda) {
      for (int j = 0; j < part; ++j) {
        ++conj[j];
      }
    }
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
      for (int j = 0; j < lambda[i]; ++j) {
        hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
      }
    }
    return factorial(lambda.size()) / hooks;
  }

}  // namespace facealg
