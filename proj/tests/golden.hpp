#pragma once

// Frozen reference values shared by the unit tests and the acceptance suite.

#include <map>
#include <utility>

#include "facealg/combinatorics.hpp"

namespace golden {

  using facealg::Partition;
  using Cell = std::map<Partition, int>;

  // n = 4: cell (nu, mu) lists lambda with [(CF_4 E_mu)^nu : M_lambda].
  // Cells not listed are empty.
  inline std::map<std::pair<Partition, Partition>, Cell> n4_table() {
    Partition const p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};
    return {
        {{p1111, p1111}, {{p22, 1}}},
        {{p211, p211}, {{p4, 3}, {p31, 3}, {p22, 3}}},
        {{p211, p1111}, {{p4, 3}, {p31, 3}, {p211, 3}}},
        {{p22, p22}, {{p22, 2}}},
        {{p22, p211}, {{p4, 2}, {p31, 2}, {p211, 2}}},
        {{p22, p1111}, {{p31, 2}, {p22, 2}}},
        {{p31, p31}, {{p4, 3}, {p31, 3}}},
        {{p31, p22}, {{p4, 3}}},
        {{p31, p211}, {{p4, 6}, {p31, 6}, {p22, 3}, {p211, 3}}},
        {{p31, p1111}, {{p4, 3}, {p31, 3}, {p211, 3}}},
        {{p4, p4}, {{p4, 1}}},
        {{p4, p31}, {{p4, 1}, {p31, 1}}},
        {{p4, p22}, {{p22, 1}}},
        {{p4, p211}, {{p4, 1}, {p31, 1}, {p211, 1}}},
        {{p4, p1111}, {{p1111, 1}}},
    };
  }

  // Schur expansion of the z_211 coefficient at n = 4, by y index.
  inline std::map<Partition, char const*> n4_z211() {
    return {
        {Partition{2, 2}, "s[3,1] + s[2,1,1]"},
        {Partition{2, 1, 1}, "s[4] + s[3,1] + s[2,2]"},
        {Partition{3, 1}, "s[4] + 2*s[3,1] + s[2,2] + s[2,1,1]"},
        {Partition{4}, "s[4] + 2*s[3,1] + s[2,2] + s[2,1,1]"},
    };
  }

}  // namespace golden
