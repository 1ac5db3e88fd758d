#pragma once

#include "fourfold/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fourfold::towers {

// Arithmetic data of an order-3 symplectic quotient step: a polarized K3
// of genus g and degree 6d descends to a quotient of genus g' and degree
// 2d, pairing the discriminant-6d and discriminant-2d families.
struct TowerEntry {
    Int n;       // >= 2, n ≡ 1 (mod 3)
    Int g;       // n^2 + n + 2
    Int deg6d;   // 2g - 2 = 2n^2 + 2n + 2
    Int d;       // deg6d / 6
    Int gprime;  // d + 1 = (n^2+n+1)/3 + 1
    Int m;       // >= 2, m^2 + m + 2 = gprime
    std::pair<Int, Int> divisor_pair;  // (6d, 2d)
    bool operator==(const TowerEntry&) const = default;
};

// Present iff 3 | n^2+n+1 and gprime - 2 = m^2 + m has an integer root
// m >= 2 (solved exactly via the integer square root of 4(gprime-2)+1).
// Error("domain") for n < 2.
std::optional<TowerEntry> tower_for(const Int& n);

// All entries for 2 <= n <= n_max, ascending. Error("domain") n_max < 2.
std::vector<TowerEntry> enumerate_towers(const Int& n_max);

}  // namespace fourfold::towers
