#include "fourfold/towers.hpp"

namespace fourfold::towers {

std::optional<TowerEntry> tower_for(const Int& n) {
    if (n < 2) throw Error("domain", "n must be at least 2");
    Int t = n * n + n + 1;
    if (t % 3 != 0) return std::nullopt;
    Int d = t / 3;
    Int gprime = d + 1;
    auto s = exact_sqrt(4 * (gprime - 2) + 1);
    if (!s) return std::nullopt;
    Int m = (*s - 1) / 2;  // 4(g'-2)+1 is odd, so s is odd and m exact
    if (m < 2) return std::nullopt;
    TowerEntry entry;
    entry.n = n;
    entry.g = t + 1;
    entry.deg6d = 2 * t;
    entry.d = d;
    entry.gprime = gprime;
    entry.m = m;
    entry.divisor_pair = {2 * t, 2 * d};
    return entry;
}

std::vector<TowerEntry> enumerate_towers(const Int& n_max) {
    if (n_max < 2) throw Error("domain", "n_max must be at least 2");
    std::vector<TowerEntry> out;
    for (Int n = 2; n <= n_max; ++n)
        if (auto e = tower_for(n)) out.push_back(std::move(*e));
    return out;
}

}  // namespace fourfold::towers
