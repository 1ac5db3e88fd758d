#pragma once

#include "fourfold/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fourfold::divisors {

// Prime factorization with ascending primes; value 1 has an empty pair list.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> pairs;
    Int value;
};

// Obstruction tokens, first failure in the fixed order
// too-small / not-0-2-mod-6 / div-by-4 / div-by-9 / odd-prime-<p>.
struct StarResult {
    bool ok = false;
    std::optional<std::string> obstruction;
};

struct BullesWitness {
    Int f, g, n;  // d = f^2 g and g | 2n^2+2n+2
    bool operator==(const BullesWitness&) const = default;
};

struct FanoWitness {
    Int n, a;  // d a^2 = 2n^2+2n+2, n >= 2, a >= 1
    bool operator==(const FanoWitness&) const = default;
};

struct DivisorReport {
    Int d;
    bool is_divisor = false;
    bool star = false;
    std::optional<std::string> star_failure;
    std::optional<BullesWitness> bulles;
    std::optional<FanoWitness> fano1;
    bool fano2 = false;
    std::optional<Int> fm_count;
    bool operator==(const DivisorReport&) const = default;
};

inline constexpr long default_fano_cap = 10000;

// Trial division. Error("domain") for v < 1.
Factorization factorize(const Int& v);

// d > 6 and d ≡ 0 or 2 (mod 6).
bool is_hassett_divisor(const Int& d);

// d > 6, d ≡ 0,2 (6), 4 ∤ d, 9 ∤ d, and no odd prime p ≡ 2 (mod 3)
// divides d. On failure the obstruction token names the first failed
// check; the odd-prime token carries the smallest such prime.
StarResult satisfies_star(const Int& d);

// Smallest n in [0, g) with 2n^2+2n+2 ≡ 0 (mod g); the residues are
// periodic mod g so the bounded search is complete. Error("domain") g < 1.
std::optional<Int> solve_congruence(const Int& g);

// Witness (f, g, n) with smallest f >= 1 such that d = f^2 g and the
// congruence is solvable for g; n is the smallest solution for that g.
std::optional<BullesWitness> satisfies_bulles(const Int& d);

// Lexicographically smallest (n, a), n in [2, n_cap], with
// d a^2 = 2n^2+2n+2. Absence only means no witness at or below the cap.
std::optional<FanoWitness> fano_condition_one(const Int& d, const Int& n_cap = default_fano_cap);

// d even and d/2 a perfect square.
bool fano_condition_two(const Int& d);

// Full per-discriminant report. The divisor-conditioned predicates
// (bulles, fano, fm count) are only evaluated when d is a Hassett
// discriminant; the fm count is absent when the counting proposition's
// hypotheses fail. Error("domain") for d < 1.
DivisorReport classify(const Int& d, const Int& fano_cap = default_fano_cap);

}  // namespace fourfold::divisors
