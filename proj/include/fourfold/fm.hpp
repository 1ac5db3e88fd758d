#pragma once

#include "fourfold/numeric.hpp"

namespace fourfold::fm {

// Fourier-Mukai partner count for a very general member of the
// discriminant-d family, isomorphism classes counted including the
// fourfold itself.
struct FmCount {
    Int d;
    unsigned two_exponent = 0;   // a in d = 2^a p_1 ... p_k
    unsigned odd_prime_count = 0;  // k, distinct odd primes
    Int m;
    Int count;
    bool operator==(const FmCount&) const = default;
};

// Requires d >= 8, d ≡ 0 or 2 (mod 6), 9 ∤ d, and squarefree odd part;
// otherwise Error("not-applicable") naming the failed hypothesis.
// m = 1 when k = 0, 2^(k-1) when a = 1, 2^k when a >= 2;
// count = m when d ≡ 2 (6), m/2 when d ≡ 0 (6).
FmCount fm_partner_count(const Int& d);

}  // namespace fourfold::fm
