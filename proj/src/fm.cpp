#include "fourfold/fm.hpp"

#include "fourfold/divisors.hpp"

namespace fourfold::fm {

FmCount fm_partner_count(const Int& d) {
    if (d < 8) throw Error("not-applicable", "d < 8");
    Int r = d % 6;
    if (r != 0 && r != 2) throw Error("not-applicable", "d not congruent to 0 or 2 mod 6");
    if (d % 9 == 0) throw Error("not-applicable", "d divisible by 9");

    FmCount out;
    out.d = d;
    for (const auto& [p, e] : divisors::factorize(d).pairs) {
        if (p == 2) {
            out.two_exponent = e;
        } else {
            if (e > 1) throw Error("not-applicable", "odd part not squarefree");
            ++out.odd_prime_count;
        }
    }
    // d ≡ 0,2 (6) forces d even, so two_exponent >= 1 here.
    if (out.odd_prime_count == 0)
        out.m = 1;
    else if (out.two_exponent == 1)
        out.m = Int(1) << (out.odd_prime_count - 1);
    else
        out.m = Int(1) << out.odd_prime_count;
    // d ≡ 0 (6) puts 3 among the odd primes, so m is even there and the
    // halved count stays integral.
    out.count = (r == 2) ? out.m : out.m / 2;
    return out;
}

}  // namespace fourfold::fm
