#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourfold/divisors.hpp"
#include "fourfold/fm.hpp"

using namespace fourfold;
using namespace fourfold::fm;

namespace {

// Straight-line reimplementation from a 64-bit factorization, used as the
// duplication oracle.
long long fm_oracle(long long d) {
    long long a = 0, k = 0;
    long long rest = d;
    while (rest % 2 == 0) {
        rest /= 2;
        ++a;
    }
    for (long long p = 3; p * p <= rest; p += 2) {
        if (rest % p) continue;
        ++k;
        rest /= p;
        if (rest % p == 0) return -1;  // non-squarefree odd part
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) ++k;
    long long m = (k == 0) ? 1 : (a == 1 ? 1LL << (k - 1) : 1LL << k);
    return d % 6 == 2 ? m : m / 2;
}

bool applicable(long long d) {
    if (d < 8 || (d % 6 != 0 && d % 6 != 2) || d % 9 == 0) return false;
    long long rest = d;
    while (rest % 2 == 0) rest /= 2;
    for (long long p = 3; p * p <= rest; p += 2)
        if (rest % (p * p) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("fm_partner_count: pinned counts") {
    FmCount c = fm_partner_count(20);
    CHECK(c.two_exponent == 2);
    CHECK(c.odd_prime_count == 1);
    CHECK(c.m == 2);
    CHECK(c.count == 2);

    c = fm_partner_count(42);
    CHECK(c.two_exponent == 1);
    CHECK(c.odd_prime_count == 2);
    CHECK(c.m == 2);
    CHECK(c.count == 1);

    c = fm_partner_count(12);
    CHECK(c.m == 2);
    CHECK(c.count == 1);

    c = fm_partner_count(546);
    CHECK(c.two_exponent == 1);
    CHECK(c.odd_prime_count == 3);
    CHECK(c.m == 4);
    CHECK(c.count == 2);

    c = fm_partner_count(8);  // pure power of two
    CHECK(c.odd_prime_count == 0);
    CHECK(c.m == 1);
    CHECK(c.count == 1);
}

TEST_CASE("fm_partner_count: hypothesis failures name the failed check") {
    CHECK_THROWS_WITH_AS(static_cast<void>(fm_partner_count(6)), doctest::Contains("d < 8"),
                         Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(fm_partner_count(16)),
                         doctest::Contains("congruent"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(fm_partner_count(18)),
                         doctest::Contains("divisible by 9"), Error);
    CHECK_THROWS_WITH_AS(static_cast<void>(fm_partner_count(50)),
                         doctest::Contains("odd part not squarefree"), Error);
    for (long long d : {6, 16, 18, 50}) {
        try {
            static_cast<void>(fm_partner_count(d));
            FAIL("expected not-applicable");
        } catch (const Error& e) {
            CHECK(e.kind() == "not-applicable");
        }
    }
}

TEST_CASE("fm_partner_count agrees with the duplication oracle") {
    for (long long d = 8; d <= 10000; ++d) {
        if (!applicable(d)) continue;
        FmCount c = fm_partner_count(d);
        CHECK(c.count == Int(fm_oracle(d)));
    }
}

TEST_CASE("fm invariants over the applicable range") {
    for (long long d = 8; d <= 10000; ++d) {
        if (!applicable(d)) continue;
        FmCount c = fm_partner_count(d);
        CHECK(c.count >= 1);
        // m is 1 or a power of two
        Int m = c.m;
        while (m % 2 == 0) m /= 2;
        CHECK(m == 1);
        CHECK((c.count == c.m || 2 * c.count == c.m));
        if (c.odd_prime_count == 0) CHECK(c.count == 1);
        if (d % 6 == 0) {
            CHECK(d % 3 == 0);  // 3 is among the odd primes
            CHECK(c.m % 2 == 0);  // no fractional halving anywhere
        }
    }
}

TEST_CASE("classify threads the count through only when applicable") {
    CHECK(divisors::classify(20).fm_count == Int(2));
    CHECK_FALSE(divisors::classify(50).fm_count.has_value());
    CHECK_FALSE(divisors::classify(36).fm_count.has_value());  // 9 | 36
}
