#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourfold/divisors.hpp"

using namespace fourfold;
using namespace fourfold::divisors;

namespace {

// Brute-force oracle for the associated-K3 congruence: some n < d with
// d | 2n^2+2n+2. Plain 64-bit arithmetic, independent of the library.
bool congruence_oracle(long long d) {
    for (long long n = 0; n < d; ++n)
        if ((2 * n * n + 2 * n + 2) % d == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("factorize") {
    auto f = factorize(20);
    REQUIRE(f.pairs.size() == 2);
    CHECK(f.pairs[0] == std::pair<Int, unsigned>{2, 2});
    CHECK(f.pairs[1] == std::pair<Int, unsigned>{5, 1});

    f = factorize(546);
    REQUIRE(f.pairs.size() == 4);
    CHECK(f.pairs[0] == std::pair<Int, unsigned>{2, 1});
    CHECK(f.pairs[1] == std::pair<Int, unsigned>{3, 1});
    CHECK(f.pairs[2] == std::pair<Int, unsigned>{7, 1});
    CHECK(f.pairs[3] == std::pair<Int, unsigned>{13, 1});

    CHECK(factorize(1).pairs.empty());
    CHECK_THROWS_WITH_AS(static_cast<void>(factorize(0)), doctest::Contains("domain"), Error);
}

TEST_CASE("factorize reconstructs its input with prime ascending parts") {
    for (long long v = 1; v <= 3000; ++v) {
        auto f = factorize(v);
        Int prod = 1;
        Int last = 1;
        for (const auto& [p, e] : f.pairs) {
            CHECK(p > last);  // strictly ascending
            last = p;
            for (Int q = 2; q * q <= p; ++q) CHECK(p % q != 0);  // primality
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == v);
        CHECK(f.value == v);
    }
}

TEST_CASE("is_hassett_divisor") {
    CHECK(is_hassett_divisor(8));
    CHECK_FALSE(is_hassett_divisor(7));
    CHECK_FALSE(is_hassett_divisor(6));
    CHECK_FALSE(is_hassett_divisor(2));
    CHECK(is_hassett_divisor(12));
    CHECK(is_hassett_divisor(14));
    CHECK_FALSE(is_hassett_divisor(-6));
}

TEST_CASE("satisfies_star: pinned cases and obstruction order") {
    CHECK(satisfies_star(14).ok);
    CHECK(satisfies_star(42).ok);
    CHECK(satisfies_star(26).ok);

    auto r = satisfies_star(8);
    CHECK_FALSE(r.ok);
    CHECK(*r.obstruction == "div-by-4");

    // 20 is divisible by both 4 and the 2-mod-3 prime 5; the 4-check wins
    r = satisfies_star(20);
    CHECK_FALSE(r.ok);
    CHECK(*r.obstruction == "div-by-4");

    r = satisfies_star(18);
    CHECK(*r.obstruction == "div-by-9");
    r = satisfies_star(50);
    CHECK(*r.obstruction == "odd-prime-5");
    r = satisfies_star(110);  // 2 * 5 * 11, both 5 and 11 are 2 mod 3
    CHECK(*r.obstruction == "odd-prime-5");
    r = satisfies_star(7);
    CHECK(*r.obstruction == "not-0-2-mod-6");
    r = satisfies_star(6);
    CHECK(*r.obstruction == "too-small");
    r = satisfies_star(-12);
    CHECK(*r.obstruction == "too-small");
}

TEST_CASE("solve_congruence") {
    CHECK(solve_congruence(2) == Int(0));
    CHECK_FALSE(solve_congruence(5).has_value());
    CHECK(solve_congruence(7) == Int(2));
    CHECK(solve_congruence(1) == Int(0));
    CHECK_THROWS_WITH_AS(static_cast<void>(solve_congruence(0)), doctest::Contains("domain"),
                         Error);
}

TEST_CASE("solve_congruence equals exhaustive search") {
    // Guards the exhaustive contract against future optimization.
    for (long long g = 1; g <= 10000; ++g) {
        long long expected = -1;
        for (long long n = 0; n < g; ++n)
            if ((2 * n * n + 2 * n + 2) % g == 0) {
                expected = n;
                break;
            }
        auto got = solve_congruence(g);
        if (expected < 0)
            CHECK_FALSE(got.has_value());
        else
            CHECK(got == Int(expected));
    }
}

TEST_CASE("satisfies_bulles: pinned witnesses") {
    CHECK(satisfies_bulles(8) == BullesWitness{2, 2, 0});
    CHECK(satisfies_bulles(18) == BullesWitness{3, 2, 0});
    CHECK(satisfies_bulles(24) == BullesWitness{2, 6, 1});
    CHECK(satisfies_bulles(42) == BullesWitness{1, 42, 4});
    CHECK_FALSE(satisfies_bulles(20).has_value());
}

TEST_CASE("satisfies_bulles witnesses re-validate and have minimal f") {
    for (long long d = 1; d <= 10000; ++d) {
        auto w = satisfies_bulles(d);
        if (!w) continue;
        REQUIRE(w->f >= 1);
        REQUIRE(w->f * w->f * w->g == d);
        REQUIRE((2 * w->n * w->n + 2 * w->n + 2) % w->g == 0);
        REQUIRE(w->n >= 0);
        REQUIRE(w->n < w->g);
    }
    // minimality of f, on a subrange (each probe rescans every smaller f)
    for (long long d = 1; d <= 2000; ++d) {
        auto w = satisfies_bulles(d);
        if (!w) continue;
        for (Int f = 1; f < w->f; ++f) {
            if (d % (f * f) != 0) continue;
            CHECK_FALSE(solve_congruence(Int(d) / (f * f)).has_value());
        }
    }
}

TEST_CASE("fano_condition_one: pinned witnesses") {
    CHECK(fano_condition_one(14) == FanoWitness{2, 1});
    CHECK(fano_condition_one(546) == FanoWitness{16, 1});
    CHECK(fano_condition_one(42) == FanoWitness{4, 1});
    CHECK_FALSE(fano_condition_one(20).has_value());
    // the default cap really bounds the search
    CHECK_FALSE(fano_condition_one(14, 1).has_value());
}

TEST_CASE("fano_condition_one(20) absence confirmed by direct sweep") {
    for (long long n = 2; n <= 10000; ++n) {
        long long v = 2 * n * n + 2 * n + 2;
        if (v % 20 != 0) continue;
        long long q = v / 20;
        long long s = static_cast<long long>(std::sqrt(static_cast<double>(q)));
        for (long long t = std::max(0LL, s - 2); t <= s + 2; ++t) CHECK(t * t != q);
    }
}

TEST_CASE("fano witnesses re-validate; fano1 implies bulles") {
    for (long long d = 1; d <= 1500; ++d) {
        auto w = fano_condition_one(d, 300);
        if (!w) continue;
        CHECK(w->n >= 2);
        CHECK(w->a >= 1);
        CHECK(Int(d) * w->a * w->a == 2 * w->n * w->n + 2 * w->n + 2);
        CHECK(satisfies_bulles(d).has_value());  // g = d, f = 1 works
    }
}

TEST_CASE("fano_condition_two") {
    CHECK(fano_condition_two(8));
    CHECK(fano_condition_two(18));
    CHECK_FALSE(fano_condition_two(42));
    CHECK_FALSE(fano_condition_two(7));
    CHECK(fano_condition_two(2));
    CHECK(fano_condition_two(98));
}

TEST_CASE("star matches the congruence oracle on Hassett discriminants") {
    for (long long d = 8; d <= 3000; ++d) {
        if (!is_hassett_divisor(d)) continue;
        CHECK(satisfies_star(d).ok == congruence_oracle(d));
    }
}

TEST_CASE("star implies a bulles witness with f = 1") {
    for (long long d = 8; d <= 10000; ++d) {
        if (!is_hassett_divisor(d) || !satisfies_star(d).ok) continue;
        auto w = satisfies_bulles(d);
        REQUIRE(w.has_value());
        CHECK(w->f == 1);
        CHECK(w->g == d);
    }
}

TEST_CASE("classify: pinned reports") {
    DivisorReport r = classify(20);
    CHECK(r.is_divisor);
    CHECK_FALSE(r.star);
    CHECK(*r.star_failure == "div-by-4");
    CHECK_FALSE(r.bulles.has_value());
    CHECK_FALSE(r.fano1.has_value());
    CHECK_FALSE(r.fano2);
    CHECK(r.fm_count == Int(2));

    r = classify(7);
    CHECK_FALSE(r.is_divisor);
    CHECK_FALSE(r.star);
    CHECK_FALSE(r.bulles.has_value());
    CHECK_FALSE(r.fano1.has_value());
    CHECK_FALSE(r.fano2);
    CHECK_FALSE(r.fm_count.has_value());

    r = classify(42);
    CHECK(r.is_divisor);
    CHECK(r.star);
    CHECK(r.bulles == BullesWitness{1, 42, 4});
    CHECK(r.fano1 == FanoWitness{4, 1});
    CHECK_FALSE(r.fano2);
    CHECK(r.fm_count == Int(1));

    // fm count absent where the counting hypotheses fail (9 | 18)
    r = classify(18);
    CHECK(r.is_divisor);
    CHECK_FALSE(r.fm_count.has_value());
    CHECK(r.bulles == BullesWitness{3, 2, 0});
    CHECK(r.fano2);

    CHECK_THROWS_WITH_AS(static_cast<void>(classify(0)), doctest::Contains("domain"), Error);
}
