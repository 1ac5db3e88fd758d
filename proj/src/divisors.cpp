#include "fourfold/divisors.hpp"

#include "fourfold/fm.hpp"

namespace fourfold::divisors {

Factorization factorize(const Int& v) {
    if (v < 1) throw Error("domain", "factorize requires a positive integer");
    Factorization fac;
    fac.value = v;
    Int rest = v;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) fac.pairs.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= rest; p += (p % 6 == 5) ? 2 : 4) strip(p);
    if (rest > 1) fac.pairs.emplace_back(rest, 1);
    return fac;
}

bool is_hassett_divisor(const Int& d) {
    if (d <= 6) return false;
    Int r = d % 6;
    return r == 0 || r == 2;
}

StarResult satisfies_star(const Int& d) {
    if (d <= 6) return {false, "too-small"};
    Int r = d % 6;
    if (r != 0 && r != 2) return {false, "not-0-2-mod-6"};
    if (d % 4 == 0) return {false, "div-by-4"};
    if (d % 9 == 0) return {false, "div-by-9"};
    for (const auto& [p, e] : factorize(d).pairs)
        if (p != 2 && p % 3 == 2) return {false, "odd-prime-" + p.str()};
    return {true, std::nullopt};
}

std::optional<Int> solve_congruence(const Int& g) {
    if (g < 1) throw Error("domain", "modulus must be positive");
    for (Int n = 0; n < g; ++n)
        if ((2 * n * n + 2 * n + 2) % g == 0) return n;
    return std::nullopt;
}

std::optional<BullesWitness> satisfies_bulles(const Int& d) {
    if (d < 1) throw Error("domain", "d must be positive");
    for (Int f = 1; f * f <= d; ++f) {
        if (d % (f * f) != 0) continue;
        Int g = d / (f * f);
        if (auto n = solve_congruence(g)) return BullesWitness{f, g, *n};
    }
    return std::nullopt;
}

std::optional<FanoWitness> fano_condition_one(const Int& d, const Int& n_cap) {
    if (d < 1) throw Error("domain", "d must be positive");
    for (Int n = 2; n <= n_cap; ++n) {
        Int v = 2 * n * n + 2 * n + 2;
        if (v % d != 0) continue;
        if (auto a = exact_sqrt(v / d)) return FanoWitness{n, *a};  // v >= d, so a >= 1
    }
    return std::nullopt;
}

bool fano_condition_two(const Int& d) {
    if (d < 1) throw Error("domain", "d must be positive");
    if (d % 2 != 0) return false;
    return exact_sqrt(d / 2).has_value();
}

DivisorReport classify(const Int& d, const Int& fano_cap) {
    if (d < 1) throw Error("domain", "d must be positive");
    DivisorReport rep;
    rep.d = d;
    rep.is_divisor = is_hassett_divisor(d);
    StarResult star = satisfies_star(d);
    rep.star = star.ok;
    rep.star_failure = star.obstruction;
    if (rep.is_divisor) {
        rep.bulles = satisfies_bulles(d);
        rep.fano1 = fano_condition_one(d, fano_cap);
        rep.fano2 = fano_condition_two(d);
        try {
            rep.fm_count = fm::fm_partner_count(d).count;
        } catch (const Error& e) {
            if (e.kind() != "not-applicable") throw;
        }
    }
    return rep;
}

}  // namespace fourfold::divisors
