#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace fourfold {

// All arithmetic in this library is exact: Int is an arbitrary-precision
// signed integer. No floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

// Library error with a stable machine-readable kind ("shape", "rank",
// "degenerate", "domain", "constraint", "not-applicable", "filter",
// "corrupt", "io"). what() is "<kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Floor of the square root. v must be >= 0.
inline Int isqrt_floor(const Int& v) {
    if (v < 0) throw Error("domain", "isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

// The exact square root of v if v is a perfect square, absent otherwise.
inline std::optional<Int> exact_sqrt(const Int& v) {
    if (v < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(v);
    if (s * s == v) return s;
    return std::nullopt;
}

// Checked conversion for serialization boundaries.
inline bool fits_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    return v >= lo && v <= hi;
}

inline long long to_int64(const Int& v) {
    if (!fits_int64(v)) throw Error("domain", "value out of 64-bit range: " + v.str());
    return v.convert_to<long long>();
}

// Parses a decimal integer (optional leading '-'). Throws Error("domain")
// on anything else, including empty strings and trailing garbage.
inline Int parse_int(const std::string& text) {
    if (text.empty()) throw Error("domain", "empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw Error("domain", "bad integer literal: " + text);
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw Error("domain", "bad integer literal: " + text);
    return Int(text);
}

}  // namespace fourfold
