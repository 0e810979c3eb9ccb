#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsum {

using BigInt = boost::multiprecision::cpp_int;

/// Argument outside the documented domain of an operation (n = 0, d not dividing n, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input larger than an implementation limit.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A configured resource cap (partition degree, maj oracle size) was exceeded.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed; signals a bug upstream.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw domain_error("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw domain_error("bad integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw domain_error("bad integer literal: " + s);
    return BigInt(s);
}

/// x^e with the convention x^0 = 1 for every x, 0 included.
inline BigInt pow(const BigInt& x, unsigned e) {
    BigInt result = 1;
    BigInt base = x;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

inline BigInt pow(std::int64_t x, unsigned e) { return pow(BigInt(x), e); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace ramsum
