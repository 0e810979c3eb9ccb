#pragma once

// Exact arithmetic functions driven by prime factorization: totient, Moebius,
// divisor counts and Ramanujan sums c_d(r).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace ramsum {

using Int = std::int64_t;

/// Largest argument accepted by factorize().
inline constexpr Int kMaxFactorInput = 1'000'000'000'000;

struct PrimePower {
    Int prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{a_i} with p_1 < p_2 < ...; the empty list factors n = 1.
struct Factorization {
    Int n = 1;
    std::vector<PrimePower> factors;

    [[nodiscard]] bool is_square_free() const {
        for (const auto& f : factors)
            if (f.exponent > 1) return false;
        return true;
    }
    /// Exponent of p in n (0 when p does not divide n).
    [[nodiscard]] int exponent_of(Int p) const {
        for (const auto& f : factors)
            if (f.prime == p) return f.exponent;
        return 0;
    }
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Ascending list of all divisors of n.
struct DivisorList {
    Int n = 1;
    std::vector<Int> divisors;

    [[nodiscard]] std::size_t size() const { return divisors.size(); }
    [[nodiscard]] auto begin() const { return divisors.begin(); }
    [[nodiscard]] auto end() const { return divisors.end(); }
    [[nodiscard]] Int operator[](std::size_t i) const { return divisors[i]; }
};

namespace detail {

inline void require_positive(Int n, const char* what) {
    if (n < 1) throw domain_error(std::string(what) + ": argument must be positive, got " + std::to_string(n));
}

inline Factorization factorize_uncached(Int n) {
    Factorization f;
    f.n = n;
    Int m = n;
    auto take = [&](Int p) {
        if (m % p != 0) return;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    take(5);
    // 30-wheel: residues coprime to 30.
    static constexpr int kWheel[8] = {7, 11, 13, 17, 19, 23, 29, 31};
    for (Int base = 0; base * base <= m; base += 30) {
        for (int w : kWheel) {
            Int p = base + w;
            if (p * p > m) break;
            take(p);
        }
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

/// Memo of factorizations, safe for concurrent readers and writers.
class FactorizationMemo {
public:
    Factorization get(Int n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(n); it != table_.end()) return it->second;
        }
        Factorization f = factorize_uncached(n);
        std::unique_lock lock(mutex_);
        if (table_.size() < kMaxEntries) table_.emplace(n, f);
        return f;
    }

private:
    static constexpr std::size_t kMaxEntries = 1 << 20;
    std::shared_mutex mutex_;
    std::unordered_map<Int, Factorization> table_;
};

inline FactorizationMemo& factorization_memo() {
    static FactorizationMemo memo;
    return memo;
}

}  // namespace detail

inline Factorization factorize(Int n) {
    if (n < 1 || n > kMaxFactorInput)
        throw range_error("factorize: n must lie in [1, 10^12], got " + std::to_string(n));
    return detail::factorization_memo().get(n);
}

inline Int gcd(Int a, Int b) {
    if (a < 1 || b < 1) throw domain_error("gcd: arguments must be positive");
    return std::gcd(a, b);
}

inline Int euler_phi(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}
inline Int euler_phi(Int n) {
    detail::require_positive(n, "euler_phi");
    return euler_phi(factorize(n));
}

inline int moebius(const Factorization& f) {
    if (!f.is_square_free()) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}
inline int moebius(Int n) {
    detail::require_positive(n, "moebius");
    return moebius(factorize(n));
}

inline Int tau(const Factorization& f) {
    Int t = 1;
    for (const auto& pp : f.factors) t *= pp.exponent + 1;
    return t;
}
inline Int tau(Int n) {
    detail::require_positive(n, "tau");
    return tau(factorize(n));
}

inline DivisorList divisors(const Factorization& f) {
    DivisorList out;
    out.n = f.n;
    out.divisors = {1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t prev = out.divisors.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < prev; ++i) out.divisors.push_back(out.divisors[i] * pk);
        }
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}
inline DivisorList divisors(Int n) {
    detail::require_positive(n, "divisors");
    return divisors(factorize(n));
}

inline bool divides(Int d, Int n) { return d != 0 && n % d == 0; }

inline Int isqrt(Int n) {
    if (n < 0) throw domain_error("isqrt: negative argument");
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(Int n) {
    if (n < 0) return false;
    const Int r = isqrt(n);
    return r * r == n;
}

/// c_d(r) by the von Sterneck formula phi(d) mu(q) / phi(q), q = d/(d,r).
/// Depends on r only through r mod d.
inline Int ramanujan_sum(Int d, Int r) {
    detail::require_positive(d, "ramanujan_sum(d)");
    detail::require_positive(r, "ramanujan_sum(r)");
    Int rr = r % d;
    if (rr == 0) rr = d;
    const Int q = d / std::gcd(d, rr);
    const auto fq = factorize(q);
    const int mu = moebius(fq);
    if (mu == 0) return 0;
    return euler_phi(d) / euler_phi(fq) * mu;
}

/// c_{q^a}(r) from the prime-power case analysis; q must be prime.
inline Int ramanujan_sum_prime_power(Int q, int a, Int r) {
    detail::require_positive(r, "ramanujan_sum_prime_power(r)");
    if (q < 2) throw domain_error("ramanujan_sum_prime_power: q must be prime");
    const auto fq = factorize(q);
    if (fq.factors.size() != 1 || fq.factors[0].exponent != 1)
        throw domain_error("ramanujan_sum_prime_power: q = " + std::to_string(q) + " is not prime");
    if (a < 0) throw domain_error("ramanujan_sum_prime_power: exponent must be nonnegative");
    if (a == 0) return 1;
    int v = 0;  // q-adic valuation of r, saturated at a
    for (Int m = r; v < a && m % q == 0; m /= q) ++v;
    Int qa1 = 1;
    for (int i = 1; i < a; ++i) qa1 *= q;
    if (v >= a) return qa1 * (q - 1);
    if (v == a - 1) return -qa1;
    return 0;
}

struct DiagonalClassification {
    bool all_in_0_pm1 = true;
    /// First divisor d (ascending) with |c_d(n/d)| > 1, and that value.
    std::optional<std::pair<Int, Int>> witness;
};

/// Whether every diagonal sum c_d(n/d), d | n, lies in {0, +1, -1}.
inline DiagonalClassification classify_diagonal(Int n) {
    detail::require_positive(n, "classify_diagonal");
    DiagonalClassification out;
    for (Int d : divisors(n)) {
        const Int c = ramanujan_sum(d, n / d);
        if (std::abs(c) > 1) {
            out.all_in_0_pm1 = false;
            out.witness = std::make_pair(d, c);
            return out;
        }
    }
    return out;
}

/// |c_d(r)| == phi(d): d | r, or d even and r an odd multiple of d/2.
inline bool diagonal_bound_attained(Int d, Int r) {
    detail::require_positive(d, "diagonal_bound_attained(d)");
    detail::require_positive(r, "diagonal_bound_attained(r)");
    if (r % d == 0) return true;
    return d % 2 == 0 && r % (d / 2) == 0 && (r / (d / 2)) % 2 == 1;
}

}  // namespace ramsum
