#pragma once

// The Ramanujan matrix M_n (entry (i, j) = c_{d_i}(n / d_j) over ascending
// divisors) and its row sums a_d(n).

#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"

namespace ramsum {

/// Largest tau(n) for which build_matrix() will allocate.
inline constexpr std::size_t kMaxMatrixOrder = 4096;

class RamanujanMatrix {
public:
    explicit RamanujanMatrix(Int n) : divisors_(ramsum::divisors(n)) {
        const std::size_t t = divisors_.size();
        if (t > kMaxMatrixOrder)
            throw cap_exceeded("build_matrix: tau(" + std::to_string(n) + ") = " + std::to_string(t) +
                               " exceeds the matrix cap");
        entries_.resize(t * t);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) entries_[i * t + j] = ramanujan_sum(divisors_[i], n / divisors_[j]);
    }

    [[nodiscard]] Int n() const { return divisors_.n; }
    [[nodiscard]] std::size_t order() const { return divisors_.size(); }
    [[nodiscard]] const DivisorList& divisors() const { return divisors_; }
    [[nodiscard]] Int operator()(std::size_t i, std::size_t j) const { return entries_[i * order() + j]; }
    [[nodiscard]] const std::vector<Int>& entries() const { return entries_; }

    /// M * M, products accumulated in 128-bit and range-checked back to 64-bit.
    [[nodiscard]] std::vector<Int> squared() const {
        const std::size_t t = order();
        std::vector<Int> out(t * t);
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < t; ++j) {
                __int128 acc = 0;
                for (std::size_t k = 0; k < t; ++k)
                    acc += static_cast<__int128>((*this)(i, k)) * static_cast<__int128>((*this)(k, j));
                if (acc > INT64_MAX || acc < INT64_MIN) throw internal_error("RamanujanMatrix::squared: overflow");
                out[i * t + j] = static_cast<Int>(acc);
            }
        }
        return out;
    }

    [[nodiscard]] bool squares_to_n_identity() const {
        const auto sq = squared();
        const std::size_t t = order();
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                if (sq[i * t + j] != (i == j ? n() : 0)) return false;
        return true;
    }

    [[nodiscard]] Int entry_sum() const {
        Int s = 0;
        for (Int e : entries_) s += e;
        return s;
    }

    [[nodiscard]] Int diagonal_sum() const {
        Int s = 0;
        for (std::size_t i = 0; i < order(); ++i) s += (*this)(i, i);
        return s;
    }

    friend bool operator==(const RamanujanMatrix& a, const RamanujanMatrix& b) {
        return a.n() == b.n() && a.entries_ == b.entries_;
    }

private:
    DivisorList divisors_;
    std::vector<Int> entries_;
};

inline RamanujanMatrix build_matrix(Int n) {
    detail::require_positive(n, "build_matrix");
    return RamanujanMatrix(n);
}

/// Sum of c_d(n/d) over d | n, by summation.
inline Int trace_direct(Int n) {
    detail::require_positive(n, "trace_direct");
    Int s = 0;
    for (Int d : divisors(n)) s += ramanujan_sum(d, n / d);
    return s;
}

/// Trace of M_n in closed form: sqrt(n) for perfect squares, 0 otherwise.
inline Int trace(Int n) {
    detail::require_positive(n, "trace");
    return is_perfect_square(n) ? isqrt(n) : 0;
}

inline Int signed_trace_direct(Int n) {
    detail::require_positive(n, "signed_trace_direct");
    Int s = 0;
    for (Int d : divisors(n)) s += ((n / d) % 2 == 0 ? 1 : -1) * ramanujan_sum(d, n / d);
    return s;
}

/// sum_{d|n} c_d(n/d) (-1)^{n/d} in closed form; defined for even n only.
inline Int signed_trace(Int n) {
    detail::require_positive(n, "signed_trace");
    if (n % 2 != 0) throw domain_error("signed_trace: n must be even, got " + std::to_string(n));
    if (is_perfect_square(n)) return isqrt(n);
    const Int half = n / 2;
    if (half % 2 == 1 && is_perfect_square(half)) return 2 * isqrt(half);
    return 0;
}

namespace detail {
inline void require_divisor(Int n, Int d, const char* what) {
    require_positive(n, what);
    if (d < 1 || n % d != 0)
        throw domain_error(std::string(what) + ": " + std::to_string(d) + " does not divide " + std::to_string(n));
}
}  // namespace detail

/// a_d(n) = sum_{k|n} c_d(k).
inline Int row_sum_direct(Int n, Int d) {
    detail::require_divisor(n, d, "row_sum_direct");
    Int s = 0;
    for (Int k : divisors(n)) s += ramanujan_sum(d, k);
    return s;
}

/// a_d(n) as the product over p^a || n, p^b || d of (a - b + 1) phi(p^b) - floor(p^{b-1}).
inline Int row_sum_fgk(Int n, Int d) {
    detail::require_divisor(n, d, "row_sum_fgk");
    const auto fn = factorize(n);
    const auto fd = factorize(d);
    Int product = 1;
    for (const auto& [p, alpha] : fn.factors) {
        const int beta = fd.exponent_of(p);
        Int phi_pb = 1;       // phi(p^beta)
        Int floor_pb1 = 0;    // floor(p^{beta-1}); zero when beta = 0
        if (beta > 0) {
            floor_pb1 = 1;
            for (int i = 1; i < beta; ++i) floor_pb1 *= p;
            phi_pb = floor_pb1 * (p - 1);
        }
        product *= (alpha - beta + 1) * phi_pb - floor_pb1;
    }
    return product;
}

struct RowSums {
    Int n = 1;
    /// (d, a_d(n)) for every divisor d, ascending in d.
    std::vector<std::pair<Int, Int>> values;

    [[nodiscard]] Int total() const {
        Int s = 0;
        for (const auto& [d, a] : values) s += a;
        return s;
    }
};

inline RowSums row_sums(Int n) {
    RowSums out;
    out.n = n;
    for (Int d : divisors(n)) out.values.emplace_back(d, row_sum_fgk(n, d));
    return out;
}

struct MoebiusIdentityCheck {
    bool holds = false;
    Int sum = 0;  // sum_{k|n} c_d(n/k) mu(k)
};

/// sum_{k|n} c_d(n/k) mu(k) == n [d == n].
inline MoebiusIdentityCheck key_moebius_identity_check(Int n, Int d) {
    detail::require_divisor(n, d, "key_moebius_identity_check");
    MoebiusIdentityCheck out;
    for (Int k : divisors(n)) out.sum += ramanujan_sum(d, n / k) * moebius(k);
    out.holds = out.sum == (d == n ? n : 0);
    return out;
}

}  // namespace ramsum
