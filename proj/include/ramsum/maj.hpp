#pragma once

// Distribution of the major index over standard Young tableaux, binned by
// residue mod n, from the q-analogue of the hook-length formula.

#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace ramsum {

inline constexpr int kDefaultMajCap = 14;

/// Integer polynomial, coefficient of q^i at index i.
using QPolynomial = std::vector<BigInt>;

namespace detail {

/// p * [k]_q, where [k]_q = 1 + q + ... + q^{k-1}.
inline QPolynomial times_q_integer(const QPolynomial& p, int k) {
    QPolynomial out(p.size() + static_cast<std::size_t>(k) - 1);
    // Running window sum of the last k coefficients of p.
    BigInt window = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < p.size()) window += p[i];
        if (i >= static_cast<std::size_t>(k)) window -= p[i - static_cast<std::size_t>(k)];
        out[i] = window;
    }
    return out;
}

/// Exact quotient p / [k]_q; throws internal_error if the remainder is nonzero.
inline QPolynomial divide_by_q_integer(const QPolynomial& p, int k) {
    if (k == 1) return p;
    if (p.size() < static_cast<std::size_t>(k)) throw internal_error("q-hook quotient: nonzero remainder");
    // Long division by the monic [k]_q, highest degree first.
    QPolynomial rem = p;
    QPolynomial quot(p.size() - static_cast<std::size_t>(k) + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const BigInt c = rem[i + static_cast<std::size_t>(k) - 1];
        quot[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) rem[i + j] -= c;
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw internal_error("q-hook quotient: nonzero remainder");
    return quot;
}

}  // namespace detail

/// sum over SYT T of shape p of q^{maj(T)} = q^{b(p)} [n]_q! / prod_cells [h]_q,
/// b(p) = sum_i (i - 1) p_i.
inline QPolynomial maj_generating_function(const Partition& p) {
    const int n = p.size();
    QPolynomial poly{BigInt(1)};
    for (int k = 2; k <= n; ++k) poly = detail::times_q_integer(poly, k);
    for (int h : hook_lengths(p)) poly = detail::divide_by_q_integer(poly, h);
    std::size_t shift = 0;
    for (std::size_t i = 0; i < p.length(); ++i) shift += i * static_cast<std::size_t>(p[i]);
    poly.insert(poly.begin(), shift, BigInt(0));
    while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
    return poly;
}

/// Counts of SYT of a shape of size n by maj mod n. Residues are labelled
/// 1..n, with n standing for residue 0.
class MajDistribution {
public:
    MajDistribution(Partition shape, std::vector<BigInt> counts) : shape_(std::move(shape)), counts_(std::move(counts)) {}

    [[nodiscard]] const Partition& shape() const { return shape_; }
    [[nodiscard]] int modulus() const { return shape_.size(); }
    /// Number of tableaux with maj congruent to r (1 <= r <= n).
    [[nodiscard]] const BigInt& count(int r) const {
        if (r < 1 || r > modulus()) throw domain_error("MajDistribution::count: residue label out of 1..n");
        return counts_[static_cast<std::size_t>(r - 1)];
    }
    /// counts()[r - 1] is count(r).
    [[nodiscard]] const std::vector<BigInt>& counts() const { return counts_; }
    [[nodiscard]] BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts_) s += c;
        return s;
    }

private:
    Partition shape_;
    std::vector<BigInt> counts_;
};

inline MajDistribution maj_distribution(const Partition& shape, int cap = kDefaultMajCap) {
    const int n = shape.size();
    if (n < 1) throw domain_error("maj_distribution: shape must be nonempty");
    if (n > cap) throw cap_exceeded("maj_distribution: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const QPolynomial gf = maj_generating_function(shape);
    std::vector<BigInt> counts(static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < gf.size(); ++m) {
        const int residue = static_cast<int>(m % static_cast<std::size_t>(n));
        counts[static_cast<std::size_t>(residue == 0 ? n - 1 : residue - 1)] += gf[m];
    }
    return MajDistribution(shape, std::move(counts));
}

}  // namespace ramsum
