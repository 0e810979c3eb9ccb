#pragma once

// Expansions in the Schur basis, multiplication by a power sum p_d via
// border-strip addition, and the cached columns p_d^{n/d}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "partition.hpp"

namespace ramsum {

/// sum_lambda c_lambda s_lambda over partitions of a fixed degree. Dense over the
/// interned partitions internally; only nonzero terms are visible through terms().
class SchurExpansion {
public:
    explicit SchurExpansion(int n, int cap = kDefaultPartitionCap)
        : index_(partition_index(n, cap)), coeffs_(index_->size()) {}

    /// s_emptyset = 1.
    static SchurExpansion one() {
        SchurExpansion e(0);
        e.coeffs_[0] = 1;
        return e;
    }

    [[nodiscard]] int degree() const { return index_->degree(); }
    [[nodiscard]] const PartitionIndex& index() const { return *index_; }
    [[nodiscard]] std::shared_ptr<const PartitionIndex> shared_index() const { return index_; }
    [[nodiscard]] const std::vector<BigInt>& dense() const { return coeffs_; }
    [[nodiscard]] std::vector<BigInt>& dense() { return coeffs_; }

    [[nodiscard]] BigInt coefficient(const Partition& p) const {
        const std::size_t i = index_->find(p);
        return i == PartitionIndex::npos ? BigInt(0) : coeffs_[i];
    }

    void add(const Partition& p, const BigInt& c) {
        const std::size_t i = index_->find(p);
        if (i == PartitionIndex::npos)
            throw domain_error("SchurExpansion::add: " + p.str() + " is not a partition of " + std::to_string(degree()));
        coeffs_[i] += c;
    }

    /// this += factor * other.
    void add_scaled(const SchurExpansion& other, const BigInt& factor) {
        require_same_degree(other);
        if (factor == 0) return;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!other.coeffs_[i].is_zero()) coeffs_[i] += factor * other.coeffs_[i];
    }

    SchurExpansion& operator+=(const SchurExpansion& other) {
        add_scaled(other, 1);
        return *this;
    }

    /// Nonzero terms in reverse lexicographic order of partitions.
    [[nodiscard]] std::vector<std::pair<Partition, BigInt>> terms() const {
        std::vector<std::pair<Partition, BigInt>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.emplace_back((*index_)[i], coeffs_[i]);
        return out;
    }

    [[nodiscard]] std::map<Partition, BigInt, ReverseLex> to_map() const {
        std::map<Partition, BigInt, ReverseLex> out;
        for (auto& [p, c] : terms()) out.emplace(p, c);
        return out;
    }

    [[nodiscard]] std::size_t num_terms() const {
        std::size_t k = 0;
        for (const auto& c : coeffs_) k += !c.is_zero();
        return k;
    }

    /// First term (reverse lex) with a negative coefficient.
    [[nodiscard]] std::optional<std::pair<Partition, BigInt>> first_negative() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] < 0) return std::make_pair((*index_)[i], coeffs_[i]);
        return std::nullopt;
    }
    [[nodiscard]] bool is_schur_positive() const { return !first_negative().has_value(); }

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
        return a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same_degree(const SchurExpansion& other) const {
        if (other.degree() != degree()) throw domain_error("SchurExpansion: degree mismatch");
    }

    std::shared_ptr<const PartitionIndex> index_;
    std::vector<BigInt> coeffs_;
};

namespace detail {

/// Enumerates the border strips of size d addable to mu using its beta-set:
/// adding a strip moves one bead from x to x + d onto an empty position, and
/// the strip height is the number of beads jumped over. Calls
/// emit(key_of_result, height) with the result encoded as a Partition::key().
template <typename Emit>
void for_each_addable_strip(const std::vector<int>& mu, int d, std::vector<int>& beta, std::vector<char>& occupied,
                            std::string& key, Emit&& emit) {
    const int beads = static_cast<int>(mu.size()) + d;
    beta.resize(static_cast<std::size_t>(beads));
    for (int j = 0; j < beads; ++j) {
        const int part = j < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(j)] : 0;
        beta[static_cast<std::size_t>(j)] = part + beads - 1 - j;
    }
    const int top = beta[0] + d + 1;
    occupied.assign(static_cast<std::size_t>(top), 0);
    for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;

    for (int j = 0; j < beads; ++j) {
        const int from = beta[static_cast<std::size_t>(j)];
        const int to = from + d;
        if (occupied[static_cast<std::size_t>(to)]) continue;
        // Beads strictly between from and to are exactly beta[k] for k in [dest, j).
        int dest = j;
        while (dest > 0 && beta[static_cast<std::size_t>(dest - 1)] < to) --dest;
        const int height = j - dest;
        key.clear();
        for (int i = 0; i < beads; ++i) {
            int b;
            if (i < dest)
                b = beta[static_cast<std::size_t>(i)];
            else if (i == dest)
                b = to;
            else if (i <= j)
                b = beta[static_cast<std::size_t>(i - 1)];
            else
                b = beta[static_cast<std::size_t>(i)];
            const int part = b - (beads - 1 - i);
            if (part == 0) break;
            key.push_back(static_cast<char>(static_cast<unsigned char>(part)));
        }
        emit(static_cast<const std::string&>(key), height);
    }
}

}  // namespace detail

/// e * p_d by the Murnaghan-Nakayama rule: each c s_mu contributes
/// c (-1)^{ht} s_lambda for every border strip lambda/mu of size d.
inline SchurExpansion multiply_by_power_sum(const SchurExpansion& e, int d, int cap = kDefaultPartitionCap) {
    if (d < 1) throw domain_error("multiply_by_power_sum: d must be positive");
    const int m = e.degree();
    detail::check_partition_cap(m + d, cap, "multiply_by_power_sum");
    SchurExpansion out(m + d, cap);
    const PartitionIndex& target = out.index();
    auto& acc = out.dense();
    std::vector<int> beta;
    std::vector<char> occupied;
    std::string key;
    const auto& src = e.dense();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i].is_zero()) continue;
        const BigInt& c = src[i];
        detail::for_each_addable_strip(e.index()[i].parts(), d, beta, occupied, key,
                                       [&](const std::string& k, int height) {
                                           const std::size_t t = target.find_key(k);
                                           if (t == PartitionIndex::npos)
                                               throw internal_error("multiply_by_power_sum: strip result not interned");
                                           if (height % 2 == 0)
                                               acc[t] += c;
                                           else
                                               acc[t] -= c;
                                       });
    }
    return out;
}

/// Memo of the power-sum products p_d^m in the Schur basis. Each chain
/// p_d^0, p_d^1, ... is filled under its own lock; results do not depend
/// on which thread fills them.
class ExpansionCache {
public:
    explicit ExpansionCache(int cap = kDefaultPartitionCap) : cap_(cap) {}

    ExpansionCache(const ExpansionCache&) = delete;
    ExpansionCache& operator=(const ExpansionCache&) = delete;

    [[nodiscard]] int cap() const { return cap_; }

    /// p_d^m.
    std::shared_ptr<const SchurExpansion> power(int d, int m) {
        if (d < 1 || m < 0) throw domain_error("ExpansionCache::power: bad arguments");
        detail::check_partition_cap(d * m, cap_, "power_sum_rectangle_expansion");
        Chain& chain = chain_for(d);
        std::lock_guard lock(chain.mutex);
        if (chain.powers.empty()) chain.powers.push_back(std::make_shared<const SchurExpansion>(SchurExpansion::one()));
        while (static_cast<int>(chain.powers.size()) <= m)
            chain.powers.push_back(
                std::make_shared<const SchurExpansion>(multiply_by_power_sum(*chain.powers.back(), d, cap_)));
        return chain.powers[static_cast<std::size_t>(m)];
    }

    void clear() {
        std::lock_guard lock(map_mutex_);
        chains_.clear();
    }

private:
    struct Chain {
        std::mutex mutex;
        std::vector<std::shared_ptr<const SchurExpansion>> powers;
    };

    Chain& chain_for(int d) {
        std::lock_guard lock(map_mutex_);
        auto& slot = chains_[d];
        if (!slot) slot = std::make_unique<Chain>();
        return *slot;
    }

    int cap_;
    std::mutex map_mutex_;
    std::unordered_map<int, std::unique_ptr<Chain>> chains_;
};

inline ExpansionCache& default_cache() {
    static ExpansionCache cache;
    return cache;
}

/// p_d^{n/d} in the Schur basis; the coefficient of s_lambda is the
/// character value chi^lambda on the class of cycle type d^{n/d}.
inline std::shared_ptr<const SchurExpansion> power_sum_rectangle_expansion(int n, int d,
                                                                           ExpansionCache& cache = default_cache()) {
    if (n < 1) throw domain_error("power_sum_rectangle_expansion: n must be positive");
    if (d < 1 || n % d != 0)
        throw domain_error("power_sum_rectangle_expansion: " + std::to_string(d) + " does not divide " +
                           std::to_string(n));
    return cache.power(d, n / d);
}

}  // namespace ramsum
