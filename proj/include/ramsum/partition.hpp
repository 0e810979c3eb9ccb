#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"

namespace ramsum {

/// Default ceiling on the degree of partitions that get enumerated or interned.
inline constexpr int kDefaultPartitionCap = 45;
/// Hard ceiling: parts are packed into bytes for interning.
inline constexpr int kHardPartitionCap = 255;

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    /// (d, d, ..., d) with m parts.
    static Partition rectangle(int d, int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), d)); }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// Part i (0-based), 0 beyond the length.
    [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        return Partition(std::move(out));
    }

    /// Compact byte string used as a hash key.
    [[nodiscard]] std::string key() const {
        std::string k(parts_.size(), '\0');
        for (std::size_t i = 0; i < parts_.size(); ++i) k[i] = static_cast<char>(static_cast<unsigned char>(parts_[i]));
        return k;
    }

    /// "(3,1,1)", "()" for the empty partition.
    [[nodiscard]] std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw domain_error("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw domain_error("Partition: parts must be weakly decreasing");
            if (parts_[i] > kHardPartitionCap) throw range_error("Partition: part exceeds 255");
        }
    }
    std::vector<int> parts_;
};

/// Strict weak order placing partitions of equal size in reverse lexicographic order:
/// (n), (n-1,1), ..., (1^n).
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

inline Partition conjugate(const Partition& p) { return p.conjugate(); }

namespace detail {
inline void check_partition_cap(int n, int cap, const char* what) {
    if (n < 0) throw domain_error(std::string(what) + ": negative degree");
    if (n > cap || n > kHardPartitionCap)
        throw cap_exceeded(std::string(what) + ": degree " + std::to_string(n) + " exceeds cap " +
                           std::to_string(std::min(cap, kHardPartitionCap)));
}
}  // namespace detail

/// Calls visit(parts) for each partition of n in reverse lexicographic order.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit, int cap = kDefaultPartitionCap) {
    detail::check_partition_cap(n, cap, "partitions_of");
    if (n == 0) {
        visit(std::vector<int>{});
        return;
    }
    std::vector<int> a{n};
    while (true) {
        visit(static_cast<const std::vector<int>&>(a));
        // Next in reverse lex: strip trailing 1s, decrement the last part > 1,
        // then refill greedily with copies of the new value.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) return;
        int remaining = ones + 1;
        const int v = --a.back();
        while (remaining > 0) {
            const int take = std::min(v, remaining);
            a.push_back(take);
            remaining -= take;
        }
    }
}

inline std::vector<Partition> partitions_of(int n, int cap = kDefaultPartitionCap) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); }, cap);
    return out;
}

/// Hook lengths of the cells of p, row by row.
inline std::vector<int> hook_lengths(const Partition& p) {
    const Partition c = p.conjugate();
    std::vector<int> hooks;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks.push_back(p[i] - j + c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    return hooks;
}

/// f^lambda, the number of standard Young tableaux, by the hook-length formula.
inline BigInt count_syt(const Partition& p) {
    BigInt num = factorial(static_cast<unsigned>(p.size()));
    BigInt den = 1;
    for (int h : hook_lengths(p)) den *= h;
    return num / den;
}

/// Dense numbering of the partitions of one degree, in reverse lexicographic order.
class PartitionIndex {
public:
    explicit PartitionIndex(int n, int cap = kDefaultPartitionCap) : n_(n) {
        for_each_partition(
            n,
            [&](const std::vector<int>& parts) {
                lookup_.emplace(Partition(parts).key(), partitions_.size());
                partitions_.emplace_back(parts);
            },
            cap);
    }

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] std::size_t size() const { return partitions_.size(); }
    [[nodiscard]] const Partition& operator[](std::size_t i) const { return partitions_[i]; }
    [[nodiscard]] const std::vector<Partition>& partitions() const { return partitions_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    [[nodiscard]] std::size_t find_key(const std::string& key) const {
        auto it = lookup_.find(key);
        return it == lookup_.end() ? npos : it->second;
    }
    [[nodiscard]] std::size_t find(const Partition& p) const { return find_key(p.key()); }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

/// Shared, lazily built index for degree n. Safe to call concurrently.
inline std::shared_ptr<const PartitionIndex> partition_index(int n, int cap = kDefaultPartitionCap) {
    detail::check_partition_cap(n, cap, "partition_index");
    static std::mutex mutex;
    static std::unordered_map<int, std::shared_ptr<const PartitionIndex>> registry;
    {
        std::lock_guard lock(mutex);
        if (auto it = registry.find(n); it != registry.end()) return it->second;
    }
    auto built = std::make_shared<const PartitionIndex>(n, cap);
    std::lock_guard lock(mutex);
    return registry.emplace(n, std::move(built)).first->second;
}

}  // namespace ramsum
