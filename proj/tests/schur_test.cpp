#include <queue>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "ramsum/schur.hpp"

using namespace ramsum;

namespace {

SchurExpansion single(const Partition& p) {
    SchurExpansion e(p.size());
    e.add(p, 1);
    return e;
}

SchurExpansion from_terms(int n, std::initializer_list<std::pair<Partition, int>> terms) {
    SchurExpansion e(n);
    for (const auto& [p, c] : terms) e.add(p, c);
    return e;
}

using Cell = std::pair<int, int>;

// -1 if lambda/mu is not a border strip, its height otherwise. Checks the
// definition directly: containment, edge-connectedness, no 2x2 square.
int strip_height(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return -1;
    std::set<Cell> cells;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (mu[i] > lambda[i]) return -1;
        for (int j = mu[i]; j < lambda[i]; ++j) cells.insert({static_cast<int>(i), j});
    }
    if (cells.empty()) return -1;
    for (const auto& [i, j] : cells)
        if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return -1;
    std::set<Cell> seen{*cells.begin()};
    std::queue<Cell> todo;
    todo.push(*cells.begin());
    while (!todo.empty()) {
        const auto [i, j] = todo.front();
        todo.pop();
        for (Cell nb : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}})
            if (cells.count(nb) && seen.insert(nb).second) todo.push(nb);
    }
    if (seen.size() != cells.size()) return -1;
    std::set<int> rows;
    for (const auto& c : cells) rows.insert(c.first);
    return static_cast<int>(rows.size()) - 1;
}

}  // namespace

TEST(MultiplyByPowerSum, SmallExpansions) {
    const auto p2 = multiply_by_power_sum(SchurExpansion::one(), 2);
    EXPECT_EQ(p2, from_terms(2, {{{2}, 1}, {{1, 1}, -1}}));

    const auto p2p2 = multiply_by_power_sum(p2, 2);
    EXPECT_EQ(p2p2, from_terms(4, {{{4}, 1}, {{3, 1}, -1}, {{2, 2}, 2}, {{2, 1, 1}, -1}, {{1, 1, 1, 1}, 1}}));

    const auto p4 = multiply_by_power_sum(SchurExpansion::one(), 4);
    EXPECT_EQ(p4, from_terms(4, {{{4}, 1}, {{3, 1}, -1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, -1}}));
}

TEST(MultiplyByPowerSum, MatchesBorderStripDefinition) {
    for (int m = 0; m <= 10; ++m)
        for (const auto& mu : partitions_of(m))
            for (int d = 1; m + d <= 10; ++d) {
                const auto got = multiply_by_power_sum(single(mu), d);
                SchurExpansion want(m + d);
                for (const auto& lambda : partitions_of(m + d)) {
                    const int h = strip_height(lambda, mu);
                    if (h >= 0) want.add(lambda, h % 2 ? -1 : 1);
                }
                ASSERT_EQ(got, want) << mu.str() << " d=" << d;
            }
}

TEST(PowerSumRectangle, PowersOfP1CountTableaux) {
    ExpansionCache cache;
    const auto p14 = power_sum_rectangle_expansion(4, 1, cache);
    std::vector<BigInt> f;
    for (const auto& [p, c] : p14->terms()) f.push_back(c);
    EXPECT_EQ(f, (std::vector<BigInt>{1, 3, 2, 3, 1}));
    for (int n = 1; n <= 12; ++n) {
        const auto e = power_sum_rectangle_expansion(n, 1, cache);
        for (std::size_t i = 0; i < e->index().size(); ++i) ASSERT_EQ(e->dense()[i], count_syt(e->index()[i]));
    }
}

TEST(PowerSumRectangle, TrivialCoefficientIsOne) {
    ExpansionCache cache;
    for (int n = 1; n <= 16; ++n)
        for (Int d : divisors(n)) {
            const auto e = power_sum_rectangle_expansion(n, static_cast<int>(d), cache);
            ASSERT_EQ(e->coefficient(Partition{n}), 1);
            // Sign character on d^{n/d}: (-1)^{(d-1) n/d}.
            ASSERT_EQ(e->coefficient(Partition::rectangle(1, n)), ((d - 1) * (n / d)) % 2 ? -1 : 1);
        }
}

TEST(PowerSumRectangle, ColumnOrthogonality) {
    ExpansionCache cache;
    for (int n = 1; n <= 12; ++n) {
        const auto ds = divisors(n);
        for (Int d : ds)
            for (Int e : ds) {
                const auto a = power_sum_rectangle_expansion(n, static_cast<int>(d), cache);
                const auto b = power_sum_rectangle_expansion(n, static_cast<int>(e), cache);
                BigInt s = 0;
                for (std::size_t i = 0; i < a->dense().size(); ++i) s += a->dense()[i] * b->dense()[i];
                // Centralizer order of the class d^m is d^m m!.
                const auto m = static_cast<unsigned>(n / d);
                const BigInt z = pow(BigInt(d), m) * factorial(m);
                ASSERT_EQ(s, d == e ? z : BigInt(0)) << n << ": " << d << "," << e;
            }
    }
}

TEST(PowerSumRectangle, Errors) {
    ExpansionCache cache(10);
    EXPECT_THROW(power_sum_rectangle_expansion(6, 4, cache), domain_error);
    EXPECT_THROW(power_sum_rectangle_expansion(12, 3, cache), cap_exceeded);
    EXPECT_THROW(multiply_by_power_sum(SchurExpansion::one(), 0), domain_error);
    SchurExpansion e(3);
    EXPECT_THROW(e.add(Partition{2, 1, 1}, 1), domain_error);
}

TEST(ExpansionCache, ConcurrentFillsAgreeWithSerial) {
    ExpansionCache serial;
    std::vector<std::shared_ptr<const SchurExpansion>> want;
    for (int d = 1; d <= 6; ++d) want.push_back(serial.power(d, 24 / d));

    ExpansionCache shared;
    std::vector<std::shared_ptr<const SchurExpansion>> got(want.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = 0; i < want.size(); ++i) {
                const std::size_t j = (i + t) % want.size();
                auto e = shared.power(static_cast<int>(j) + 1, 24 / (static_cast<int>(j) + 1));
                if (t == 0) got[j] = e;
            }
        });
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < want.size(); ++i) ASSERT_EQ(*got[i], *want[i]);
}

TEST(SchurExpansion, TermsAndNegatives) {
    const auto e = from_terms(3, {{{1, 1, 1}, 2}, {{3}, -1}});
    const auto t = e.terms();
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0].first, (Partition{3}));
    EXPECT_EQ(e.num_terms(), 2u);
    ASSERT_TRUE(e.first_negative().has_value());
    EXPECT_EQ(e.first_negative()->second, -1);
    EXPECT_FALSE(e.is_schur_positive());
}
