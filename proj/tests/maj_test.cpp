#include <gtest/gtest.h>

#include "ramsum/foulkes.hpp"
#include "ramsum/maj.hpp"

using namespace ramsum;

namespace {

// Histogram of maj over explicitly enumerated SYT: place 1..n one at a time,
// recording the row of each entry.
void enumerate_syt(const Partition& shape, std::vector<int>& filled, std::vector<int>& row_of, int next, int n,
                   std::vector<long long>& hist) {
    if (next > n) {
        int maj = 0;
        for (int i = 1; i < n; ++i)
            if (row_of[static_cast<std::size_t>(i)] > row_of[static_cast<std::size_t>(i - 1)]) maj += i;
        if (static_cast<std::size_t>(maj) >= hist.size()) hist.resize(static_cast<std::size_t>(maj) + 1, 0);
        ++hist[static_cast<std::size_t>(maj)];
        return;
    }
    for (std::size_t r = 0; r < shape.length(); ++r) {
        if (filled[r] == shape[r]) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        ++filled[r];
        row_of[static_cast<std::size_t>(next - 1)] = static_cast<int>(r);
        enumerate_syt(shape, filled, row_of, next + 1, n, hist);
        --filled[r];
    }
}

std::vector<long long> maj_histogram(const Partition& shape) {
    std::vector<int> filled(shape.length(), 0), row_of(static_cast<std::size_t>(shape.size()), 0);
    std::vector<long long> hist;
    enumerate_syt(shape, filled, row_of, 1, shape.size(), hist);
    return hist;
}

}  // namespace

TEST(MajDistribution, RowAndColumnShapes) {
    for (int n = 1; n <= 10; ++n) {
        const auto row = maj_distribution(Partition{n});
        EXPECT_EQ(row.count(n), 1);
        EXPECT_EQ(row.total(), 1);
        // The single column tableau has maj n(n-1)/2.
        const auto col = maj_distribution(Partition::rectangle(1, n));
        const int m = (n * (n - 1) / 2) % n;
        EXPECT_EQ(col.count(m == 0 ? n : m), 1);
    }
}

TEST(MajDistribution, TwoByTwo) {
    const auto d = maj_distribution(Partition{2, 2});
    EXPECT_EQ(d.counts(), (std::vector<BigInt>{0, 1, 0, 1}));
    EXPECT_THROW((void)d.count(0), domain_error);
    EXPECT_THROW((void)d.count(5), domain_error);
}

TEST(MajGeneratingFunction, MatchesTableauEnumeration) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            const auto gf = maj_generating_function(p);
            const auto hist = maj_histogram(p);
            ASSERT_EQ(gf.size(), hist.size()) << p.str();
            for (std::size_t i = 0; i < gf.size(); ++i) ASSERT_EQ(gf[i], hist[i]) << p.str() << " q^" << i;
        }
}

TEST(MajDistribution, TotalIsNumberOfTableaux) {
    for (int n = 1; n <= 14; ++n)
        for (const auto& p : partitions_of(n)) ASSERT_EQ(maj_distribution(p).total(), count_syt(p)) << p.str();
}

TEST(MajDistribution, CapAndErrors) {
    EXPECT_THROW(maj_distribution(Partition{15}), cap_exceeded);
    EXPECT_NO_THROW(maj_distribution(Partition{15}, 15));
    EXPECT_THROW(maj_distribution(Partition{}), domain_error);
}

TEST(QInteger, DivisionIsExactInverse) {
    QPolynomial p{1, 2, 3};
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(detail::divide_by_q_integer(detail::times_q_integer(p, k), k), p);
    EXPECT_THROW(detail::divide_by_q_integer(QPolynomial{1, 0, 1}, 2), internal_error);
}

TEST(MajDistribution, AgreesWithFoulkesCharacters) {
    ExpansionCache cache;
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto ell = foulkes_schur_multiplicities(n, r, cache);
            for (std::size_t i = 0; i < ell.index().size(); ++i)
                ASSERT_EQ(ell.dense()[i], maj_distribution(ell.index()[i]).count(r))
                    << n << " r=" << r << " " << ell.index()[i].str();
        }
}
