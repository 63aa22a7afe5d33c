#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <qtshuffle/combinat.hpp>

using namespace qts;
using SF = SymFunc<CoefRat>;

namespace {

const CoefRat q = CoefRat::q_pow(1);
const DyckPath ex10x6 = DyckPath::parse("1100011001010000");

// Every bit sequence, kept if all its points satisfy y*m >= x*n.
std::set<std::string> brute_paths(int m, int n) {
    std::set<std::string> out;
    for (unsigned mask = 0; mask < (1u << (m + n)); ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        std::string s;
        long x = 0, y = 0;
        bool ok = true;
        for (int i = 0; i < m + n; ++i) {
            bool north = mask >> (m + n - 1 - i) & 1;
            s += north ? '1' : '0';
            (north ? y : x)++;
            ok = ok && y * m >= x * n;
        }
        if (ok) out.insert(s);
    }
    return out;
}

int rank_in(const std::vector<Point>& order, Point p) {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == p) return static_cast<int>(i);
    return -1;
}

// Word parking functions of a path, via the consecutive-North rule, and their tdinv.
int brute_maxtdinv(const DyckPath& p) {
    auto a = attack_structure(p);
    int n = p.n();
    std::vector<int> w(n);
    int best = -1;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (int r = 0; r < n; ++r) {
                Point above{a.north_by_rank[r].x, a.north_by_rank[r].y + 1};
                int s = rank_in(a.north_by_rank, above);
                if (s >= 0 && !(w[r] > w[s])) return;
            }
            int td = 0;
            for (int r = 0; r < n; ++r)
                for (int s = r + 1; s <= r + a.attacked[r]; ++s) td += w[r] > w[s];
            best = std::max(best, td);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            w[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return best;
}

} // namespace

TEST(Paths, EnumerationMatchesBruteForce) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            std::set<std::string> got;
            for (const auto& p : enumerate_paths(m, n)) got.insert(p.str());
            EXPECT_EQ(got, brute_paths(m, n)) << m << "," << n;
        }
}

TEST(Paths, KnownValues) {
    auto one = enumerate_paths(1, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].str(), "10");
    EXPECT_EQ(enumerate_paths(2, 2).size(), 2u);
    bool found = false;
    for (const auto& p : enumerate_paths(10, 6)) found = found || p == ex10x6;
    EXPECT_TRUE(found);
    EXPECT_THROW(enumerate_paths(2, 2, std::vector<int>{1}), InvalidCompositionError);
    EXPECT_THROW(enumerate_paths(2, 2, std::vector<int>{}), InvalidCompositionError);
}

TEST(Paths, TouchCompositionPartitionsThePathSet) {
    EXPECT_EQ(touch_composition(ex10x6), std::vector<int>{2});
    EXPECT_EQ(touch_composition(DyckPath::parse("1010")), (std::vector<int>{1, 1}));
    EXPECT_EQ(touch_composition(DyckPath::parse("1100")), std::vector<int>{2});
    for (auto [m, n] : {std::pair{4, 2}, {3, 3}, {6, 4}, {4, 4}}) {
        std::size_t total = 0;
        for (const auto& alpha : compositions_of(std::gcd(m, n))) total += enumerate_paths(m, n, alpha).size();
        EXPECT_EQ(total, enumerate_paths(m, n).size());
    }
}

TEST(Paths, ReadingOrder) {
    auto r = reading_order(10, 6);
    EXPECT_EQ(rank_in(r, {0, 0}), 0);
    EXPECT_EQ(rank_in(r, {5, 3}), 1);
    EXPECT_EQ(rank_in(r, {3, 2}), 3);
    auto r2 = reading_order(2, 2);
    EXPECT_EQ(r2[0], (Point{0, 0}));
    EXPECT_EQ(r2[1], (Point{1, 1}));
    EXPECT_EQ(r2[2], (Point{2, 2}));
    // known labels: the reading order of the points weakly below the path
    auto rp = reading_order(ex10x6);
    std::vector<std::pair<Point, int>> labels{{{0, 0}, 0}, {{5, 3}, 1}, {{10, 6}, 2}, {{3, 2}, 3}, {{8, 5}, 4}, {{1, 1}, 5},
                                              {{6, 4}, 6}, {{4, 3}, 7}, {{9, 6}, 8}, {{2, 2}, 9}, {{7, 5}, 10}, {{0, 1}, 11},
                                              {{5, 4}, 12}, {{3, 3}, 13}, {{8, 6}, 14}, {{1, 2}, 15}, {{6, 5}, 16}, {{4, 4}, 17},
                                              {{7, 6}, 18}, {{0, 2}, 19}, {{5, 5}, 20}, {{3, 4}, 21}, {{6, 6}, 22}};
    ASSERT_EQ(rp.size(), labels.size());
    for (const auto& [p, l] : labels) EXPECT_EQ(rank_in(rp, p), l) << p.x << "," << p.y;
}

TEST(Stats, TenBySixExample) {
    EXPECT_EQ(area(ex10x6), 6);
    EXPECT_EQ(maxtdinv(ex10x6), 9);
    auto a = attack_structure(ex10x6);
    auto rp = reading_order(ex10x6);
    std::vector<int> ranks;
    for (const auto& p : a.north_by_rank) ranks.push_back(rank_in(rp, p));
    EXPECT_EQ(ranks, (std::vector<int>{0, 3, 11, 12, 13, 16}));
    EXPECT_EQ(a.structure.heights(), (std::vector<int>{2, 4, 6, 6, 6, 6}));
    EXPECT_EQ(a.structure.marks, (std::set<std::pair<int, int>>{{0, 2}, {1, 4}}));
}

TEST(Stats, SmallCases) {
    DyckPath ne = DyckPath::parse("10");
    EXPECT_EQ(area(ne), 0);
    EXPECT_EQ(dinv(ne), 0);
    EXPECT_EQ(maxtdinv(ne), 0);
    // (1,2) path NNE: (0,0) does not attack (0,1), and they form a marked corner
    auto a = attack_structure(DyckPath::parse("110"));
    EXPECT_EQ(a.structure.pi.str(), "1010");
    EXPECT_EQ(a.structure.marks, (std::set<std::pair<int, int>>{{0, 1}}));
}

TEST(Stats, DinvImplementationsAgree) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& p : enumerate_paths(m, n)) EXPECT_EQ(dinv(p), dinv_geometric(p)) << p.str();
}

TEST(Stats, MaxTdinvIsTheMaximumOverWordParkingFunctions) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& p : enumerate_paths(m, n)) EXPECT_EQ(maxtdinv(p), brute_maxtdinv(p)) << p.str();
}

TEST(CharFunction, KnownValues) {
    auto ne = MarkedSquarePath::from_heights({1});
    EXPECT_EQ(char_function(ne), SF::h({1}, 1));
    auto corner = MarkedSquarePath::from_heights({1, 2}, {{0, 1}});
    EXPECT_EQ(char_function(corner), SF::e({2}, 2));
    // nothing weakly below: every word has weight 1
    EXPECT_EQ(char_function(MarkedSquarePath::from_heights({1, 2})), SF::h({1, 1}, 2));
    // the cell (0,1) is below: sum over words of q^{[w1 > w2]}
    SF nnee = char_function(MarkedSquarePath::from_heights({2, 2}));
    EXPECT_EQ(nnee, SF::m({2}, 2) + (CoefRat(1) + q) * SF::m({1, 1}, 2));
    EXPECT_THROW(MarkedSquarePath::from_heights({2, 2}, {{0, 1}}), std::invalid_argument);
}

TEST(CharFunction, ContentRestrictedEnumerationMatchesFull) {
    for (const auto& p : enumerate_paths(3, 6)) {
        auto mp = attack_structure(p).structure;
        EXPECT_EQ(char_function(mp), char_function(mp, true)) << p.str();
    }
}

TEST(Rhs, KnownValues) {
    EXPECT_EQ(rhs_compositional(1, 1, 1, {1}), SF::e({1}, 1));
    EXPECT_EQ(rhs_compositional(1, 2, 1, {1}), SF::e({2}, 2));
    EXPECT_THROW(rhs_compositional(2, 2, 1, {1}), std::invalid_argument);
}

TEST(Rhs, CompositionsSumToFullParkingFunctionSum) {
    for (int g = 1; g <= 3; ++g) {
        SF sum(g);
        for (const auto& alpha : compositions_of(g)) sum += rhs_compositional(1, 1, g, alpha);
        EXPECT_EQ(sum, rhs_full(g, g)) << g;
    }
}

// The (2,2) sum is the classical nabla e_2 = m_2 + (1 + q + t) m_11.
TEST(Rhs, FullSumAtTwoTwo) {
    SF expect = SF::m({2}, 2) + (CoefRat(1) + q + CoefRat::t_pow(1)) * SF::m({1, 1}, 2);
    EXPECT_EQ(rhs_full(2, 2), expect);
}

// At q = t = 1 the coefficient of m_{1^n} counts parking functions, (n+1)^{n-1}.
TEST(Rhs, ParkingFunctionCount) {
    for (int n = 1; n <= 4; ++n) {
        SF f = rhs_full(n, n);
        Rational c = f.coeff(Partition(std::vector<int>(n, 1))).eval_at(1, 1);
        long expect = 1;
        for (int i = 1; i < n; ++i) expect *= n + 1;
        EXPECT_EQ(c, Rational(expect)) << n;
    }
}
