#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <qtshuffle/actions.hpp>
#include <qtshuffle/braid.hpp>

using namespace qts;
using VE = VElem<CoefRat>;

namespace {

const BaseOperators<CoefRat> base;

// Equality in the representation, tested on a spanning set of V_k and on d_+^k(1).
::testing::AssertionResult same_action(const BraidWord& a, const BraidWord& b, int degree = 1) {
    if (a.k != b.k) return ::testing::AssertionFailure() << "strand counts differ";
    std::vector<VE> inputs{dplus_power<CoefRat>(a.k, a.k + degree)};
    for (const auto& [name, f] : spanning_set<CoefRat>(a.k, degree)) inputs.push_back(f);
    for (const auto& f : inputs)
        if (evaluate(a, f, base) != evaluate(b, f, base))
            return ::testing::AssertionFailure() << a.str() << " != " << b.str() << " on " << f.str();
    return ::testing::AssertionSuccess();
}

BraidWord bw(int k, const Word& w) { return BraidWord(k, w); }

Rational random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(1, 996);
    return Rational(d(rng), 997);
}

// k distinct random points and a random slope, or nothing if the alpha steps collide.
std::optional<std::pair<PointConfig, std::vector<int>>> random_config(std::mt19937& rng, int k, int max_part) {
    std::uniform_int_distribution<int> part(1, max_part), num(1, 9), den(1, 9);
    std::vector<Rational> v;
    while (static_cast<int>(v.size()) < k) {
        Rational x = random_point(rng);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    std::vector<int> alpha(k);
    for (auto& a : alpha) a = part(rng);
    PointConfig c(v, Rational(num(rng), den(rng)) + Rational(1, 1009));
    try {
        final_config(c, alpha);
    } catch (const InadmissibleBraidError&) {
        return std::nullopt;
    }
    return std::make_pair(c, alpha);
}

} // namespace

TEST(BraidWord, ValidatesIndices) {
    EXPECT_THROW(BraidWord(2, parse_word("T2")), MalformedWordError);
    EXPECT_THROW(BraidWord(2, parse_word("z3")), MalformedWordError);
    EXPECT_THROW(BraidWord(2, parse_word("d+")), MalformedWordError);
    EXPECT_NO_THROW(parse_braid("z1 T1 ytilde2", 2));
    EXPECT_THROW(evaluate(parse_braid("z1", 1), VE::one(2, 2)), StrandMismatchError);
}

TEST(BraidWord, EvaluateKnownValues) {
    VE y1 = VE::y_monomial({1}, 3);
    // z_1 y_1 = qt y_1 in the base action
    EXPECT_EQ(evaluate(parse_braid("z1", 1), y1), y1);
    EXPECT_EQ(evaluate(BraidWord(1, {}), y1), y1);
    EXPECT_EQ(evaluate(parse_braid("ytilde1", 1), VE::one(1, 3)), -y1);
}

TEST(BraidWord, PresentationRelationsHold) {
    for (int k = 2; k <= 3; ++k) {
        auto rel = [&](const std::string& l, const std::string& r) {
            EXPECT_TRUE(same_action(parse_braid(l, k), parse_braid(r, k))) << l << " = " << r;
        };
        for (int i = 1; i < k; ++i) {
            std::string Ti = "T" + std::to_string(i), Tii = Ti + "^-1", s = std::to_string(i), s1 = std::to_string(i + 1);
            rel("y" + s1, Tii + " y" + s + " " + Tii);
            rel("z" + s1, Ti + " z" + s + " " + Ti);
            rel("ytilde" + s1, Ti + " ytilde" + s + " " + Ti);
            for (int j = 1; j <= k; ++j)
                if (j != i && j != i + 1) {
                    std::string sj = std::to_string(j);
                    rel("y" + sj + " " + Ti, Ti + " y" + sj);
                    rel("z" + sj + " " + Ti, Ti + " z" + sj);
                    rel("ytilde" + sj + " " + Ti, Ti + " ytilde" + sj);
                }
        }
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                std::string a = std::to_string(i), b = std::to_string(j);
                rel("y" + a + " y" + b, "y" + b + " y" + a);
                rel("z" + a + " z" + b, "z" + b + " z" + a);
                rel("ytilde" + a + " ytilde" + b, "ytilde" + b + " ytilde" + a);
            }
        rel("z1 T1 y1 T1^-1", "T1^-1 y1 T1^-1 z1");
        rel("ytilde1 T1 z1", "T1 z1 T1 ytilde1 T1");
    }
    EXPECT_TRUE(same_action(parse_braid("T1 T2 T1", 3), parse_braid("T2 T1 T2", 3)));
}

TEST(BraidWord, YThroughYtilde) {
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= k; ++i)
            EXPECT_TRUE(same_action(bw(k, y_via_ytilde(i, k)), bw(k, gen(Gen::Y, i)))) << k << " " << i;
}

TEST(ElementaryStep, KnownValues) {
    PointConfig lo({Rational(1, 5)}, Rational(1)), hi({Rational(4, 5)}, Rational(1));
    EXPECT_EQ(elementary_step(lo, 0).first.str(), "z1");
    EXPECT_EQ(elementary_step(hi, 0).first.str(), "ytilde1");
    EXPECT_EQ(elementary_step(hi, 0).second.v[0], Rational(3, 10));

    // t = 1/2: 4/5 -> 3/10 passes 1/5, so it stays second
    PointConfig two({Rational(1, 5), Rational(4, 5)}, Rational(1));
    auto [w, next] = elementary_step(two, 1);
    EXPECT_EQ(w.str(), "ytilde2");
    // 1/5 -> 7/10 overtakes 3/5
    PointConfig two2({Rational(1, 5), Rational(3, 5)}, Rational(1));
    EXPECT_EQ(elementary_step(two2, 0).first.str(), "T1 z1");
    // 9/10 -> 2/5 passes 3/10 going left: position 2 -> 2
    PointConfig two3({Rational(9, 10), Rational(3, 10)}, Rational(1));
    EXPECT_EQ(elementary_step(two3, 0).first.str(), "ytilde2");
    // 7/10 -> 1/5 drops below 3/10: T*_{1 up 2} ytilde_2
    PointConfig two4({Rational(7, 10), Rational(3, 10)}, Rational(1));
    EXPECT_EQ(elementary_step(two4, 0).first.str(), "T1^-1 ytilde2");
}

TEST(ElementaryStep, Inadmissible) {
    PointConfig collide({Rational(1, 5), Rational(7, 10)}, Rational(1));
    EXPECT_THROW(elementary_step(collide, 1), InadmissibleBraidError);
    PointConfig at_t({Rational(1, 2)}, Rational(1));
    EXPECT_THROW(elementary_step(at_t, 0), InadmissibleBraidError);
    EXPECT_THROW(PointConfig({Rational(1, 3), Rational(1, 3)}, Rational(1)), InadmissibleBraidError);
}

// Positions computed directly: a counts the points below v_i, a' those below its image.
TEST(ElementaryStep, PositionsMatchDirectCount) {
    std::mt19937 rng(7);
    int checked = 0;
    while (checked < 200) {
        auto rc = random_config(rng, 3, 2);
        if (!rc) continue;
        const auto& c = rc->first;
        int i = checked % 3;
        Rational x = c.v[i], nx = x < c.t ? x + 1 - c.t : x - c.t;
        int a = 1, a2 = 1;
        for (int j = 0; j < 3; ++j) {
            a += c.v[j] < x;
            if (j != i) a2 += c.v[j] < nx;
        }
        Word expect = x < c.t ? down(a2, a) * gen(Gen::Z, a) : up_star(a2, a) * gen(Gen::YTilde, a);
        EXPECT_EQ(elementary_step(c, i).first.gens, expect);
        ++checked;
    }
}

TEST(SpecialBraid, KnownValues) {
    PointConfig c({Rational(1, 5), Rational(2, 3)}, Rational(1));
    EXPECT_TRUE(special_braid(c, {1, 1}).empty());
    // one point, two crossings: the step crosses the vertical wall iff it starts left of t
    for (auto [x, g] : {std::pair{Rational(1, 5), Gen::Z}, {Rational(3, 4), Gen::YTilde}}) {
        PointConfig one({x}, Rational(1));
        auto w = special_braid(one, {2});
        ASSERT_EQ(w.size(), 1u);
        EXPECT_EQ(w.gens[0].kind, g);
    }
}

TEST(SpecialBraid, OrderIndependent) {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 100) {
        int k = 2 + checked % 3;
        auto rc = random_config(rng, k, 3);
        if (!rc) continue;
        auto [c, alpha] = *rc;
        std::vector<int> seq;
        for (int i = 0; i < k; ++i) seq.insert(seq.end(), alpha[i] - 1, i);
        std::shuffle(seq.begin(), seq.end(), rng);
        auto [w1, f1] = braid_of_steps(c, seq);
        std::shuffle(seq.begin(), seq.end(), rng);
        auto [w2, f2] = braid_of_steps(c, seq);
        EXPECT_EQ(f1.v, f2.v);
        EXPECT_TRUE(same_action(w1, w2));
        EXPECT_TRUE(same_action(w1, special_braid(c, alpha)));
        ++checked;
    }
}

TEST(Trains, KnownValues) {
    BraidWord w(5, up(1, 3) * up(3, 5));
    EXPECT_EQ(rewrite_trains(w, {TrainRule::Gluing, 1, 3, 5}, 0).gens, up(1, 5));
    BraidWord mixed(5, up(1, 4) * up(4, 2));
    EXPECT_EQ(rewrite_trains(mixed, {TrainRule::Gluing, 1, 4, 2}, 0).gens, up(1, 2));
    BraidWord tz(4, down(3, 1) * gen(Gen::Z, 1));
    EXPECT_EQ(rewrite_trains(tz, {TrainRule::Tz, 3, 1}, 0).gens, gen(Gen::Z, 3) * up(3, 1));
    EXPECT_THROW(rewrite_trains(tz, {TrainRule::Tz, 3, 1}, 1), PatternMismatchError);
    EXPECT_THROW(rewrite_trains(tz, {TrainRule::Overtaking, 1, 2, 1, 3}, 0), PatternMismatchError);
}

TEST(Trains, RewritesPreserveEvaluation) {
    std::mt19937 rng(3);
    const std::vector<TrainRule> rules{TrainRule::Gluing, TrainRule::Collision, TrainRule::Overtaking, TrainRule::Tz, TrainRule::Tytilde};
    int cases = 0, by_rule[5] = {};
    while (cases < 100) {
        int k = 2 + (cases / 5) % 3;
        std::uniform_int_distribution<int> idx(1, k), kind(0, 4), len(0, 2);
        TrainPattern p{rules[cases % 5], idx(rng), idx(rng), idx(rng), idx(rng)};
        Word lhs;
        try {
            lhs = train_rule_sides(p).first;
        } catch (const PatternMismatchError&) {
            continue;
        }
        auto random_gens = [&] {
            Word w;
            for (int n = len(rng); n > 0; --n) {
                int c = kind(rng);
                if (c < 2 && k > 1)
                    w.push_back({c ? Gen::T : Gen::Tinv, std::uniform_int_distribution<int>(1, k - 1)(rng)});
                else
                    w.push_back({c == 2 ? Gen::Y : c == 3 ? Gen::Z : Gen::YTilde, idx(rng)});
            }
            return w;
        };
        Word pre = random_gens(), post = random_gens();
        BraidWord w(k, pre * lhs * post);
        BraidWord r = rewrite_trains(w, p, pre.size());
        EXPECT_TRUE(same_action(w, r, 0)) << rule_name(p.rule) << " " << p.a << " " << p.b << " " << p.c << " " << p.d;
        ++by_rule[static_cast<int>(p.rule)];
        ++cases;
    }
    for (int c : by_rule) EXPECT_GT(c, 0);
}

TEST(Creation, KnownValues) {
    EXPECT_EQ(creation_hom(parse_braid("z2", 3), Creation::PhiPlus).str(), "z3");
    EXPECT_EQ(creation_hom(parse_braid("y2", 3), Creation::PhiMinus).str(), "y2");
    EXPECT_EQ(creation_hom(parse_braid("T1 y1", 2), Creation::PhiPlusStar).str(), "T2 y2");
    EXPECT_EQ(creation_hom(parse_braid("y1", 2), Creation::PhiMinus).k, 3);
}

// Geometric oracles: the braid recomputed with one extra fixed point.
TEST(Creation, ExtraFixedPoint) {
    std::mt19937 rng(5);
    int checked = 0;
    while (checked < 30) {
        int k = 1 + checked % 3;
        auto rc = random_config(rng, k, 3);
        if (!rc) continue;
        auto [c, alpha] = *rc;
        BraidWord B = special_braid(c, alpha);
        auto with_point = [&](const Rational& x) -> std::optional<BraidWord> {
            std::vector<Rational> v = c.v;
            if (std::find(v.begin(), v.end(), x) != v.end()) return std::nullopt;
            v.push_back(x);
            std::vector<int> al = alpha;
            al.push_back(1);
            try {
                return special_braid(PointConfig(v, 1 / c.t - 1), al);
            } catch (const InadmissibleBraidError&) {
                return std::nullopt;
            }
        };
        // phi_+: a point left of every position the others ever take
        Rational lowest = 1;
        std::vector<int> seq = canonical_order(c, alpha);
        PointConfig cur = c;
        for (const auto& x : cur.v) lowest = std::min(lowest, x);
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            cur = elementary_step(cur, *it).second;
            for (const auto& x : cur.v) lowest = std::min(lowest, x);
        }
        auto Bp = with_point(lowest / 2);
        ASSERT_TRUE(Bp);
        EXPECT_TRUE(same_action(*Bp, creation_hom(B, Creation::PhiPlus)));

        PointConfig fin = final_config(c, alpha);
        auto pos = [](const std::vector<Rational>& v, const Rational& x) {
            return 1 + static_cast<int>(std::count_if(v.begin(), v.end(), [&](const Rational& y) { return y < x; }));
        };
        // phi_-: a point at t, i and i' its initial and final positions
        if (auto Bm = with_point(c.t)) {
            int i = pos(c.v, c.t), i2 = pos(fin.v, c.t);
            BraidWord lhs = BraidWord(k + 1, down_star(k + 1, i2)) * *Bm;
            BraidWord rhs = creation_hom(B, Creation::PhiMinus) * BraidWord(k + 1, down_star(k + 1, i));
            EXPECT_TRUE(same_action(lhs, rhs));
        }
        // phi_+^*: a point at 1 - t
        Rational X = 1 - c.t;
        if (auto Bs = with_point(X)) {
            int i = pos(c.v, X), i2 = pos(fin.v, X);
            BraidWord lhs = *Bs * BraidWord(k + 1, down(i, 1));
            BraidWord rhs = BraidWord(k + 1, down(i2, 1)) * creation_hom(B, Creation::PhiPlusStar);
            EXPECT_TRUE(same_action(lhs, rhs));
        }
        ++checked;
    }
}

TEST(ColoringBraid, KnownValues) {
    EXPECT_TRUE(braid_of_coloring(1, 1, final_coloring(1, 1, {1})).empty());
    BraidWord w = braid_of_coloring(2, 2, final_coloring(2, 2, {1, 1}));
    EXPECT_EQ(w.k, 2);
    EXPECT_EQ(braid_of_coloring(3, 4, final_coloring(3, 4, {1})).str(), "ytilde1 z1 ytilde1 z1 ytilde1");
}

// Every interval meets the antidiagonal; alpha_i counts the lattice lines x + y = N it crosses.
TEST(ColoringBraid, WrapCountsMatchCrossings) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 7; ++n) {
            auto dp = recursion_dp<CoefRat>(m, n);
            SweepGeometry g(m, n);
            for (std::size_t j = 1; j < dp.strata.size(); ++j) {
                Rational h = g.stratum_height(dp, j);
                for (const auto& [c, val] : dp.strata[j])
                    for (const auto& I : c.iv) {
                        // sample the interval densely and count sign changes of frac(x + y)
                        Rational xa = I.x, xb = (Rational(I.y) - h) / g.s;
                        int crossings = 0;
                        for (int N = 0; N <= m + n + 2; ++N) {
                            Rational x = (Rational(N) - h) / (1 + g.s);
                            crossings += x > xa && x < xb;
                        }
                        EXPECT_EQ(strand_wrap(g, h, I).alpha, crossings);
                        EXPECT_GE(crossings, 1);
                    }
            }
        }
}

TEST(ColoringBraid, StableUnderSmallerEpsilon) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 7; ++n) {
            auto dp = recursion_dp<CoefRat>(m, n);
            SweepGeometry g(m, n), g2(m, n, SweepGeometry(m, n).eps / 7);
            for (std::size_t j = 1; j < dp.strata.size(); ++j)
                for (const auto& [c, val] : dp.strata[j]) {
                    auto a = coloring_braid(g, c, g.stratum_height(dp, j)), b = coloring_braid(g2, c, g2.stratum_height(dp, j));
                    EXPECT_EQ(a.word, b.word);
                    EXPECT_EQ(a.inv_initial, b.inv_initial);
                    EXPECT_EQ(a.inv_final, b.inv_final);
                }
        }
}

TEST(ColoringValue, KnownValues) {
    EXPECT_EQ(theorem_main_eval(1, 1, final_coloring(1, 1, {1})), -VE::y_monomial({1}, 1));
    auto dp = recursion_dp<CoefRat>(2, 3);
    SweepGeometry g(2, 3);
    for (std::size_t j = 1; j < dp.strata.size(); ++j)
        for (const auto& [c, val] : dp.strata[j]) {
            VE r = theorem_main_eval<CoefRat>(g, c, g.stratum_height(dp, j), 3);
            EXPECT_EQ(r, val) << c.str();
            EXPECT_TRUE(r.has_integer_q_degree());
        }
}

TEST(ColoringValue, AgreesWithRecursion) {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; m + n <= 7; ++n) {
            auto dp = recursion_dp<CoefRat>(m, n);
            SweepGeometry g(m, n);
            for (std::size_t j = 1; j < dp.strata.size(); ++j)
                for (const auto& [c, val] : dp.strata[j])
                    EXPECT_EQ(theorem_main_eval<CoefRat>(g, c, g.stratum_height(dp, j), n), val) << m << "," << n << " " << j << " " << c.str();
        }
}

TEST(ColoringValue, TransitionRules) {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; m + n <= 7; ++n) {
            auto dp = recursion_dp<CoefRat>(m, n);
            SweepGeometry g(m, n);
            for (const auto& tr : dp.transitions) {
                auto [l, r] = braid_rule_sides<CoefRat>(g, tr, dp.points[tr.step], g.stratum_height(dp, tr.step),
                                                        g.stratum_height(dp, tr.step + 1), n);
                EXPECT_EQ(l, r) << m << "," << n << " " << tr.kind << " " << tr.from.str() << " -> " << tr.to.str();
            }
        }
}

TEST(SingleStrand, KnownValues) {
    EXPECT_TRUE(single_strand_braid(1, 1).empty());
    for (int a = 1; a <= 4; ++a) {
        Word expect;
        for (int i = 1; i < a; ++i) expect = expect * parse_word("y1 z1");
        EXPECT_EQ(single_strand_family(1, 1, a).gens, expect);
    }
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto b = single_strand_braid(m, n);
            EXPECT_EQ(static_cast<int>(b.size()), (m - 1) + (n - 1));
            EXPECT_EQ(std::count_if(b.gens.begin(), b.gens.end(), [](const Gen& g) { return g.kind == Gen::Z; }), m - 1);
        }
}

// b_{m,n}(-y_1, (qt)^{-1} z_1)(-y_1 d_+^*) = (-1)^{m-1} rho*_{m,n}(d_+)
TEST(SingleStrand, RaisingOperatorOfTheTower) {
    Tower<CoefRat> tw;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; m + n <= 6; ++n) {
            if (std::gcd(m, n) != 1) continue;
            BraidWord b = single_strand_braid(m, n);
            CoefRat sgn((m - 1) % 2 ? -1 : 1);
            for (const auto& [name, f] : spanning_set<CoefRat>(0, 2))
                EXPECT_EQ(evaluate(b, -mult_y(1, act_dplus_star(f)), base), sgn * tw.action(m, n, true)->raise(f)) << m << "," << n;
        }
}

// The one-part composition (a) of the (am, an) rectangle wraps into b^{(a)}_{m,n}.
TEST(SingleStrand, MatchesColoringBraid) {
    for (auto [m, n, a] : {std::tuple{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {1, 1, 3}, {2, 3, 1}})
        EXPECT_TRUE(same_action(single_strand_family(m, n, a), braid_of_coloring(a * m, a * n, final_coloring(a * m, a * n, {a}))))
            << m << "," << n << "," << a;
}
