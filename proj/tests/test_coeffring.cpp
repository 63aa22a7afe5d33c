#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <qtshuffle/coeffring.hpp>

using namespace qts;

namespace {

const CoefRat q = CoefRat::q_pow(1);
const CoefRat t = CoefRat::t_pow(1);
const CoefRat u = CoefRat::u_pow(1);

CoefRat random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-1, 2), c(-3, 3), n(1, 3);
    CoefRat r;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) r += CoefRat::monomial(c(rng), e(rng), e(rng));
    return r;
}

CoefRat random_coef(std::mt19937& rng) {
    CoefRat a = random_laurent(rng);
    CoefRat b = random_laurent(rng);
    if (b.is_zero()) b = CoefRat(1);
    return a / b;
}

// Dense long division of integer polynomials in q, coefficients low degree first.
std::vector<long> divide_dense(std::vector<long> a, const std::vector<long>& b) {
    std::vector<long> quot(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        long c = a[i] / b.back();
        quot[i - b.size() + 1] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
    }
    for (long x : a) EXPECT_EQ(x, 0);
    return quot;
}

CoefRat from_dense(const std::vector<long>& c) {
    CoefRat r;
    for (std::size_t i = 0; i < c.size(); ++i) r += CoefRat(c[i]) * CoefRat::q_pow(static_cast<int>(i));
    return r;
}

} // namespace

TEST(CoefRat, KnownValues) {
    EXPECT_EQ((q - 1) / (q - 1), CoefRat(1));
    EXPECT_EQ(u * u, q);
    std::vector<long> num{-1, 0, 1}, den{-1, 1};
    EXPECT_EQ((q * q - 1) / (q - 1), from_dense(divide_dense(num, den)));
    EXPECT_EQ((q * q - 1) / (q - 1), q + 1);
}

TEST(CoefRat, EvalAt) {
    EXPECT_EQ((q + t).eval_at(2, 3), Rational(5));
    EXPECT_THROW((CoefRat(1) / (q - 1)).eval_at(1, 5), EvalPoleError);
    EXPECT_EQ((u * u).eval_at(4, 0), Rational(4));
    EXPECT_EQ(u.eval_at(Rational(9, 4), 1), Rational(3, 2));
    EXPECT_THROW(u.eval_at(2, 1), std::domain_error);
}

TEST(CoefRat, DivisionByZeroThrows) {
    EXPECT_THROW(q / CoefRat(0), std::domain_error);
    EXPECT_THROW(CoefRat(q.num(), Laurent{}), std::domain_error);
}

TEST(CoefRat, NormalFormIsCanonical) {
    CoefRat a = (q * t - 1) / (q - 1);
    CoefRat b = ((q * t - 1) * (t + q)) / ((q - 1) * (q + t));
    EXPECT_EQ(a, b);
    CoefRat c = (CoefRat(2) * q - 2) / (CoefRat(4) * t);
    EXPECT_EQ(c.den(), Laurent(2));
    EXPECT_TRUE(c.num().terms().back().first.t == -1);
    CoefRat d = CoefRat(1) / (CoefRat(1) - q);
    EXPECT_GT(d.den().leading().second, 0);
    EXPECT_EQ(d * (CoefRat(1) - q), CoefRat(1));
    EXPECT_EQ(CoefRat(d.num(), d.den()), d);
}

TEST(CoefRat, RingAxiomsOnRandomSamples) {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        CoefRat a = random_coef(rng), b = random_coef(rng), c = random_coef(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, CoefRat(0));
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(CoefRat, EvalIsHomomorphism) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(2, 30);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 20; ++it) {
        CoefRat a = random_coef(rng), b = random_coef(rng);
        Rational u0(d(rng), d(rng)), t0(d(rng), d(rng));
        Rational q0 = u0 * u0;
        try {
            Rational ea = a.eval_at(q0, t0), eb = b.eval_at(q0, t0);
            EXPECT_EQ((a + b).eval_at(q0, t0), ea + eb);
            EXPECT_EQ((a * b).eval_at(q0, t0), ea * eb);
            EXPECT_EQ((a - b).eval_at(q0, t0), ea - eb);
            if (eb != 0) EXPECT_EQ((a / b).eval_at(q0, t0), ea / eb);
            ++checked;
        } catch (const EvalPoleError&) {
        }
    }
    EXPECT_EQ(checked, 20);
}

TEST(CoefRat, IntegerQDegree) {
    EXPECT_TRUE((q + t).has_integer_q_degree());
    EXPECT_FALSE((u + t).has_integer_q_degree());
    EXPECT_TRUE((u * u * u / u).has_integer_q_degree());
}

TEST(CoefRat, TextForm) {
    EXPECT_EQ((q * q - t).str(), "q^2 - t");
    EXPECT_EQ(u.str(), "q^(1/2)");
    EXPECT_EQ((CoefRat(1) / (q - 1)).str(), "(1) / (q - 1)");
    EXPECT_EQ(CoefRat(0).str(), "0");
}

TEST(FastScalar, MatchesExactEvaluation) {
    std::mt19937 rng(5);
    FastPointScope scope(FastScalar::random_point(3));
    const auto& p = FastScalar::point();
    for (int it = 0; it < 20; ++it) {
        CoefRat a = random_coef(rng), b = random_coef(rng);
        FastScalar fa = FastScalar::from_coef(a), fb = FastScalar::from_coef(b);
        EXPECT_EQ(FastScalar::from_coef(a * b), fa * fb);
        EXPECT_EQ(FastScalar::from_coef(a + b), fa + fb);
        EXPECT_EQ(fa.value(), a.eval_at(p.u0 * p.u0, p.t0));
    }
    EXPECT_EQ(FastScalar::u_pow(2), FastScalar::q_pow(1));
}
