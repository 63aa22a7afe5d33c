#include <functional>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include <qtshuffle/symfunc.hpp>

using namespace qts;
using SF = SymFunc<CoefRat>;

namespace {

const CoefRat q = CoefRat::q_pow(1);

// Polynomials in k commuting variables, for brute-force expansion.
using Poly = std::map<std::vector<int>, long>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

// All monomials of degree n in k variables, optionally squarefree.
Poly elementary_like(int k, int n, bool squarefree) {
    Poly r;
    std::vector<int> e(k, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == k) {
            if (rest == 0) r[e] += 1;
            return;
        }
        for (int a = 0; a <= (squarefree ? std::min(1, rest) : rest); ++a) {
            e[i] = a;
            rec(i + 1, rest - a);
        }
        e[i] = 0;
    };
    rec(0, n);
    return r;
}

Poly power_poly(int k, int n) {
    Poly r;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(k, 0);
        e[i] = n;
        r[e] = 1;
    }
    return r;
}

Poly brute(Basis b, const Partition& lam, int k) {
    Poly r{{std::vector<int>(k, 0), 1}};
    for (int p : lam.parts()) {
        Poly f = b == Basis::homogeneous ? elementary_like(k, p, false)
               : b == Basis::elementary  ? elementary_like(k, p, true)
                                         : power_poly(k, p);
        r = poly_mul(r, f);
    }
    return r;
}

// The coefficient of m_mu is the coefficient of x^mu.
long coefficient_of(const Poly& f, const Partition& mu, int k) {
    std::vector<int> e(k, 0);
    for (int i = 0; i < mu.length(); ++i) e[i] = mu[i];
    auto it = f.find(e);
    return it == f.end() ? 0 : it->second;
}

} // namespace

TEST(SymFunc, BasesAgreeWithBruteForceExpansion) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            for (Basis b : {Basis::homogeneous, Basis::elementary, Basis::powersum}) {
                SF f = SF::in_basis(b, lam, n);
                Poly g = brute(b, lam, n);
                for (const auto& mu : partitions_of(n))
                    EXPECT_EQ(f.coeff(mu), CoefRat(coefficient_of(g, mu, n))) << basis_name(b) << lam.str() << " at m" << mu.str();
            }
}

TEST(SymFunc, ConversionKnownValues) {
    auto p = basis_convert(SF::m({1}, 3), Basis::powersum);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.at(Partition{1}), CoefRat(1));
    EXPECT_EQ(SF::h({2}, 2), SF::m({2}, 2) + SF::m({1, 1}, 2));
    EXPECT_EQ(SF::e({2}, 2), SF::m({1, 1}, 2));
}

TEST(SymFunc, RoundTripsUpToDegreeEight) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            SF f = SF::m(lam, 8);
            for (Basis b : {Basis::homogeneous, Basis::elementary, Basis::powersum})
                EXPECT_EQ(SF::from_basis(basis_convert(f, b), b, 8), f) << lam.str() << basis_name(b);
        }
}

TEST(SymFunc, ProductMatchesBruteForce) {
    SF f = SF::h({2}, 5) + CoefRat(3) * SF::e({1}, 5);
    SF g = SF::p({2, 1}, 5);
    Poly pf = brute(Basis::homogeneous, {2}, 5), pe = brute(Basis::elementary, {1}, 5);
    for (auto& [e, c] : pe) pf[e] += 3 * c;
    Poly prod = poly_mul(pf, brute(Basis::powersum, {2, 1}, 5));
    SF fg = f * g;
    for (int n = 0; n <= 5; ++n)
        for (const auto& mu : partitions_of(n)) EXPECT_EQ(fg.coeff(mu), CoefRat(coefficient_of(prod, mu, 5)));
}

TEST(Plethysm, KnownValues) {
    Alphabet a({"y"});
    a.add_x(CoefRat(1)).add_const(q - 1, {1});
    auto r1 = plethystic_substitute(SF::p({1}, 3), a);
    ASSERT_EQ(r1.size(), 2u);
    EXPECT_EQ(r1.at({0}), SF::p({1}, 3));
    EXPECT_EQ(r1.at({1}), SF::constant(q - 1, 3));
    auto r2 = plethystic_substitute(SF::p({2}, 3), a);
    EXPECT_EQ(r2.at({0}), SF::p({2}, 3));
    EXPECT_EQ(r2.at({2}), SF::constant(q * q - 1, 3));
    EXPECT_EQ(r2.size(), 2u);
    auto r3 = plethystic_substitute(SF::e({1}, 3), a);
    EXPECT_EQ(r3.at({0}), SF::e({1}, 3));
    EXPECT_EQ(r3.at({1}), SF::constant(q - 1, 3));
}

TEST(Plethysm, IdentityAlphabet) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : partitions_of(n)) {
            SF f = SF::h(lam, 5) + CoefRat(2) * SF::m(lam, 5);
            auto r = plethystic_substitute(f, Alphabet::x());
            ASSERT_EQ(r.size(), 1u);
            EXPECT_EQ(r.at({}), f);
        }
}

// h_n[X + (q-1)y] = sum_j h_{n-j}[X] h_j[(q-1)y], and h_j[(q-1)y] = (q^j - q^{j-1}) y^j by
// expanding h[qy] * (sum (-1)^c e_c[y]) with e_c[y] = 0 for c > 1.
TEST(Plethysm, HomogeneousOfShiftedAlphabet) {
    Alphabet a({"y"});
    a.add_x(CoefRat(1)).add_const(q - 1, {1});
    for (int n = 1; n <= 5; ++n) {
        auto r = plethystic_substitute(SF::h({n}, n), a);
        for (int j = 0; j <= n; ++j) {
            CoefRat c = j == 0 ? CoefRat(1) : CoefRat::q_pow(j) - CoefRat::q_pow(j - 1);
            EXPECT_EQ(r.at({j}), c * SF::h({n - j}, n)) << n << " " << j;
        }
    }
}

TEST(Plethysm, RejectsNonMonomialScalar) {
    Alphabet a;
    EXPECT_THROW(a.add_x(CoefRat(1) / (q - 1)), std::invalid_argument);
}

TEST(PExp, KnownValues) {
    Alphabet a({"y"});
    a.add_x(CoefRat(-1), {-1});
    auto c = pexp_coefficients<CoefRat>(a, "y", -1, -1, 4);
    EXPECT_EQ(c.at(-1), -SF::e({1}, 4));

    Alphabet b({"z"});
    b.add_x(CoefRat(-1), {1});
    auto d = pexp_coefficients<CoefRat>(b, "z", 0, 6, 5);
    EXPECT_EQ(d.at(0), SF::one(5));
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(d.at(n), (n % 2 ? CoefRat(-1) : CoefRat(1)) * SF::e({n}, 5));
    EXPECT_EQ(d.count(6), 0u);

    Alphabet w({"z"});
    w.add_x(CoefRat(1), {-1});
    auto g = pexp_coefficients<CoefRat>(w, "z", -2, -2, 4);
    EXPECT_EQ(g.at(-2), SF::h({2}, 4));
}

TEST(WordMultiset, KnownValues) {
    std::vector<std::pair<std::vector<int>, CoefRat>> w1{{{1, 2}, CoefRat(1)}, {{1, 1}, CoefRat(1)}, {{2, 2}, CoefRat(1)}};
    EXPECT_EQ(from_word_multiset(w1, 2), SF::m({1, 1}, 2) + SF::m({2}, 2));
    std::vector<std::pair<std::vector<int>, CoefRat>> w2{{{1}, CoefRat(1)}};
    EXPECT_EQ(from_word_multiset(w2, 1), SF::m({1}, 1));
    std::vector<std::pair<std::vector<int>, CoefRat>> w3;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (a > b) w3.push_back({{a, b}, CoefRat(1)});
    EXPECT_EQ(from_word_multiset(w3, 2, 3), SF::e({2}, 2));
}

TEST(WordMultiset, DetectsAsymmetricInput) {
    std::vector<std::pair<std::vector<int>, CoefRat>> w{{{1, 1}, CoefRat(1)}, {{2, 2}, CoefRat(2)}};
    EXPECT_THROW(from_word_multiset(w, 2), AsymmetricInputError);
    std::vector<std::pair<std::vector<int>, CoefRat>> v{{{1, 2}, CoefRat(1)}};
    EXPECT_THROW(from_word_multiset(v, 2, 3), AsymmetricInputError);
}
