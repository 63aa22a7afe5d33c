#pragma once

#include <stdexcept>
#include <vector>

#include <qtshuffle/actions/tower.hpp>
#include <qtshuffle/combinat/paths.hpp>
#include <qtshuffle/symfunc.hpp>

namespace qts {

// d_-^r y_1^{alpha_1 - 1} ... y_r^{alpha_r - 1} d_+^r, with the A_{q^{-1}} generators of a
// rho* action: d_+ -> d_+^*, y_i -> z_i.
inline Word compositional_word(const std::vector<int>& alpha, bool star) {
    int r = static_cast<int>(alpha.size());
    Word w;
    for (int i = 0; i < r; ++i) w.push_back(Gen{Gen::DMinus});
    for (int i = 0; i < r; ++i)
        for (int e = 1; e < alpha[i]; ++e) w.push_back(Gen{star ? Gen::Z : Gen::Y, i + 1});
    for (int i = 0; i < r; ++i) w.push_back(Gen{star ? Gen::DPlusStar : Gen::DPlus});
    return w;
}

// (-1)^{g(m1+1)} q^{r-g} rho*_{m1,n1}(d_-^r y^{alpha-1} d_+^r) 1, an element of V_0.
template <class S>
VElem<S> lhs_state(Tower<S>& tower, int m1, int n1, int g, const std::vector<int>& alpha) {
    check_coprime_slope(m1, n1);
    check_composition(alpha, g);
    int r = static_cast<int>(alpha.size());
    auto ops = tower.ops_for(m1, n1, true);
    VElem<S> f = ops->apply(compositional_word(alpha, true), VElem<S>::one(0, g * n1));
    S sc = S::q_pow(r - g);
    if (g * (m1 + 1) % 2) sc = -sc;
    return sc * f;
}

inline SymFunc<CoefRat> lhs_compositional(Tower<CoefRat>& tower, int m1, int n1, int g, const std::vector<int>& alpha) {
    return lhs_state(tower, m1, n1, g, alpha).to_sym(g * n1);
}

inline SymFunc<CoefRat> lhs_compositional(int m1, int n1, int g, const std::vector<int>& alpha) {
    Tower<CoefRat> tower;
    return lhs_compositional(tower, m1, n1, g, alpha);
}

// (C_a F)[X] = (-q)^{1-a} F[X + (q^{-1} - 1) z] pExp[z^{-1} X] z^a |_{z^0}
inline SymFunc<CoefRat> op_C(int a, const SymFunc<CoefRat>& f, int cap) {
    Alphabet al = Alphabet::x({"z"});
    al.add_const(CoefRat::q_pow(-1), {1}).add_const(CoefRat(-1), {1});
    SymFunc<CoefRat> lifted(cap, f.terms());
    SymFunc<CoefRat> out(cap);
    for (const auto& [aux, fj] : plethystic_substitute(lifted, al)) {
        int n = aux[0] + a;
        if (n < 0 || n > cap) continue;
        out += fj * SymFunc<CoefRat>::h(Partition{n}, cap);
    }
    CoefRat sc = CoefRat::q_pow(1 - a);
    if ((1 - a) % 2) sc = -sc;
    return sc * out;
}

// D_n F = F[X + (q-1)(t-1) z^{-1}] pExp[-z X] |_{z^n}
inline SymFunc<CoefRat> op_D(int n, const SymFunc<CoefRat>& f, int cap) {
    Alphabet al = Alphabet::x({"z"});
    CoefRat q = CoefRat::q_pow(1), t = CoefRat::t_pow(1);
    al.add_const(q * t, {-1}).add_const(-q, {-1}).add_const(-t, {-1}).add_const(CoefRat(1), {-1});
    SymFunc<CoefRat> lifted(cap, f.terms());
    SymFunc<CoefRat> out(cap);
    for (const auto& [aux, fj] : plethystic_substitute(lifted, al)) {
        int i = n - aux[0];
        if (i < 0 || i > cap) continue;
        SymFunc<CoefRat> e = SymFunc<CoefRat>::e(Partition{i}, cap);
        out += fj * (i % 2 ? -e : e);
    }
    return out;
}

// C_{alpha_1} ... C_{alpha_r} 1
inline SymFunc<CoefRat> c_alpha(const std::vector<int>& alpha) {
    if (alpha.empty()) throw InvalidCompositionError("composition must be nonempty");
    int k = 0;
    for (int a : alpha) k += a;
    SymFunc<CoefRat> f = SymFunc<CoefRat>::one(k);
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) f = op_C(*it, f, k);
    return f;
}

// (-1)^k q^{r-k} rho*_{0,1}(d_-^r y^{alpha-1} d_+^r) 1
inline SymFunc<CoefRat> c_alpha_from_word(Tower<CoefRat>& tower, const std::vector<int>& alpha) {
    int k = 0;
    for (int a : alpha) k += a;
    check_composition(alpha, k);
    int r = static_cast<int>(alpha.size());
    auto ops = tower.ops_for(0, 1, true);
    VElem<CoefRat> f = ops->apply(compositional_word(alpha, true), VElem<CoefRat>::one(0, k));
    CoefRat sc = CoefRat::q_pow(r - k);
    if (k % 2) sc = -sc;
    return (sc * f).to_sym(k);
}

inline bool c_alpha_identity_check(Tower<CoefRat>& tower, const std::vector<int>& alpha) {
    return c_alpha(alpha) == c_alpha_from_word(tower, alpha);
}

// pi(d_-, -(qt)^{-1} z_1 d_+)(1) and pi(d_-, q^k y_1 d_+^*)(1): both realize nabla chi(pi).
template <class S>
std::pair<VElem<S>, VElem<S>> nabla_conjugation_sides(const BaseOperators<S>& ops, const DyckPath& p) {
    VElem<S> a = VElem<S>::one(0, p.n()), b = a;
    const S c = -(S::q_pow(-1) * S::t_pow(-1));
    for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) {
        if (*it) {
            a = act_dminus(a);
            b = act_dminus(b);
        } else {
            a = c * ops.z(1, act_dplus(a));
            int k = b.k();
            b = S::q_pow(k) * mult_y(1, act_dplus_star(b));
        }
    }
    return {a, b};
}

inline bool nabla_conjugation_check(const BaseOperators<CoefRat>& ops, const DyckPath& p) {
    if (p.m() != p.n()) throw std::invalid_argument("nabla_conjugation_check: square paths only");
    auto [a, b] = nabla_conjugation_sides(ops, p);
    return a == b;
}

} // namespace qts
