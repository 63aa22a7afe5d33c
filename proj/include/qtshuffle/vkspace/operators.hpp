#pragma once

// The operators T_i, d_-, d_+ of the first action and d_+^* of the second,
// acting on V_* with the Sym factor in the h basis.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qtshuffle/vkspace/velem.hpp>

namespace qts {

namespace detail {

// One term of h_lambda[X + c*y] expanded as h_mu[X] * y^i * coef.
struct HShiftTerm {
    std::vector<int> mu;
    int ypow;
    CoefRat coef;
};

enum class ShiftKind { plus_q_minus_one, minus_q_minus_one };

// h_i[(q-1)y] = q^i - q^{i-1} and h_i[(1-q)y] = 1 - q for i >= 1.
inline CoefRat h_of_shift(ShiftKind kind, int i) {
    if (i == 0) return CoefRat(1);
    if (kind == ShiftKind::plus_q_minus_one) return CoefRat::q_pow(i) - CoefRat::q_pow(i - 1);
    return CoefRat(1) - CoefRat::q_pow(1);
}

inline std::vector<int> merge_parts(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<>());
    return r;
}

inline const std::vector<HShiftTerm>& h_shift_expansion(const std::vector<int>& lam, ShiftKind kind) {
    thread_local std::map<std::pair<int, std::vector<int>>, std::vector<HShiftTerm>> cache;
    auto key = std::make_pair(static_cast<int>(kind), lam);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::map<std::pair<std::vector<int>, int>, CoefRat> acc{{{{}, 0}, CoefRat(1)}};
    for (int n : lam) {
        std::map<std::pair<std::vector<int>, int>, CoefRat> next;
        for (const auto& [k, c] : acc)
            for (int i = 0; i <= n; ++i) {
                std::vector<int> mu = k.first;
                if (n - i > 0) mu = merge_parts(mu, {n - i});
                next[{mu, k.second + i}] += c * h_of_shift(kind, i);
            }
        acc = std::move(next);
    }
    std::vector<HShiftTerm> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({k.first, k.second, c});
    return cache.emplace(key, std::move(out)).first->second;
}

// (-1)^J e_J = sum over partitions nu of J of (-1)^{len nu} * #rearrangements(nu) * h_nu.
inline const std::vector<std::pair<std::vector<int>, long>>& signed_e_in_h(int J) {
    thread_local std::map<int, std::vector<std::pair<std::vector<int>, long>>> cache;
    if (auto it = cache.find(J); it != cache.end()) return it->second;
    std::vector<std::pair<std::vector<int>, long>> out;
    for (const auto& nu : partitions_of(J)) {
        long r = 1;
        int len = nu.length();
        for (int i = 2; i <= len; ++i) r *= i;
        std::map<int, int> mult;
        for (int p : nu.parts()) ++mult[p];
        for (auto [p, m] : mult)
            for (int i = 2; i <= m; ++i) r /= i;
        out.emplace_back(nu.parts(), len % 2 ? -r : r);
    }
    return cache.emplace(J, std::move(out)).first->second;
}

} // namespace detail

// T_i (or T_i^{-1}) on V_k, 1 <= i <= k-1.
template <class S>
VElem<S> act_T(int i, const VElem<S>& f, bool inverse = false) {
    if (i < 1 || i > f.k() - 1) throw std::out_of_range("act_T: index " + std::to_string(i) + " out of range for k=" + std::to_string(f.k()));
    const S q = S::q_pow(1);
    const S qm1 = q - S::from_int(1);
    VElem<S> out(f.k(), f.cap());
    for (const auto& [key, c] : f.terms()) {
        int a = key.exp(i - 1), b = key.exp(i);
        if (a == b) {
            out.add(key, c);
            continue;
        }
        VKey sw = key;
        sw.set_exp(i - 1, b);
        sw.set_exp(i, a);
        out.add(sw, c);
        S cc = (a > b ? -qm1 : qm1) * c;
        int lo = std::min(a, b), d = std::abs(a - b);
        for (int j = 0; j < d; ++j) {
            VKey nk = key;
            nk.set_exp(i - 1, lo + 1 + j);
            nk.set_exp(i, lo + d - 1 - j);
            out.add(nk, cc);
        }
    }
    if (!inverse) return out;
    // T^{-1} = q^{-1} T + (1 - q^{-1})
    const S qi = S::q_pow(-1);
    VElem<S> r = qi * out;
    r.add_scaled(f, S::from_int(1) - qi);
    return r;
}

// Apply T_{idx[0]}, then T_{idx[1]}, ... (each possibly inverted).
template <class S>
VElem<S> act_T_sequence(const std::vector<int>& idx, VElem<S> f, bool inverse) {
    for (int i : idx) f = act_T(i, f, inverse);
    return f;
}

template <class S>
VElem<S> act_dminus(const VElem<S>& f) {
    int k = f.k();
    if (k < 1) throw std::out_of_range("act_dminus: requires k >= 1");
    VElem<S> out(k - 1, f.cap());
    for (const auto& [key, c] : f.terms()) {
        int j = key.exp(k - 1);
        std::vector<int> rest = key.exps();
        rest.pop_back();
        for (const auto& t : detail::h_shift_expansion(key.parts(), detail::ShiftKind::minus_q_minus_one)) {
            S tc = scalar_from<S>(t.coef) * c;
            for (const auto& [nu, sgn] : detail::signed_e_in_h(t.ypow + j))
                out.add(VKey(detail::merge_parts(t.mu, nu), rest), S::from_int(sgn) * tc);
        }
    }
    return out;
}

namespace detail {

// F[X + (q-1) y_{k+1}] as an element of V_{k+1}, with an extra factor y_{k+1}^extra.
template <class S>
VElem<S> plethystic_extend(const VElem<S>& f, int extra) {
    int k = f.k();
    VElem<S> out(k + 1, f.cap());
    for (const auto& [key, c] : f.terms()) {
        std::vector<int> exps = key.exps();
        exps.push_back(0);
        for (const auto& t : h_shift_expansion(key.parts(), ShiftKind::plus_q_minus_one)) {
            exps.back() = t.ypow + extra;
            out.add(VKey(t.mu, exps), scalar_from<S>(t.coef) * c);
        }
    }
    return out;
}

} // namespace detail

template <class S>
VElem<S> act_dplus(const VElem<S>& f) {
    VElem<S> g = detail::plethystic_extend(f, 1);
    for (int i = f.k(); i >= 1; --i) g = act_T(i, g);
    return -g;
}

template <class S>
VElem<S> act_dplus_star(const VElem<S>& f) {
    VElem<S> g = detail::plethystic_extend(f, 0);
    int k = f.k();
    VElem<S> out(k + 1, f.cap());
    for (const auto& [key, c] : g.terms()) {
        std::vector<int> exps = key.exps();
        int j = exps.back();
        exps.pop_back();
        exps.insert(exps.begin(), j);
        out.add(VKey(key.parts(), exps), S::t_pow(j) * c);
    }
    return out;
}

template <class S>
VElem<S> mult_y(int i, const VElem<S>& f) {
    if (i < 1 || i > f.k()) throw std::out_of_range("mult_y: index out of range");
    VElem<S> out(f.k(), f.cap());
    for (const auto& [key, c] : f.terms()) {
        VKey nk = key;
        nk.set_exp(i - 1, key.exp(i - 1) + 1);
        out.add(nk, c);
    }
    return out;
}

// Exact division of every coefficient by (q - 1).
template <class S>
VElem<S> divide_by_q_minus_one(const VElem<S>& f) {
    const S d = S::q_pow(1) - S::from_int(1);
    return f.map_coefficients([&](const S& c) { return c / d; });
}

} // namespace qts
