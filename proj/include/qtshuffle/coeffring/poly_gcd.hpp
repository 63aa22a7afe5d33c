#pragma once

// Greatest common divisors in Z[u,t], viewed as (Z[t])[u].

#include <utility>
#include <vector>

#include <qtshuffle/coeffring/laurent.hpp>

namespace qts::detail {

inline bool ring_is_zero(const Integer& a) { return a == 0; }
inline int ring_sign(const Integer& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline Integer ring_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::abs(boost::multiprecision::gcd(a, b));
}
inline bool ring_divexact(const Integer& a, const Integer& b, Integer& q) {
    q = a / b;
    return q * b == a;
}
inline Integer ring_one(const Integer&) { return 1; }

// Dense univariate polynomial, c[i] is the coefficient of x^i, no trailing zeros.
template <class R>
struct UPoly {
    std::vector<R> c;

    UPoly() = default;
    UPoly(int v) {
        if (v != 0) c.push_back(R(v));
    }
    explicit UPoly(std::vector<R> cc) : c(std::move(cc)) { trim(); }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const R& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }
    bool operator==(const UPoly&) const = default;
};

template <class R>
bool ring_is_zero(const UPoly<R>& a) { return a.is_zero(); }
template <class R>
int ring_sign(const UPoly<R>& a) { return a.is_zero() ? 0 : ring_sign(a.lc()); }
template <class R>
UPoly<R> ring_one(const UPoly<R>&) { return UPoly<R>(1); }

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = a.c[i];
        if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.trim();
    return r;
}
template <class R>
UPoly<R> operator-(const UPoly<R>& a) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}
template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) { return a + (-b); }
template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly<R> r;
    r.c.assign(a.c.size() + b.c.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}
template <class R>
UPoly<R> scale(const UPoly<R>& a, const R& s) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
}
template <class R>
UPoly<R> shift_up(const UPoly<R>& a, int k) {
    UPoly<R> r;
    r.c.assign(k, R(0));
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    return r;
}

template <class R>
bool ring_divexact(const UPoly<R>& a, const UPoly<R>& b, UPoly<R>& q) {
    q = UPoly<R>{};
    if (a.is_zero()) return true;
    if (a.deg() < b.deg()) return false;
    UPoly<R> rem = a;
    q.c.assign(a.deg() - b.deg() + 1, R(0));
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int d = rem.deg() - b.deg();
        R c;
        if (!ring_divexact(rem.lc(), b.lc(), c)) return false;
        q.c[d] = c;
        rem = rem - shift_up(scale(b, c), d);
    }
    q.trim();
    return rem.is_zero();
}

template <class R>
R content(const UPoly<R>& a) {
    R g(0);
    for (const auto& x : a.c) g = ring_gcd(g, x);
    return g;
}

template <class R>
UPoly<R> primitive_part(const UPoly<R>& a) {
    if (a.is_zero()) return a;
    R g = content(a);
    UPoly<R> r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        R q;
        ring_divexact(x, g, q);
        r.c.push_back(q);
    }
    if (ring_sign(r.lc()) < 0) r = -r;
    return r;
}

template <class R>
UPoly<R> pseudo_rem(UPoly<R> a, const UPoly<R>& b) {
    while (!a.is_zero() && a.deg() >= b.deg()) {
        int d = a.deg() - b.deg();
        R lr = a.lc();
        a = scale(a, b.lc()) - shift_up(scale(b, lr), d);
    }
    return a;
}

// Primitive PRS gcd, normalized to positive leading sign.
template <class R>
UPoly<R> ring_gcd(const UPoly<R>& a, const UPoly<R>& b) {
    if (a.is_zero()) return b.is_zero() ? b : scale(primitive_part(b), content_signed(b));
    if (b.is_zero()) return scale(primitive_part(a), content_signed(a));
    R g = ring_gcd(content(a), content(b));
    UPoly<R> p = primitive_part(a), r = primitive_part(b);
    if (p.deg() < r.deg()) std::swap(p, r);
    while (!r.is_zero()) {
        UPoly<R> s = pseudo_rem(p, r);
        p = std::move(r);
        r = s.is_zero() ? s : primitive_part(s);
    }
    return scale(p, g);
}

template <class R>
R content_signed(const UPoly<R>& a) {
    R g = content(a);
    if (ring_sign(g) < 0) g = -g;
    return g;
}

using IPoly = UPoly<Integer>;
using BiPoly = UPoly<IPoly>;

// Polynomial with non-negative exponents, u outer, t inner.
inline BiPoly to_bipoly(const Laurent& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.u < 0 || e.t < 0) throw std::logic_error("to_bipoly: negative exponent");
        if (static_cast<int>(r.c.size()) <= e.u) r.c.resize(e.u + 1);
        auto& inner = r.c[e.u].c;
        if (static_cast<int>(inner.size()) <= e.t) inner.resize(e.t + 1, Integer(0));
        inner[e.t] = c;
    }
    for (auto& x : r.c) x.trim();
    r.trim();
    return r;
}

inline Laurent from_bipoly(const BiPoly& p) {
    std::vector<Laurent::Term> ts;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < p.c[i].c.size(); ++j)
            if (p.c[i].c[j] != 0) ts.emplace_back(Mono2{static_cast<int>(i), static_cast<int>(j)}, p.c[i].c[j]);
    return Laurent::from_terms(std::move(ts));
}

inline Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    return from_bipoly(ring_gcd(to_bipoly(a), to_bipoly(b)));
}

} // namespace qts::detail
