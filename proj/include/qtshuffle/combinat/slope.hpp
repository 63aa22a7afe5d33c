#pragma once

#include <compare>
#include <numeric>
#include <string>

#include <qtshuffle/coeffring/laurent.hpp>

namespace qts {

// r + e*eps + d*eps' with eps' infinitely smaller than eps; compared lexicographically.
struct SlopeValue {
    Rational r{0};
    long e = 0;
    long d = 0;

    auto operator<=>(const SlopeValue& o) const {
        if (r != o.r) return r < o.r ? std::strong_ordering::less : std::strong_ordering::greater;
        if (e != o.e) return e <=> o.e;
        return d <=> o.d;
    }
    bool operator==(const SlopeValue& o) const = default;

    SlopeValue operator+(const SlopeValue& o) const { return {r + o.r, e + o.e, d + o.d}; }
    SlopeValue operator-(const SlopeValue& o) const { return {r - o.r, e - o.e, d - o.d}; }
    SlopeValue operator-() const { return {-r, -e, -d}; }

    std::string str() const { return r.str() + (e ? "+" + std::to_string(e) + "eps" : "") + (d ? "+" + std::to_string(d) + "eps'" : ""); }
};

// The perturbed slope s_- = n/m - eps of an (m,n) rectangle.
struct Slope {
    long m1, n1; // reduced
    Slope(long m, long n) {
        long g = std::gcd(m, n);
        m1 = m / g;
        n1 = n / g;
    }
    Rational s() const { return Rational(n1, m1); }
    // y - s_- x
    SlopeValue level(long x, long y) const { return {Rational(y) - Rational(n1 * x, m1), x, 0}; }
    // sign of y - s x on the exact diagonal
    int side(long x, long y) const {
        long v = y * m1 - x * n1;
        return (v > 0) - (v < 0);
    }
};

} // namespace qts
