#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include <qtshuffle/coeffring/coefrat.hpp>

namespace qts {

// Scalar evaluated at a fixed rational point (u0, t0); q0 = u0^2.
// Used as a pre-screen: identities in CoefRat imply identities here.
class FastScalar {
public:
    struct Point {
        Rational u0{3, 2};
        Rational t0{5, 7};
    };

    FastScalar() = default;
    FastScalar(long c) : v_(c) {}
    explicit FastScalar(Rational v) : v_(std::move(v)) {}

    static Point& point() {
        static thread_local Point p;
        return p;
    }
    // Random point with small numerators, never 0 or 1.
    static Point random_point(std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> d(2, 97);
        Point p;
        p.u0 = Rational(d(rng), d(rng));
        p.t0 = Rational(d(rng), d(rng));
        if (p.u0 == 1) p.u0 = Rational(101, 97);
        if (p.t0 == 1) p.t0 = Rational(103, 89);
        return p;
    }

    static FastScalar from_int(long c) { return FastScalar(c); }
    static FastScalar from_rational(const Rational& r) { return FastScalar(r); }
    static FastScalar u_pow(int e) { return FastScalar(Laurent::rpow(point().u0, e)); }
    static FastScalar q_pow(int e) { return u_pow(2 * e); }
    static FastScalar t_pow(int e) { return FastScalar(Laurent::rpow(point().t0, e)); }
    static FastScalar monomial(long c, int u_exp, int t_exp) {
        return FastScalar(Rational(c) * Laurent::rpow(point().u0, u_exp) * Laurent::rpow(point().t0, t_exp));
    }
    static FastScalar from_coef(const CoefRat& c) {
        Rational d = c.den().eval(point().u0, point().t0);
        if (d == 0) throw EvalPoleError("FastScalar: pole at evaluation point");
        return FastScalar(c.num().eval(point().u0, point().t0) / d);
    }

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool has_integer_q_degree() const { return true; }
    bool operator==(const FastScalar& o) const { return v_ == o.v_; }

    FastScalar operator-() const { return FastScalar(-v_); }
    friend FastScalar operator+(const FastScalar& a, const FastScalar& b) { return FastScalar(a.v_ + b.v_); }
    friend FastScalar operator-(const FastScalar& a, const FastScalar& b) { return FastScalar(a.v_ - b.v_); }
    friend FastScalar operator*(const FastScalar& a, const FastScalar& b) { return FastScalar(a.v_ * b.v_); }
    friend FastScalar operator/(const FastScalar& a, const FastScalar& b) {
        if (b.v_ == 0) throw EvalPoleError("FastScalar: division by zero at evaluation point");
        return FastScalar(a.v_ / b.v_);
    }
    FastScalar& operator+=(const FastScalar& o) { v_ += o.v_; return *this; }
    FastScalar& operator-=(const FastScalar& o) { v_ -= o.v_; return *this; }
    FastScalar& operator*=(const FastScalar& o) { v_ *= o.v_; return *this; }
    FastScalar& operator/=(const FastScalar& o) { return *this = *this / o; }

    std::string str() const { return v_.str(); }

private:
    Rational v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const FastScalar& c) { return os << c.str(); }

// RAII switch of the evaluation point for the current thread.
class FastPointScope {
public:
    explicit FastPointScope(FastScalar::Point p) : saved_(FastScalar::point()) { FastScalar::point() = std::move(p); }
    ~FastPointScope() { FastScalar::point() = saved_; }
    FastPointScope(const FastPointScope&) = delete;
    FastPointScope& operator=(const FastPointScope&) = delete;

private:
    FastScalar::Point saved_;
};

// Conversion of symbolic constants into a scalar type.
template <class S>
S scalar_from(const CoefRat& c);
template <>
inline CoefRat scalar_from<CoefRat>(const CoefRat& c) { return c; }
template <>
inline FastScalar scalar_from<FastScalar>(const CoefRat& c) { return FastScalar::from_coef(c); }

} // namespace qts
