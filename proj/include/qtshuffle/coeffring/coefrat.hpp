#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <qtshuffle/coeffring/laurent.hpp>
#include <qtshuffle/coeffring/poly_gcd.hpp>

namespace qts {

struct EvalPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact rational function in u = q^{1/2} and t.
//
// Normal form: the denominator is either a positive integer, or a polynomial
// not divisible by u or t, with positive leading coefficient and coprime to the
// numerator. Monomial factors of the denominator are absorbed into the numerator.
class CoefRat {
public:
    CoefRat() : den_(1) {}
    CoefRat(long c) : num_(c), den_(1) {}
    CoefRat(const Integer& c) : num_(c), den_(1) {}
    explicit CoefRat(Laurent num) : num_(std::move(num)), den_(1) {}
    CoefRat(Laurent num, Laurent den) { normalize(std::move(num), std::move(den)); }

    static CoefRat from_int(long c) { return CoefRat(c); }
    static CoefRat from_rational(const Rational& r) {
        return CoefRat(Laurent(Integer(numerator(r))), Laurent(Integer(denominator(r))));
    }
    static CoefRat u_pow(int e) { return CoefRat(Laurent::monomial(1, {e, 0})); }
    static CoefRat q_pow(int e) { return u_pow(2 * e); }
    static CoefRat t_pow(int e) { return CoefRat(Laurent::monomial(1, {0, e})); }
    static CoefRat monomial(long c, int u_exp, int t_exp) { return CoefRat(Laurent::monomial(c, {u_exp, t_exp})); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool has_integer_q_degree() const { return num_.even_in_u() && den_.even_in_u(); }

    bool operator==(const CoefRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    CoefRat operator-() const {
        CoefRat r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend CoefRat operator+(const CoefRat& a, const CoefRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return CoefRat(a.num_ + b.num_);
        if (a.den_ == b.den_) return CoefRat(a.num_ + b.num_, a.den_);
        return CoefRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CoefRat operator-(const CoefRat& a, const CoefRat& b) { return a + (-b); }
    friend CoefRat operator*(const CoefRat& a, const CoefRat& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return CoefRat(a.num_ * b.num_);
        return CoefRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend CoefRat operator/(const CoefRat& a, const CoefRat& b) {
        if (b.is_zero()) throw std::domain_error("CoefRat: division by zero");
        if (a.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one() && !b.num_.is_monomial()) {
            if (auto q = a.num_.exact_div(b.num_)) return CoefRat(std::move(*q));
        }
        return CoefRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    CoefRat& operator+=(const CoefRat& o) { return *this = *this + o; }
    CoefRat& operator-=(const CoefRat& o) { return *this = *this - o; }
    CoefRat& operator*=(const CoefRat& o) { return *this = *this * o; }
    CoefRat& operator/=(const CoefRat& o) { return *this = *this / o; }

    // Substitute q -> q^r, t -> t^r (the Adams operation on rank-one scalars).
    CoefRat frobenius(int r) const { return CoefRat(num_.frobenius(r), den_.frobenius(r)); }

    Rational eval_at(const Rational& q0, const Rational& t0) const {
        if (has_integer_q_degree()) return eval_even(q0, t0);
        Rational u0 = rational_sqrt(q0);
        Rational d = den_.eval(u0, t0);
        if (d == 0) throw EvalPoleError("CoefRat: denominator vanishes");
        return num_.eval(u0, t0) / d;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& [e, c] : num_.terms())
            h = h * 1000003u ^ (std::size_t(e.u) * 31u + std::size_t(e.t)) ^ std::hash<std::string>{}(c.str());
        return h;
    }

    static Rational rational_sqrt(const Rational& x) {
        if (x <= 0) throw std::domain_error("eval_at: q0 must be positive");
        Integer a = numerator(x), b = denominator(x);
        Integer ra = boost::multiprecision::sqrt(a), rb = boost::multiprecision::sqrt(b);
        if (ra * ra != a || rb * rb != b) throw std::domain_error("eval_at: q0 has no rational square root");
        return Rational(ra, rb);
    }

private:
    Laurent num_;
    Laurent den_;

    Rational eval_even(const Rational& q0, const Rational& t0) const {
        auto ev = [&](const Laurent& p) {
            Rational s = 0;
            for (const auto& [e, c] : p.terms()) s += Rational(c) * Laurent::rpow(q0, e.u / 2) * Laurent::rpow(t0, e.t);
            return s;
        };
        Rational d = ev(den_);
        if (d == 0) throw EvalPoleError("CoefRat: denominator vanishes");
        return ev(num_) / d;
    }

    void set_constant_den(Laurent n, const Mono2& shift, Integer c) {
        n = n.shifted(Mono2{} - shift);
        Integer g = boost::multiprecision::gcd(n.content(), c);
        if (g != 1) {
            n = n.divided_by_integer(g);
            c /= g;
        }
        if (c < 0) {
            n = -n;
            c = -c;
        }
        num_ = std::move(n);
        den_ = Laurent(std::move(c));
    }

    void normalize(Laurent n, Laurent d) {
        if (d.is_zero()) throw std::domain_error("CoefRat: zero denominator");
        if (n.is_zero()) {
            num_ = Laurent{};
            den_ = Laurent(1);
            return;
        }
        if (d.is_monomial()) {
            set_constant_den(std::move(n), d.terms()[0].first, d.terms()[0].second);
            return;
        }
        Mono2 a = d.min_exponent();
        Laurent d0 = d.shifted(Mono2{} - a);
        Laurent n1 = n.shifted(Mono2{} - a);
        Mono2 b = n1.min_exponent();
        Laurent n0 = n1.shifted(Mono2{} - b);
        Laurent g = detail::poly_gcd(n0, d0);
        if (!g.is_one()) {
            n0 = *n0.exact_div(g);
            d0 = *d0.exact_div(g);
        }
        n0 = n0.shifted(b);
        if (d0.is_monomial()) {
            set_constant_den(std::move(n0), d0.terms()[0].first, d0.terms()[0].second);
            return;
        }
        if (d0.leading().second < 0) {
            n0 = -n0;
            d0 = -d0;
        }
        num_ = std::move(n0);
        den_ = std::move(d0);
    }
};

inline std::ostream& operator<<(std::ostream& os, const CoefRat& c) { return os << c.str(); }

} // namespace qts
