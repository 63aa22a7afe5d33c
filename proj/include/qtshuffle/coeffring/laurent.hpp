#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qts {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

// Exponent of the monomial u^u t^t. Ordered lexicographically, u first.
struct Mono2 {
    int u = 0;
    int t = 0;
    auto operator<=>(const Mono2&) const = default;
    Mono2 operator+(const Mono2& o) const { return {u + o.u, t + o.t}; }
    Mono2 operator-(const Mono2& o) const { return {u - o.u, t - o.t}; }
};

// Laurent polynomial in u and t with integer coefficients.
// Terms are kept sorted ascending by exponent; the last term is the leading one.
class Laurent {
public:
    using Term = std::pair<Mono2, Integer>;

    Laurent() = default;
    Laurent(long c) {
        if (c != 0) terms_.emplace_back(Mono2{}, Integer(c));
    }
    Laurent(Integer c) {
        if (c != 0) terms_.emplace_back(Mono2{}, std::move(c));
    }
    static Laurent monomial(Integer c, Mono2 e) {
        Laurent r;
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
        return r;
    }
    static Laurent from_terms(std::vector<Term> ts) {
        Laurent r;
        r.terms_ = std::move(ts);
        r.canonicalize();
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == Mono2{} && terms_[0].second == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Mono2{}); }
    const Term& leading() const { return terms_.back(); }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) { return merge(a, b, false); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return merge(a, b, true); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return a.times_term(b.terms_[0].first, b.terms_[0].second);
        if (a.is_monomial()) return b.times_term(a.terms_[0].first, a.terms_[0].second);
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
        return from_terms(std::move(out));
    }

    Laurent times_term(Mono2 e, const Integer& c) const {
        if (c == 0) return {};
        Laurent r = *this;
        for (auto& [ee, cc] : r.terms_) {
            ee = ee + e;
            cc *= c;
        }
        return r;
    }
    Laurent shifted(Mono2 e) const {
        Laurent r = *this;
        for (auto& t : r.terms_) t.first = t.first + e;
        return r;
    }

    Mono2 min_exponent() const {
        Mono2 m{terms_.at(0).first};
        for (const auto& t : terms_) {
            m.u = std::min(m.u, t.first.u);
            m.t = std::min(m.t, t.first.t);
        }
        return m;
    }
    Mono2 max_exponent() const {
        Mono2 m{terms_.at(0).first};
        for (const auto& t : terms_) {
            m.u = std::max(m.u, t.first.u);
            m.t = std::max(m.t, t.first.t);
        }
        return m;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& t : terms_) {
            g = boost::multiprecision::gcd(g, t.second);
            if (g == 1) break;
        }
        return boost::multiprecision::abs(g);
    }
    Laurent divided_by_integer(const Integer& d) const {
        Laurent r = *this;
        for (auto& t : r.terms_) t.second /= d;
        return r;
    }

    // Exact division in Z[u^{±1}, t^{±1}]. Returns nullopt if b does not divide *this.
    std::optional<Laurent> exact_div(const Laurent& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (is_zero()) return Laurent{};
        if (b.is_monomial()) {
            const auto& [e, c] = b.terms_[0];
            Laurent r = *this;
            for (auto& [ee, cc] : r.terms_) {
                if (cc % c != 0) return std::nullopt;
                cc /= c;
                ee = ee - e;
            }
            return r;
        }
        Mono2 lo = min_exponent() - b.min_exponent();
        Mono2 hi = max_exponent() - b.max_exponent();
        if (lo.u > hi.u || lo.t > hi.t) return std::nullopt;
        Laurent rem = *this;
        std::vector<Term> quot;
        const auto& [be, bc] = b.leading();
        while (!rem.is_zero()) {
            const auto& [re, rc] = rem.leading();
            Mono2 e = re - be;
            if (e.u < lo.u || e.u > hi.u || e.t < lo.t || e.t > hi.t) return std::nullopt;
            if (rc % bc != 0) return std::nullopt;
            Integer c = rc / bc;
            rem = rem - b.times_term(e, c);
            quot.emplace_back(e, std::move(c));
        }
        std::reverse(quot.begin(), quot.end());
        Laurent r;
        r.terms_ = std::move(quot);
        return r;
    }

    bool even_in_u() const {
        for (const auto& t : terms_)
            if (t.first.u % 2 != 0) return false;
        return true;
    }

    // Substitute u -> u^r, t -> t^r.
    Laurent frobenius(int r) const {
        Laurent out = *this;
        for (auto& t : out.terms_) t.first = Mono2{t.first.u * r, t.first.t * r};
        if (r < 0) std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return out;
    }

    Rational eval(const Rational& u0, const Rational& t0) const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) s += Rational(c) * rpow(u0, e.u) * rpow(t0, e.t);
        return s;
    }

    static Rational rpow(const Rational& x, int e) {
        if (e < 0) {
            if (x == 0) throw std::domain_error("pole in evaluation");
            return rpow(Rational(1) / x, -e);
        }
        Rational r = 1, b = x;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Text form in q (u^2 = q); half-integer powers print as q^(a/2).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer a = boost::multiprecision::abs(c);
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            std::string mono = mono_str(e);
            if (mono.empty())
                os << a;
            else if (a == 1)
                os << mono;
            else
                os << a << "*" << mono;
            first = false;
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    static std::string mono_str(Mono2 e) {
        std::string s;
        if (e.u != 0) {
            s += "q";
            if (e.u % 2 != 0)
                s += "^(" + std::to_string(e.u) + "/2)";
            else if (e.u != 2)
                s += "^" + (e.u < 0 ? "(" + std::to_string(e.u / 2) + ")" : std::to_string(e.u / 2));
        }
        if (e.t != 0) {
            if (!s.empty()) s += "*";
            s += "t";
            if (e.t != 1) s += "^" + (e.t < 0 ? "(" + std::to_string(e.t) + ")" : std::to_string(e.t));
        }
        return s;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        std::size_t w = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            Mono2 e = terms_[i].first;
            Integer c = std::move(terms_[i].second);
            std::size_t j = i + 1;
            for (; j < terms_.size() && terms_[j].first == e; ++j) c += terms_[j].second;
            if (c != 0) terms_[w++] = Term{e, std::move(c)};
            i = j;
        }
        terms_.resize(w);
    }

    static Laurent merge(const Laurent& a, const Laurent& b, bool negate_b) {
        Laurent r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back(b.terms_[j]);
                if (negate_b) r.terms_.back().second = -r.terms_.back().second;
                ++j;
            } else {
                Integer c = negate_b ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }
};

} // namespace qts
