#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include <qtshuffle/coeffring.hpp>
#include <qtshuffle/symfunc/partition.hpp>
#include <qtshuffle/symfunc/tables.hpp>

namespace qts {

// Symmetric function in the monomial basis, truncated above total degree `cap`.
template <class S = CoefRat>
class SymFunc {
public:
    using Map = std::map<Partition, S>;

    explicit SymFunc(int cap = 0) : cap_(cap) {}
    SymFunc(int cap, Map terms) : cap_(cap) {
        for (auto& [p, c] : terms) add(p, c);
    }

    static SymFunc one(int cap) { return constant(S::from_int(1), cap); }
    static SymFunc constant(const S& c, int cap) {
        SymFunc f(cap);
        f.add(Partition{}, c);
        return f;
    }
    static SymFunc in_basis(Basis b, const Partition& p, int cap) {
        SymFunc f(cap);
        if (p.size() > cap) return f;
        const auto& tab = DegreeTables::get(p.size());
        int i = tab.index.at(p);
        for (std::size_t j = 0; j < tab.parts.size(); ++j) {
            const Rational& c = tab.to_m[static_cast<int>(b)][i][j];
            if (c != 0) f.add(tab.parts[j], S::from_rational(c));
        }
        return f;
    }
    static SymFunc m(const Partition& lam, int cap) { return in_basis(Basis::monomial, lam, cap); }
    static SymFunc h(const Partition& lam, int cap) { return in_basis(Basis::homogeneous, lam, cap); }
    static SymFunc e(const Partition& lam, int cap) { return in_basis(Basis::elementary, lam, cap); }
    static SymFunc p(const Partition& lam, int cap) { return in_basis(Basis::powersum, lam, cap); }

    int cap() const { return cap_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    S coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? S::from_int(0) : it->second;
    }

    void add(const Partition& p, const S& c) {
        if (p.size() > cap_ || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

    SymFunc operator-() const {
        SymFunc r(cap_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }
    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [p, c] : o.terms_) add(p, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const S& s, const SymFunc& f) {
        SymFunc r(f.cap_);
        if (s.is_zero()) return r;
        for (const auto& [p, c] : f.terms_) r.add(p, s * c);
        return r;
    }

    // Product, computed through the (integral) homogeneous basis.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        int cap = std::min(a.cap_, b.cap_);
        auto ha = to_basis(a, Basis::homogeneous), hb = to_basis(b, Basis::homogeneous);
        Map prod;
        for (const auto& [pa, ca] : ha)
            for (const auto& [pb, cb] : hb) {
                if (pa.size() + pb.size() > cap) continue;
                auto [it, fresh] = prod.try_emplace(pa + pb, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        return from_basis(prod, Basis::homogeneous, cap);
    }

    // Coefficients of f in basis b.
    static Map to_basis(const SymFunc& f, Basis b) {
        if (b == Basis::monomial) return f.terms_;
        Map out;
        for (const auto& [mu, c] : f.terms_) {
            const auto& tab = DegreeTables::get(mu.size());
            int i = tab.index.at(mu);
            for (std::size_t j = 0; j < tab.parts.size(); ++j) {
                const Rational& r = tab.from_m[static_cast<int>(b)][i][j];
                if (r == 0) continue;
                S v = S::from_rational(r) * c;
                auto [it, fresh] = out.try_emplace(tab.parts[j], v);
                if (!fresh) it->second += v;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    static SymFunc from_basis(const Map& coeffs, Basis b, int cap) {
        SymFunc f(cap);
        for (const auto& [lam, c] : coeffs) {
            if (lam.size() > cap) continue;
            if (b == Basis::monomial) {
                f.add(lam, c);
                continue;
            }
            const auto& tab = DegreeTables::get(lam.size());
            int i = tab.index.at(lam);
            for (std::size_t j = 0; j < tab.parts.size(); ++j) {
                const Rational& r = tab.to_m[static_cast<int>(b)][i][j];
                if (r != 0) f.add(tab.parts[j], S::from_rational(r) * c);
            }
        }
        return f;
    }

    SymFunc truncated(int cap) const {
        SymFunc r(cap);
        for (const auto& [p, c] : terms_) r.add(p, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            os << (first ? "" : " + ") << "(" << c.str() << ")*m" << p.str();
            first = false;
        }
        return os.str();
    }

private:
    int cap_;
    Map terms_;
};

template <class S>
std::map<Partition, S> basis_convert(const SymFunc<S>& f, Basis to) {
    return SymFunc<S>::to_basis(f, to);
}

template <class S>
std::ostream& operator<<(std::ostream& os, const SymFunc<S>& f) {
    return os << f.str();
}

} // namespace qts
