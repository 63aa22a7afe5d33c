#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <qtshuffle/coeffring.hpp>
#include <qtshuffle/symfunc.hpp>

namespace qts {

// Basis label h_lambda * y^a of V_k, packed into a fixed buffer:
// [len(lambda), k, lambda_1..lambda_l, a_1..a_k].
class VKey {
public:
    static constexpr int capacity = 30;

    VKey() = default;
    VKey(const std::vector<int>& parts, const std::vector<int>& exps) {
        if (parts.size() + exps.size() > capacity) throw std::length_error("VKey: too many parts/strands");
        d_[0] = static_cast<std::uint8_t>(parts.size());
        d_[1] = static_cast<std::uint8_t>(exps.size());
        int w = 2;
        for (int p : parts) d_[w++] = narrow(p);
        for (int e : exps) d_[w++] = narrow(e);
    }

    int plen() const { return d_[0]; }
    int k() const { return d_[1]; }
    int part(int i) const { return d_[2 + i]; }
    int exp(int i) const { return d_[2 + plen() + i]; }
    void set_exp(int i, int v) { d_[2 + plen() + i] = narrow(v); }

    std::vector<int> parts() const { return std::vector<int>(d_.begin() + 2, d_.begin() + 2 + plen()); }
    std::vector<int> exps() const { return std::vector<int>(d_.begin() + 2 + plen(), d_.begin() + 2 + plen() + k()); }
    Partition partition() const { return Partition(parts()); }
    int x_degree() const {
        int s = 0;
        for (int i = 0; i < plen(); ++i) s += part(i);
        return s;
    }
    int y_degree() const {
        int s = 0;
        for (int i = 0; i < k(); ++i) s += exp(i);
        return s;
    }
    int degree() const { return x_degree() + y_degree(); }

    bool operator==(const VKey& o) const {
        int n = 2 + plen() + k();
        return std::equal(d_.begin(), d_.begin() + n, o.d_.begin());
    }
    bool operator<(const VKey& o) const {
        if (plen() + k() != o.plen() + o.k() || plen() != o.plen()) {
            return std::make_pair(plen() + k(), plen()) < std::make_pair(o.plen() + o.k(), o.plen());
        }
        int n = 2 + plen() + k();
        return std::lexicographical_compare(d_.begin(), d_.begin() + n, o.d_.begin(), o.d_.begin() + n);
    }
    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        int n = 2 + plen() + k();
        for (int i = 0; i < n; ++i) h = (h ^ d_[i]) * 1099511628211ull;
        return h;
    }

    std::string str() const {
        std::ostringstream os;
        os << "h" << partition().str();
        for (int i = 0; i < k(); ++i)
            if (exp(i) > 0) os << "*y" << (i + 1) << (exp(i) > 1 ? "^" + std::to_string(exp(i)) : "");
        return os.str();
    }

private:
    std::array<std::uint8_t, 2 + capacity> d_{};

    static std::uint8_t narrow(int v) {
        if (v < 0 || v > 255) throw std::out_of_range("VKey: entry out of range");
        return static_cast<std::uint8_t>(v);
    }
};

struct VKeyHash {
    std::size_t operator()(const VKey& k) const { return k.hash(); }
};

// Element of V_k = Sym[X] (x) Q(q,t)[y_1..y_k]. The Sym factor is stored in the
// complete homogeneous basis, which is integral and multiplicative. Terms of total
// degree |lambda| + |a| above `cap` are dropped.
template <class S = CoefRat>
class VElem {
public:
    using Map = std::unordered_map<VKey, S, VKeyHash>;

    VElem(int k = 0, int cap = 64) : k_(k), cap_(cap) {}

    static VElem one(int k = 0, int cap = 64) {
        VElem f(k, cap);
        f.add(VKey({}, std::vector<int>(k, 0)), S::from_int(1));
        return f;
    }
    static VElem basis(const VKey& key, int cap = 64) {
        VElem f(key.k(), cap);
        f.add(key, S::from_int(1));
        return f;
    }
    // Monomial y^a times 1.
    static VElem y_monomial(const std::vector<int>& exps, int cap = 64) {
        VElem f(static_cast<int>(exps.size()), cap);
        f.add(VKey({}, exps), S::from_int(1));
        return f;
    }
    // Embed a symmetric function (in V_0 unless k given).
    static VElem from_sym(const SymFunc<S>& g, int k = 0, int cap = 64) {
        VElem f(k, cap);
        for (const auto& [lam, c] : SymFunc<S>::to_basis(g, Basis::homogeneous))
            f.add(VKey(lam.parts(), std::vector<int>(k, 0)), c);
        return f;
    }

    int k() const { return k_; }
    int cap() const { return cap_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const VKey& key, const S& c) {
        if (key.k() != k_) throw std::logic_error("VElem: strand count mismatch");
        if (key.degree() > cap_ || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const VElem& o, const S& s) {
        check_k(o);
        if (s.is_zero()) return;
        for (const auto& [key, c] : o.terms_) add(key, s * c);
    }

    VElem with_cap(int cap) const {
        VElem r(k_, cap);
        for (const auto& [key, c] : terms_) r.add(key, c);
        return r;
    }

    bool operator==(const VElem& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    VElem operator-() const {
        VElem r(k_, cap_);
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }
    VElem& operator+=(const VElem& o) {
        check_k(o);
        for (const auto& [key, c] : o.terms_) add(key, c);
        return *this;
    }
    VElem& operator-=(const VElem& o) {
        check_k(o);
        for (const auto& [key, c] : o.terms_) add(key, -c);
        return *this;
    }
    friend VElem operator+(VElem a, const VElem& b) { return a += b; }
    friend VElem operator-(VElem a, const VElem& b) { return a -= b; }
    friend VElem operator*(const S& s, const VElem& f) {
        VElem r(f.k_, f.cap_);
        if (s.is_zero()) return r;
        for (const auto& [key, c] : f.terms_) r.terms_.emplace(key, s * c);
        return r;
    }

    // Apply a scalar map to every coefficient (e.g. an exact division).
    template <class F>
    VElem map_coefficients(F&& fn) const {
        VElem r(k_, cap_);
        for (const auto& [key, c] : terms_) r.add(key, fn(c));
        return r;
    }

    // Terms sorted for deterministic output.
    std::vector<std::pair<VKey, S>> sorted_terms() const {
        std::vector<std::pair<VKey, S>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    // The Sym[X] part, in the monomial basis; requires k = 0.
    SymFunc<S> to_sym(int sym_cap) const {
        if (k_ != 0) throw std::logic_error("VElem::to_sym: element is not in V_0");
        typename SymFunc<S>::Map h;
        for (const auto& [key, c] : terms_) h.emplace(key.partition(), c);
        return SymFunc<S>::from_basis(h, Basis::homogeneous, sym_cap);
    }

    bool has_integer_q_degree() const {
        for (const auto& [key, c] : terms_)
            if (!c.has_integer_q_degree()) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : sorted_terms()) {
            os << (first ? "" : " + ") << "(" << c.str() << ")*" << key.str();
            first = false;
        }
        return os.str();
    }

private:
    int k_;
    int cap_;
    Map terms_;

    void check_k(const VElem& o) const {
        if (o.k_ != k_) throw std::logic_error("VElem: strand count mismatch");
    }
};

template <class S>
std::ostream& operator<<(std::ostream& os, const VElem<S>& f) {
    return os << f.str();
}

} // namespace qts
