#pragma once

#include <stdexcept>
#include <string>

#include <qtshuffle/vkspace/opset.hpp>

namespace qts {

struct StrandMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_braid_gen(const Gen& g) {
    return g.kind == Gen::T || g.kind == Gen::Tinv || g.kind == Gen::Y || g.kind == Gen::Z || g.kind == Gen::YTilde;
}

// An element of the positive braid monoid of the punctured torus on k strands.
struct BraidWord {
    int k = 0;
    Word gens;

    BraidWord() = default;
    BraidWord(int k_, Word g) : k(k_), gens(std::move(g)) { validate(); }

    void validate() const {
        if (k < 0) throw std::invalid_argument("BraidWord: negative strand count");
        for (const auto& g : gens) {
            if (!is_braid_gen(g)) throw MalformedWordError("BraidWord: not a braid generator: " + g.str());
            bool is_t = g.kind == Gen::T || g.kind == Gen::Tinv;
            if (g.i < 1 || g.i > (is_t ? k - 1 : k))
                throw MalformedWordError("BraidWord: index out of range: " + g.str() + " on " + std::to_string(k) + " strands");
        }
    }

    bool empty() const { return gens.empty(); }
    std::size_t size() const { return gens.size(); }
    std::string str() const { return to_string(gens); }

    BraidWord operator*(const BraidWord& o) const {
        if (o.k != k) throw StrandMismatchError("BraidWord: composing words on different strand counts");
        return BraidWord(k, gens * o.gens);
    }
    bool operator==(const BraidWord&) const = default;
};

inline BraidWord parse_braid(const std::string& text, int k) { return BraidWord(k, parse_word(text)); }

// ytilde_i written through y_i and trains on k strands.
inline Word ytilde_word(int i, int k) { return ytilde_expansion(i, k); }

// y_i written through ytilde_k: y_1 = T*_{1 up k} ytilde_k T_{k down 1}, y_{i+1} = T_i^{-1} y_i T_i^{-1}.
inline Word y_via_ytilde(int i, int k) {
    Word w = up_star(1, k) * gen(Gen::YTilde, k) * down(k, 1);
    for (int j = 1; j < i; ++j) w = gen(Gen::Tinv, j) * w * gen(Gen::Tinv, j);
    return w;
}

// The representation T_i -> q^{-1/2} T_i, y_i -> -y_i, z_i -> (qt)^{-1} z_i on V_k.
template <class S>
VElem<S> evaluate(const BraidWord& w, const VElem<S>& f, const OperatorSet<S>& ops) {
    if (w.k != f.k()) throw StrandMismatchError("evaluate: word on " + std::to_string(w.k) + " strands applied to V_" + std::to_string(f.k()));
    VElem<S> r = f;
    const S zc = S::q_pow(-1) * S::t_pow(-1);
    auto step = [&](const Gen& g) {
        switch (g.kind) {
        case Gen::T: r = S::u_pow(-1) * ops.apply(g, r); break;
        case Gen::Tinv: r = S::u_pow(1) * ops.apply(g, r); break;
        case Gen::Y: r = -ops.apply(g, r); break;
        case Gen::Z: r = zc * ops.apply(g, r); break;
        default: throw MalformedWordError("evaluate: not a braid generator: " + g.str());
        }
    };
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        if (it->kind == Gen::YTilde) {
            Word e = ytilde_word(it->i, w.k);
            for (auto jt = e.rbegin(); jt != e.rend(); ++jt) step(*jt);
        } else {
            step(*it);
        }
    }
    return r;
}

template <class S>
VElem<S> evaluate(const BraidWord& w, const VElem<S>& f) {
    static const BaseOperators<S> ops;
    return evaluate(w, f, ops);
}

// d_+^k(1) in V_k for the base action.
template <class S>
VElem<S> dplus_power(int k, int cap) {
    VElem<S> f = VElem<S>::one(0, cap);
    for (int i = 0; i < k; ++i) f = act_dplus(f);
    return f;
}

} // namespace qts
