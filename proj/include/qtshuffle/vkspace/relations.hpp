#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qtshuffle/vkspace/opset.hpp>

namespace qts {

// Linear combination of words with symbolic scalar coefficients.
struct Expr {
    std::vector<std::pair<CoefRat, Word>> terms;

    Expr() = default;
    Expr(Word w) { terms.emplace_back(CoefRat(1), std::move(w)); }

    Expr& add(CoefRat c, Word w) {
        terms.emplace_back(std::move(c), std::move(w));
        return *this;
    }
    friend Expr operator+(Expr a, const Expr& b) {
        a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
        return a;
    }
    friend Expr operator-(Expr a, const Expr& b) {
        for (const auto& [c, w] : b.terms) a.terms.emplace_back(-c, w);
        return a;
    }
    friend Expr operator*(const CoefRat& c, Expr a) {
        for (auto& t : a.terms) t.first = c * t.first;
        return a;
    }
    // Composition: (a * b) acts as b first, then a.
    friend Expr operator*(const Expr& a, const Expr& b) {
        Expr r;
        for (const auto& [ca, wa] : a.terms)
            for (const auto& [cb, wb] : b.terms) r.terms.emplace_back(ca * cb, wa * wb);
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < terms.size(); ++j) {
            if (j) s += " + ";
            s += "(" + terms[j].first.str() + ")";
            if (!terms[j].second.empty()) s += "*[" + to_string(terms[j].second) + "]";
        }
        return s.empty() ? "0" : s;
    }

    template <class S>
    VElem<S> evaluate(const OperatorSet<S>& ops, const VElem<S>& f, int target_k) const {
        VElem<S> out(target_k, f.cap());
        for (const auto& [c, w] : terms) out.add_scaled(ops.apply(w, f), scalar_from<S>(c));
        return out;
    }
};

// The spanning set {m_lambda y^a : |lambda| + |a| <= degree} of V_k, in the h basis.
template <class S>
std::vector<std::pair<std::string, VElem<S>>> spanning_set(int k, int degree) {
    std::vector<std::pair<std::string, VElem<S>>> out;
    for (int d = 0; d <= degree; ++d)
        for (int xd = 0; xd <= d; ++xd)
            for (const auto& lam : partitions_of(xd))
                for (const auto& a : compositions_with_zeros(d - xd, k)) {
                    VElem<S> f = VElem<S>::from_sym(SymFunc<S>::m(lam, degree), 0, degree + 8);
                    VElem<S> g(k, degree + 8);
                    for (const auto& [key, c] : f.terms()) g.add(VKey(key.parts(), a), c);
                    std::string name = "m" + lam.str();
                    for (int i = 0; i < k; ++i)
                        if (a[i]) name += "*y" + std::to_string(i + 1) + "^" + std::to_string(a[i]);
                    out.emplace_back(name, std::move(g));
                }
    return out;
}

struct RelationReport {
    bool pass = true;
    int cases = 0;
    std::string witness; // first failing input, with the difference
};

// Checks lhs = rhs on the spanning set of V_k up to the given total degree.
template <class S>
RelationReport relation_check(const Expr& lhs, const Expr& rhs, int k, int degree, const OperatorSet<S>& ops) {
    std::optional<int> target;
    for (const Expr* e : {&lhs, &rhs})
        for (const auto& [c, w] : e->terms) {
            int t = target_vertex(w, k);
            if (target && *target != t) throw MalformedWordError("relation sides end at different vertices");
            target = t;
        }
    RelationReport rep;
    if (!target) return rep;
    for (const auto& [name, f] : spanning_set<S>(k, degree)) {
        ++rep.cases;
        VElem<S> diff = lhs.evaluate(ops, f, *target) - rhs.evaluate(ops, f, *target);
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.witness = "on " + name + " at k=" + std::to_string(k) + ": lhs - rhs = " + diff.str();
            return rep;
        }
    }
    return rep;
}

struct Relation {
    std::string name;
    int k;
    Expr lhs, rhs;
};

// Which algebra a relation family is instantiated for: A_q on (T, d_-, d_+, y) or
// A_{q^{-1}} on (T^{-1}, d_-, d_+^*, z).
enum class Flavor { a_q, a_qinv };

namespace detail {

struct FlavorGens {
    Gen::Kind t, tinv, dplus, y;
    CoefRat Q;
    std::string tag;
};

inline FlavorGens flavor_gens(Flavor fl) {
    if (fl == Flavor::a_q) return {Gen::T, Gen::Tinv, Gen::DPlus, Gen::Y, CoefRat::q_pow(1), "A_q"};
    return {Gen::Tinv, Gen::T, Gen::DPlusStar, Gen::Z, CoefRat::q_pow(-1), "A_qinv"};
}

} // namespace detail

// All defining relations and the y-relations of one flavor, at source vertex k.
inline std::vector<Relation> algebra_relations(Flavor fl, int k) {
    auto F = detail::flavor_gens(fl);
    const CoefRat one(1), Q = F.Q;
    auto T = [&](int i) { return Word{{F.t, i}}; };
    auto Ti = [&](int i) { return Word{{F.tinv, i}}; };
    auto Y = [&](int i) { return Word{{F.y, i}}; };
    Word dm{{Gen::DMinus}}, dp{{F.dplus}};
    // trains in this flavor's T
    auto tr_up = [&](int i, int j) {
        Word w = up(i, j);
        if (fl == Flavor::a_qinv)
            for (auto& g : w) g.kind = g.kind == Gen::T ? Gen::Tinv : Gen::T;
        return w;
    };
    auto tr_down = [&](int j, int i) {
        Word w = down(j, i);
        if (fl == Flavor::a_qinv)
            for (auto& g : w) g.kind = g.kind == Gen::T ? Gen::Tinv : Gen::T;
        return w;
    };
    auto tr_down_star = [&](int j, int i) {
        Word w = down_star(j, i);
        if (fl == Flavor::a_qinv)
            for (auto& g : w) g.kind = g.kind == Gen::T ? Gen::Tinv : Gen::T;
        return w;
    };
    Expr comm = Expr(dp * dm) - Expr(dm * dp); // d+ d- - d- d+
    std::vector<Relation> out;
    auto rel = [&](std::string name, Expr l, Expr r) {
        out.push_back({F.tag + ":" + name + "@k=" + std::to_string(k), k, std::move(l), std::move(r)});
    };
    for (int i = 1; i <= k - 1; ++i) {
        rel("Trel.quadratic(i=" + std::to_string(i) + ")", Expr(T(i) * T(i)) + (Q - one) * Expr(T(i)) - Q * Expr(Word{}), Expr());
        rel("Tinv.inverse(i=" + std::to_string(i) + ")", Expr(T(i) * Ti(i)), Expr(Word{}));
        if (i + 1 <= k - 1) rel("Trel.braid(i=" + std::to_string(i) + ")", Expr(T(i) * T(i + 1) * T(i)), Expr(T(i + 1) * T(i) * T(i + 1)));
        for (int j = i + 2; j <= k - 1; ++j)
            rel("Trel.far(" + std::to_string(i) + "," + std::to_string(j) + ")", Expr(T(i) * T(j)), Expr(T(j) * T(i)));
    }
    if (k >= 2) rel("Tdminus.double", Expr(dm * dm * T(k - 1)), Expr(dm * dm));
    for (int i = 1; i <= k - 2; ++i) rel("Tdminus.commute(i=" + std::to_string(i) + ")", Expr(T(i) * dm), Expr(dm * T(i)));
    rel("Tdplus.double", Expr(T(1) * dp * dp), Expr(dp * dp));
    for (int i = 1; i <= k - 1; ++i) rel("Tdplus.shift(i=" + std::to_string(i) + ")", Expr(dp * T(i)), Expr(T(i + 1) * dp));
    if (k >= 2) rel("extrarel1", Expr(dm) * comm * Expr(T(k - 1)), Q * (comm * Expr(dm)));
    if (k >= 1) rel("extrarel2", Expr(T(1)) * comm * Expr(dp), Q * (Expr(dp) * comm));
    if (k >= 1) {
        CoefRat s = CoefRat(1);
        for (int j = 0; j < k - 1; ++j) s = s * Q;
        rel("rely1", (s * (Q - one)) * Expr(Y(1)), comm * Expr(tr_down(k, 1)));
    }
    for (int i = 1; i <= k - 1; ++i) rel("rely2(i=" + std::to_string(i) + ")", Expr(Y(i + 1)), Q * Expr(Ti(i) * Y(i) * Ti(i)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (i != j && i != j + 1)
                rel("relTy(" + std::to_string(i) + "," + std::to_string(j) + ")", Expr(Y(i) * T(j)), Expr(T(j) * Y(i)));
    for (int i = 1; i <= k - 1; ++i) rel("relydminus(i=" + std::to_string(i) + ")", Expr(Y(i) * dm), Expr(dm * Y(i)));
    for (int i = 1; i <= k; ++i)
        rel("relydplus(i=" + std::to_string(i) + ")", Expr(dp * Y(i)), Expr(tr_up(1, i + 1) * Y(i) * tr_down_star(i + 1, 1) * dp));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            rel("relycomm(" + std::to_string(i) + "," + std::to_string(j) + ")", Expr(Y(i) * Y(j)), Expr(Y(j) * Y(i)));
    return out;
}

// The identities making (rho, rho*) correctly intertwined, at source vertex k.
inline std::vector<Relation> intertwining_relations(int k) {
    std::vector<Relation> out;
    Word dp{{Gen::DPlus}}, dps{{Gen::DPlusStar}};
    auto tag = [&](std::string s) { return "correctinter:" + s + "@k=" + std::to_string(k); };
    for (int i = 1; i <= k; ++i) {
        out.push_back({tag("dplus_z(i=" + std::to_string(i) + ")"), k, Expr(dp * Word{{Gen::Z, i}}), Expr(Word{{Gen::Z, i + 1}} * dp)});
        out.push_back({tag("dplusstar_y(i=" + std::to_string(i) + ")"), k, Expr(dps * Word{{Gen::Y, i}}), Expr(Word{{Gen::Y, i + 1}} * dps)});
    }
    CoefRat c = -CoefRat::t_pow(1) * CoefRat::q_pow(k + 1);
    out.push_back({tag("z1_dplus"), k, Expr(Word{{Gen::Z, 1}} * dp), c * Expr(Word{{Gen::Y, 1}} * dps)});
    return out;
}

// Everything that must hold for a correctly intertwined pair, for k = 0..max_k.
inline std::vector<Relation> full_catalog(int max_k) {
    std::vector<Relation> out;
    for (int k = 0; k <= max_k; ++k) {
        for (Flavor fl : {Flavor::a_q, Flavor::a_qinv}) {
            auto r = algebra_relations(fl, k);
            out.insert(out.end(), r.begin(), r.end());
        }
        auto r = intertwining_relations(k);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

} // namespace qts
