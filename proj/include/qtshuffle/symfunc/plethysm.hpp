#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qtshuffle/symfunc/symfunc.hpp>

namespace qts {

// Exponent vector over the auxiliary variables of an alphabet.
using AuxMono = std::vector<int>;

// Formal sum of terms coef * aux-monomial * (X or 1).
class Alphabet {
public:
    struct Term {
        CoefRat coef;
        AuxMono aux;
        bool has_x = false;
    };

    explicit Alphabet(std::vector<std::string> aux_vars = {}) : vars_(std::move(aux_vars)) {}

    // The alphabet X itself.
    static Alphabet x(std::vector<std::string> aux_vars = {}) {
        Alphabet a(std::move(aux_vars));
        a.add_x(CoefRat(1));
        return a;
    }

    Alphabet& add_x(const CoefRat& c, AuxMono aux = {}) { return add(c, std::move(aux), true); }
    Alphabet& add_const(const CoefRat& c, AuxMono aux = {}) { return add(c, std::move(aux), false); }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("Alphabet: unknown variable " + name);
    }

private:
    std::vector<std::string> vars_;
    std::vector<Term> terms_;

    Alphabet& add(const CoefRat& c, AuxMono aux, bool has_x) {
        if (aux.empty()) aux.assign(vars_.size(), 0);
        if (aux.size() != vars_.size()) throw std::invalid_argument("Alphabet: exponent vector has wrong length");
        if (!c.is_laurent())
            throw std::invalid_argument("Alphabet: scalar " + c.str() + " is not a sum of monomials");
        if (!c.is_zero()) terms_.push_back(Term{c, std::move(aux), has_x});
        return *this;
    }
};

namespace detail {

// Product of power sums p_lam[X] times an aux monomial, with a coefficient.
using PowerPoly = std::map<std::pair<AuxMono, Partition>, CoefRat>;

inline PowerPoly power_sum_of_alphabet(const Alphabet& a, int r, int cap) {
    PowerPoly out;
    for (const auto& t : a.terms()) {
        if (t.has_x && r > cap) continue;
        AuxMono aux = t.aux;
        for (auto& e : aux) e *= r;
        Partition p = t.has_x ? Partition{r} : Partition{};
        CoefRat c = t.coef.frobenius(r);
        auto [it, fresh] = out.try_emplace({aux, p}, c);
        if (!fresh) it->second += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

inline PowerPoly multiply(const PowerPoly& a, const PowerPoly& b, int cap) {
    PowerPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.second.size() + kb.second.size() > cap) continue;
            AuxMono aux = ka.first;
            for (std::size_t i = 0; i < aux.size(); ++i) aux[i] += kb.first[i];
            CoefRat c = ca * cb;
            auto [it, fresh] = out.try_emplace({aux, ka.second + kb.second}, c);
            if (!fresh) it->second += c;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

} // namespace detail

// f[A] as a polynomial in the auxiliary variables with symmetric-function coefficients.
template <class S>
std::map<AuxMono, SymFunc<S>> plethystic_substitute(const SymFunc<S>& f, const Alphabet& a) {
    int cap = f.cap();
    auto pcoef = SymFunc<S>::to_basis(f, Basis::powersum);
    std::map<int, detail::PowerPoly> pr_cache;
    auto pr = [&](int r) -> const detail::PowerPoly& {
        auto it = pr_cache.find(r);
        if (it == pr_cache.end()) it = pr_cache.emplace(r, detail::power_sum_of_alphabet(a, r, cap)).first;
        return it->second;
    };
    std::map<AuxMono, typename SymFunc<S>::Map> acc;
    for (const auto& [lam, c] : pcoef) {
        detail::PowerPoly prod;
        prod[{AuxMono(a.vars().size(), 0), Partition{}}] = CoefRat(1);
        for (int r : lam.parts()) prod = detail::multiply(prod, pr(r), cap);
        for (const auto& [key, k] : prod) {
            S v = scalar_from<S>(k) * c;
            auto& m = acc[key.first];
            auto [it, fresh] = m.try_emplace(key.second, v);
            if (!fresh) it->second += v;
        }
    }
    std::map<AuxMono, SymFunc<S>> out;
    for (auto& [aux, pmap] : acc) {
        std::erase_if(pmap, [](const auto& kv) { return kv.second.is_zero(); });
        SymFunc<S> g = SymFunc<S>::from_basis(pmap, Basis::powersum, cap);
        if (!g.is_zero()) out.emplace(aux, std::move(g));
    }
    return out;
}

// Coefficients of var^i, lo <= i <= hi, in pExp[a] for a = ±M var^e X with M a monomial scalar.
template <class S>
std::map<int, SymFunc<S>> pexp_coefficients(const Alphabet& a, const std::string& var, int lo, int hi, int cap) {
    if (a.terms().size() != 1 || !a.terms()[0].has_x)
        throw std::invalid_argument("pexp_coefficients: alphabet must be a single multiple of X");
    const auto& t = a.terms()[0];
    int vi = a.var_index(var);
    for (std::size_t i = 0; i < t.aux.size(); ++i)
        if (static_cast<int>(i) != vi && t.aux[i] != 0)
            throw std::invalid_argument("pexp_coefficients: other auxiliary variables present");
    if (!t.coef.num().is_monomial()) throw std::invalid_argument("pexp_coefficients: scalar must be a monomial");
    const auto& [mono, ic] = t.coef.num().terms()[0];
    if (ic != 1 && ic != -1) throw std::invalid_argument("pexp_coefficients: integer factor must be ±1");
    int e = t.aux[vi];
    std::map<int, SymFunc<S>> out;
    for (int i = lo; i <= hi; ++i) {
        SymFunc<S> g(cap);
        auto term = [&](int n) {
            CoefRat scal = CoefRat(Laurent::monomial(1, Mono2{mono.u * n, mono.t * n}));
            if (ic == 1)
                g += scalar_from<S>(scal) * SymFunc<S>::h(Partition{n}, cap);
            else
                g += scalar_from<S>((n % 2 ? CoefRat(-1) : CoefRat(1)) * scal) * SymFunc<S>::e(Partition{n}, cap);
        };
        if (e == 0) {
            if (i == 0)
                for (int n = 0; n <= cap; ++n) term(n);
        } else if (i % e == 0 && i / e >= 0 && i / e <= cap) {
            term(i / e);
        }
        if (!g.is_zero()) out.emplace(i, std::move(g));
    }
    return out;
}

struct AsymmetricInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Aggregate words x_{w_1}...x_{w_n} (given by their letters) into the monomial basis.
// If `alphabet_size` is set, every monomial over letters 1..N of a seen shape must occur
// with the same coefficient; otherwise only the observed monomials are compared.
template <class S>
SymFunc<S> from_word_multiset(const std::vector<std::pair<std::vector<int>, S>>& words, int cap,
                              std::optional<int> alphabet_size = std::nullopt) {
    std::map<std::vector<int>, S> monos;
    std::optional<std::size_t> n;
    for (const auto& [w, c] : words) {
        if (n && *n != w.size()) throw std::invalid_argument("from_word_multiset: words of different lengths");
        n = w.size();
        std::map<int, int> cnt;
        for (int l : w) ++cnt[l];
        std::vector<int> key;
        for (auto [l, k] : cnt) {
            key.push_back(l);
            key.push_back(k);
        }
        auto [it, fresh] = monos.try_emplace(key, c);
        if (!fresh) it->second += c;
    }
    std::map<Partition, S> coef;
    std::map<Partition, long> seen;
    for (const auto& [key, c] : monos) {
        std::vector<int> exps;
        for (std::size_t i = 1; i < key.size(); i += 2) exps.push_back(key[i]);
        Partition lam(exps);
        auto [it, fresh] = coef.try_emplace(lam, c);
        if (!fresh && !(it->second == c))
            throw AsymmetricInputError("from_word_multiset: unequal coefficients for shape " + lam.str());
        ++seen[lam];
    }
    if (alphabet_size) {
        for (const auto& [lam, k] : seen) {
            // number of distinct monomials of shape lam in N letters
            std::map<int, int> mult;
            for (int p : lam.parts()) ++mult[p];
            long total = 1;
            int avail = *alphabet_size;
            for (auto [p, c] : mult) {
                for (int j = 0; j < c; ++j) total = total * (avail - j) / (j + 1);
                avail -= c;
            }
            if (k != total && !coef.at(lam).is_zero())
                throw AsymmetricInputError("from_word_multiset: missing monomials for shape " + lam.str());
        }
    }
    SymFunc<S> f(cap);
    for (const auto& [lam, c] : coef) f.add(lam, c);
    return f;
}

} // namespace qts
