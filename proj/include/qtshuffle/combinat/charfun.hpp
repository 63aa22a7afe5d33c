#pragma once

#include <map>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include <qtshuffle/combinat/stats.hpp>
#include <qtshuffle/symfunc.hpp>

namespace qts {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline CoefRat q_polynomial(const std::vector<long>& counts) {
    Laurent l;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) l = l + Laurent::monomial(counts[i], Mono2{2 * static_cast<int>(i), 0});
    return CoefRat(l);
}

} // namespace detail

inline constexpr int char_function_full_enumeration_limit = 5;
inline constexpr int char_function_limit = 10;

// chi(pi, S) = sum over S-admissible words w of q^{inv(pi, w)} x_w. Up to the full
// enumeration limit every word over {1..n} is visited and symmetry is checked; beyond it
// only words whose content is a partition are visited, one per monomial m_lambda.
inline SymFunc<CoefRat> char_function(const MarkedSquarePath& mp, bool force_full = false) {
    int n = mp.n();
    bool full = force_full || n <= char_function_full_enumeration_limit;
    if (n > char_function_limit) throw ResourceLimitError("char_function: n too large for enumeration");
    auto h = mp.heights();
    std::vector<std::pair<int, int>> below, marks(mp.marks.begin(), mp.marks.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < h[i]; ++j) below.emplace_back(i, j);
    int max_inv = static_cast<int>(below.size());

    // content (as a sorted letter multiset) -> inv histogram
    std::map<std::vector<int>, std::vector<long>> hist;
    std::vector<int> w(n);
    auto visit = [&]() {
        for (const auto& [i, j] : marks)
            if (!(w[i] > w[j])) return;
        int inv = 0;
        for (const auto& [i, j] : below) inv += w[i] > w[j];
        std::vector<int> c = w;
        std::sort(c.begin(), c.end());
        auto& v = hist[c];
        if (v.empty()) v.assign(max_inv + 1, 0);
        ++v[inv];
    };
    if (full) {
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) return visit();
            for (int a = 1; a <= n; ++a) {
                w[pos] = a;
                rec(pos + 1);
            }
        };
        rec(0);
    } else {
        for (const auto& lam : partitions_of(n)) {
            std::vector<int> c;
            for (int i = 0; i < lam.length(); ++i) c.insert(c.end(), lam[i], i + 1);
            std::sort(c.begin(), c.end());
            do {
                w = c;
                visit();
            } while (std::next_permutation(c.begin(), c.end()));
        }
    }
    std::vector<std::pair<std::vector<int>, CoefRat>> words;
    for (const auto& [c, v] : hist) words.emplace_back(c, detail::q_polynomial(v));
    if (words.empty()) return SymFunc<CoefRat>(n);
    if (full) return from_word_multiset(words, n, n);
    return from_word_multiset(words, n);
}

// t^{area} q^{dinv - maxtdinv} chi(pi', S_pi)
inline SymFunc<CoefRat> path_summand(const DyckPath& p) {
    static std::mutex mu;
    static std::map<MarkedSquarePath, SymFunc<CoefRat>> cache;
    auto a = attack_structure(p);
    std::optional<SymFunc<CoefRat>> chi;
    {
        std::lock_guard lk(mu);
        if (auto it = cache.find(a.structure); it != cache.end()) chi = it->second;
    }
    if (!chi) {
        chi = char_function(a.structure);
        std::lock_guard lk(mu);
        cache.emplace(a.structure, *chi);
    }
    int mt = 0;
    for (int v : a.attacked) mt += v;
    CoefRat w = CoefRat::t_pow(area(p)) * CoefRat::q_pow(dinv(p) - mt);
    return w * *chi;
}

// Sum of path_summand over the (g m1, g n1)-Dyck paths with touch composition alpha.
inline SymFunc<CoefRat> rhs_compositional(int m1, int n1, int g, const std::vector<int>& alpha) {
    if (std::gcd(m1, n1) != 1) throw std::invalid_argument("rhs_compositional: m1, n1 must be coprime");
    check_composition(alpha, g);
    SymFunc<CoefRat> out(g * n1);
    for (const auto& p : enumerate_paths(g * m1, g * n1, alpha)) out += path_summand(p);
    return out;
}

// Unfiltered sum over all (m,n)-Dyck paths.
inline SymFunc<CoefRat> rhs_full(int m, int n) {
    SymFunc<CoefRat> out(n);
    for (const auto& p : enumerate_paths(m, n)) out += path_summand(p);
    return out;
}

} // namespace qts
