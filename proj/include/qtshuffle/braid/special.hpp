#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <qtshuffle/braid/braid_word.hpp>
#include <qtshuffle/coeffring/laurent.hpp>
#include <qtshuffle/combinat/paths.hpp>

namespace qts {

struct InadmissibleBraidError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// k labelled points (x, 1-x) on the antidiagonal of the torus, moving down along slope s.
struct PointConfig {
    std::vector<Rational> v;
    Rational t; // 1/(s+1)

    PointConfig() = default;
    PointConfig(std::vector<Rational> v_, const Rational& s) : v(std::move(v_)), t(Rational(1) / (s + 1)) {
        if (s <= 0) throw std::invalid_argument("PointConfig: slope must be positive");
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 0 || v[i] >= 1) throw InadmissibleBraidError("PointConfig: points must lie in (0,1)");
            for (std::size_t j = 0; j < i; ++j)
                if (v[i] == v[j]) throw InadmissibleBraidError("PointConfig: points must be distinct");
        }
    }

    int k() const { return static_cast<int>(v.size()); }

    // 1-based position of point i among the sorted points
    int position(int i) const {
        int a = 1;
        for (const auto& x : v)
            if (x < v[i]) ++a;
        return a;
    }

    // labels (0-based) in ascending order of position
    std::vector<int> order() const {
        std::vector<int> o(v.size());
        for (int i = 0; i < k(); ++i) o[position(i) - 1] = i;
        return o;
    }

    Rational opnext(const Rational& x) const {
        if (x == t) throw InadmissibleBraidError("opnext: point sits at t");
        return x > t ? x - t : x + (1 - t);
    }
};

// One step of point i (0-based): T_{a' down a} z_a when v_i < t, T*_{a' up a} ytilde_a when v_i > t.
inline std::pair<BraidWord, PointConfig> elementary_step(const PointConfig& c, int i) {
    if (i < 0 || i >= c.k()) throw std::out_of_range("elementary_step: no such point");
    PointConfig n = c;
    n.v[i] = c.opnext(c.v[i]);
    for (int j = 0; j < c.k(); ++j)
        if (j != i && n.v[j] == n.v[i]) throw InadmissibleBraidError("elementary_step: collision with point " + std::to_string(j + 1));
    int a = c.position(i), a2 = n.position(i);
    Word w = c.v[i] < c.t ? down(a2, a) * gen(Gen::Z, a) : up_star(a2, a) * gen(Gen::YTilde, a);
    return {BraidWord(c.k(), std::move(w)), n};
}

// b_{i_1, ..., i_l}(v): the step order runs from the right, i_l first.
inline std::pair<BraidWord, PointConfig> braid_of_steps(const PointConfig& c, const std::vector<int>& indices) {
    PointConfig cur = c;
    Word w;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
        auto [b, next] = elementary_step(cur, *it);
        w = b.gens * w;
        cur = std::move(next);
    }
    return {BraidWord(c.k(), std::move(w)), cur};
}

// Round robin over the points with steps left, by current x-position descending. Listed
// with the first step last, as braid_of_steps expects.
inline std::vector<int> canonical_order(const PointConfig& c, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != c.k()) throw std::invalid_argument("special_braid: alpha must have one part per point");
    std::vector<int> left(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 1) throw InvalidCompositionError("special_braid: parts must be positive");
        left[i] = alpha[i] - 1;
    }
    PointConfig cur = c;
    std::vector<int> seq;
    for (;;) {
        std::vector<int> round;
        for (int i = 0; i < c.k(); ++i)
            if (left[i] > 0) round.push_back(i);
        if (round.empty()) break;
        std::sort(round.begin(), round.end(), [&](int x, int y) { return cur.v[x] > cur.v[y]; });
        for (int i : round) {
            seq.push_back(i);
            --left[i];
            cur.v[i] = cur.opnext(cur.v[i]);
        }
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

// B_{s,v,alpha}; point i makes alpha_i - 1 steps.
inline BraidWord special_braid(const PointConfig& c, const std::vector<int>& alpha) {
    return braid_of_steps(c, canonical_order(c, alpha)).first;
}

// Positions after all steps of alpha.
inline PointConfig final_config(const PointConfig& c, const std::vector<int>& alpha) {
    return braid_of_steps(c, canonical_order(c, alpha)).second;
}

} // namespace qts
