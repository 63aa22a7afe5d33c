#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include <qtshuffle/actions/mediant.hpp>
#include <qtshuffle/braid/special.hpp>
#include <qtshuffle/sweep/coloring_dp.hpp>

namespace qts {

inline Integer floor_rational(const Rational& r) {
    Integer n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    Integer q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

inline Rational frac_rational(const Rational& r) { return r - Rational(floor_rational(r)); }

// The sweep lines l_h: y = s_- x + h with s_- = n/m - eps. The formal infinitesimals are
// realized by small rationals; the gap delta below a lattice point is eps^2.
struct SweepGeometry {
    int m = 0, n = 0;
    Rational eps, s, delta;

    SweepGeometry(int m_, int n_, Rational eps_ = 0) : m(m_), n(n_) {
        if (m < 1 || n < 1) throw std::invalid_argument("SweepGeometry: m, n must be positive");
        if (eps_ == 0) {
            long w = m + n + 1;
            eps_ = Rational(1, 1000 * w * w * w * w);
        }
        eps = eps_;
        s = Rational(n, m) - eps;
        delta = eps * eps;
    }

    Rational level(Point p) const { return Rational(p.y) - s * p.x; }

    // Height of the sweep line for strata[j] of the coloring DP.
    template <class S>
    Rational stratum_height(const ColoringDP<S>& dp, std::size_t j) const {
        if (dp.points.empty()) throw std::invalid_argument("stratum_height: no points");
        if (j == 0) return level(dp.points.front()) + delta;
        return level(dp.points.at(j - 1)) - delta;
    }

    // Just above the diagonal lattice points, below every other point of the rectangle.
    template <class S>
    Rational final_height(const ColoringDP<S>& dp) const { return stratum_height(dp, dp.points.size()); }
};

// Wrap data of one interval: first and last antidiagonal crossings, followed from b to a.
struct StrandWrap {
    Rational v_initial, v_final;
    int alpha = 0;
};

inline StrandWrap strand_wrap(const SweepGeometry& g, const Rational& h, Interval I) {
    Rational sa = Rational(I.x) * (1 + g.s) + h;
    Rational sb = Rational(I.y) + (Rational(I.y) - h) / g.s;
    if (frac_rational(sa) == 0 || frac_rational(sb) == 0) throw InadmissibleBraidError("strand_wrap: interval end on a lattice line");
    Integer lo = floor_rational(sa) + 1, hi = floor_rational(sb);
    if (hi < lo) throw InadmissibleBraidError("strand_wrap: interval misses the diagonal");
    auto x_at = [&](const Integer& N) { return frac_rational((Rational(N) - h) / (1 + g.s)); };
    return {x_at(hi), x_at(lo), static_cast<int>(hi - lo + 1)};
}

struct ColoringBraid {
    PointConfig initial;
    std::vector<int> alpha;
    std::vector<Rational> finals;
    BraidWord word;
    int inv_initial = 0, inv_final = 0;
};

inline int inversions(const std::vector<int>& perm) {
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) c += perm[i] > perm[j];
    return c;
}

inline int inversions_of_positions(const std::vector<Rational>& x) {
    std::vector<int> lab(x.size());
    std::iota(lab.begin(), lab.end(), 0);
    std::sort(lab.begin(), lab.end(), [&](int a, int b) { return x[a] < x[b]; });
    return inversions(lab);
}

// The special braid of the slope s_- obtained by wrapping the intervals of c at height h.
inline ColoringBraid coloring_braid(const SweepGeometry& g, const Coloring& c, const Rational& h) {
    std::vector<Rational> v, fin;
    std::vector<int> alpha;
    for (const auto& I : c.iv) {
        auto w = strand_wrap(g, h, I);
        v.push_back(w.v_initial);
        fin.push_back(w.v_final);
        alpha.push_back(w.alpha);
    }
    ColoringBraid out{PointConfig(v, g.s), alpha, fin, BraidWord(c.k(), {}), 0, 0};
    out.word = special_braid(out.initial, alpha);
    out.inv_initial = inversions_of_positions(v);
    out.inv_final = inversions_of_positions(fin);
    return out;
}

inline BraidWord braid_of_coloring(int m, int n, const Coloring& c, const Rational& h) {
    return coloring_braid(SweepGeometry(m, n), c, h).word;
}

// At the bottom of the sweep, where the final colorings c_alpha live.
inline BraidWord braid_of_coloring(int m, int n, const Coloring& c) {
    SweepGeometry g(m, n);
    return coloring_braid(g, c, g.final_height(recursion_dp<CoefRat>(m, n, false))).word;
}

// q^{(inv_final - inv_initial)/2} B_{s,c} d_+^k(1)
template <class S = CoefRat>
VElem<S> theorem_main_eval(const SweepGeometry& g, const Coloring& c, const Rational& h, int cap) {
    auto cb = coloring_braid(g, c, h);
    return S::u_pow(cb.inv_final - cb.inv_initial) * evaluate(cb.word, dplus_power<S>(c.k(), cap));
}

inline VElem<CoefRat> theorem_main_eval(int m, int n, const Coloring& c) {
    SweepGeometry g(m, n);
    return theorem_main_eval<CoefRat>(g, c, g.final_height(recursion_dp<CoefRat>(m, n, false)), n);
}

// Both sides of the braid rule for one DP transition across the point P. B belongs to the
// coloring below P, B' and B'' to colorings above it. B and E transitions both give the BE
// rule for the lower coloring, with B' its split at P and B'' itself.
template <class S = CoefRat>
std::pair<VElem<S>, VElem<S>> braid_rule_sides(const SweepGeometry& g, const DPTransition& tr, Point P, const Rational& h_above,
                                               const Rational& h_below, int cap) {
    auto ev = [&](const Coloring& c, const Rational& h) { return evaluate(coloring_braid(g, c, h).word, dplus_power<S>(c.k(), cap)); };
    const int k = tr.to.k();
    VElem<S> lhs = ev(tr.to, h_below);
    switch (tr.kind) {
    case 'I': return {lhs, ev(tr.from, h_above)};
    case 'A': return {lhs, act_dplus(ev(tr.from, h_above))};
    case 'C': {
        VElem<S> f = ev(tr.from, h_above);
        VElem<S> cf = divide_by_q_minus_one(act_dminus(act_dplus(f)) - act_dplus(act_dminus(f)));
        return {lhs, S::u_pow(1 - k) * cf};
    }
    case 'D': return {lhs, S::u_pow(k - 1) * ev(tr.from, h_above)};
    case 'B':
    case 'E': {
        Coloring split = tr.to;
        auto it = std::find_if(split.iv.begin(), split.iv.end(), [&](const Interval& I) { return I.x < P.x && I.y > P.y; });
        if (it == split.iv.end()) throw std::invalid_argument("braid_rule_sides: no interval passes through the point");
        Interval right{P.x, it->y};
        it->y = P.y;
        split.iv.insert(std::upper_bound(split.iv.begin(), split.iv.end(), right), right);
        VElem<S> rhs = S::t_pow(1) * ev(tr.to, h_above) + S::u_pow(-1) * act_dminus(ev(split, h_above));
        return {lhs, rhs};
    }
    }
    throw std::invalid_argument("braid_rule_sides: unknown transition kind");
}

// b_{m,n}: one strand from just left of (1-t, t) down to just left of (t, 1-t) at slope
// n/m, crossing the horizontal wall n-1 times and the vertical wall m-1 times.
inline BraidWord single_strand_braid(int m, int n) {
    check_coprime_slope(m, n);
    if (m == 0 || n == 0) throw std::invalid_argument("single_strand_braid: m, n must be positive");
    Rational t(m, m + n), x = Rational(n, m + n) - Rational(1, 2 * (m + n));
    Word w;
    for (int j = 0; j < m + n - 2; ++j) {
        bool vertical = x < t;
        w.insert(w.begin(), Gen{vertical ? Gen::Z : Gen::Y, 1});
        x = vertical ? x + (1 - t) : x - t;
    }
    return BraidWord(1, std::move(w));
}

// b^{(a)}_{m,n} = (b_{m,n} y_1 z_1)^{a-1} b_{m,n}
inline BraidWord single_strand_family(int m, int n, int a) {
    if (a < 1) throw std::invalid_argument("single_strand_family: a must be positive");
    BraidWord b = single_strand_braid(m, n), out = b;
    BraidWord loop = b * BraidWord(1, {Gen{Gen::Y, 1}, Gen{Gen::Z, 1}});
    for (int i = 1; i < a; ++i) out = loop * out;
    return out;
}

} // namespace qts
