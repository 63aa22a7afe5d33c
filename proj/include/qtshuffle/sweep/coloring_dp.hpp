#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <qtshuffle/sweep/events.hpp>

namespace qts {

// A component of l_h inside the region: it starts on the vertical line x and ends on the
// horizontal line y.
struct Interval {
    int x = 0, y = 0;
    auto operator<=>(const Interval&) const = default;
};

// An admissible coloring of a sweep line, intervals ordered left to right.
struct Coloring {
    std::vector<Interval> iv;

    int k() const { return static_cast<int>(iv.size()); }
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < iv.size(); ++i)
            s += (i ? " " : "") + std::string("(") + std::to_string(iv[i].x) + "," + std::to_string(iv[i].y) + ")";
        return s + "]";
    }
    auto operator<=>(const Coloring&) const = default;
};

// The coloring of l_{h_1} reached by every path with touch composition alpha.
inline Coloring final_coloring(int m, int n, const std::vector<int>& alpha) {
    Slope sl(m, n);
    check_composition(alpha, std::gcd(m, n));
    Coloring c;
    int acc = 0;
    for (int a : alpha) {
        c.iv.push_back({static_cast<int>(sl.m1 * acc), static_cast<int>(sl.n1 * (acc + a))});
        acc += a;
    }
    return c;
}

// 'I' marks a point lying above the path, where nothing is applied.
struct DPTransition {
    int step = 0; // index of the processed point
    Coloring from, to;
    char kind = 'I';
    int a = 0;
};

template <class S>
struct ColoringDP {
    int m = 0, n = 0;
    std::vector<Point> points;                        // processed in sweep order
    std::vector<std::map<Coloring, VElem<S>>> strata; // strata[j]: after points[0..j)
    std::vector<DPTransition> transitions;            // only between live colorings

    const std::map<Coloring, VElem<S>>& final_values() const { return strata.back(); }
};

namespace detail {

struct LocalMove {
    Coloring to;
    char kind;
    int a;
};

// Moves of the sweep line across the lattice point p, read off from the coloring just above it.
inline std::vector<LocalMove> local_moves(const Coloring& c, Point p, int m) {
    int L = -1, R = -1, a = 0;
    bool inside = false;
    for (int i = 0; i < c.k(); ++i) {
        if (c.iv[i].x == p.x) L = i;
        if (c.iv[i].y == p.y) R = i;
        if (c.iv[i].x > p.x) ++a;
        if (c.iv[i].x < p.x && c.iv[i].y > p.y) inside = true;
    }
    std::vector<LocalMove> out;
    if (L >= 0 && R >= 0) {
        if (R + 1 != L) return out;
        Coloring to = c;
        to.iv[R].y = c.iv[L].y;
        to.iv.erase(to.iv.begin() + L);
        out.push_back({to, 'B', 0});
    } else if (R >= 0) {
        out.push_back({c, 'D', a});
    } else if (L >= 0) {
        out.push_back({c, 'C', a});
    } else if (inside) {
        out.push_back({c, 'E', 0});
    } else {
        out.push_back({c, 'I', 0});
        if (p.y >= 1 && p.x < m) {
            Coloring to = c;
            to.iv.insert(std::upper_bound(to.iv.begin(), to.iv.end(), Interval{p.x, p.y}), Interval{p.x, p.y});
            out.push_back({to, 'A', 0});
        }
    }
    return out;
}

// Every step crossed just below p must end weakly above the diagonal, inside the rectangle.
inline bool crossings_admissible(const Coloring& c, Point p, const Slope& sl, int m) {
    SlopeValue lv = sl.level(p.x, p.y);
    for (const auto& I : c.iv) {
        int yb = -1;
        while (sl.level(I.x, yb + 1) < lv) ++yb;
        if (yb < 0 || sl.side(I.x, yb) < 0) return false;
        int xe = -1;
        while (sl.level(xe + 1, I.y) >= lv) ++xe;
        if (xe + 1 > m || sl.side(xe + 1, I.y) < 0) return false;
    }
    return true;
}

} // namespace detail

// Runs the sweep over all (m,n)-Dyck paths at once, down to l_{h_1}. Colorings that cannot
// be completed to a path are discarded by a backward pass before any value is computed.
template <class S = CoefRat>
ColoringDP<S> recursion_dp(int m, int n, bool keep_strata = true) {
    if (m < 1 || n < 1) throw std::invalid_argument("recursion_dp: m, n must be positive");
    Slope sl(m, n);
    ColoringDP<S> dp;
    dp.m = m;
    dp.n = n;
    for (const auto& p : reading_order(m, n))
        if (sl.side(p.x, p.y) > 0) dp.points.push_back(p);
    std::reverse(dp.points.begin(), dp.points.end());
    const int N = static_cast<int>(dp.points.size());

    // structure pass
    std::vector<std::set<Coloring>> layer(N + 1);
    std::vector<std::vector<DPTransition>> moves(N);
    layer[0].insert(Coloring{});
    for (int j = 0; j < N; ++j)
        for (const auto& c : layer[j])
            for (auto& mv : detail::local_moves(c, dp.points[j], m)) {
                if (!detail::crossings_admissible(mv.to, dp.points[j], sl, m)) continue;
                layer[j + 1].insert(mv.to);
                moves[j].push_back({j, c, std::move(mv.to), mv.kind, mv.a});
            }

    // liveness
    std::set<Coloring> finals;
    for (const auto& alpha : compositions_of(std::gcd(m, n))) finals.insert(final_coloring(m, n, alpha));
    std::vector<std::set<Coloring>> live(N + 1);
    for (const auto& c : layer[N])
        if (finals.count(c)) live[N].insert(c);
    for (int j = N - 1; j >= 0; --j)
        for (const auto& t : moves[j])
            if (live[j + 1].count(t.to)) live[j].insert(t.from);

    // value pass
    std::map<Coloring, VElem<S>> cur{{Coloring{}, VElem<S>::one(0, n)}};
    if (keep_strata) dp.strata.push_back(cur);
    for (int j = 0; j < N; ++j) {
        std::map<Coloring, VElem<S>> next;
        for (auto& t : moves[j]) {
            if (!live[j + 1].count(t.to)) continue;
            const VElem<S>& f = cur.at(t.from);
            VElem<S> g = t.kind == 'I' ? f : apply_event(static_cast<EventKind>(t.kind - 'A'), t.a, f);
            auto it = next.find(t.to);
            if (it == next.end())
                next.emplace(t.to, std::move(g));
            else
                it->second += g;
            dp.transitions.push_back(std::move(t));
        }
        cur = std::move(next);
        if (keep_strata) dp.strata.push_back(cur);
    }
    if (!keep_strata) dp.strata.push_back(std::move(cur));
    return dp;
}

// t^{sum(alpha_i - 1)} d_-^r D_{c_alpha}, an element of V_0.
template <class S>
VElem<S> assemble_state(const ColoringDP<S>& dp, const std::vector<int>& alpha) {
    Coloring c = final_coloring(dp.m, dp.n, alpha);
    const auto& fv = dp.final_values();
    auto it = fv.find(c);
    if (it == fv.end()) return VElem<S>(0, dp.n);
    VElem<S> f = it->second;
    int r = static_cast<int>(alpha.size()), g = 0;
    for (int a : alpha) g += a;
    for (int i = 0; i < r; ++i) f = act_dminus(f);
    return S::t_pow(g - r) * f;
}

inline SymFunc<CoefRat> assemble_composition(const ColoringDP<CoefRat>& dp, const std::vector<int>& alpha) {
    return assemble_state(dp, alpha).to_sym(dp.n);
}

inline SymFunc<CoefRat> sweep_compositional(int m, int n, const std::vector<int>& alpha) {
    return assemble_composition(recursion_dp<CoefRat>(m, n, false), alpha);
}

} // namespace qts
