#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <qtshuffle/combinat/paths.hpp>

namespace qts {

// An (n,n)-Dyck path with a set of marked corners. Cells are (column, row).
struct MarkedSquarePath {
    DyckPath pi;
    std::set<std::pair<int, int>> marks;

    int n() const { return pi.n(); }
    // heights[i] = y-level of the path along the East step at column i.
    std::vector<int> heights() const {
        std::vector<int> h;
        int y = 0;
        for (auto b : pi.steps()) {
            if (b)
                ++y;
            else
                h.push_back(y);
        }
        return h;
    }
    // Cell (i,j), i < j, lies weakly below the path.
    bool below(int i, int j) const { return j < heights()[i]; }
    std::vector<std::pair<int, int>> corners() const {
        auto h = heights();
        std::vector<std::pair<int, int>> out;
        int n = pi.n();
        for (int i = 0; i + 1 < n; ++i)
            if (h[i] < n && h[i + 1] > h[i]) out.emplace_back(i, h[i]);
        return out;
    }
    bool valid_marks() const {
        auto c = corners();
        for (const auto& mk : marks)
            if (std::find(c.begin(), c.end(), mk) == c.end()) return false;
        return true;
    }
    static MarkedSquarePath from_heights(const std::vector<int>& h, std::set<std::pair<int, int>> marks = {}) {
        int n = static_cast<int>(h.size());
        std::vector<std::uint8_t> bits;
        int y = 0;
        for (int i = 0; i < n; ++i) {
            while (y < h[i]) {
                bits.push_back(1);
                ++y;
            }
            bits.push_back(0);
        }
        MarkedSquarePath mp{DyckPath(n, n, bits), std::move(marks)};
        if (!mp.valid_marks()) throw std::invalid_argument("MarkedSquarePath: mark is not a corner");
        return mp;
    }
    std::string str() const {
        std::string s = pi.str() + " marks{";
        for (const auto& [i, j] : marks) s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return s + "}";
    }
    auto operator<=>(const MarkedSquarePath& o) const { return std::tie(pi, marks) <=> std::tie(o.pi, o.marks); }
    bool operator==(const MarkedSquarePath&) const = default;
};

// Lattice points strictly between the path and the line y = s_- x.
inline int area(const DyckPath& p) {
    Slope sl(p.m(), p.n());
    auto low = p.lowest_on_column();
    int a = 0;
    for (int x = 0; x <= p.m(); ++x)
        for (int y = 0; y < low[x]; ++y)
            if (sl.level(x, y) > SlopeValue{}) ++a;
    return a;
}

namespace detail {

// East steps as (x, y) of their start, North steps as (x, y) of their start.
inline std::pair<std::vector<Point>, std::vector<Point>> east_north(const DyckPath& p) {
    std::vector<Point> e, nn;
    Point c;
    for (auto b : p.steps()) {
        (b ? nn : e).push_back(c);
        (b ? c.y : c.x)++;
    }
    return {e, nn};
}

} // namespace detail

// dinv by the arm/leg inequality a/(l+1) <= m/n < (a+1)/l, with (a,l) = (0,0) always counted.
inline int dinv(const DyckPath& p) {
    auto [east, north] = detail::east_north(p);
    long m = p.m(), n = p.n();
    int d = 0;
    for (const auto& e : east)
        for (const auto& nn : north) {
            if (nn.x <= e.x) continue;
            long a = nn.x - e.x - 1, l = nn.y - e.y;
            if (l < 0) continue;
            if (a == 0 && l == 0) {
                ++d;
                continue;
            }
            bool lhs = a * n <= m * (l + 1);
            bool rhs = l == 0 || m * l < n * (a + 1);
            if (lhs && rhs) ++d;
        }
    return d;
}

// dinv as the number of (East, North) pairs, East to the left, met by a common line of slope s_-.
inline int dinv_geometric(const DyckPath& p) {
    auto [east, north] = detail::east_north(p);
    Slope sl(p.m(), p.n());
    int d = 0;
    for (const auto& e : east)
        for (const auto& nn : north) {
            if (nn.x <= e.x) continue;
            // intercepts of slope-s_- lines through each step form closed intervals
            SlopeValue elo = sl.level(e.x + 1, e.y), ehi = sl.level(e.x, e.y);
            SlopeValue nlo = sl.level(nn.x, nn.y), nhi = sl.level(nn.x, nn.y + 1);
            if (std::max(elo, nlo) <= std::min(ehi, nhi)) ++d;
        }
    return d;
}

// The attack graph: North steps ranked by reading order; step i attacks the steps whose
// start level lies strictly between its own start and the point directly above it.
struct AttackData {
    std::vector<Point> north_by_rank; // North step starts in reading order
    std::vector<int> attacked;        // number of steps attacked by each
    MarkedSquarePath structure;
};

inline AttackData attack_structure(const DyckPath& p) {
    Slope sl(p.m(), p.n());
    auto starts = p.north_starts();
    std::vector<Point> ranked = starts;
    std::sort(ranked.begin(), ranked.end(), [&](const Point& a, const Point& b) { return sl.level(a.x, a.y) < sl.level(b.x, b.y); });
    int n = p.n();
    std::vector<int> att(n, 0), h(n);
    for (int i = 0; i < n; ++i) {
        SlopeValue lo = sl.level(ranked[i].x, ranked[i].y), hi = sl.level(ranked[i].x, ranked[i].y + 1);
        for (int j = i + 1; j < n; ++j) {
            SlopeValue v = sl.level(ranked[j].x, ranked[j].y);
            if (lo < v && v < hi) ++att[i];
        }
        h[i] = i + 1 + att[i];
    }
    std::set<std::pair<int, int>> marks;
    for (int i = 0; i < n; ++i) {
        Point above{ranked[i].x, ranked[i].y + 1};
        auto it = std::find(ranked.begin(), ranked.end(), above);
        if (it != ranked.end()) marks.emplace(i, static_cast<int>(it - ranked.begin()));
    }
    return {ranked, att, MarkedSquarePath::from_heights(h, marks)};
}

inline int maxtdinv(const DyckPath& p) {
    auto a = attack_structure(p);
    int s = 0;
    for (int v : a.attacked) s += v;
    return s;
}

} // namespace qts
