#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <qtshuffle/combinat/slope.hpp>

namespace qts {

struct Point {
    int x = 0, y = 0;
    auto operator<=>(const Point&) const = default;
};

struct InvalidCompositionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lattice path from (0,0) to (m,n); bit 1 = North, 0 = East.
class DyckPath {
public:
    DyckPath() = default;
    DyckPath(int m, int n, std::vector<std::uint8_t> steps) : m_(m), n_(n), steps_(std::move(steps)) {
        if (static_cast<int>(steps_.size()) != m + n) throw std::invalid_argument("DyckPath: wrong number of steps");
        int ones = 0;
        for (auto b : steps_) ones += b;
        if (ones != n) throw std::invalid_argument("DyckPath: wrong number of North steps");
        Slope sl(m, n);
        int x = 0, y = 0;
        for (auto b : steps_) {
            (b ? y : x)++;
            if (sl.level(x, y) <= SlopeValue{}) throw std::invalid_argument("DyckPath: path dips below the diagonal");
        }
    }
    // From a string of 0/1 characters; m and n are read off the counts.
    static DyckPath parse(const std::string& s) {
        std::vector<std::uint8_t> b;
        int n = 0;
        for (char c : s) {
            if (c == ',' || c == ' ') continue;
            if (c != '0' && c != '1') throw std::invalid_argument("DyckPath: expected 0/1 characters");
            b.push_back(c == '1');
            n += c == '1';
        }
        return DyckPath(static_cast<int>(b.size()) - n, n, b);
    }

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<std::uint8_t>& steps() const { return steps_; }
    Slope slope() const { return Slope(m_, n_); }
    int gcd() const { return std::gcd(m_, n_); }

    std::vector<Point> points() const {
        std::vector<Point> p{{0, 0}};
        for (auto b : steps_) p.push_back(b ? Point{p.back().x, p.back().y + 1} : Point{p.back().x + 1, p.back().y});
        return p;
    }
    // Start points of the North steps, in path order.
    std::vector<Point> north_starts() const {
        std::vector<Point> out;
        Point p;
        for (auto b : steps_) {
            if (b) out.push_back(p);
            (b ? p.y : p.x)++;
        }
        return out;
    }
    // Lowest y of the path on the vertical line x.
    std::vector<int> lowest_on_column() const {
        std::vector<int> low(m_ + 1, -1);
        for (const auto& p : points())
            if (low[p.x] < 0) low[p.x] = p.y;
        return low;
    }
    std::string str() const {
        std::string s;
        for (auto b : steps_) s += b ? '1' : '0';
        return s;
    }
    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath& o) const { return std::tie(m_, n_, steps_) <=> std::tie(o.m_, o.n_, o.steps_); }

private:
    int m_ = 0, n_ = 0;
    std::vector<std::uint8_t> steps_;
};

// Path points on the exact diagonal, as multiples of the reduced vector (m1, n1).
inline std::vector<int> touch_indices(const DyckPath& p) {
    Slope sl(p.m(), p.n());
    std::vector<int> out;
    for (const auto& pt : p.points())
        if (sl.side(pt.x, pt.y) == 0) out.push_back(static_cast<int>(pt.x / sl.m1));
    return out;
}

inline std::vector<int> touch_composition(const DyckPath& p) {
    auto t = touch_indices(p);
    std::vector<int> out;
    for (std::size_t i = 1; i < t.size(); ++i) out.push_back(t[i] - t[i - 1]);
    return out;
}

inline void check_composition(const std::vector<int>& alpha, int total) {
    if (alpha.empty()) throw InvalidCompositionError("composition must be nonempty");
    int s = 0;
    for (int a : alpha) {
        if (a < 1) throw InvalidCompositionError("composition parts must be positive");
        s += a;
    }
    if (s != total) throw InvalidCompositionError("composition must sum to " + std::to_string(total));
}

// All (m,n)-Dyck paths in lexicographic order of their bit sequences (North first);
// with alpha, only those with touch composition alpha.
inline std::vector<DyckPath> enumerate_paths(int m, int n, std::optional<std::vector<int>> alpha = std::nullopt) {
    if (m < 1 || n < 1) throw std::invalid_argument("enumerate_paths: m, n must be positive");
    if (alpha) check_composition(*alpha, std::gcd(m, n));
    Slope sl(m, n);
    std::vector<DyckPath> out;
    std::vector<std::uint8_t> cur;
    std::function<void(int, int)> rec = [&](int x, int y) {
        if (x == m && y == n) {
            DyckPath p(m, n, cur);
            if (!alpha || touch_composition(p) == *alpha) out.push_back(std::move(p));
            return;
        }
        if (y < n) {
            cur.push_back(1);
            rec(x, y + 1);
            cur.pop_back();
        }
        if (x < m && sl.level(x + 1, y) > SlopeValue{}) {
            cur.push_back(0);
            rec(x + 1, y);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// Lattice points of [0,m]x[0,n] weakly above the line y = s_- x, ranked by their level.
inline std::vector<Point> reading_order(int m, int n) {
    Slope sl(m, n);
    std::vector<std::pair<SlopeValue, Point>> v;
    for (int x = 0; x <= m; ++x)
        for (int y = 0; y <= n; ++y)
            if (sl.level(x, y) >= SlopeValue{}) v.push_back({sl.level(x, y), {x, y}});
    std::sort(v.begin(), v.end());
    std::vector<Point> out;
    for (auto& [l, p] : v) out.push_back(p);
    return out;
}

// Highest y of the path on the vertical line x.
inline std::vector<int> highest_on_column(const DyckPath& p) {
    std::vector<int> top(p.m() + 1, -1);
    for (const auto& pt : p.points()) top[pt.x] = std::max(top[pt.x], pt.y);
    return top;
}

// Reading order restricted to the points weakly below a given path.
inline std::vector<Point> reading_order(const DyckPath& p) {
    auto top = highest_on_column(p);
    std::vector<Point> out;
    for (const auto& pt : reading_order(p.m(), p.n()))
        if (pt.y <= top[pt.x]) out.push_back(pt);
    return out;
}

} // namespace qts
