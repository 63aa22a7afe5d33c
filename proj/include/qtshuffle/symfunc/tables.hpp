#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <qtshuffle/coeffring/laurent.hpp>
#include <qtshuffle/symfunc/partition.hpp>

namespace qts {

enum class Basis { monomial, homogeneous, elementary, powersum };

inline const char* basis_name(Basis b) {
    switch (b) {
    case Basis::monomial: return "m";
    case Basis::homogeneous: return "h";
    case Basis::elementary: return "e";
    case Basis::powersum: return "p";
    }
    return "?";
}

namespace detail {

using RMatrix = std::vector<std::vector<Rational>>;

// Number of ways to fill rows of sizes `rows[i..]` into columns with capacities `caps`,
// where a row may put: any amount per column (kind 0), at most one per column (kind 1),
// or everything into a single column (kind 2).
inline long count_fillings(const std::vector<int>& rows, std::size_t i, std::vector<int> caps, int kind,
                           std::map<std::pair<std::size_t, std::vector<int>>, long>& memo) {
    if (i == rows.size()) {
        for (int c : caps)
            if (c != 0) return 0;
        return 1;
    }
    std::sort(caps.begin(), caps.end());
    auto key = std::make_pair(i, caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    int r = rows[i];
    if (kind == 2) {
        for (std::size_t j = 0; j < caps.size(); ++j)
            if (caps[j] >= r) {
                caps[j] -= r;
                total += count_fillings(rows, i + 1, caps, kind, memo);
                caps[j] += r;
            }
    } else {
        std::function<void(std::size_t, int)> place = [&](std::size_t j, int rest) {
            if (rest == 0) {
                total += count_fillings(rows, i + 1, caps, kind, memo);
                return;
            }
            if (j == caps.size()) return;
            int hi = std::min(rest, kind == 1 ? std::min(1, caps[j]) : caps[j]);
            for (int a = hi; a >= 0; --a) {
                caps[j] -= a;
                place(j + 1, rest - a);
                caps[j] += a;
            }
        };
        place(0, r);
    }
    memo[key] = total;
    return total;
}

inline RMatrix invert(const RMatrix& a) {
    std::size_t n = a.size();
    RMatrix m = a, inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) throw std::logic_error("transition matrix is singular");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rational d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace detail

// Change-of-basis data for one degree. to_m[b][i][j] is the coefficient of m_{parts[j]}
// in b_{parts[i]}; from_m[b] is its inverse.
struct DegreeTables {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    detail::RMatrix to_m[4];
    detail::RMatrix from_m[4];

    explicit DegreeTables(int n) : degree(n), parts(partitions_of(n)) {
        std::size_t k = parts.size();
        for (std::size_t i = 0; i < k; ++i) index[parts[i]] = static_cast<int>(i);
        for (int b = 0; b < 4; ++b) {
            to_m[b].assign(k, std::vector<Rational>(k, Rational(0)));
            for (std::size_t i = 0; i < k; ++i) {
                if (b == 0) {
                    to_m[b][i][i] = 1;
                    continue;
                }
                std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
                for (std::size_t j = 0; j < k; ++j)
                    to_m[b][i][j] = detail::count_fillings(parts[i].parts(), 0, parts[j].parts(), b - 1, memo);
            }
            from_m[b] = detail::invert(to_m[b]);
        }
    }

    static const DegreeTables& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<DegreeTables>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<DegreeTables>(n);
        return *slot;
    }
};

} // namespace qts
