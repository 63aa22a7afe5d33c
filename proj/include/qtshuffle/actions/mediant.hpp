#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qts {

using SlopePair = std::pair<int, int>; // (m, n)

inline void check_coprime_slope(int m, int n) {
    if (m < 0 || n < 0 || (m == 0 && n == 0) || std::gcd(m, n) != 1)
        throw std::invalid_argument("slope (" + std::to_string(m) + "," + std::to_string(n) + ") must be coprime and nonnegative");
}

// Stern-Brocot descent from the seed sector {(0,1), (1,0)}. A move 'N' replaces the left
// end (the rho side, slope above the target) by the mediant, 'S' the right end.
struct MediantWord {
    std::string moves;
    SlopePair left{0, 1}, right{1, 0}; // parents of the target, m'n - mn' = 1
    std::vector<SlopePair> chain;      // mediants visited, ending with the target

    bool is_seed() const { return chain.empty(); }
};

inline MediantWord mediant_decompose(int m, int n) {
    check_coprime_slope(m, n);
    MediantWord w;
    if ((m == 0 && n == 1) || (m == 1 && n == 0)) return w;
    for (;;) {
        SlopePair med{w.left.first + w.right.first, w.left.second + w.right.second};
        w.chain.push_back(med);
        if (med == SlopePair{m, n}) return w;
        // compare n/m with the mediant slope
        if (static_cast<long>(n) * med.first > static_cast<long>(med.second) * m) {
            w.right = med;
            w.moves += 'S';
        } else {
            w.left = med;
            w.moves += 'N';
        }
    }
}

// Applies a move word to the seed pair.
inline std::pair<SlopePair, SlopePair> apply_moves(const std::string& moves) {
    SlopePair l{0, 1}, r{1, 0};
    for (char c : moves) {
        SlopePair med{l.first + r.first, l.second + r.second};
        if (c == 'N')
            l = med;
        else if (c == 'S')
            r = med;
        else
            throw std::invalid_argument("apply_moves: letters must be N or S");
    }
    return {l, r};
}

} // namespace qts
