#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qts {

class Partition {
public:
    Partition() = default;
    Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("Partition: negative part");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto operator<=>(const Partition&) const = default;

    // Multiset union of parts.
    Partition operator+(const Partition& o) const {
        std::vector<int> r;
        r.reserve(parts_.size() + o.parts_.size());
        std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(r), std::greater<>());
        Partition p;
        p.parts_ = std::move(r);
        return p;
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ")";
        return os.str();
    }

private:
    std::vector<int> parts_;
};

// Partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Compositions of n (ordered, positive parts), sorted lexicographically.
inline std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n);
    return out;
}

// Weak compositions of n into exactly k parts.
inline std::vector<std::vector<int>> compositions_with_zeros(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == k - 1) {
            cur[i] = rest;
            out.push_back(cur);
            return;
        }
        for (int a = rest; a >= 0; --a) {
            cur[i] = a;
            rec(i + 1, rest - a);
        }
    };
    if (k == 0) {
        if (n == 0) out.emplace_back();
    } else
        rec(0, n);
    return out;
}

} // namespace qts
