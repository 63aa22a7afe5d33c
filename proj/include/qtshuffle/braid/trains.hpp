#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <qtshuffle/braid/braid_word.hpp>

namespace qts {

struct PatternMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class TrainRule { Gluing, Collision, Overtaking, Tz, Tytilde };

inline std::string rule_name(TrainRule r) {
    switch (r) {
    case TrainRule::Gluing: return "gluing";
    case TrainRule::Collision: return "collision";
    case TrainRule::Overtaking: return "overtaking";
    case TrainRule::Tz: return "Tz";
    case TrainRule::Tytilde: return "Tytilde";
    }
    return "?";
}

// A rule instance. Trains read as in the rule statements:
//   gluing      T_{a up b} T_{b up c}             -> T_{a up c}
//   collision   T_{a up b} T_{c down d}           -> T_{c' down d'} T_{a' up b'}   (b != c)
//   overtaking  T_{a up b} T_{c up d}             -> T_{c up d} T_{a' up b'}       (a, b in [d, c))
//   Tz          T_{a down b} z_b                  -> z_a T_{a up b}
//   Tytilde     T_{a down b} ytilde_b             -> ytilde_a T_{a up b}
struct TrainPattern {
    TrainRule rule;
    int a = 0, b = 0, c = 0, d = 0;
};

// c moved by a train running from a to b; undefined at c = b
inline std::optional<int> sigma(int a, int b, int c) {
    if (c == b) return std::nullopt;
    if (a <= c && c < b) return c + 1;
    if (a >= c && c > b) return c - 1;
    return c;
}

inline std::pair<Word, Word> train_rule_sides(const TrainPattern& p) {
    auto need = [](std::optional<int> v) {
        if (!v) throw PatternMismatchError("train rule: index map undefined for these parameters");
        return *v;
    };
    auto [rule, a, b, c, d] = p;
    switch (rule) {
    case TrainRule::Gluing: return {up(a, b) * up(b, c), up(a, c)};
    case TrainRule::Collision: {
        if (b == c) throw PatternMismatchError("collision: requires b != c");
        int b2 = need(sigma(d, c, b)), c2 = need(sigma(a, b, c));
        int a2 = need(sigma(d, c2, a)), d2 = need(sigma(a2, b2, d));
        return {up(a, b) * down(c, d), down(c2, d2) * up(a2, b2)};
    }
    case TrainRule::Overtaking: {
        if (!(d <= a && a < c && d <= b && b < c)) throw PatternMismatchError("overtaking: requires a, b in [d, c)");
        return {up(a, b) * up(c, d), up(c, d) * up(need(sigma(d, c, a)), need(sigma(d, c, b)))};
    }
    case TrainRule::Tz: return {down(a, b) * gen(Gen::Z, b), gen(Gen::Z, a) * up(a, b)};
    case TrainRule::Tytilde: return {down(a, b) * gen(Gen::YTilde, b), gen(Gen::YTilde, a) * up(a, b)};
    }
    throw std::logic_error("train rule: unknown rule");
}

// Replaces the left side of the rule, found at gens[site...], by its right side.
inline BraidWord rewrite_trains(const BraidWord& w, const TrainPattern& p, std::size_t site) {
    auto [lhs, rhs] = train_rule_sides(p);
    if (site > w.gens.size() || w.gens.size() - site < lhs.size() || !std::equal(lhs.begin(), lhs.end(), w.gens.begin() + site))
        throw PatternMismatchError(rule_name(p.rule) + ": pattern " + to_string(lhs) + " not found at position " + std::to_string(site));
    Word out(w.gens.begin(), w.gens.begin() + site);
    out = out * rhs;
    out.insert(out.end(), w.gens.begin() + site + lhs.size(), w.gens.end());
    return BraidWord(w.k, std::move(out));
}

enum class Creation { PhiPlus, PhiMinus, PhiPlusStar };

// Generator-wise images in the monoid on k+1 strands:
//   phi_+  : T_i -> T_{i+1}, z_i -> z_{i+1}, ytilde_i -> ytilde_{i+1}
//   phi_-  : T_i, z_i, y_i unchanged
//   phi_+^*: T_i -> T_{i+1}, z_i -> z_{i+1}, y_i -> y_{i+1}
// Generators outside the defining set are first rewritten through it.
inline BraidWord creation_hom(const BraidWord& w, Creation which) {
    const int k = w.k;
    Word out;
    auto shift = [](Gen g) { return Gen{g.kind, g.i + 1}; };
    for (const auto& g : w.gens) {
        switch (g.kind) {
        case Gen::T:
        case Gen::Tinv:
        case Gen::Z: out.push_back(which == Creation::PhiMinus ? g : shift(g)); break;
        case Gen::Y:
            if (which == Creation::PhiPlus)
                for (const auto& h : y_via_ytilde(g.i, k)) out.push_back(shift(h));
            else
                out.push_back(which == Creation::PhiMinus ? g : shift(g));
            break;
        case Gen::YTilde:
            if (which == Creation::PhiPlus)
                out.push_back(shift(g));
            else
                for (const auto& h : ytilde_word(g.i, k)) out.push_back(which == Creation::PhiMinus ? h : shift(h));
            break;
        default: throw MalformedWordError("creation_hom: not a braid generator: " + g.str());
        }
    }
    return BraidWord(k + 1, std::move(out));
}

} // namespace qts
