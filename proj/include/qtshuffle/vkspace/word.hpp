#pragma once

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qts {

struct Gen {
    enum Kind { T, Tinv, DMinus, DPlus, DPlusStar, Y, Z, YTilde };
    Kind kind;
    int i = 0;

    bool operator==(const Gen&) const = default;

    std::string str() const {
        switch (kind) {
        case T: return "T" + std::to_string(i);
        case Tinv: return "T" + std::to_string(i) + "^-1";
        case DMinus: return "d-";
        case DPlus: return "d+";
        case DPlusStar: return "d+*";
        case Y: return "y" + std::to_string(i);
        case Z: return "z" + std::to_string(i);
        case YTilde: return "ytilde" + std::to_string(i);
        }
        return "?";
    }
};

// Generators written left to right; the rightmost acts first.
using Word = std::vector<Gen>;

struct MalformedWordError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Word operator*(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? " " : "") + w[j].str();
    return s;
}

inline Word parse_word(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Word w;
    auto index_of = [&](const std::string& rest) {
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
            throw MalformedWordError("malformed generator: " + tok);
        int v = std::stoi(rest);
        if (v < 1) throw MalformedWordError("generator index must be positive: " + tok);
        return v;
    };
    while (is >> tok) {
        if (tok == "d-")
            w.push_back({Gen::DMinus});
        else if (tok == "d+")
            w.push_back({Gen::DPlus});
        else if (tok == "d+*")
            w.push_back({Gen::DPlusStar});
        else if (tok.rfind("ytilde", 0) == 0)
            w.push_back({Gen::YTilde, index_of(tok.substr(6))});
        else if (tok[0] == 'y')
            w.push_back({Gen::Y, index_of(tok.substr(1))});
        else if (tok[0] == 'z')
            w.push_back({Gen::Z, index_of(tok.substr(1))});
        else if (tok[0] == 'T') {
            std::string rest = tok.substr(1);
            bool inv = rest.size() > 3 && rest.substr(rest.size() - 3) == "^-1";
            if (inv) rest = rest.substr(0, rest.size() - 3);
            w.push_back({inv ? Gen::Tinv : Gen::T, index_of(rest)});
        } else
            throw MalformedWordError("unknown generator: " + tok);
    }
    return w;
}

// Strand count after applying w to V_k, or an error if some generator is out of range.
inline int target_vertex(const Word& w, int k) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
        case Gen::T:
        case Gen::Tinv:
            if (it->i < 1 || it->i > k - 1) throw MalformedWordError(it->str() + " invalid at k=" + std::to_string(k));
            break;
        case Gen::Y:
        case Gen::Z:
        case Gen::YTilde:
            if (it->i < 1 || it->i > k) throw MalformedWordError(it->str() + " invalid at k=" + std::to_string(k));
            break;
        case Gen::DMinus:
            if (k < 1) throw MalformedWordError("d- invalid at k=0");
            --k;
            break;
        case Gen::DPlus:
        case Gen::DPlusStar:
            ++k;
            break;
        }
    }
    return k;
}

// Trains. up(i, j) = T_i T_{i+1} ... T_{j-1}; down(j, i) = T_{j-1} ... T_i; starred versions
// use inverses. Reversed index ranges follow the convention T_{i up j} := T*_{i down j} for i > j,
// and symmetrically for the starred trains.
inline Word train(bool ascending, bool star, int from, int to) {
    Word w;
    Gen::Kind kind = star ? Gen::Tinv : Gen::T;
    if (ascending) {
        if (from <= to) {
            for (int a = from; a < to; ++a) w.push_back({kind, a});
        } else {
            Gen::Kind other = star ? Gen::T : Gen::Tinv;
            for (int a = from - 1; a >= to; --a) w.push_back({other, a});
        }
    } else {
        if (from >= to) {
            for (int a = from - 1; a >= to; --a) w.push_back({kind, a});
        } else {
            Gen::Kind other = star ? Gen::T : Gen::Tinv;
            for (int a = from; a < to; ++a) w.push_back({other, a});
        }
    }
    return w;
}
inline Word up(int i, int j) { return train(true, false, i, j); }
inline Word down(int j, int i) { return train(false, false, j, i); }
inline Word up_star(int i, int j) { return train(true, true, i, j); }
inline Word down_star(int j, int i) { return train(false, true, j, i); }

inline Word gen(Gen::Kind kind, int i = 0) { return Word{Gen{kind, i}}; }

// ytilde_i = T_{i down 1} T_{1 up k} y_k T*_{k down i}, expanded on k strands.
inline Word ytilde_expansion(int i, int k) { return down(i, 1) * up(1, k) * gen(Gen::Y, k) * down_star(k, i); }

} // namespace qts
