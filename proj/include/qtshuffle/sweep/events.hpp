#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <qtshuffle/combinat.hpp>
#include <qtshuffle/vkspace.hpp>

namespace qts {

enum class EventKind { A, B, C, D, E };

inline char event_char(EventKind k) { return "ABCDE"[static_cast<int>(k)]; }

struct SweepEvent {
    Point p;
    EventKind kind;
    int a = 0; // vertical path steps crossed strictly to the right (C and D only)
};

// q^{-a} (d_- d_+ - d_+ d_-) / (q - 1)
template <class S>
VElem<S> marked_corner_op(const VElem<S>& f, int a) {
    VElem<S> c = act_dminus(act_dplus(f));
    if (f.k() > 0) c -= act_dplus(act_dminus(f));
    VElem<S> r = divide_by_q_minus_one(c);
    if constexpr (std::is_same_v<S, CoefRat>)
        for (const auto& [key, v] : r.terms())
            if (!v.is_laurent()) throw std::logic_error("marked_corner_op: commutator not divisible by q - 1");
    return S::q_pow(-a) * r;
}

template <class S>
VElem<S> apply_event(EventKind kind, int a, const VElem<S>& f) {
    switch (kind) {
    case EventKind::A: return act_dplus(f);
    case EventKind::B: return act_dminus(f);
    case EventKind::C: return marked_corner_op(f, a);
    case EventKind::D: return S::q_pow(a) * f;
    case EventKind::E: return S::t_pow(1) * f;
    }
    throw std::logic_error("apply_event: unknown kind");
}

// Events of a single path in sweep order (descending level). The endpoint (m,n) produces no
// event; the origin and every valley, including interior diagonal touches, produce B;
// lattice points strictly inside the region and untouched diagonal points produce E.
inline std::vector<SweepEvent> event_sequence(const DyckPath& p) {
    Slope sl(p.m(), p.n());
    auto pts = p.points();
    const auto& st = p.steps();
    std::map<Point, int> on_path;
    for (std::size_t i = 0; i < pts.size(); ++i) on_path[pts[i]] = static_cast<int>(i);
    // North steps as their start points, for the crossing count
    auto north = p.north_starts();

    std::vector<SweepEvent> ev;
    for (const auto& pt : reading_order(p)) {
        if (pt.x == p.m() && pt.y == p.n()) continue;
        SweepEvent e{pt, EventKind::E, 0};
        auto it = on_path.find(pt);
        if (it != on_path.end()) {
            int i = it->second;
            bool in_n = i > 0 && st[i - 1], out_n = st[i];
            if (i == 0)
                e.kind = EventKind::B;
            else if (in_n && !out_n)
                e.kind = EventKind::A;
            else if (!in_n && out_n)
                e.kind = EventKind::B;
            else if (in_n && out_n)
                e.kind = EventKind::C;
            else
                e.kind = EventKind::D;
            if (e.kind == EventKind::C || e.kind == EventKind::D) {
                SlopeValue lv = sl.level(pt.x, pt.y);
                for (const auto& ns : north)
                    if (ns.x > pt.x && sl.level(ns.x, ns.y) < lv && lv < sl.level(ns.x, ns.y + 1)) ++e.a;
            }
        }
        ev.push_back(e);
    }
    std::reverse(ev.begin(), ev.end());
    return ev;
}

// Runs the events of a path on 1 in V_0. With truncate, only events strictly above the
// diagonal are applied, leaving the state at h_1.
template <class S = CoefRat>
VElem<S> sweep_state(const DyckPath& p, bool truncate) {
    Slope sl(p.m(), p.n());
    VElem<S> f = VElem<S>::one(0, p.n());
    for (const auto& e : event_sequence(p)) {
        if (truncate && sl.side(e.p.x, e.p.y) == 0) continue;
        if (e.kind == EventKind::B && f.k() == 0) throw std::logic_error("sweep: B event at k = 0");
        f = apply_event(e.kind, e.a, f);
    }
    return f;
}

inline SymFunc<CoefRat> sweep_path(const DyckPath& p) {
    VElem<CoefRat> f = sweep_state<CoefRat>(p, false);
    if (f.k() != 0) throw std::logic_error("sweep: final state is not in V_0");
    return f.to_sym(p.n());
}

} // namespace qts
