#pragma once

#include <json.hpp>

#include <qtshuffle/verify.hpp>

namespace qts::io {

using nlohmann::json;

// Laurent terms as [u_exp, t_exp, "coefficient"], u = q^{1/2}.
inline json laurent_to_json(const Laurent& l) {
    json a = json::array();
    for (const auto& [e, c] : l.terms()) a.push_back({e.u, e.t, c.str()});
    return a;
}

inline Laurent laurent_from_json(const json& a) {
    std::vector<Laurent::Term> ts;
    for (const auto& t : a) ts.emplace_back(Mono2{t.at(0).get<int>(), t.at(1).get<int>()}, Integer(t.at(2).get<std::string>()));
    return Laurent::from_terms(std::move(ts));
}

inline json coef_to_json(const CoefRat& c) { return {{"num", laurent_to_json(c.num())}, {"den", laurent_to_json(c.den())}, {"text", c.str()}}; }

inline CoefRat coef_from_json(const json& j) { return CoefRat(laurent_from_json(j.at("num")), laurent_from_json(j.at("den"))); }

inline json sym_to_json(const SymFunc<CoefRat>& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", p.parts()}, {"coef", coef_to_json(c)}});
    return {{"basis", "m"}, {"cap", f.cap()}, {"terms", terms}};
}

inline json velem_to_json(const VElem<CoefRat>& f) {
    json terms = json::array();
    for (const auto& [key, c] : f.terms()) terms.push_back({{"h", key.parts()}, {"y", key.exps()}, {"coef", coef_to_json(c)}});
    return {{"k", f.k()}, {"cap", f.cap()}, {"basis", "h"}, {"terms", terms}};
}

inline VElem<CoefRat> velem_from_json(const json& j) {
    VElem<CoefRat> f(j.at("k").get<int>(), j.at("cap").get<int>());
    for (const auto& t : j.at("terms")) f.add(VKey(t.at("h").get<std::vector<int>>(), t.at("y").get<std::vector<int>>()), coef_from_json(t.at("coef")));
    return f;
}

inline json coloring_to_json(const Coloring& c) {
    json a = json::array();
    for (const auto& I : c.iv) a.push_back({I.x, I.y});
    return a;
}

inline Coloring coloring_from_json(const json& a) {
    Coloring c;
    for (const auto& I : a) c.iv.push_back({I.at(0).get<int>(), I.at(1).get<int>()});
    std::sort(c.iv.begin(), c.iv.end());
    return c;
}

inline json suite_to_json(const SuiteReport& r) {
    json f = json::array();
    for (const auto& x : r.failures) f.push_back({{"id", x.id}, {"witness", x.witness}});
    return {{"suite", r.suite}, {"cases", r.cases}, {"failures", f}, {"seconds", r.seconds}, {"pass", r.pass()}};
}

inline json verify_to_json(const VerifyReport& rep) {
    const auto& c = rep.cfg;
    json results = json::array();
    for (const auto& r : rep.results) {
        json x{{"alpha", r.alpha}, {"equal", r.equal}, {"seconds", r.seconds}};
        if (c.mode == EvalMode::exact) {
            x["lhs"] = sym_to_json(r.lhs);
            x["rhs"] = sym_to_json(r.rhs);
            if (!r.equal) x["diff"] = sym_to_json(r.lhs - r.rhs);
        }
        results.push_back(x);
    }
    json out{{"config",
              {{"m1", c.m1}, {"n1", c.n1}, {"g", c.g}, {"cap", c.cap}, {"mode", c.mode == EvalMode::exact ? "exact" : "fast"}, {"jobs", c.jobs}}},
             {"results", results},
             {"skipped", rep.skipped},
             {"seconds", rep.seconds},
             {"pass", rep.pass()}};
    if (c.alpha) out["config"]["alpha"] = *c.alpha;
    if (c.mode == EvalMode::fast) out["config"]["seed"] = c.seed;
    if (c.budget_seconds) out["config"]["budget_seconds"] = c.budget_seconds;
    if (rep.rhs_sum_matches_full) out["rhs_sum_matches_full"] = *rep.rhs_sum_matches_full;
    return out;
}

} // namespace qts::io
