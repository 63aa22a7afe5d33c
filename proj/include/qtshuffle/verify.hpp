#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <qtshuffle/actions.hpp>
#include <qtshuffle/braid.hpp>
#include <qtshuffle/combinat.hpp>
#include <qtshuffle/sweep.hpp>

namespace qts {

struct SuiteFailure {
    std::string id, witness;
};

struct SuiteReport {
    std::string suite;
    long cases = 0;
    std::vector<SuiteFailure> failures;
    double seconds = 0;

    bool pass() const { return failures.empty() && cases > 0; }
    void check(bool ok, const std::string& id, const std::function<std::string()>& witness = {}) {
        ++cases;
        if (!ok) failures.push_back({id, witness ? witness() : std::string{}});
    }
    void merge(SuiteReport o) {
        cases += o.cases;
        for (auto& f : o.failures) failures.push_back(std::move(f));
    }
};

namespace detail {

template <class F>
SuiteReport timed(const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = name;
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string mn(int m, int n) { return std::to_string(m) + "," + std::to_string(n); }

inline std::string alpha_str(const std::vector<int>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s;
}

// Evaluation equality of two braid words on d_+^k(1) and the spanning set of V_k.
inline bool same_action(const BraidWord& a, const BraidWord& b, int degree) {
    static const BaseOperators<CoefRat> ops;
    if (a.k != b.k) return false;
    if (evaluate(a, dplus_power<CoefRat>(a.k, a.k + degree), ops) != evaluate(b, dplus_power<CoefRat>(b.k, b.k + degree), ops)) return false;
    for (const auto& [name, f] : spanning_set<CoefRat>(a.k, degree))
        if (evaluate(a, f, ops) != evaluate(b, f, ops)) return false;
    return true;
}

} // namespace detail

// Every catalogued relation of the base pair on the spanning set of V_k.
inline SuiteReport relations_suite(int max_k = 3, int degree = 3) {
    return detail::timed("relations", [&](SuiteReport& r) {
        BaseOperators<CoefRat> ops;
        for (const auto& rel : full_catalog(max_k)) {
            auto rep = relation_check(rel.lhs, rel.rhs, rel.k, degree, ops);
            r.check(rep.pass, rel.name + " k=" + std::to_string(rel.k), [&] { return rep.witness; });
        }
    });
}

// sweep_path(p) = t^area q^{dinv - maxtdinv} chi(p', S_p) for every path with m + n <= max_sum.
inline SuiteReport sweep_suite(int max_sum = 9) {
    return detail::timed("sweep", [&](SuiteReport& r) {
        for (int m = 1; m < max_sum; ++m)
            for (int n = 1; m + n <= max_sum; ++n)
                for (const auto& p : enumerate_paths(m, n)) {
                    auto a = sweep_path(p), b = path_summand(p);
                    r.check(a == b, detail::mn(m, n) + " " + p.str(), [&] { return (a - b).str(); });
                }
    });
}

// The coloring recursion assembled at l_{h_1} against the combinatorial side.
inline SuiteReport coloring_suite(int max_sum = 9) {
    return detail::timed("coloring", [&](SuiteReport& r) {
        for (int m = 1; m < max_sum; ++m)
            for (int n = 1; m + n <= max_sum; ++n) {
                auto dp = recursion_dp<CoefRat>(m, n, false);
                int g = std::gcd(m, n);
                for (const auto& alpha : compositions_of(g)) {
                    auto a = assemble_composition(dp, alpha), b = rhs_compositional(m / g, n / g, g, alpha);
                    r.check(a == b, detail::mn(m, n) + " alpha=" + detail::alpha_str(alpha), [&] { return (a - b).str(); });
                }
            }
    });
}

// Braid evaluation against the DP value on every live coloring of every stratum, m + n <= max_sum.
inline SuiteReport theorem_main_suite(int max_sum = 7) {
    return detail::timed("coloring-braid", [&](SuiteReport& r) {
        for (int m = 1; m < max_sum; ++m)
            for (int n = 1; m + n <= max_sum; ++n) {
                auto dp = recursion_dp<CoefRat>(m, n);
                SweepGeometry g(m, n);
                for (std::size_t j = 1; j < dp.strata.size(); ++j)
                    for (const auto& [c, val] : dp.strata[j]) {
                        VElem<CoefRat> b = theorem_main_eval<CoefRat>(g, c, g.stratum_height(dp, j), n);
                        std::string id = detail::mn(m, n) + " stratum " + std::to_string(j) + " " + c.str();
                        r.check(b == val, id, [&] { return (b - val).str(); });
                        r.check(b.has_integer_q_degree(), id + " integer q-degree");
                    }
            }
    });
}

// The braid transition rules A, C, D, BE on every transition of the same DP runs.
inline SuiteReport braid_rules_suite(int max_sum = 7) {
    return detail::timed("braid-rules", [&](SuiteReport& r) {
        for (int m = 1; m < max_sum; ++m)
            for (int n = 1; m + n <= max_sum; ++n) {
                auto dp = recursion_dp<CoefRat>(m, n);
                SweepGeometry g(m, n);
                for (const auto& tr : dp.transitions) {
                    auto [l, rr] = braid_rule_sides<CoefRat>(g, tr, dp.points[tr.step], g.stratum_height(dp, tr.step),
                                                             g.stratum_height(dp, tr.step + 1), n);
                    r.check(l == rr, std::string(1, tr.kind) + " " + detail::mn(m, n) + " " + tr.from.str() + " -> " + tr.to.str(),
                            [&] { return (l - rr).str(); });
                }
            }
    });
}

inline SuiteReport braid_suite(int max_sum = 7) {
    SuiteReport r = theorem_main_suite(max_sum);
    SuiteReport rules = braid_rules_suite(max_sum);
    r.suite = "braid";
    r.seconds += rules.seconds;
    r.merge(std::move(rules));
    return r;
}

// Random instances of the train rules inside random words, and random step orders of
// special braids; each compared by evaluation.
inline SuiteReport trains_suite(int cases = 100, std::uint64_t seed = 1) {
    return detail::timed("trains", [&](SuiteReport& r) {
        std::mt19937_64 rng(seed);
        const TrainRule rules[] = {TrainRule::Gluing, TrainRule::Collision, TrainRule::Overtaking, TrainRule::Tz, TrainRule::Tytilde};
        for (int done = 0; done < cases;) {
            int k = 2 + (done / 5) % 3;
            std::uniform_int_distribution<int> idx(1, k), pick(0, 4), len(0, 2);
            TrainPattern p{rules[done % 5], idx(rng), idx(rng), idx(rng), idx(rng)};
            Word lhs;
            try {
                lhs = train_rule_sides(p).first;
            } catch (const PatternMismatchError&) {
                continue;
            }
            auto random_gens = [&] {
                Word w;
                for (int n = len(rng); n > 0; --n) {
                    int c = pick(rng);
                    if (c < 2)
                        w.push_back({c ? Gen::T : Gen::Tinv, std::uniform_int_distribution<int>(1, k - 1)(rng)});
                    else
                        w.push_back({c == 2 ? Gen::Y : c == 3 ? Gen::Z : Gen::YTilde, idx(rng)});
                }
                return w;
            };
            Word pre = random_gens(), post = random_gens();
            BraidWord w(k, pre * lhs * post), rw = rewrite_trains(w, p, pre.size());
            r.check(detail::same_action(w, rw, 0), rule_name(p.rule) + " k=" + std::to_string(k), [&] { return w.str() + " vs " + rw.str(); });
            ++done;
        }
        std::uniform_int_distribution<int> pt(1, 996), sl(1, 9), part(1, 3);
        for (int done = 0; done < cases;) {
            int k = 2 + done % 3;
            std::vector<Rational> v;
            while (static_cast<int>(v.size()) < k) {
                Rational x(pt(rng), 997);
                if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
            }
            std::vector<int> alpha(k), seq;
            for (int i = 0; i < k; ++i) {
                alpha[i] = part(rng);
                seq.insert(seq.end(), alpha[i] - 1, i);
            }
            PointConfig c(v, Rational(sl(rng), sl(rng)) + Rational(1, 1009));
            try {
                final_config(c, alpha);
            } catch (const InadmissibleBraidError&) {
                continue;
            }
            std::shuffle(seq.begin(), seq.end(), rng);
            BraidWord a = braid_of_steps(c, seq).first, b = special_braid(c, alpha);
            r.check(detail::same_action(a, b, 0), "order k=" + std::to_string(k), [&] { return a.str() + " vs " + b.str(); });
            ++done;
        }
    });
}

inline const std::vector<std::tuple<int, int, int>>& shuffle_configurations() {
    static const std::vector<std::tuple<int, int, int>> c{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {2, 1, 1}, {1, 2, 2},
                                                          {2, 1, 2}, {2, 3, 1}, {3, 2, 1}, {1, 3, 1}, {3, 1, 1}};
    return c;
}

inline SuiteReport shuffle_suite() {
    return detail::timed("shuffle", [&](SuiteReport& r) {
        Tower<CoefRat> tower;
        for (auto [m1, n1, g] : shuffle_configurations())
            for (const auto& alpha : compositions_of(g)) {
                auto a = lhs_compositional(tower, m1, n1, g, alpha), b = rhs_compositional(m1, n1, g, alpha);
                r.check(a == b, detail::mn(m1, n1) + "," + std::to_string(g) + " alpha=" + detail::alpha_str(alpha), [&] { return (a - b).str(); });
            }
    });
}

inline SuiteReport calpha_suite() {
    return detail::timed("calpha", [&](SuiteReport& r) {
        Tower<CoefRat> tower;
        for (int k = 1; k <= 4; ++k)
            for (const auto& alpha : compositions_of(k)) r.check(c_alpha_identity_check(tower, alpha), "C_alpha " + detail::alpha_str(alpha));
        for (int n = 1; n <= 3; ++n) {
            SymFunc<CoefRat> sum(n);
            for (const auto& alpha : compositions_of(n)) sum += rhs_compositional(1, 1, n, alpha);
            auto full = rhs_full(n, n);
            r.check(sum == full, "sum over compositions n=" + std::to_string(n), [&] { return (sum - full).str(); });
        }
    });
}

inline SuiteReport nabla_suite(int max_n = 3) {
    return detail::timed("nabla", [&](SuiteReport& r) {
        BaseOperators<CoefRat> ops;
        for (int n = 1; n <= max_n; ++n)
            for (const auto& p : enumerate_paths(n, n)) {
                auto [a, b] = nabla_conjugation_sides(ops, p);
                r.check(a == b && !a.is_zero(), "nabla " + p.str(), [&] { return (a - b).str(); });
            }
    });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"relations", "sweep", "coloring", "braid", "trains", "shuffle", "calpha", "nabla"};
    return n;
}

inline std::vector<SuiteReport> run_suite(const std::string& name) {
    static const std::map<std::string, std::function<SuiteReport()>> table{
        {"relations", [] { return relations_suite(); }}, {"sweep", [] { return sweep_suite(); }},
        {"coloring", [] { return coloring_suite(); }},   {"braid", [] { return braid_suite(); }},
        {"trains", [] { return trains_suite(); }},       {"shuffle", [] { return shuffle_suite(); }},
        {"calpha", [] { return calpha_suite(); }},       {"nabla", [] { return nabla_suite(); }}};
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& n : suite_names()) out.push_back(table.at(n)());
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    return {it->second()};
}

enum class EvalMode { exact, fast };

struct JobConfig {
    int m1 = 1, n1 = 1, g = 1;
    std::optional<std::vector<int>> alpha;
    int cap = 0; // 0: g * n1
    EvalMode mode = EvalMode::exact;
    int jobs = 1;
    double budget_seconds = 0; // 0: unlimited
    std::uint64_t seed = 1;    // evaluation point of fast mode

    void validate() {
        check_coprime_slope(m1, n1);
        if (m1 == 0 || n1 == 0) throw std::invalid_argument("m1 and n1 must be positive");
        if (g < 1) throw std::invalid_argument("g must be positive");
        if (cap == 0) cap = g * n1;
        if (cap < g * n1) throw std::invalid_argument("cap must be at least g*n1");
        if (jobs < 1) throw std::invalid_argument("jobs must be positive");
        if (alpha) check_composition(*alpha, g);
    }
};

struct AlphaResult {
    std::vector<int> alpha;
    bool equal = false;
    SymFunc<CoefRat> lhs, rhs; // exact mode only
    double seconds = 0;
};

struct VerifyReport {
    JobConfig cfg;
    std::vector<AlphaResult> results; // in the order of compositions_of
    std::vector<std::vector<int>> skipped;
    std::optional<bool> rhs_sum_matches_full; // when every alpha was run in exact mode
    double seconds = 0;

    bool pass() const {
        if (!skipped.empty() || (rhs_sum_matches_full && !*rhs_sum_matches_full)) return false;
        for (const auto& r : results)
            if (!r.equal) return false;
        return !results.empty();
    }
};

// LHS and RHS of the compositional shuffle identity for each alpha; alphas are sharded over
// cfg.jobs threads and reported in deterministic order.
inline VerifyReport verify_shuffle(JobConfig cfg) {
    cfg.validate();
    VerifyReport rep;
    rep.cfg = cfg;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<int>> alphas = cfg.alpha ? std::vector<std::vector<int>>{*cfg.alpha} : compositions_of(cfg.g);
    std::vector<std::optional<AlphaResult>> slots(alphas.size());
    std::atomic<std::size_t> next{0};
    Tower<CoefRat> exact_tower;

    auto worker = [&] {
        FastScalar::point() = FastScalar::random_point(cfg.seed);
        Tower<FastScalar> fast_tower;
        for (std::size_t i; (i = next++) < alphas.size();) {
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (cfg.budget_seconds > 0 && elapsed > cfg.budget_seconds) continue;
            auto a0 = std::chrono::steady_clock::now();
            AlphaResult res;
            res.alpha = alphas[i];
            SymFunc<CoefRat> rhs = rhs_compositional(cfg.m1, cfg.n1, cfg.g, alphas[i]);
            if (cfg.mode == EvalMode::exact) {
                res.lhs = lhs_state(exact_tower, cfg.m1, cfg.n1, cfg.g, alphas[i]).to_sym(cfg.cap);
                res.rhs = SymFunc<CoefRat>(cfg.cap, rhs.terms());
                res.equal = res.lhs == res.rhs;
            } else {
                auto lhs = lhs_state(fast_tower, cfg.m1, cfg.n1, cfg.g, alphas[i]).to_sym(cfg.cap);
                typename SymFunc<FastScalar>::Map mp;
                for (const auto& [p, c] : rhs.terms()) mp.emplace(p, FastScalar::from_coef(c));
                res.equal = lhs == SymFunc<FastScalar>(cfg.cap, mp);
            }
            res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - a0).count();
            slots[i] = std::move(res);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < cfg.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (slots[i])
            rep.results.push_back(std::move(*slots[i]));
        else
            rep.skipped.push_back(alphas[i]);
    }
    if (!cfg.alpha && cfg.mode == EvalMode::exact && rep.skipped.empty()) {
        SymFunc<CoefRat> sum(cfg.cap);
        for (const auto& r : rep.results) sum += r.rhs;
        rep.rhs_sum_matches_full = sum == SymFunc<CoefRat>(cfg.cap, rhs_full(cfg.g * cfg.m1, cfg.g * cfg.n1).terms());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace qts
