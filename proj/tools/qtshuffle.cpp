#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "json_io.hpp"

using namespace qts;
using qts::io::json;

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << "\n";
}

// Final values of the coloring DP, persisted under $QTSHUFFLE_CACHE_DIR when it is set.
std::map<Coloring, VElem<CoefRat>> dp_finals(int m, int n) {
    std::filesystem::path file;
    if (const char* dir = std::getenv("QTSHUFFLE_CACHE_DIR")) {
        file = std::filesystem::path(dir) / ("dp_" + std::to_string(m) + "_" + std::to_string(n) + ".json");
        if (std::ifstream in(file); in) {
            std::map<Coloring, VElem<CoefRat>> out;
            json cached = json::parse(in);
            for (const auto& e : cached.at("finals")) out.emplace(io::coloring_from_json(e.at("coloring")), io::velem_from_json(e.at("value")));
            return out;
        }
    }
    auto dp = recursion_dp<CoefRat>(m, n, false);
    if (!file.empty()) {
        json a = json::array();
        for (const auto& [c, v] : dp.final_values()) a.push_back({{"coloring", io::coloring_to_json(c)}, {"value", io::velem_to_json(v)}});
        std::filesystem::create_directories(file.parent_path());
        std::ofstream(file) << json{{"m", m}, {"n", n}, {"finals", a}}.dump() << "\n";
    }
    return dp.final_values();
}

int run_verify(JobConfig cfg, bool with_dp, const std::string& out) {
    VerifyReport rep = verify_shuffle(cfg);
    json j = io::verify_to_json(rep);
    bool ok = rep.pass();
    if (with_dp) {
        int m = rep.cfg.g * rep.cfg.m1, n = rep.cfg.g * rep.cfg.n1;
        ColoringDP<CoefRat> dp;
        dp.m = m;
        dp.n = n;
        dp.strata.push_back(dp_finals(m, n));
        for (std::size_t i = 0; i < rep.results.size(); ++i) {
            auto a = assemble_composition(dp, rep.results[i].alpha);
            auto b = rhs_compositional(rep.cfg.m1, rep.cfg.n1, rep.cfg.g, rep.results[i].alpha);
            j["results"][i]["dp_equal"] = a == b;
            ok = ok && a == b;
        }
        j["pass"] = ok;
    }
    emit(j, out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the compositional rational shuffle identity"};
    app.require_subcommand(1);
    std::string out;

    // verify
    auto* verify = app.add_subcommand("verify", "Compare both sides of the shuffle identity for each composition");
    JobConfig cfg;
    std::string alpha, mode = "exact";
    bool with_dp = false;
    verify->add_option("--m1", cfg.m1)->required();
    verify->add_option("--n1", cfg.n1)->required();
    verify->add_option("--g", cfg.g)->required();
    verify->add_option("--alpha", alpha, "comma separated composition of g; all compositions if omitted");
    verify->add_option("--cap", cfg.cap, "degree cap, at least g*n1");
    verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "fast"}));
    verify->add_option("--jobs", cfg.jobs);
    verify->add_option("--budget", cfg.budget_seconds, "seconds; compositions not started in time are reported as skipped");
    verify->add_option("--seed", cfg.seed, "evaluation point of fast mode");
    verify->add_flag("--with-dp", with_dp, "also assemble each composition from the coloring DP");
    verify->add_option("--out", out);

    // suite
    auto* suite = app.add_subcommand("suite", "Run an invariant suite");
    std::string suite_name;
    suite->add_option("name", suite_name)->required()->check(CLI::IsMember([] {
        auto v = suite_names();
        v.push_back("all");
        return v;
    }()));
    suite->add_option("--out", out);

    // actions
    auto* actions = app.add_subcommand("actions", "The tower of actions");
    actions->require_subcommand(1);
    int m = 1, n = 1, k = 0, degree = 1;
    bool star = false;
    auto* build = actions->add_subcommand("build", "Raising operator images of a spanning set of V_k");
    build->add_option("--m", m)->required();
    build->add_option("--n", n)->required();
    build->add_flag("--star", star);
    build->add_option("--k", k);
    build->add_option("--degree", degree);
    build->add_option("--out", out);
    auto* lhs = actions->add_subcommand("lhs", "The operator side for one composition");
    lhs->add_option("--m1", cfg.m1)->required();
    lhs->add_option("--n1", cfg.n1)->required();
    lhs->add_option("--g", cfg.g)->required();
    lhs->add_option("--alpha", alpha)->required();
    lhs->add_option("--out", out);

    // paths
    auto* paths = app.add_subcommand("paths", "Enumerate (m,n)-Dyck paths with their statistics");
    paths->add_option("--m", m)->required();
    paths->add_option("--n", n)->required();
    paths->add_option("--out", out);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "The sweep process");
    sweep->require_subcommand(1);
    std::string path;
    auto* spath = sweep->add_subcommand("path", "Events and value of one path, steps as 0 (E) and 1 (N)");
    spath->add_option("--path", path)->required();
    spath->add_option("--out", out);
    auto* sdp = sweep->add_subcommand("dp", "Final values of the coloring DP");
    sdp->add_option("--m", m)->required();
    sdp->add_option("--n", n)->required();
    sdp->add_option("--out", out);

    // braid
    auto* braid = app.add_subcommand("braid", "Punctured torus braids");
    braid->require_subcommand(1);
    std::string word, coloring_file;
    auto* beval = braid->add_subcommand("eval", "Evaluate a braid word on d_+^k(1)");
    beval->add_option("--word", word)->required();
    beval->add_option("--k", k)->required();
    beval->add_option("--cap", degree, "degree cap")->default_val(4);
    beval->add_option("--out", out);
    auto* bcol = braid->add_subcommand("of-coloring", "Braid of a coloring, evaluated and compared with the DP");
    bcol->add_option("--m", m)->required();
    bcol->add_option("--n", n)->required();
    bcol->add_option("--coloring", coloring_file, "JSON {\"intervals\": [[x, y], ...], \"stratum\": j}")->required();
    bcol->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (!alpha.empty()) cfg.alpha = parse_ints(alpha);
            cfg.mode = mode == "fast" ? EvalMode::fast : EvalMode::exact;
            return run_verify(cfg, with_dp, out);
        }
        if (*suite) {
            json a = json::array();
            bool ok = true;
            for (const auto& r : run_suite(suite_name)) {
                a.push_back(io::suite_to_json(r));
                ok = ok && r.pass();
            }
            emit(a.size() == 1 ? a[0] : a, out);
            return ok ? 0 : 1;
        }
        if (*build) {
            Tower<CoefRat> tw;
            auto h = tw.action(m, n, star);
            auto w = mediant_decompose(m, n);
            json imgs = json::array();
            for (const auto& [name, f] : spanning_set<CoefRat>(k, degree))
                imgs.push_back({{"input", name}, {"image", io::velem_to_json(h->raise(f))}});
            emit({{"action", h->label()}, {"moves", w.moves}, {"images", imgs}}, out);
            return 0;
        }
        if (*lhs) {
            auto a = parse_ints(alpha);
            emit({{"alpha", a}, {"lhs", io::sym_to_json(lhs_compositional(cfg.m1, cfg.n1, cfg.g, a))}}, out);
            return 0;
        }
        if (*paths) {
            json a = json::array();
            for (const auto& p : enumerate_paths(m, n))
                a.push_back({{"path", p.str()}, {"area", area(p)}, {"dinv", dinv(p)}, {"maxtdinv", maxtdinv(p)}, {"touch", touch_composition(p)}});
            emit({{"m", m}, {"n", n}, {"count", a.size()}, {"paths", a}}, out);
            return 0;
        }
        if (*spath) {
            DyckPath p = DyckPath::parse(path);
            std::string ev;
            for (const auto& e : event_sequence(p)) ev += event_char(e.kind);
            emit({{"path", p.str()}, {"events", ev}, {"value", io::sym_to_json(sweep_path(p))}}, out);
            return 0;
        }
        if (*sdp) {
            json a = json::array();
            for (const auto& [c, v] : dp_finals(m, n)) a.push_back({{"coloring", io::coloring_to_json(c)}, {"value", io::velem_to_json(v)}});
            emit({{"m", m}, {"n", n}, {"finals", a}}, out);
            return 0;
        }
        if (*beval) {
            BraidWord w = parse_braid(word, k);
            emit({{"word", w.str()}, {"k", k}, {"value", io::velem_to_json(evaluate(w, dplus_power<CoefRat>(k, degree)))}}, out);
            return 0;
        }
        if (*bcol) {
            std::ifstream in(coloring_file);
            if (!in) throw std::runtime_error("cannot read " + coloring_file);
            json input = json::parse(in);
            Coloring c = io::coloring_from_json(input.at("intervals"));
            auto dp = recursion_dp<CoefRat>(m, n);
            std::size_t j = input.contains("stratum") ? input.at("stratum").get<std::size_t>() : dp.strata.size() - 1;
            if (j >= dp.strata.size()) throw std::invalid_argument("stratum out of range");
            SweepGeometry g(m, n);
            auto cb = coloring_braid(g, c, g.stratum_height(dp, j));
            VElem<CoefRat> val = theorem_main_eval<CoefRat>(g, c, g.stratum_height(dp, j), n);
            json r{{"word", cb.word.str()}, {"k", cb.word.k}, {"alpha", cb.alpha}, {"inv_initial", cb.inv_initial},
                   {"inv_final", cb.inv_final}, {"value", io::velem_to_json(val)}};
            auto it = dp.strata[j].find(c);
            r["reachable"] = it != dp.strata[j].end();
            if (it != dp.strata[j].end()) r["matches_dp"] = it->second == val;
            emit(r, out);
            return it == dp.strata[j].end() || it->second == val ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
