#include <cstdio>
#include <functional>
#include <vector>

#include <qtshuffle/verify.hpp>

using namespace qts;

namespace {

struct Criterion {
    int id;
    const char* name;
    std::function<std::vector<SuiteReport>()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "operator relations, k <= 3, degree <= 3", [] { return std::vector{relations_suite(3, 3)}; }},
        {2, "sweep of every path, m+n <= 9", [] { return std::vector{sweep_suite(9)}; }},
        {3, "coloring DP against the compositional side, g(m1+n1) <= 9", [] { return std::vector{coloring_suite(9)}; }},
        {4, "colorings as braids with integer q-degree, m+n <= 7", [] { return std::vector{theorem_main_suite(7)}; }},
        {5, "compositional shuffle identity, exact", [] { return std::vector{shuffle_suite()}; }},
        {6, "train rewrites, order independence and transition rules",
         [] { return std::vector{trains_suite(100, 1), braid_rules_suite(7)}; }},
        {7, "C_alpha and the unfiltered parking function sum", [] { return std::vector{calpha_suite()}; }},
        {8, "nabla conjugation, n <= 3", [] { return std::vector{nabla_suite(3)}; }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        bool ok = true;
        long cases = 0;
        double seconds = 0;
        std::vector<SuiteFailure> failures;
        for (const auto& r : c.run()) {
            ok = ok && r.pass();
            cases += r.cases;
            seconds += r.seconds;
            failures.insert(failures.end(), r.failures.begin(), r.failures.end());
        }
        std::printf("%s %d %s (%ld cases, %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, cases, seconds);
        for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
            std::printf("    %s: %s\n", failures[i].id.c_str(), failures[i].witness.c_str());
        std::fflush(stdout);
        all = all && ok;
    }
    return all ? 0 : 1;
}
