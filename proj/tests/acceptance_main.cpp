// Acceptance gate: runs the twelve exhaustive criteria over the desk-scale
// configurations (3,2), (3,3), (3,4), (4,2) and prints one line per
// criterion. Exits nonzero if any of them fails.

#include <chrono>
#include <cstdio>

#include "antiflag/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    antiflag::VerifyContext ctx;

    struct Entry {
        const char* label;
        antiflag::CheckResult (*run)(antiflag::VerifyContext&);
    };
    const Entry entries[] = {
        {" 1 relation partition", antiflag::check_partition},
        {" 2 common 3-neighbour counts", antiflag::check_common3_counts},
        {" 3 double-perp criterion", antiflag::check_double_perp},
        {" 4 containment poset", antiflag::check_containment_poset},
        {" 5 q=2 witness facts", antiflag::check_special_q2},
        {" 6 admissible 4-cocliques", antiflag::check_admissible_cocliques},
        {" 7 count formulas", antiflag::check_count_formulas},
        {" 8 triple complements", antiflag::check_triple_complements},
        {" 9 end-to-end recovery", antiflag::check_end_to_end_recovery},
        {"10 involution algebra", antiflag::check_involutions},
        {"11 hyperbolic reconstruction", antiflag::check_hyperbolic},
        {"12 edge orbits", antiflag::check_edge_orbits},
    };

    bool all_pass = true;
    auto t0 = clock::now();
    for (const Entry& e : entries) {
        auto start = clock::now();
        antiflag::CheckResult r = e.run(ctx);
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        std::printf("%s  criterion %s  [%.1fs]  %s\n", r.pass ? "PASS" : "FAIL",
                    e.label, secs, r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    double total = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%s (%.1fs total)\n",
                all_pass ? "acceptance: all criteria satisfied"
                         : "acceptance: FAILURES above",
                total);
    return all_pass ? 0 : 1;
}
