#ifndef ANTIFLAG_VERIFY_HPP
#define ANTIFLAG_VERIFY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "antiflag/group_action.hpp"
#include "antiflag/hyperbolic.hpp"
#include "antiflag/recovery.hpp"

namespace antiflag {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // what was counted on success, what broke on failure
};

/// Owns and caches the per-configuration artifacts (field, spaces, graphs,
/// ground truth) shared by the check functions below. Configurations are
/// the desk-scale (n, q) pairs every exhaustive check runs on.
class VerifyContext {
public:
    static const std::vector<std::pair<int, int>>& configs();  // (n,q) quadruple

    /// Configurations the checks actually run on. Defaults to all four;
    /// narrowing it makes configuration-specific checks report "skipped".
    std::vector<std::pair<int, int>> active = configs();
    bool is_active(int n, int q) const;

    const Field& field(int q);
    const ProjectiveSpace& projective(int n, int q);
    const AntiFlagSpace& antiflags(int n, int q);
    const std::array<RelGraph, 4>& graphs(int n, int q);
    const RelGraph& graph(int n, int q, int relation);
    const PairLabeling& truth(int n, int q);

    unsigned seed = 20260818;  // for the sampled hyperbolic checks

private:
    std::map<int, std::unique_ptr<Field>> fields_;
    std::map<std::pair<int, int>, std::unique_ptr<ProjectiveSpace>> spaces_;
    std::map<std::pair<int, int>, std::unique_ptr<AntiFlagSpace>> afs_;
    std::map<std::pair<int, int>, std::unique_ptr<std::array<RelGraph, 4>>> graphs_;
    std::map<std::pair<int, int>, std::unique_ptr<PairLabeling>> truths_;
};

// One function per acceptance criterion, in flight order. Each is
// self-contained and reports pass/fail plus a short diagnostic.
CheckResult check_partition(VerifyContext& ctx);           //  1: four-way split
CheckResult check_common3_counts(VerifyContext& ctx);      //  2: counts 1/0/2
CheckResult check_double_perp(VerifyContext& ctx);         //  3: R3 from graph 2
CheckResult check_containment_poset(VerifyContext& ctx);   //  4: poset labels + closure
CheckResult check_special_q2(VerifyContext& ctx);          //  5: (3,2) witness facts
CheckResult check_admissible_cocliques(VerifyContext& ctx);//  6: (3,4) coclique shapes
CheckResult check_count_formulas(VerifyContext& ctx);      //  7: closed forms + refusal
CheckResult check_triple_complements(VerifyContext& ctx);  //  8: three-hyperplane counts
CheckResult check_end_to_end_recovery(VerifyContext& ctx); //  9: all recovery paths
CheckResult check_involutions(VerifyContext& ctx);         // 10: commute/transvection
CheckResult check_hyperbolic(VerifyContext& ctx);          // 11: q=2 reconstruction
CheckResult check_edge_orbits(VerifyContext& ctx);         // 12: edge transitivity

/// All twelve checks in criterion order.
std::vector<CheckResult> run_all_checks(VerifyContext& ctx);

/// Named suites for the command line: counts, recovery, hyperbolic, orbits,
/// involutions, all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(VerifyContext& ctx, const std::string& suite);

}  // namespace antiflag

#endif
