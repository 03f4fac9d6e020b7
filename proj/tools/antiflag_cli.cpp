// Command-line front end: enumeration, classification dumps, recovery runs,
// hyperbolic reconstruction, graph export, and verification-suite reports.
//
// Exit codes: 0 full agreement, 1 verification mismatch or refusal, 2 usage.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "antiflag/graph_io.hpp"
#include "antiflag/verify.hpp"

using namespace antiflag;

namespace {

struct RunConfig {
    int n = 3;
    int q = 2;
    int from = 0;
    std::string method;
    std::string format = "graph6";
    std::string out;
    std::string suite = "all";
    unsigned seed = 20260818;
    int jobs = 1;  // accepted for compatibility; outputs never depend on it
};

constexpr long long kMaxAntiFlags = 5000;  // desk scale

long long antiflag_count(int n, int q) {
    long long points = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
        points += pw;
        pw *= q;
    }
    long long qn1 = 1;
    for (int i = 0; i < n - 1; ++i) qn1 *= q;
    return points * qn1;
}

// Returns 0 if (n,q) is workable, otherwise prints why and returns 2.
int validate_config(int n, int q) {
    if (!is_supported_field_order(q)) {
        std::cerr << "error: unsupported field order q=" << q << "\n";
        return 2;
    }
    if (n < 3 || n > kMaxDim) {
        std::cerr << "error: dimension n must be in [3," << int(kMaxDim) << "]\n";
        return 2;
    }
    long long count = antiflag_count(n, q);
    if (count > kMaxAntiFlags) {
        std::cerr << "error: (n,q)=(" << n << "," << q << ") has " << count
                  << " anti-flags, beyond the " << kMaxAntiFlags << " limit\n";
        return 2;
    }
    return 0;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

std::string vec_str(const Vec& v) {
    std::string s = "[";
    for (int i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(v[i]));
    }
    return s + "]";
}

int cmd_enumerate(const RunConfig& rc) {
    Field f(rc.q);
    ProjectiveSpace pg(f, rc.n);
    AntiFlagSpace afs(pg);
    std::ofstream file;
    std::ostream& os = open_out(file, rc.out);
    os << "# PG(" << rc.n - 1 << "," << rc.q << "): " << pg.num_points()
       << " points, " << pg.num_hyperplanes() << " hyperplanes, " << afs.size()
       << " anti-flags\n";
    for (AntiFlagId a = 0; a < afs.size(); ++a) {
        const AntiFlag& fl = afs.flag(a);
        os << a << " point " << fl.point << " " << vec_str(pg.point(fl.point).v)
           << " hyperplane " << fl.hyperplane << " "
           << vec_str(pg.hyperplane(fl.hyperplane).v) << "\n";
    }
    return 0;
}

int cmd_classify(const RunConfig& rc) {
    Field f(rc.q);
    ProjectiveSpace pg(f, rc.n);
    AntiFlagSpace afs(pg);
    PairLabeling gt = ground_truth(afs);
    std::ofstream file;
    std::ostream& os = open_out(file, rc.out);
    os << "# " << afs.size() << " anti-flags, counts:";
    for (Relation r : {Relation::r1, Relation::r2, Relation::r3, Relation::r4})
        os << " " << relation_name(r) << "=" << gt.count(r);
    os << "\n";
    for (AntiFlagId a = 0; a < afs.size(); ++a)
        for (AntiFlagId b = a + 1; b < afs.size(); ++b)
            os << a << " " << b << " " << relation_name(gt.get(a, b)) << "\n";
    return 0;
}

int cmd_recover(const RunConfig& rc) {
    static const std::set<std::pair<int, std::string>> allowed = {
        {1, "counts"}, {1, "cocliques"}, {2, ""}, {3, ""},
        {4, "poset"},  {4, "special"}};
    std::string method = rc.method;
    if (method.empty() && rc.from == 1) method = "counts";
    if (method.empty() && rc.from == 4) method = "poset";
    if (!allowed.count({rc.from, method})) {
        std::cerr << "error: --method " << (method.empty() ? "(none)" : method)
                  << " does not apply to --from " << rc.from << "\n";
        return 2;
    }
    if (method == "special" && (rc.n != 3 || rc.q != 2)) {
        std::cerr << "refused: --method special is the n=3, q=2 shortcut "
                  << "(nonempty common-4-neighborhood means R2 only there); "
                  << "use --method poset\n";
        return 1;
    }

    Field f(rc.q);
    ProjectiveSpace pg(f, rc.n);
    AntiFlagSpace afs(pg);
    PairLabeling gt = ground_truth(afs);

    if (rc.from == 1 && method == "cocliques") {
        if (rc.q < 4) {
            std::cerr << "refused: coclique-based recovery needs q >= 4, got q="
                      << rc.q << "\n";
            return 1;
        }
        RelGraph g1 = build_graph(1, afs);
        auto pairs = recover_3_from_1_cocliques(g1);
        std::set<std::pair<AntiFlagId, AntiFlagId>> got(pairs.begin(), pairs.end());
        long long want = gt.count(Relation::r3);
        for (AntiFlagId a = 0; a < afs.size(); ++a)
            for (AntiFlagId b = a + 1; b < afs.size(); ++b)
                if ((gt.get(a, b) == Relation::r3) != (got.count({a, b}) > 0)) {
                    std::cout << "mismatch at pair " << a << "," << b << ": truth "
                              << relation_name(gt.get(a, b)) << ", recovered "
                              << (got.count({a, b}) ? "R3" : "not R3") << "\n";
                    return 1;
                }
        std::cout << "recovered all " << want << " R3 pairs from the 1-relation "
                  << "coclique structure\n";
        return 0;
    }

    RelGraph g = build_graph(rc.from, afs);
    PairLabeling rec(int(afs.size()));
    if (rc.from == 1)
        rec = recover_from_1_counts(g, rc.q, rc.n);
    else if (rc.from == 2)
        rec = recover_from_2(g);
    else if (rc.from == 3)
        rec = recover_from_3(g);
    else if (method == "special")
        rec = recover_from_4_special(g);
    else
        rec = recover_from_4(g);

    auto bad = rec.diff(gt, 8);
    if (!bad.empty()) {
        for (auto [a, b] : bad)
            std::cout << "mismatch at pair " << a << "," << b << ": truth "
                      << relation_name(gt.get(a, b)) << ", recovered "
                      << relation_name(rec.get(a, b)) << "\n";
        std::cout << "recovered labeling disagrees with ground truth\n";
        return 1;
    }
    long long pairs = static_cast<long long>(afs.size()) * (afs.size() - 1) / 2;
    std::cout << "recovered labeling matches ground truth on all " << pairs
              << " pairs\n";
    return 0;
}

int cmd_hyperbolic(const RunConfig& rc, const std::string& action) {
    if (rc.q != 2) {
        std::cerr << "error: hyperbolic commands require q=2\n";
        return 2;
    }
    HyperbolicSpace hs(rc.n);
    std::ofstream file;
    std::ostream& os = open_out(file, rc.out);

    if (action == "partition") {
        os << "2n=" << 2 * rc.n << " coordinates, " << hs.num_nonzero()
           << " nonzero points: " << hs.singular().size() << " singular, "
           << hs.nonsingular().size() << " nonsingular\n";
        return 0;
    }

    Field f(2);
    ProjectiveSpace pg(f, rc.n);
    AntiFlagSpace afs(pg);

    if (action == "check-f") {
        const auto& ns = hs.nonsingular();
        std::set<AntiFlagId> seen;
        for (uint32_t u : ns) {
            AntiFlagId a = hs.to_antiflag(u, afs);
            if (hs.from_antiflag(a, afs) != u) {
                os << "round trip fails at code " << u << "\n";
                return 1;
            }
            seen.insert(a);
        }
        if (static_cast<AntiFlagId>(seen.size()) != afs.size()) {
            os << "correspondence is not onto the anti-flags\n";
            return 1;
        }
        long long pairs = 0;
        for (size_t i = 0; i < ns.size(); ++i)
            for (size_t j = i + 1; j < ns.size(); ++j) {
                bool form = hs.bilinear(ns[i], ns[j]) == 1;
                Relation r = afs.classify(hs.to_antiflag(ns[i], afs),
                                          hs.to_antiflag(ns[j], afs));
                if (form != (r == Relation::r1)) {
                    os << "form/relation mismatch at codes " << ns[i] << "," << ns[j]
                       << "\n";
                    return 1;
                }
                ++pairs;
            }
        os << "bijective on " << ns.size() << " nonsingular points; form agrees "
           << "with 1-adjacency on all " << pairs << " pairs\n";
        return 0;
    }

    // reconstruct
    RelGraph g1 = build_graph(1, afs);
    ReconstructedGeometry rec = reconstruct_polar_space(g1);
    auto geo_lines = fully_singular_lines(hs);
    os << rec.cocliques.size() << " 2-cocliques fall into " << rec.num_classes
       << " parallel classes (singular points: " << hs.singular().size() << "); "
       << rec.lines.size() << " abstract lines (fully singular lines: "
       << geo_lines.size() << ")\n";
    if (rec.num_classes != static_cast<int>(hs.singular().size()) ||
        rec.lines.size() != geo_lines.size()) {
        os << "reconstruction does not match the quadric\n";
        return 1;
    }
    os << "reconstruction matches the quadric\n";
    return 0;
}

int cmd_export(const RunConfig& rc) {
    Field f(rc.q);
    ProjectiveSpace pg(f, rc.n);
    AntiFlagSpace afs(pg);
    RelGraph g = build_graph(rc.from, afs);
    std::ofstream file;
    std::ostream& os = open_out(file, rc.out);
    if (rc.format == "graph6")
        os << encode_graph6(g) << "\n";
    else if (rc.format == "dimacs")
        write_dimacs(g, os);
    else
        write_jsonl(g, afs, os);
    return 0;
}

int cmd_verify(const RunConfig& rc, bool have_nq) {
    VerifyContext ctx;
    ctx.seed = rc.seed;
    if (have_nq) ctx.active = {{rc.n, rc.q}};
    auto results = run_suite(ctx, rc.suite);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{"anti-flag relation graphs of PG(n-1,q): enumeration, recovery, "
                 "hyperbolic reconstruction"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", rc.n, "ambient vector-space dimension (>= 3)");
        sub->add_option("--q", rc.q, "field order (supported prime power)");
        sub->add_option("--out", rc.out, "output file (default stdout)");
        sub->add_option("--jobs", rc.jobs, "worker threads (outputs identical)");
        sub->add_option("--seed", rc.seed, "seed for sampled checks");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all anti-flags");
    add_common(enumerate);

    CLI::App* classify = app.add_subcommand("classify", "label every pair");
    add_common(classify);

    CLI::App* recover =
        app.add_subcommand("recover", "rebuild the labeling from one relation");
    add_common(recover);
    recover->add_option("--from", rc.from, "source relation (1..4)")
        ->required()
        ->check(CLI::Range(1, 4));
    recover->add_option("--method", rc.method,
                        "counts|cocliques (from 1), poset|special (from 4)");

    CLI::App* hyperbolic = app.add_subcommand(
        "hyperbolic", "hyperbolic quadric over GF(2) (q=2 only)");
    add_common(hyperbolic);
    std::string hyp_action;
    hyperbolic->add_option("action", hyp_action, "partition|check-f|reconstruct")
        ->required()
        ->check(CLI::IsMember({"partition", "check-f", "reconstruct"}));

    CLI::App* exp = app.add_subcommand("export", "write one relation graph");
    add_common(exp);
    exp->add_option("--graph", rc.from, "relation graph (1..4)")
        ->required()
        ->check(CLI::Range(1, 4));
    exp->add_option("--format", rc.format, "graph6|dimacs|jsonl")
        ->check(CLI::IsMember({"graph6", "dimacs", "jsonl"}));

    CLI::App* verify = app.add_subcommand("verify", "run acceptance suites");
    add_common(verify);
    verify->add_option("--suite", rc.suite,
                       "counts|recovery|hyperbolic|orbits|involutions|all")
        ->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            bool have_nq = verify->count("--n") || verify->count("--q");
            if (have_nq) {
                if (int rcode = validate_config(rc.n, rc.q)) return rcode;
            }
            return cmd_verify(rc, have_nq);
        }
        if (int rcode = validate_config(rc.n, rc.q)) return rcode;
        if (*enumerate) return cmd_enumerate(rc);
        if (*classify) return cmd_classify(rc);
        if (*recover) return cmd_recover(rc);
        if (*hyperbolic) return cmd_hyperbolic(rc, hyp_action);
        if (*exp) return cmd_export(rc);
    } catch (const RecoveryRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const InconsistencyError& e) {
        std::cerr << "inconsistent input: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
