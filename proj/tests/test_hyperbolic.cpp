#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "antiflag/hyperbolic.hpp"

using namespace antiflag;

TEST_CASE("singular/nonsingular split sizes") {
    struct Case { int n; size_t sing, ns; };
    for (auto [n, sing, ns] : {Case{3, 35, 28}, Case{4, 135, 120},
                               Case{5, 527, 496}}) {
        CAPTURE(n);
        HyperbolicSpace hs(n);
        CHECK(hs.singular().size() == sing);
        CHECK(hs.nonsingular().size() == ns);
        CHECK(sing + ns == hs.num_nonzero());
    }
    CHECK_THROWS_AS(HyperbolicSpace(2), std::invalid_argument);
}

TEST_CASE("quadratic form basics") {
    HyperbolicSpace hs(3);
    // Basis vectors pair a coordinate with its dual: Q(e_i) = 0,
    // Q(e_i + e_i*) = 1, and the form polarizes to the dot-style pairing.
    for (int i = 0; i < 3; ++i) {
        CHECK(hs.q_value(1u << i) == 0);
        CHECK(hs.q_value(1u << (3 + i)) == 0);
        CHECK(hs.q_value((1u << i) | (1u << (3 + i))) == 1);
    }
    // The polarized form is symmetric and additive in each slot.
    for (uint32_t u = 1; u <= hs.num_nonzero(); ++u)
        for (uint32_t v = 1; v <= hs.num_nonzero(); ++v) {
            CHECK(hs.bilinear(u, v) == hs.bilinear(v, u));
            CHECK(hs.bilinear(u ^ v, 21) == (hs.bilinear(u, 21) ^ hs.bilinear(v, 21)));
        }
}

TEST_CASE("nonsingular points correspond to anti-flags") {
    HyperbolicSpace hs(3);
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    std::set<AntiFlagId> seen;
    for (uint32_t u : hs.nonsingular()) {
        AntiFlagId a = hs.to_antiflag(u, afs);
        CHECK(hs.from_antiflag(a, afs) == u);
        seen.insert(a);
    }
    CHECK(seen.size() == size_t(afs.size()));
    // Singular codes have no anti-flag: the point would lie on the hyperplane.
    CHECK_THROWS_AS(hs.to_antiflag(hs.singular().front(), afs),
                    std::invalid_argument);
}

TEST_CASE("orthogonality mirrors the 1-relation") {
    HyperbolicSpace hs(3);
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    const auto& ns = hs.nonsingular();
    for (size_t i = 0; i < ns.size(); ++i)
        for (size_t j = i + 1; j < ns.size(); ++j) {
            Relation r = afs.classify(hs.to_antiflag(ns[i], afs),
                                      hs.to_antiflag(ns[j], afs));
            CHECK((hs.bilinear(ns[i], ns[j]) == 1) == (r == Relation::r1));
        }
}

TEST_CASE("totally nonsingular lines at n=3: 56 of them, all maximal cliques") {
    HyperbolicSpace hs(3);
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);
    CHECK(g1.num_edges() == 168);
    auto lines = tns_lines_from_graph(g1);
    CHECK(lines.size() == 56);
    for (const auto& t : lines) {
        CHECK(g1.adjacent(t[0], t[1]));
        CHECK(g1.adjacent(t[0], t[2]));
        CHECK(g1.adjacent(t[1], t[2]));
        AntiFlagId ids[] = {t[0], t[1], t[2]};
        CHECK(common_related(g1, std::span<const AntiFlagId>(ids, 3)).none());
        // The three codes really do sum to zero (a projective line).
        CHECK((hs.from_antiflag(t[0], afs) ^ hs.from_antiflag(t[1], afs) ^
               hs.from_antiflag(t[2], afs)) == 0);
    }
}

TEST_CASE("polar-space reconstruction at n=3") {
    HyperbolicSpace hs(3);
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);
    ReconstructedGeometry rec = reconstruct_polar_space(g1);
    REQUIRE(rec.cocliques.size() == 210);
    REQUIRE(rec.num_classes == 35);
    // Every class has six members: 210 / 35.
    std::vector<int> size_of(size_t(rec.num_classes), 0);
    for (int c : rec.coclique_class) ++size_of[size_t(c)];
    for (int s : size_of) CHECK(s == 6);
    // Each class corresponds to one singular point: the sum of its pairs.
    std::vector<uint32_t> code(size_t(rec.num_classes), 0);
    for (size_t i = 0; i < rec.cocliques.size(); ++i) {
        uint32_t s = hs.from_antiflag(rec.cocliques[i].first, afs) ^
                     hs.from_antiflag(rec.cocliques[i].second, afs);
        CHECK(hs.is_singular(s));
        size_t cls = size_t(rec.coclique_class[i]);
        if (code[cls] == 0)
            code[cls] = s;
        else
            CHECK(code[cls] == s);
    }
    std::set<uint32_t> codes(code.begin(), code.end());
    CHECK(codes.size() == 35);
    // The abstract lines land exactly on the fully singular lines of the
    // quadric once classes are renamed to their singular points.
    auto fsl = fully_singular_lines(hs);
    CHECK(fsl.size() == 105);
    std::set<std::array<uint32_t, 3>> truth, mapped;
    for (auto t : fsl) {
        std::sort(t.begin(), t.end());
        truth.insert(t);
    }
    for (const auto& l : rec.lines) {
        std::array<uint32_t, 3> t{code[size_t(l[0])], code[size_t(l[1])],
                                  code[size_t(l[2])]};
        std::sort(t.begin(), t.end());
        mapped.insert(t);
    }
    CHECK(rec.lines.size() == 105);
    CHECK(mapped == truth);
}

TEST_CASE("both parallelism types match their geometric meaning at n=3") {
    HyperbolicSpace hs(3);
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);
    PolarReconstruction pr(g1);
    const auto& cc = pr.cocliques();
    const int m = int(cc.size());
    std::vector<uint32_t> first(static_cast<size_t>(m)), sum(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        first[size_t(i)] = hs.from_antiflag(cc[size_t(i)].first, afs);
        sum[size_t(i)] = first[size_t(i)] ^ hs.from_antiflag(cc[size_t(i)].second, afs);
    }
    size_t ft_count = 0, snd_count = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            // Shared singular endpoint makes the pair parallel; the span of
            // the two lines then carries one or three singular points, and
            // that decides the type.
            bool par = sum[size_t(i)] == sum[size_t(j)];
            uint32_t w = first[size_t(i)] ^ first[size_t(j)];
            bool geo_ft = par && !hs.is_singular(w) && !hs.is_singular(w ^ sum[size_t(i)]);
            bool geo_snd = par && hs.is_singular(w) && hs.is_singular(w ^ sum[size_t(i)]);
            CHECK(pr.parallel_first_type(i, j) == geo_ft);
            CHECK(pr.parallel_second_type(i, j) == geo_snd);
            ft_count += geo_ft;
            snd_count += geo_snd;
        }
    // 35 classes of six cocliques: 6 first-type and 9 second-type pairs each.
    CHECK(ft_count == 35 * 6);
    CHECK(snd_count == 35 * 9);
}

TEST_CASE("first-type parallelism is symmetric and nontrivial at n=3") {
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);
    PolarReconstruction pr(g1);
    size_t count = 0;
    int m = int(pr.cocliques().size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pr.parallel_first_type(i, j)) {
                CHECK(pr.parallel_first_type(j, i));
                ++count;
            }
    CHECK(count > 0);
}
