#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "antiflag/group_action.hpp"

using namespace antiflag;

TEST_CASE("generator maps act on anti-flags and preserve all four relations") {
    for (auto [n, q] : {std::pair{3, 2}, {3, 3}, {3, 4}}) {
        CAPTURE(n);
        CAPTURE(q);
        Field f(q);
        ProjectiveSpace pg(f, n);
        AntiFlagSpace afs(pg);
        GeneratorSet gens = gl_generators(f, n, /*with_duality=*/true);
        CHECK(gens.include_duality);
        for (const auto& perms = generator_permutations(afs, gens);
             const auto& perm : perms) {
            CHECK(preserves_relations(afs, perm));
            // A permutation: every image hit exactly once.
            std::vector<int> sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < int(sorted.size()); ++i) CHECK(sorted[size_t(i)] == i);
        }
    }
}

TEST_CASE("the group is transitive on anti-flags") {
    for (auto [n, q] : {std::pair{3, 2}, {3, 3}}) {
        CAPTURE(n);
        CAPTURE(q);
        Field f(q);
        ProjectiveSpace pg(f, n);
        AntiFlagSpace afs(pg);
        GeneratorSet gens = gl_generators(f, n, false);
        auto orbit = orbit_of_antiflag(afs, gens, 0);
        CHECK(orbit.size() == size_t(afs.size()));
    }
}

TEST_CASE("duality is an involution commuting with classification") {
    Field f(3);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    auto d = duality_permutation(afs);
    for (int a = 0; a < afs.size(); ++a) CHECK(d[size_t(d[size_t(a)])] == a);
    CHECK(preserves_relations(afs, d));
}

TEST_CASE("semilinear maps: frobenius squares to the identity at q=4") {
    Field f(4);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    SemilinearMap frob(f, Mat::identity(3), 1);
    auto p = antiflag_permutation(afs, frob);
    for (int a = 0; a < afs.size(); ++a) CHECK(p[size_t(p[size_t(a)])] == a);
    CHECK(preserves_relations(afs, p));
    // Singular matrices are rejected outright.
    Mat z;
    z.n = 3;
    CHECK_THROWS_AS(SemilinearMap(f, z, 0), std::invalid_argument);
}

TEST_CASE("random invertible matrices really are invertible") {
    std::mt19937_64 rng(7);
    for (int q : {2, 5, 9}) {
        CAPTURE(q);
        Field f(q);
        for (int it = 0; it < 20; ++it) {
            Mat m = random_invertible(f, 3, rng);
            Mat out;
            CHECK(invert(f, m, out));
            CHECK(mul(f, m, out) == Mat::identity(3));
        }
    }
}

TEST_CASE("edge orbits at (3,2): every graph is edge-transitive") {
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    GeneratorSet gens = gl_generators(f, 3, true);
    auto perms = generator_permutations(afs, gens);
    for (int rel = 1; rel <= 4; ++rel) {
        RelGraph g = build_graph(rel, afs);
        auto sizes = edge_orbit_sizes(g, perms);
        REQUIRE(sizes.size() == 1);
        CHECK(sizes[0] == g.num_edges());
    }
}

TEST_CASE("edge orbits at (3,3): graph 4 splits, the others do not") {
    Field f(3);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    GeneratorSet gens = gl_generators(f, 3, true);
    auto perms = generator_permutations(afs, gens);
    for (int rel = 1; rel <= 3; ++rel) {
        RelGraph g = build_graph(rel, afs);
        CHECK(edge_orbit_sizes(g, perms).size() == 1);
    }
    RelGraph g4 = build_graph(4, afs);
    auto sizes = edge_orbit_sizes(g4, perms);
    CHECK(sizes.size() >= 2);
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0LL) == g4.num_edges());
}
