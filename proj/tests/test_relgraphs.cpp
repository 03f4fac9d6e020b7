#include <doctest.h>

#include <stdexcept>

#include <set>

#include "antiflag/relation_graph.hpp"

using namespace antiflag;

namespace {

struct Fixture {
    Field f;
    ProjectiveSpace pg;
    AntiFlagSpace afs;
    std::array<RelGraph, 4> g;
    Fixture(int n, int q) : f(q), pg(f, n), afs(pg), g(build_all_graphs(afs)) {}
};

Vec vec3(GfElem a, GfElem b, GfElem c) {
    Vec v = make_vec(3);
    v[0] = a;
    v[1] = b;
    v[2] = c;
    return v;
}

}  // namespace

TEST_CASE("all four relation graphs are regular with the expected degrees") {
    struct Case { int n, q; int deg[4]; };
    for (auto [n, q, deg] : {Case{3, 2, {12, 6, 6, 3}},
                             Case{3, 3, {48, 12, 16, 40}},
                             Case{3, 4, {120, 20, 30, 165}},
                             Case{4, 2, {56, 28, 14, 21}}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        long long total = 0;
        for (int i = 0; i < 4; ++i) {
            int d = -1;
            CHECK(fx.g[i].is_regular(&d));
            CHECK(d == deg[i]);
            CHECK(fx.g[i].num_edges() ==
                  static_cast<long long>(fx.afs.size()) * deg[i] / 2);
            total += fx.g[i].num_edges();
        }
        // Together the graphs cover every distinct pair exactly once.
        CHECK(total == static_cast<long long>(fx.afs.size()) *
                           (fx.afs.size() - 1) / 2);
    }
}

TEST_CASE("row/adjacent/edges agree") {
    Fixture fx(3, 2);
    for (int i = 0; i < 4; ++i) {
        const RelGraph& g = fx.g[i];
        long long from_rows = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            CHECK(!g.row(v).test(size_t(v)));
            from_rows += g.degree(v);
        }
        CHECK(from_rows == 2 * g.num_edges());
        auto es = g.edges();
        CHECK(static_cast<long long>(es.size()) == g.num_edges());
        for (auto [a, b] : es) {
            CHECK(a < b);
            CHECK(g.adjacent(a, b));
            CHECK(g.adjacent(b, a));
        }
    }
}

TEST_CASE("common neighbours of the empty set are everything") {
    Fixture fx(3, 2);
    const RelGraph& g4 = fx.g[3];
    DynBitset none(size_t(g4.num_vertices()));
    CHECK(common_related(g4, none).count() == size_t(g4.num_vertices()));
    CHECK(common_related(g4, std::span<const AntiFlagId>{}).count() ==
          size_t(g4.num_vertices()));
    // Singleton: exactly the row.
    AntiFlagId one[] = {5};
    CHECK(common_related(g4, std::span<const AntiFlagId>(one, 1)) == g4.row(5));
}

TEST_CASE("a known R1 pair has exactly one common 3-neighbour") {
    Fixture fx(3, 2);
    const ProjectiveSpace& pg = fx.pg;
    AntiFlagId a = fx.afs.id_of(pg.point_id_of_vec(vec3(0, 1, 0)),
                                pg.hyperplane_id_of_vec(vec3(0, 1, 0)));
    AntiFlagId b = fx.afs.id_of(pg.point_id_of_vec(vec3(1, 0, 0)),
                                pg.hyperplane_id_of_vec(vec3(1, 1, 0)));
    REQUIRE(fx.afs.classify(a, b) == Relation::r1);
    DynBitset c = common_related(fx.g[2], a, b);
    REQUIRE(c.count() == 1);
    size_t w = c.find_first();
    CHECK(fx.g[2].adjacent(int(w), a));
    CHECK(fx.g[2].adjacent(int(w), b));
}

TEST_CASE("coclique shapes: along a line or dually along a pencil") {
    Field f(4);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);

    HyperplaneId h = pg.hyperplane_id_of_vec(vec3(1, 0, 0));
    std::array<AntiFlagId, 4> lin{};
    for (GfElem t = 0; t < 4; ++t)
        lin[t] = afs.id_of(pg.point_id_of_vec(vec3(1, t, 0)), h);
    std::sort(lin.begin(), lin.end());
    CHECK(classify_coclique_shape(afs, lin) == CocliqueShape::linear);
    CHECK(coclique_profile_admissible(g1, lin));

    PointId p = pg.point_id_of_vec(vec3(1, 0, 0));
    std::array<AntiFlagId, 4> dul{};
    for (GfElem t = 0; t < 4; ++t)
        dul[t] = afs.id_of(p, pg.hyperplane_id_of_vec(vec3(1, t, 0)));
    std::sort(dul.begin(), dul.end());
    CHECK(classify_coclique_shape(afs, dul) == CocliqueShape::dually_linear);
    CHECK(coclique_profile_admissible(g1, dul));

    // Four flags on one hyperplane whose points are NOT collinear: still a
    // 1-coclique (pairwise R3), but of neither shape, and not admissible.
    HyperplaneId h3 = pg.hyperplane_id_of_vec(vec3(0, 0, 1));
    std::array<AntiFlagId, 4> bent = {
        afs.id_of(pg.point_id_of_vec(vec3(1, 0, 1)), h3),
        afs.id_of(pg.point_id_of_vec(vec3(1, 1, 1)), h3),
        afs.id_of(pg.point_id_of_vec(vec3(1, 2, 1)), h3),
        afs.id_of(pg.point_id_of_vec(vec3(1, 0, 2)), h3)};
    std::sort(bent.begin(), bent.end());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            REQUIRE(!g1.adjacent(bent[size_t(i)], bent[size_t(j)]));
    CHECK(classify_coclique_shape(afs, bent) == CocliqueShape::neither);
    CHECK(!coclique_profile_admissible(g1, bent));
}

TEST_CASE("admissible 4-coclique census at (3,4)") {
    Field f(4);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    RelGraph g1 = build_graph(1, afs);
    auto adm = admissible_cocliques(g1);
    CHECK(adm.size() == 840);  // 420 along lines + 420 along dual pencils
    size_t linear = 0;
    for (const auto& c : adm) {
        CocliqueShape s = classify_coclique_shape(afs, c);
        CHECK(s != CocliqueShape::neither);
        linear += s == CocliqueShape::linear;
    }
    CHECK(linear == 420);
}

TEST_CASE("maximal cliques of the 3-relation graph are the two pencil kinds") {
    for (int q : {2, 3}) {
        CAPTURE(q);
        Field f(q);
        ProjectiveSpace pg(f, 3);
        AntiFlagSpace afs(pg);
        RelGraph g3 = build_graph(3, afs);
        auto cliques = maximal_cliques(g3);
        // One pencil per point plus one per hyperplane, each of size q^(n-1).
        CHECK(cliques.size() == size_t(2 * pg.num_points()));
        size_t want = size_t(q) * size_t(q);
        for (const auto& c : cliques) {
            CHECK(c.size() == want);
            bool same_p = true, same_h = true;
            for (size_t i = 1; i < c.size(); ++i) {
                same_p &= afs.flag(c[i]).point == afs.flag(c[0]).point;
                same_h &= afs.flag(c[i]).hyperplane == afs.flag(c[0]).hyperplane;
            }
            CHECK((same_p || same_h));
        }
    }
}
