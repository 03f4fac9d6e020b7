#include <doctest.h>

#include <stdexcept>

#include "antiflag/antiflag_space.hpp"

using namespace antiflag;

namespace {

Vec vec3(GfElem a, GfElem b, GfElem c) {
    Vec v = make_vec(3);
    v[0] = a;
    v[1] = b;
    v[2] = c;
    return v;
}

// Anti-flag from raw coordinates, normalizing along the way.
AntiFlagId flag_of(const AntiFlagSpace& afs, const Vec& p, const Vec& h) {
    const ProjectiveSpace& pg = afs.space();
    return afs.id_of(pg.point_id_of_vec(p), pg.hyperplane_id_of_vec(h));
}

}  // namespace

TEST_CASE("anti-flag counts are N * q^(n-1)") {
    struct Case { int n, q, count; };
    for (auto [n, q, count] : {Case{3, 2, 28}, Case{3, 3, 117}, Case{3, 4, 336},
                               Case{4, 2, 120}}) {
        CAPTURE(n);
        CAPTURE(q);
        Field f(q);
        ProjectiveSpace pg(f, n);
        AntiFlagSpace afs(pg);
        CHECK(afs.size() == count);
        // Ids ascend in (point, hyperplane) order and round-trip.
        for (AntiFlagId a = 0; a + 1 < afs.size(); ++a)
            CHECK(afs.flag(a) < afs.flag(a + 1));
        for (AntiFlagId a = 0; a < afs.size(); ++a)
            CHECK(afs.id_of(afs.flag(a).point, afs.flag(a).hyperplane) == a);
    }
}

TEST_CASE("id_of rejects incident pairs") {
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    PointId p = pg.point_id_of_vec(vec3(0, 0, 1));
    for (HyperplaneId h : pg.hyperplanes_through(p))
        CHECK_THROWS_AS(afs.id_of(p, h), std::invalid_argument);
}

TEST_CASE("classification of hand-picked pairs") {
    Field f(3);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    AntiFlagId a1 = flag_of(afs, vec3(1, 0, 0), vec3(1, 0, 0));  // (e1, ker x1)
    AntiFlagId a2 = flag_of(afs, vec3(0, 1, 0), vec3(0, 1, 0));  // (e2, ker x2)
    AntiFlagId a3 = flag_of(afs, vec3(1, 0, 0), vec3(1, 1, 0));  // (e1, ker x1+x2)
    AntiFlagId a4 = flag_of(afs, vec3(0, 1, 0), vec3(1, 1, 0));  // (e2, ker x1+x2)
    AntiFlagId a5 = flag_of(afs, vec3(1, 1, 0), vec3(1, 0, 1));  // (e1+e2, ker x1+x3)

    CHECK(afs.classify(a1, a1) == Relation::eq);
    CHECK(afs.classify(a1, a2) == Relation::r2);  // both cross-incidences hold
    CHECK(afs.classify(a1, a3) == Relation::r3);  // shared point
    CHECK(afs.classify(a2, a4) == Relation::r3);  // shared point
    CHECK(afs.classify(a2, a3) == Relation::r1);  // exactly one cross-incidence
    CHECK(afs.classify(a1, a5) == Relation::r4);  // nothing shared, no incidence
    // Symmetry across the whole space.
    for (AntiFlagId a = 0; a < afs.size(); ++a)
        for (AntiFlagId b = a + 1; b < afs.size(); ++b)
            CHECK(afs.classify(a, b) == afs.classify(b, a));
}

TEST_CASE("duality is an involution preserving every relation") {
    Field f(2);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    for (AntiFlagId a = 0; a < afs.size(); ++a) {
        AntiFlagId d = afs.dual(a);
        CHECK(afs.dual(d) == a);
        // The dual swaps the coordinate vectors.
        const AntiFlag& fl = afs.flag(a);
        const AntiFlag& dl = afs.flag(d);
        CHECK(pg.point(dl.point).v == pg.hyperplane(fl.hyperplane).v);
        CHECK(pg.hyperplane(dl.hyperplane).v == pg.point(fl.point).v);
    }
    for (AntiFlagId a = 0; a < afs.size(); ++a)
        for (AntiFlagId b = a + 1; b < afs.size(); ++b)
            CHECK(afs.classify(afs.dual(a), afs.dual(b)) == afs.classify(a, b));
}

TEST_CASE("involutions: reflection fixing the hyperplane, negating the point") {
    Field f(3);
    ProjectiveSpace pg(f, 3);
    AntiFlagSpace afs(pg);
    AntiFlagId a1 = flag_of(afs, vec3(1, 0, 0), vec3(1, 0, 0));
    Mat m = afs.involution_of(a1);
    // For (e1, ker x1) this is diag(-1, 1, 1).
    Mat want = Mat::identity(3);
    want.at(0, 0) = f.neg(1);
    CHECK(m == want);
    CHECK(mul(f, m, m) == Mat::identity(3));

    // Characteristic 2 has no such reflections.
    Field f2(2);
    ProjectiveSpace pg2(f2, 3);
    AntiFlagSpace afs2(pg2);
    CHECK_THROWS_AS(afs2.involution_of(0), std::domain_error);
}

TEST_CASE("transvection detection") {
    Field f(3);
    Mat id = Mat::identity(3);
    CHECK(!is_transvection(f, id));
    Mat t = Mat::identity(3);
    t.at(0, 1) = 1;  // elementary shear: rank(t - I) = 1, (t - I)^2 = 0
    CHECK(is_transvection(f, t));
    Mat d = Mat::identity(3);
    d.at(0, 0) = 2;  // diagonal: (d - I)^2 != 0
    CHECK(!is_transvection(f, d));
    CHECK(commute(f, id, t));
}
