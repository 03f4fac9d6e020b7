#include <doctest.h>

#include <stdexcept>

#include <set>

#include "antiflag/recovery.hpp"

using namespace antiflag;

namespace {

struct Fixture {
    Field f;
    ProjectiveSpace pg;
    AntiFlagSpace afs;
    std::array<RelGraph, 4> g;
    PairLabeling gt;
    Fixture(int n, int q)
        : f(q), pg(f, n), afs(pg), g(build_all_graphs(afs)), gt(ground_truth(afs)) {}
};

}  // namespace

TEST_CASE("pair labeling stores and diffs") {
    PairLabeling a(5), b(5);
    a.set(1, 3, Relation::r2);
    CHECK(a.get(1, 3) == Relation::r2);
    CHECK(a.get(3, 1) == Relation::r2);
    CHECK(a.count(Relation::r2) == 1);
    CHECK(!(a == b));
    auto d = a.diff(b, 8);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::pair<int, int>{1, 3});
    b.set(3, 1, Relation::r2);
    CHECK(a == b);
}

TEST_CASE("ground-truth relation counts") {
    struct Case { int n, q; long long r1, r2, r3, r4; };
    for (auto [n, q, r1, r2, r3, r4] :
         {Case{3, 2, 168, 84, 84, 42},
          Case{3, 4, 20160, 3360, 5040, 27720}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        CHECK(fx.gt.count(Relation::r1) == r1);
        CHECK(fx.gt.count(Relation::r2) == r2);
        CHECK(fx.gt.count(Relation::r3) == r3);
        CHECK(fx.gt.count(Relation::r4) == r4);
    }
}

TEST_CASE("recovery from the 3-relation graph alone") {
    for (auto [n, q] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        CHECK(recover_from_3(fx.g[2]) == fx.gt);
    }
}

TEST_CASE("recovery from the 2-relation graph via the double-perp criterion") {
    for (auto [n, q] : {std::pair{3, 2}, {3, 3}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        CHECK(recover_from_2(fx.g[1]) == fx.gt);
    }
}

TEST_CASE("recovery from the 4-relation graph via set containment") {
    for (auto [n, q] : {std::pair{3, 3}, {4, 2}}) {
        CAPTURE(n);
        CAPTURE(q);
        Fixture fx(n, q);
        CHECK(recover_from_4(fx.g[3]) == fx.gt);
    }
    // At (3,2) the 4-neighbour sets degenerate; the method must refuse, and
    // the small-case pipeline must take over.
    Fixture small(3, 2);
    CHECK_THROWS_AS(recover_from_4(small.g[3]), RecoveryRefused);
    CHECK(recover_from_4_special(small.g[3]) == small.gt);
}

TEST_CASE("count-based recovery from the 1-relation graph needs q >= 3") {
    Fixture fx(3, 3);
    CHECK(recover_from_1_counts(fx.g[0], 3, 3) == fx.gt);
    Fixture small(3, 2);
    CHECK_THROWS_AS(recover_from_1_counts(small.g[0], 2, 3), RecoveryRefused);
}

TEST_CASE("frozen values of the common 1-neighbour formulas") {
    // (3,3): four distinct values.
    CHECK(formula_common1(Common1Kind::r2, 3, 3) == 16);
    CHECK(formula_common1(Common1Kind::r3, 3, 3) == 21);
    CHECK(formula_common1(Common1Kind::r4_line_meets_both, 3, 3) == 18);
    CHECK(formula_common1(Common1Kind::r4_line_meets_separately, 3, 3) == 22);
    // q=2: the three applicable values collapse.
    for (auto [n, want] : {std::pair{3, 4LL}, {4, 24LL}}) {
        CHECK(formula_common1(Common1Kind::r2, 2, n) == want);
        CHECK(formula_common1(Common1Kind::r3, 2, n) == want);
        CHECK(formula_common1(Common1Kind::r4_line_meets_both, 2, n) == want);
    }
    CHECK_THROWS_AS(formula_common1(Common1Kind::r4_line_meets_separately, 2, 3),
                    std::invalid_argument);
    // (3,4): all four again distinct.
    CHECK(formula_common1(Common1Kind::r2, 4, 3) == 36);
    CHECK(formula_common1(Common1Kind::r3, 4, 3) == 56);
    CHECK(formula_common1(Common1Kind::r4_line_meets_both, 4, 3) == 40);
    CHECK(formula_common1(Common1Kind::r4_line_meets_separately, 4, 3) == 44);
}

TEST_CASE("the two R4 line configurations both occur and are detected") {
    Fixture fx(3, 3);
    long long meets_both = 0, meets_separately = 0;
    for (AntiFlagId a = 0; a < fx.afs.size(); ++a)
        for (AntiFlagId b = a + 1; b < fx.afs.size(); ++b) {
            if (fx.gt.get(a, b) != Relation::r4) continue;
            Common1Kind k = r4_subcase(fx.afs, a, b);
            meets_both += k == Common1Kind::r4_line_meets_both;
            meets_separately += k == Common1Kind::r4_line_meets_separately;
        }
    CHECK(meets_both > 0);
    CHECK(meets_separately > 0);
    CHECK(meets_both + meets_separately == fx.gt.count(Relation::r4));
    // Asking for the subcase of a non-R4 pair is a programming error.
    bool found = false;
    for (AntiFlagId b = 1; b < fx.afs.size() && !found; ++b)
        if (fx.gt.get(0, b) == Relation::r1) {
            CHECK_THROWS_AS(r4_subcase(fx.afs, 0, b), std::invalid_argument);
            found = true;
        }
}

TEST_CASE("3-adjacency decision from the 2-relation graph, exhaustively") {
    Fixture fx(3, 2);
    for (AntiFlagId a = 0; a < fx.afs.size(); ++a)
        for (AntiFlagId b = a + 1; b < fx.afs.size(); ++b) {
            if (fx.g[1].adjacent(a, b)) continue;
            CHECK(decide_3adjacent_from_2(fx.g[1], a, b) ==
                  (fx.gt.get(a, b) == Relation::r3));
        }
}

TEST_CASE("coclique-based R3 recovery at q=4") {
    Fixture fx(3, 4);
    auto pairs = recover_3_from_1_cocliques(fx.g[0]);
    std::set<std::pair<AntiFlagId, AntiFlagId>> got(pairs.begin(), pairs.end());
    CHECK(got.size() == size_t(fx.gt.count(Relation::r3)));
    for (auto [a, b] : got) CHECK(fx.gt.get(a, b) == Relation::r3);
}
