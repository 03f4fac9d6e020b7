#include <doctest.h>

#include <stdexcept>

#include "antiflag/field.hpp"

using namespace antiflag;

namespace {
const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
}

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (int q : kOrders) {
        CAPTURE(q);
        Field f(q);
        REQUIRE(f.q() == q);
        for (GfElem a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (GfElem b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (GfElem c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (int q : kOrders) {
        CAPTURE(q);
        Field f(q);
        GfElem g = f.primitive_element();
        GfElem x = 1;
        for (int i = 1; i < q - 1; ++i) {
            x = f.mul(x, g);
            CHECK(x != 1);  // order is exactly q-1, no earlier return
        }
        CHECK(f.mul(x, g) == 1);
    }
}

TEST_CASE("frobenius is the p-th power map and an automorphism") {
    for (int q : kOrders) {
        CAPTURE(q);
        Field f(q);
        for (GfElem a = 0; a < q; ++a) {
            CHECK(f.frobenius(a) == f.pow(a, f.characteristic()));
            for (GfElem b = 0; b < q; ++b) {
                CHECK(f.frobenius(f.add(a, b)) ==
                      f.add(f.frobenius(a), f.frobenius(b)));
                CHECK(f.frobenius(f.mul(a, b)) ==
                      f.mul(f.frobenius(a), f.frobenius(b)));
            }
        }
    }
}

TEST_CASE("unsupported orders are rejected") {
    for (int q : {0, 1, 6, 10, 12, 15, 17, 1000}) {
        CAPTURE(q);
        CHECK(!is_supported_field_order(q));
        CHECK_THROWS_AS(Field{q}, std::invalid_argument);
    }
    CHECK_THROWS_AS(Field(3).inv(0), std::domain_error);
}

TEST_CASE("power map agrees with iterated multiplication") {
    Field f(9);
    for (GfElem a = 0; a < 9; ++a) {
        GfElem acc = 1;
        for (int e = 0; e < 12; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
    }
}
