#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finring/constructions.hpp"
#include "finring/predicates.hpp"
#include "finring/ring_ops.hpp"

#include <vector>

using namespace finring;

TEST_CASE("zmod") {
    RingPtr z2 = zmod(2);
    CHECK(z2->size() == 2);
    CHECK(z2->unit_elements() == std::vector<idx>{1});

    RingPtr z8 = zmod(8);
    CHECK(z8->unit_elements() == std::vector<idx>{1, 3, 5, 7});
    CHECK(z8->radical_elements() == std::vector<idx>{0, 2, 4, 6});

    RingPtr z6 = zmod(6);
    CHECK(z6->unit_elements() == std::vector<idx>{1, 5});
    CHECK(z6->radical_elements() == std::vector<idx>{0});

    CHECK_THROWS_AS(zmod(5000), CapExceeded);
    CHECK_THROWS_AS(zmod(1), DegenerateRing);
    CHECK(zmod(5000, 8192)->size() == 5000);
}

TEST_CASE("gf") {
    RingPtr f2 = gf(2, 1);
    CHECK(f2->size() == 2);
    CHECK(f2->add_table() == zmod(2)->add_table());

    RingPtr f4 = gf(2, 2);
    CHECK(f4->size() == 4);
    CHECK(f4->unit_elements().size() == 3);
    CHECK(f4->radical_elements() == std::vector<idx>{0});
    CHECK(f4->name(2) == "a");
    CHECK(f4->name(3) == "a+1");

    RingPtr f3 = gf(3, 1);
    CHECK(f3->unit_elements() == std::vector<idx>{1, 2});
    CHECK_FALSE(is_uj(f3));

    CHECK_THROWS_AS(gf(4, 1), NotPrime);
    CHECK_THROWS_AS(gf(2, 13), CapExceeded);
}

TEST_CASE("product") {
    RingPtr b2 = product({zmod(2), zmod(2)});
    CHECK(b2->size() == 4);
    CHECK(is_boolean(b2));
    CHECK(b2->unit_elements().size() == 1);
    CHECK(b2->name(3) == "(1,1)");

    RingPtr r = zmod(6);
    CHECK(product({r}).get() == r.get());

    RingPtr p = product({zmod(4), zmod(2)});
    CHECK(p->size() == 8);
    CHECK(is_uj(p));

    CHECK_THROWS_AS(product({zmod(100), zmod(100)}), CapExceeded);
}

TEST_CASE("matrix_ring") {
    RingPtr f2 = zmod(2);
    CHECK(matrix_ring(f2, 1).get() == f2.get());

    RingPtr m = matrix_ring(f2, 2);
    CHECK(m->size() == 16);
    CHECK(m->unit_elements().size() == 6);
    CHECK(m->radical_elements() == std::vector<idx>{0});
    CHECK_FALSE(is_uj(m));

    RingPtr m4 = matrix_ring(zmod(4), 2);
    CHECK(m4->size() == 256);
    CHECK_FALSE(is_uj(m4));

    CHECK_THROWS_AS(matrix_ring(zmod(4), 3), CapExceeded);
}

TEST_CASE("triangular_ring") {
    RingPtr t = triangular_ring(zmod(2), 2);
    CHECK(t->size() == 8);
    CHECK(is_uj(t));
    CHECK(t->unit_elements().size() == 2);

    RingPtr r = zmod(6);
    CHECK(triangular_ring(r, 1).get() == r.get());

    RingPtr t4 = triangular_ring(zmod(4), 2);
    CHECK(t4->size() == 64);
    CHECK(is_uj(t4));
}

TEST_CASE("poly_quotient") {
    RingPtr q = poly_quotient(zmod(2), {0, 0, 1});  // F2[x]/(x^2)
    CHECK(q->size() == 4);
    CHECK(q->radical_elements() == std::vector<idx>{0, 2});
    CHECK(q->name(2) == "x");
    CHECK(is_uj(q));

    RingPtr lin = poly_quotient(zmod(2), {0, 1});  // degree-1 quotient collapses to F2
    CHECK(lin->size() == 2);
    CHECK(lin->mul_table() == zmod(2)->mul_table());

    RingPtr f4 = poly_quotient(zmod(2), {1, 1, 1});
    CHECK(f4->add_table() == gf(2, 2)->add_table());
    CHECK(f4->mul_table() == gf(2, 2)->mul_table());

    CHECK_THROWS_AS(poly_quotient(triangular_ring(zmod(2), 2), {0, 0, 1}), NotCommutative);
    CHECK_THROWS_AS(poly_quotient(zmod(4), {0, 0, 2}), NotMonic);
    CHECK_THROWS_AS(poly_quotient(zmod(4), {0, 0, 0, 0, 0, 0, 0, 1}), CapExceeded);
}

TEST_CASE("group_algebra") {
    RingPtr fc2 = group_algebra(zmod(2), cyclic_group(2));
    CHECK(fc2->size() == 4);
    CHECK(fc2->radical_elements() == std::vector<idx>{0, 3});
    CHECK(fc2->name(3) == "1+g");
    CHECK(is_uj(fc2));
    CHECK(is_local(fc2));

    RingPtr triv = group_algebra(zmod(2), cyclic_group(1));
    CHECK(triv->size() == 2);
    CHECK(triv->mul_table() == zmod(2)->mul_table());

    RingPtr fc3 = group_algebra(zmod(2), cyclic_group(3));
    CHECK(fc3->size() == 8);
    CHECK(fc3->unit_elements().size() == 3);
    CHECK_FALSE(is_uj(fc3));

    // a table with a row that is not a permutation is not a group
    CHECK_THROWS_AS(validate_group(2, {0, 0, 0, 0}, {}, "bad"), NotAGroup);
    CHECK_THROWS_AS(group_algebra(zmod(4), cyclic_group(8)), CapExceeded);
}

TEST_CASE("construction outputs satisfy the full ring axiom suite") {
    std::vector<RingPtr> family = {
        zmod(2),
        zmod(12),
        gf(2, 3),
        gf(3, 2),
        product({zmod(2), zmod(4)}),
        matrix_ring(zmod(2), 2),
        matrix_ring(zmod(3), 2),
        triangular_ring(zmod(2), 3),
        triangular_ring(zmod(4), 2),
        poly_quotient(zmod(4), {0, 0, 1}),
        poly_quotient(zmod(2), {1, 1, 1}),
        group_algebra(zmod(2), cyclic_group(4)),
        group_algebra(zmod(3), cyclic_group(2)),
    };
    for (const RingPtr& r : family) {
        CAPTURE(r->provenance());
        CHECK_NOTHROW(check_ring_axioms(*r));
    }
}

TEST_CASE("sizes multiply exactly as declared") {
    CHECK(product({zmod(3), zmod(5), zmod(7)})->size() == 105);
    CHECK(matrix_ring(zmod(3), 2)->size() == 81);
    CHECK(triangular_ring(zmod(3), 2)->size() == 27);
    CHECK(group_algebra(zmod(3), cyclic_group(2))->size() == 9);
    CHECK(poly_quotient(zmod(5), {0, 0, 1})->size() == 25);
}

TEST_CASE("full matrix rings with k >= 2 are never UJ") {
    for (const RingPtr& base : {zmod(2), zmod(3), zmod(4), gf(2, 2)})
        CHECK_FALSE(is_uj(matrix_ring(base, 2)));
    CHECK_FALSE(is_uj(matrix_ring(zmod(2), 3)));
}

TEST_CASE("T_n and truncated polynomial rings preserve UJ") {
    for (const RingPtr& base : {zmod(2), zmod(4), product({zmod(2), zmod(2)})}) {
        REQUIRE(is_uj(base));
        for (int n : {2, 3}) {
            RingPtr t = triangular_ring(base, n, 1 << 20);
            CHECK(is_uj(t));
            std::vector<idx> f(n + 1, base->zero());
            f[n] = base->one();
            RingPtr q = poly_quotient(base, f, 1 << 20);
            CHECK(is_uj(q));
        }
    }
}
