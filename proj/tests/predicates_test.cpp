#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finring/constructions.hpp"
#include "finring/predicates.hpp"
#include "finring/ring_ops.hpp"

#include <vector>

using namespace finring;

TEST_CASE("uj_all_ways is unanimous and correct on both sides") {
    UJVerdict yes = uj_all_ways(zmod(8));
    CHECK(yes.agreed);
    CHECK(yes.value());
    for (bool c : yes.cond) CHECK(c);

    UJVerdict no = uj_all_ways(matrix_ring(zmod(2), 2));
    CHECK(no.agreed);
    CHECK_FALSE(no.value());
    for (bool c : no.cond) CHECK_FALSE(c);
    CHECK_FALSE(no.witness[5].empty());  // a unit pair whose sum escapes J

    UJVerdict f2 = uj_all_ways(gf(2, 1));
    CHECK(f2.value());

    CHECK_THROWS_AS(uj_all_ways(validate_ring(1, {0}, {0}, 0, 0)), DegenerateRing);
}

TEST_CASE("is_uj matches the all-ways verdict across a family") {
    for (const RingPtr& r :
         {zmod(8), zmod(6), gf(2, 2), gf(3, 1), triangular_ring(zmod(2), 2),
          matrix_ring(zmod(2), 2), product({zmod(2), zmod(2)}), group_algebra(zmod(2), cyclic_group(3))})
        CHECK(is_uj(r) == uj_all_ways(r).value());
}

TEST_CASE("is_uu") {
    CHECK(is_uu(zmod(8)));
    CHECK_FALSE(is_uu(gf(2, 2)));
    CHECK(is_uu(product({zmod(2), zmod(2), zmod(2)})));
}

TEST_CASE("boolean / reduced / abelian / local") {
    CHECK(is_boolean(product({zmod(2), zmod(2)})));
    CHECK_FALSE(is_boolean(zmod(4)));

    CHECK(is_reduced(gf(2, 2)));
    CHECK_FALSE(is_reduced(zmod(8)));

    CHECK(is_abelian(zmod(8)));
    CHECK_FALSE(is_abelian(triangular_ring(zmod(2), 2)));  // E11 is not central

    CHECK(is_local(zmod(8)));
    CHECK(is_local(zmod(4)));
    CHECK_FALSE(is_local(zmod(6)));
    CHECK(is_local(group_algebra(zmod(2), cyclic_group(2))));

    // the non-units-form-an-ideal route agrees with "R/J is a division ring"
    for (const RingPtr& r : {zmod(4), zmod(6), zmod(9), gf(2, 2), gf(3, 1),
                             triangular_ring(zmod(2), 2), matrix_ring(zmod(2), 2),
                             poly_quotient(zmod(3), {0, 0, 1})}) {
        CosetRing q = quotient(r, jacobson_radical(r));
        bool division_quotient =
            idx(q.quotient->unit_elements().size()) == q.quotient->size() - 1;
        CHECK(is_local(r) == division_quotient);
    }
}

TEST_CASE("decompositions") {
    RingPtr z8 = zmod(8);
    // 0 = 1 + (-1) is always a clean decomposition
    for (const RingPtr& r : {z8, gf(2, 2), triangular_ring(zmod(2), 2)}) {
        auto ds = decompositions(r, r->zero(), DecompKind::Clean);
        bool found = false;
        for (const auto& d : ds)
            found = found || (d.idempotent_part == r->one() && d.other_part == r->neg(r->one()));
        CHECK(found);
    }
    // 3 = 1 + 2 in Z/8 with 2 in J
    auto js = decompositions(z8, 3, DecompKind::JClean);
    REQUIRE(js.size() == 1);
    CHECK(js[0].idempotent_part == 1);
    CHECK(js[0].other_part == 2);

    // the GF(4) generator has no nil-clean decomposition
    RingPtr f4 = gf(2, 2);
    idx a = 2;
    REQUIRE(f4->name(a) == "a");
    CHECK(decompositions(f4, a, DecompKind::NilClean).empty());

    // deterministic order: ascending idempotent part
    auto cs = decompositions(z8, 1, DecompKind::Clean);
    for (std::size_t i = 1; i < cs.size(); ++i)
        CHECK(cs[i - 1].idempotent_part < cs[i].idempotent_part);
}

TEST_CASE("clean family verdicts") {
    CHECK(is_nil_clean(zmod(4)).holds);
    CHECK(is_clean(gf(2, 2)).holds);
    CHECK_FALSE(is_nil_clean(gf(2, 2)).holds);
    CHECK(is_nil_clean(gf(2, 2)).first_failing == 2);  // the generator a
    CHECK(is_nil_clean(matrix_ring(zmod(2), 2)).holds);
    CHECK(is_j_clean(zmod(8)).holds);
    CHECK_FALSE(is_j_clean(gf(3, 1)).holds);
}

TEST_CASE("every finite ring in the family is clean") {
    for (const RingPtr& r : {zmod(6), zmod(12), gf(3, 2), matrix_ring(zmod(2), 2),
                             triangular_ring(zmod(2), 2), group_algebra(zmod(2), cyclic_group(3))})
        CHECK(is_clean(r).holds);
}

TEST_CASE("uniquely nil clean") {
    CHECK(is_uniquely_nil_clean(zmod(4)));
    CHECK(is_uniquely_nil_clean(product({zmod(2), zmod(2)})));
    CHECK_FALSE(is_uniquely_nil_clean(matrix_ring(zmod(2), 2)));
}

TEST_CASE("conjugate nil clean under the working definition") {
    // uniquely nil clean rings are trivially conjugate nil clean
    for (const RingPtr& r : {zmod(4), zmod(8), product({zmod(2), zmod(2)})}) {
        REQUIRE(is_uniquely_nil_clean(r));
        CHECK(is_conjugate_nil_clean(r));
    }
    CHECK(is_conjugate_nil_clean(matrix_ring(zmod(2), 2)));
    CHECK_FALSE(is_conjugate_nil_clean(gf(2, 2)));
}

TEST_CASE("idempotent lifting") {
    RingPtr z4 = zmod(4);
    CHECK(idempotents_lift(z4, jacobson_radical(z4), false));
    CHECK(idempotents_lift(z4, jacobson_radical(z4), true));
    RingPtr z8 = zmod(8);
    CHECK(idempotents_lift(z8, jacobson_radical(z8), true));
    for (const RingPtr& r : {zmod(6), gf(2, 2), triangular_ring(zmod(2), 2)})
        CHECK(idempotents_lift(r, ElementSet(r, {r->zero()}, SetRole::TwoSidedIdeal), true));
}

TEST_CASE("predicates refuse the zero ring") {
    RingPtr z = validate_ring(1, {0}, {0}, 0, 0);
    CHECK_THROWS_AS(is_uu(z), DegenerateRing);
    CHECK_THROWS_AS(is_boolean(z), DegenerateRing);
    CHECK_THROWS_AS(is_local(z), DegenerateRing);
    CHECK_THROWS_AS(is_clean(z), DegenerateRing);
    CHECK_THROWS_AS(decompositions(z, 0, DecompKind::Clean), DegenerateRing);
}

TEST_CASE("J-clean elements yield clean decompositions via the reflection map") {
    // if -r = e + j then r = (1-e) + (-1-j): verified elementwise
    for (const RingPtr& r : {zmod(8), zmod(12), triangular_ring(zmod(2), 2), gf(2, 2)}) {
        for (idx x = 0; x < r->size(); ++x) {
            for (const auto& d : decompositions(r, r->neg(x), DecompKind::JClean)) {
                idx e = r->sub(r->one(), d.idempotent_part);
                idx u = r->sub(r->neg(r->one()), d.other_part);
                CHECK(r->is_idempotent(e));
                CHECK(r->is_unit(u));
                CHECK(r->add(e, u) == x);
            }
        }
    }
}

TEST_CASE("consequences of UJ: 2 in J, reduced abelian quotient, pair absorption") {
    for (const RingPtr& r : {zmod(8), triangular_ring(zmod(2), 2), zmod(16),
                             group_algebra(zmod(2), cyclic_group(2))}) {
        REQUIRE(is_uj(r));
        CHECK(r->in_radical(r->add(r->one(), r->one())));
        CosetRing q = quotient(r, jacobson_radical(r));
        CHECK(is_reduced(q.quotient));
        CHECK(is_abelian(q.quotient));
        for (idx x = 0; x < r->size(); ++x)
            for (idx y = 0; y < r->size(); ++y)
                if (r->in_radical(r->mul(x, y))) {
                    CHECK(r->in_radical(r->mul(y, x)));
                    for (idx t = 0; t < r->size(); ++t) {
                        CHECK(r->in_radical(r->mul(r->mul(x, t), y)));
                        CHECK(r->in_radical(r->mul(r->mul(y, t), x)));
                    }
                }
    }
}

TEST_CASE("in a UJ ring, clean and J-clean coincide elementwise") {
    for (const RingPtr& r : {zmod(8), triangular_ring(zmod(4), 2)}) {
        REQUIRE(is_uj(r));
        for (idx x = 0; x < r->size(); ++x) {
            bool clean = !decompositions(r, x, DecompKind::Clean).empty();
            bool jclean = !decompositions(r, x, DecompKind::JClean).empty();
            CHECK(clean == jclean);
        }
    }
}
