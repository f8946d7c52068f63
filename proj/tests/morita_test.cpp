#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "finring/constructions.hpp"
#include "finring/morita.hpp"
#include "finring/predicates.hpp"

#include <vector>

using namespace finring;

TEST_CASE("bimodule validation") {
    RingPtr z2 = zmod(2);
    RingPtr z4 = zmod(4);

    CHECK_NOTHROW(trivial_bimodule(z2, z4));
    CHECK_NOTHROW(regular_bimodule(z4));
    CHECK_NOTHROW(cyclic_bimodule(z4, z4, 2));
    CHECK_NOTHROW(cyclic_bimodule(z2, z4, 2));

    // breaking unitality: left action by 1 is not the identity
    std::vector<idx> bad_lact = {0, 0, 0, 0};  // |Z2| x 2, all-zero
    std::vector<idx> ract = {0, 0, 0, 1};
    CHECK_THROWS_AS(validate_bimodule(2, {0, 1, 1, 0}, z2, z2, bad_lact, ract),
                    BimoduleAxiomViolation);
}

TEST_CASE("context validation catches a broken associativity link") {
    RingPtr z2 = zmod(2);
    Bimodule V = regular_bimodule(z2);
    Bimodule W = regular_bimodule(z2);
    // phi = 0 but psi = multiplication: phi(v,w)v' != v psi(w,v') at v=w=v'=1
    std::vector<idx> phi = {0, 0, 0, 0};
    std::vector<idx> psi = z2->mul_table();
    try {
        validate_context(z2, z2, V, W, phi, psi, "broken");
        FAIL("broken context was accepted");
    } catch (const ContextAxiomViolation& e) {
        CHECK(std::string(e.what()).find("link") != std::string::npos);
    }
    // both pairings multiplication: a valid context
    CHECK_NOTHROW(validate_context(z2, z2, V, W, z2->mul_table(), z2->mul_table(), "full"));
}

TEST_CASE("morita ring of the diagonal context is the product ring") {
    RingPtr r = zmod(4);
    RingPtr s = gf(2, 2);
    RingPtr t = morita_ring(diagonal_context(r, s));
    RingPtr p = product({r, s});
    CHECK(t->size() == p->size());
    CHECK(t->add_table() == p->add_table());
    CHECK(t->mul_table() == p->mul_table());
}

TEST_CASE("morita ring of the full multiplication context is the matrix ring") {
    RingPtr z2 = zmod(2);
    RingPtr t = morita_ring(matrix_context(z2));
    RingPtr m = matrix_ring(z2, 2);
    CHECK(t->add_table() == m->add_table());
    CHECK(t->mul_table() == m->mul_table());
    CHECK_FALSE(is_uj(t));

    RingPtr t4 = morita_ring(matrix_context(zmod(4)));
    RingPtr m4 = matrix_ring(zmod(4), 2);
    CHECK(t4->mul_table() == m4->mul_table());
}

TEST_CASE("morita ring with W = 0 is the generalized upper-triangular ring") {
    // same-diagonal case: identical tables to T_2(R) under the canonical indexing
    RingPtr z2 = zmod(2);
    RingPtr t = morita_ring(uppertri_context(z2));
    RingPtr tri = triangular_ring(z2, 2);
    CHECK(t->add_table() == tri->add_table());
    CHECK(t->mul_table() == tri->mul_table());
    CHECK(is_uj(t));

    // mixed-diagonal case: the multiplication obeys the triangular law
    RingPtr z4 = zmod(4);
    Bimodule V = cyclic_bimodule(z2, z4, 2);  // (Z2, Z4)-bimodule on Z/2
    Bimodule W = trivial_bimodule(z4, z2);
    MoritaContext ctx = validate_context(z2, z4, V, W, std::vector<idx>(V.size, 0),
                                         std::vector<idx>(V.size, 0), "gtri");
    RingPtr g = morita_ring(ctx);
    REQUIRE(g->size() == 16);
    auto enc = [&](idx r, idx v, idx s) { return r + 2 * (v + 2 * s); };
    for (idx r1 = 0; r1 < 2; ++r1)
        for (idx v1 = 0; v1 < 2; ++v1)
            for (idx s1 = 0; s1 < 4; ++s1)
                for (idx r2 = 0; r2 < 2; ++r2)
                    for (idx v2 = 0; v2 < 2; ++v2)
                        for (idx s2 = 0; s2 < 4; ++s2) {
                            idx got = g->mul(enc(r1, v1, s1), enc(r2, v2, s2));
                            idx want = enc(z2->mul(r1, r2),
                                           V.plus(V.lact(r1, v2), V.ract(v1, s2)),
                                           z4->mul(s1, s2));
                            CHECK(got == want);
                        }
    CHECK_NOTHROW(check_ring_axioms(*g));
}

TEST_CASE("morita rings satisfy the ring axioms") {
    for (const auto& ctx : {diagonal_context(zmod(2), zmod(4)), matrix_context(zmod(2)),
                            uppertri_context(gf(2, 2))})
        CHECK_NOTHROW(check_ring_axioms(*morita_ring(ctx)));
}

TEST_CASE("exhaustive pairing enumeration over R=S=V=W=F_2") {
    RingPtr z2 = zmod(2);
    Bimodule V = cyclic_bimodule(z2, z2, 2);
    Bimodule W = cyclic_bimodule(z2, z2, 2);
    auto found = enumerate_pairings(z2, z2, V, W, "allpairs(Z2,2)");
    // biadditivity forces phi(1,1) = c and the links force the two constants equal
    REQUIRE(found.size() == 2);
    CHECK(found[0].provenance == "allpairs(Z2,2)[phi=0,psi=0]");
    CHECK(found[1].provenance == "allpairs(Z2,2)[phi=8,psi=8]");
    // the nonzero pairing gives M_2(F_2)
    RingPtr t = morita_ring(found[1]);
    CHECK(t->mul_table() == matrix_ring(z2, 2)->mul_table());
    CHECK_FALSE(is_uj(t));
    CHECK(is_uj(morita_ring(found[0])));
}

TEST_CASE("exhaustive pairing enumeration over R=S=Z/4, V=W=Z/2") {
    RingPtr z4 = zmod(4);
    Bimodule V = cyclic_bimodule(z4, z4, 2);
    Bimodule W = cyclic_bimodule(z4, z4, 2);
    auto found = enumerate_pairings(z4, z4, V, W, "allpairs(Z4,2)");
    // phi(1,1) must kill 2, so it lies in {0,2}; the links impose nothing here
    REQUIRE(found.size() == 4);
    for (const auto& ctx : found) {
        RingPtr t = morita_ring(ctx);
        CHECK(t->size() == 64);
        CHECK(is_uj(t));
    }
}

TEST_CASE("pairing enumeration refuses unsearchable table spaces") {
    RingPtr z4 = zmod(4);
    Bimodule V = regular_bimodule(z4);  // 4^16 candidate tables per pairing
    Bimodule W = regular_bimodule(z4);
    CHECK_THROWS_AS(enumerate_pairings(z4, z4, V, W, "big"), CapExceeded);
}
