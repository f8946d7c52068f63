#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/ring.hpp"

namespace finring {

/// A finite (L,R)-bimodule given by explicit tables: an abelian group with a
/// left action of L and a right action of R. Sealed by validate_bimodule.
struct Bimodule {
    idx size = 0;
    std::vector<idx> add;  // size x size
    idx zero = 0;
    RingPtr left_ring;
    RingPtr right_ring;
    std::vector<idx> left_act;   // |L| x size
    std::vector<idx> right_act;  // size x |R|

    idx plus(idx v, idx w) const { return add[std::size_t(v) * size + w]; }
    idx lact(idx r, idx v) const { return left_act[std::size_t(r) * size + v]; }
    idx ract(idx v, idx s) const { return right_act[std::size_t(v) * right_ring->size() + s]; }
};

/// Exhaustively verify all bimodule axioms; throws BimoduleAxiomViolation
/// with a witness description.
inline Bimodule validate_bimodule(idx size, std::vector<idx> add, RingPtr left, RingPtr right,
                                  std::vector<idx> left_act, std::vector<idx> right_act) {
    auto fail = [](const std::string& what) -> void { throw BimoduleAxiomViolation(what); };
    if (size <= 0) fail("carrier must be nonempty");
    if (add.size() != std::size_t(size) * size) fail("add table is not n x n");
    for (idx v : add)
        if (v < 0 || v >= size) fail("add entry out of range");
    if (left_act.size() != std::size_t(left->size()) * size) fail("left action table shape");
    if (right_act.size() != std::size_t(size) * right->size()) fail("right action table shape");
    for (idx v : left_act)
        if (v < 0 || v >= size) fail("left action entry out of range");
    for (idx v : right_act)
        if (v < 0 || v >= size) fail("right action entry out of range");

    auto A = [&](idx a, idx b) { return add[std::size_t(a) * size + b]; };
    for (idx a = 0; a < size; ++a)
        for (idx b = 0; b < size; ++b) {
            if (A(a, b) != A(b, a)) fail("addition not commutative");
            for (idx c = 0; c < size; ++c)
                if (A(A(a, b), c) != A(a, A(b, c))) fail("addition not associative");
        }
    idx zero = -1;
    for (idx e = 0; e < size && zero < 0; ++e) {
        bool ok = true;
        for (idx a = 0; a < size && ok; ++a) ok = A(e, a) == a;
        if (ok) zero = e;
    }
    if (zero < 0) fail("no additive identity");
    for (idx a = 0; a < size; ++a) {
        bool found = false;
        for (idx b = 0; b < size && !found; ++b) found = A(a, b) == zero;
        if (!found) fail("element without additive inverse");
    }

    Bimodule V{size, std::move(add), zero, left, right, std::move(left_act),
               std::move(right_act)};
    const FiniteRing& L = *left;
    const FiniteRing& R = *right;
    for (idx v = 0; v < size; ++v) {
        if (V.lact(L.one(), v) != v) fail("1*v != v");
        if (V.ract(v, R.one()) != v) fail("v*1 != v");
    }
    for (idx r = 0; r < L.size(); ++r)
        for (idx v = 0; v < size; ++v) {
            for (idx v2 = 0; v2 < size; ++v2)
                if (V.lact(r, V.plus(v, v2)) != V.plus(V.lact(r, v), V.lact(r, v2)))
                    fail("r(v+v') != rv+rv'");
            for (idx r2 = 0; r2 < L.size(); ++r2) {
                if (V.lact(L.add(r, r2), v) != V.plus(V.lact(r, v), V.lact(r2, v)))
                    fail("(r+r')v != rv+r'v");
                if (V.lact(L.mul(r, r2), v) != V.lact(r, V.lact(r2, v)))
                    fail("(rr')v != r(r'v)");
            }
        }
    for (idx s = 0; s < R.size(); ++s)
        for (idx v = 0; v < size; ++v) {
            for (idx v2 = 0; v2 < size; ++v2)
                if (V.ract(V.plus(v, v2), s) != V.plus(V.ract(v, s), V.ract(v2, s)))
                    fail("(v+v')s != vs+v's");
            for (idx s2 = 0; s2 < R.size(); ++s2) {
                if (V.ract(v, R.add(s, s2)) != V.plus(V.ract(v, s), V.ract(v, s2)))
                    fail("v(s+s') != vs+vs'");
                if (V.ract(v, R.mul(s, s2)) != V.ract(V.ract(v, s), s2))
                    fail("v(ss') != (vs)s'");
            }
        }
    for (idx r = 0; r < L.size(); ++r)
        for (idx v = 0; v < size; ++v)
            for (idx s = 0; s < R.size(); ++s)
                if (V.ract(V.lact(r, v), s) != V.lact(r, V.ract(v, s))) fail("(rv)s != r(vs)");
    return V;
}

/// Morita context (R, V, W, S, phi, psi): V an (R,S)-bimodule, W an
/// (S,R)-bimodule, with pairings phi : V x W -> R and psi : W x V -> S
/// satisfying the balancing and associativity-link axioms. Sealed by
/// validate_context.
struct MoritaContext {
    RingPtr R, S;
    Bimodule V;  // (R,S)
    Bimodule W;  // (S,R)
    std::vector<idx> phi;  // |V| x |W| -> R
    std::vector<idx> psi;  // |W| x |V| -> S
    std::string provenance;

    idx pair_vw(idx v, idx w) const { return phi[std::size_t(v) * W.size + w]; }
    idx pair_wv(idx w, idx v) const { return psi[std::size_t(w) * V.size + v]; }
};

inline MoritaContext validate_context(RingPtr R, RingPtr S, Bimodule V, Bimodule W,
                                      std::vector<idx> phi, std::vector<idx> psi,
                                      std::string provenance) {
    auto fail = [](const std::string& what) -> void { throw ContextAxiomViolation(what); };
    if (V.left_ring.get() != R.get() || V.right_ring.get() != S.get())
        fail("V is not an (R,S)-bimodule");
    if (W.left_ring.get() != S.get() || W.right_ring.get() != R.get())
        fail("W is not an (S,R)-bimodule");
    if (phi.size() != std::size_t(V.size) * W.size) fail("phi table shape");
    if (psi.size() != std::size_t(W.size) * V.size) fail("psi table shape");
    for (idx v : phi)
        if (v < 0 || v >= R->size()) fail("phi entry out of range");
    for (idx v : psi)
        if (v < 0 || v >= S->size()) fail("psi entry out of range");

    MoritaContext ctx{std::move(R), std::move(S), std::move(V), std::move(W), std::move(phi),
                      std::move(psi), std::move(provenance)};
    const FiniteRing& Rr = *ctx.R;
    const FiniteRing& Ss = *ctx.S;
    const Bimodule& Vv = ctx.V;
    const Bimodule& Ww = ctx.W;

    for (idx v = 0; v < Vv.size; ++v)
        for (idx v2 = 0; v2 < Vv.size; ++v2)
            for (idx w = 0; w < Ww.size; ++w)
                if (ctx.pair_vw(Vv.plus(v, v2), w) != Rr.add(ctx.pair_vw(v, w), ctx.pair_vw(v2, w)))
                    fail("phi not additive in the first slot");
    for (idx v = 0; v < Vv.size; ++v)
        for (idx w = 0; w < Ww.size; ++w)
            for (idx w2 = 0; w2 < Ww.size; ++w2)
                if (ctx.pair_vw(v, Ww.plus(w, w2)) != Rr.add(ctx.pair_vw(v, w), ctx.pair_vw(v, w2)))
                    fail("phi not additive in the second slot");
    for (idx w = 0; w < Ww.size; ++w)
        for (idx w2 = 0; w2 < Ww.size; ++w2)
            for (idx v = 0; v < Vv.size; ++v)
                if (ctx.pair_wv(Ww.plus(w, w2), v) != Ss.add(ctx.pair_wv(w, v), ctx.pair_wv(w2, v)))
                    fail("psi not additive in the first slot");
    for (idx w = 0; w < Ww.size; ++w)
        for (idx v = 0; v < Vv.size; ++v)
            for (idx v2 = 0; v2 < Vv.size; ++v2)
                if (ctx.pair_wv(w, Vv.plus(v, v2)) != Ss.add(ctx.pair_wv(w, v), ctx.pair_wv(w, v2)))
                    fail("psi not additive in the second slot");

    for (idx v = 0; v < Vv.size; ++v)
        for (idx s = 0; s < Ss.size(); ++s)
            for (idx w = 0; w < Ww.size; ++w)
                if (ctx.pair_vw(Vv.ract(v, s), w) != ctx.pair_vw(v, Ww.lact(s, w)))
                    fail("phi not S-balanced: phi(vs,w) != phi(v,sw)");
    for (idx r = 0; r < Rr.size(); ++r)
        for (idx v = 0; v < Vv.size; ++v)
            for (idx w = 0; w < Ww.size; ++w) {
                if (ctx.pair_vw(Vv.lact(r, v), w) != Rr.mul(r, ctx.pair_vw(v, w)))
                    fail("phi not left R-linear: phi(rv,w) != r*phi(v,w)");
                if (ctx.pair_vw(v, Ww.ract(w, r)) != Rr.mul(ctx.pair_vw(v, w), r))
                    fail("phi not right R-linear: phi(v,wr) != phi(v,w)*r");
            }
    for (idx w = 0; w < Ww.size; ++w)
        for (idx r = 0; r < Rr.size(); ++r)
            for (idx v = 0; v < Vv.size; ++v)
                if (ctx.pair_wv(Ww.ract(w, r), v) != ctx.pair_wv(w, Vv.lact(r, v)))
                    fail("psi not R-balanced: psi(wr,v) != psi(w,rv)");
    for (idx s = 0; s < Ss.size(); ++s)
        for (idx w = 0; w < Ww.size; ++w)
            for (idx v = 0; v < Vv.size; ++v) {
                if (ctx.pair_wv(Ww.lact(s, w), v) != Ss.mul(s, ctx.pair_wv(w, v)))
                    fail("psi not left S-linear: psi(sw,v) != s*psi(w,v)");
                if (ctx.pair_wv(w, Vv.ract(v, s)) != Ss.mul(ctx.pair_wv(w, v), s))
                    fail("psi not right S-linear: psi(w,vs) != psi(w,v)*s");
            }

    // associativity links
    for (idx v = 0; v < Vv.size; ++v)
        for (idx w = 0; w < Ww.size; ++w)
            for (idx v2 = 0; v2 < Vv.size; ++v2)
                if (Vv.lact(ctx.pair_vw(v, w), v2) != Vv.ract(v, ctx.pair_wv(w, v2)))
                    fail("link fails: phi(v,w)v' != v psi(w,v') at v=" + std::to_string(v) +
                         ",w=" + std::to_string(w) + ",v'=" + std::to_string(v2));
    for (idx w = 0; w < Ww.size; ++w)
        for (idx v = 0; v < Vv.size; ++v)
            for (idx w2 = 0; w2 < Ww.size; ++w2)
                if (Ww.lact(ctx.pair_wv(w, v), w2) != Ww.ract(w, ctx.pair_vw(v, w2)))
                    fail("link fails: psi(w,v)w' != w phi(v,w') at w=" + std::to_string(w) +
                         ",v=" + std::to_string(v) + ",w'=" + std::to_string(w2));
    return ctx;
}

/// The generalized matrix ring T = (R V; W S) on 4-tuples (r,v,w,s).
/// Index encoding: r + |R|(v + |V|(w + |W| s)).
inline RingPtr morita_ring(const MoritaContext& ctx, long long cap = kDefaultCap) {
    const idx nr = ctx.R->size(), nv = ctx.V.size, nw = ctx.W.size, ns = ctx.S->size();
    long long size = 1LL * nr * nv * nw * ns;
    detail::require_cap(size, cap, "morita(" + ctx.provenance + ")");
    const idx m = idx(size);
    auto decode = [&](idx x) {
        idx r = x % nr;
        x /= nr;
        idx v = x % nv;
        x /= nv;
        idx w = x % nw;
        x /= nw;
        return std::array<idx, 4>{r, v, w, x};
    };
    auto encode = [&](idx r, idx v, idx w, idx s) { return r + nr * (v + nv * (w + nw * s)); };
    std::vector<std::array<idx, 4>> parts(m);
    for (idx x = 0; x < m; ++x) parts[x] = decode(x);
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b) {
            const auto& [r1, v1, w1, s1] = parts[a];
            const auto& [r2, v2, w2, s2] = parts[b];
            add[std::size_t(a) * m + b] =
                encode(ctx.R->add(r1, r2), ctx.V.plus(v1, v2), ctx.W.plus(w1, w2),
                       ctx.S->add(s1, s2));
            idx pr = ctx.R->add(ctx.R->mul(r1, r2), ctx.pair_vw(v1, w2));
            idx pv = ctx.V.plus(ctx.V.lact(r1, v2), ctx.V.ract(v1, s2));
            idx pw = ctx.W.plus(ctx.W.ract(w1, r2), ctx.W.lact(s1, w2));
            idx ps = ctx.S->add(ctx.pair_wv(w1, v2), ctx.S->mul(s1, s2));
            mul[std::size_t(a) * m + b] = encode(pr, pv, pw, ps);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx x = 0; x < m; ++x) {
        const auto& [r, v, w, s] = parts[x];
        names.push_back("[" + ctx.R->name(r) + "," + std::to_string(v) + ";" + std::to_string(w) +
                        "," + ctx.S->name(s) + "]");
    }
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul),
                                    encode(ctx.R->zero(), ctx.V.zero, ctx.W.zero, ctx.S->zero()),
                                    encode(ctx.R->one(), ctx.V.zero, ctx.W.zero, ctx.S->one()),
                                    std::move(names), "morita(" + ctx.provenance + ")");
}

// Ready-made bimodules and contexts -----------------------------------------

/// The zero (L,R)-bimodule.
inline Bimodule trivial_bimodule(const RingPtr& L, const RingPtr& R) {
    return validate_bimodule(1, {0}, L, R, std::vector<idx>(L->size(), 0),
                             std::vector<idx>(R->size(), 0));
}

/// R as an (R,R)-bimodule with multiplication as both actions.
inline Bimodule regular_bimodule(const RingPtr& R) {
    return validate_bimodule(R->size(), R->add_table(), R, R, R->mul_table(), R->mul_table());
}

/// Z/k as a bimodule over two zmod rings whose moduli k divides; the actions
/// are the canonical ones (r*v mod k). Axioms are still verified exhaustively.
inline Bimodule cyclic_bimodule(const RingPtr& L, const RingPtr& R, idx k) {
    if (k < 1) throw BimoduleAxiomViolation("cyclic bimodule order must be positive");
    std::vector<idx> add(std::size_t(k) * k);
    for (idx a = 0; a < k; ++a)
        for (idx b = 0; b < k; ++b) add[std::size_t(a) * k + b] = idx((a + b) % k);
    std::vector<idx> lact(std::size_t(L->size()) * k), ract(std::size_t(k) * R->size());
    for (idx r = 0; r < L->size(); ++r)
        for (idx v = 0; v < k; ++v) lact[std::size_t(r) * k + v] = idx((1LL * r * v) % k);
    for (idx v = 0; v < k; ++v)
        for (idx s = 0; s < R->size(); ++s)
            ract[std::size_t(v) * R->size() + s] = idx((1LL * v * s) % k);
    return validate_bimodule(k, std::move(add), L, R, std::move(lact), std::move(ract));
}

/// V = W = 0: T is isomorphic to R x S.
inline MoritaContext diagonal_context(const RingPtr& R, const RingPtr& S) {
    Bimodule V = trivial_bimodule(R, S);
    Bimodule W = trivial_bimodule(S, R);
    return validate_context(R, S, std::move(V), std::move(W), {R->zero()}, {S->zero()},
                            "diagonal(" + R->provenance() + "," + S->provenance() + ")");
}

/// R = S = V = W with multiplication as actions and pairings: T = M_2(R).
inline MoritaContext matrix_context(const RingPtr& R) {
    Bimodule V = regular_bimodule(R);
    Bimodule W = regular_bimodule(R);
    return validate_context(R, R, std::move(V), std::move(W), R->mul_table(), R->mul_table(),
                            "matrix(" + R->provenance() + ")");
}

/// V = R, W = 0: T = T_2(R).
inline MoritaContext uppertri_context(const RingPtr& R) {
    Bimodule V = regular_bimodule(R);
    Bimodule W = trivial_bimodule(R, R);
    return validate_context(R, R, std::move(V), std::move(W),
                            std::vector<idx>(R->size(), R->zero()),
                            std::vector<idx>(R->size(), R->zero()),
                            "uppertri(" + R->provenance() + ")");
}

/// All valid contexts over fixed (R, S, V, W) obtained by exhaustively
/// enumerating every pair of raw pairing tables and keeping those that pass
/// validate_context. Order is lexicographic in the flattened (phi, psi)
/// encodings, so the result is deterministic.
inline std::vector<MoritaContext> enumerate_pairings(const RingPtr& R, const RingPtr& S,
                                                     const Bimodule& V, const Bimodule& W,
                                                     const std::string& label,
                                                     long long limit = 1 << 22) {
    auto table_count = [](long long base, long long cells) -> long long {
        long long total = 1;
        for (long long i = 0; i < cells; ++i) {
            if (total > (1LL << 40) / base) return 1LL << 40;
            total *= base;
        }
        return total;
    };
    const long long phis = table_count(R->size(), 1LL * V.size * W.size);
    const long long psis = table_count(S->size(), 1LL * W.size * V.size);
    if (phis > limit || psis > limit || phis > limit / psis)
        throw CapExceeded("enumerate_pairings: " + std::to_string(phis) + "*" +
                          std::to_string(psis) + " candidate pairings exceed the search limit");
    auto decode_table = [](long long enc, idx base, std::size_t cells) {
        std::vector<idx> t(cells);
        for (std::size_t i = 0; i < cells; ++i) {
            t[i] = idx(enc % base);
            enc /= base;
        }
        return t;
    };
    std::vector<MoritaContext> found;
    for (long long pe = 0; pe < phis; ++pe)
        for (long long qe = 0; qe < psis; ++qe) {
            auto phi = decode_table(pe, R->size(), std::size_t(V.size) * W.size);
            auto psi = decode_table(qe, S->size(), std::size_t(W.size) * V.size);
            try {
                found.push_back(validate_context(R, S, V, W, std::move(phi), std::move(psi),
                                                 label + "[phi=" + std::to_string(pe) +
                                                     ",psi=" + std::to_string(qe) + "]"));
            } catch (const ContextAxiomViolation&) {
            }
        }
    return found;
}

}  // namespace finring
