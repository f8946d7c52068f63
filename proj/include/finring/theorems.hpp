#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/morita.hpp"
#include "finring/predicates.hpp"
#include "finring/ring_ops.hpp"
#include "finring/specparse.hpp"

namespace finring {

enum class Verdict { Pass, Fail, Skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

/// Verdict plus a free-form note: the witness on fail, the reason on skip.
struct CheckResult {
    Verdict verdict = Verdict::Pass;
    std::string note;

    static CheckResult pass(std::string n = "") { return {Verdict::Pass, std::move(n)}; }
    static CheckResult fail(std::string n) { return {Verdict::Fail, std::move(n)}; }
    static CheckResult skip(std::string n) { return {Verdict::Skipped, std::move(n)}; }
};

/// prop-corners is exercised on every idempotent of rings up to this size.
inline constexpr idx kCornersSizeBound = 64;

/// Exhaustive isomorphism search threshold for check_morita item (3).
inline constexpr idx kIsoSearchBound = 16;

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

// -----------------------------------------------------------------------------
// Small-ring isomorphism search
// -----------------------------------------------------------------------------

namespace detail {

inline idx additive_order(const FiniteRing& r, idx x) {
    idx acc = x;
    for (idx k = 1; k <= r.size(); ++k) {
        if (acc == r.zero()) return k;
        acc = r.add(acc, x);
    }
    return -1;
}

/// Greedy additive generating set: repeatedly adjoin the smallest element
/// outside the current span.
inline std::vector<idx> additive_generators(const FiniteRing& r) {
    std::vector<std::uint8_t> in_span(r.size(), 0);
    in_span[r.zero()] = 1;
    std::vector<idx> span{r.zero()};
    std::vector<idx> gens;
    for (idx x = 0; x < r.size(); ++x) {
        if (in_span[x]) continue;
        gens.push_back(x);
        std::vector<idx> frontier{x};
        while (!frontier.empty()) {
            std::vector<idx> next;
            for (idx f : frontier)
                if (!in_span[f]) {
                    in_span[f] = 1;
                    span.push_back(f);
                    next.push_back(f);
                }
            std::vector<idx> grow;
            for (idx f : next)
                for (std::size_t i = 0; i < span.size(); ++i) {
                    idx s = r.add(f, span[i]);
                    if (!in_span[s]) grow.push_back(s);
                }
            frontier = std::move(grow);
        }
    }
    return gens;
}

/// Extend the partial additive hom determined by generator images to the whole
/// group; returns false on conflict.
inline bool propagate_hom(const FiniteRing& a, const FiniteRing& b,
                          const std::vector<idx>& gens, const std::vector<idx>& images,
                          std::vector<idx>& map) {
    map.assign(a.size(), -1);
    map[a.zero()] = b.zero();
    std::vector<idx> known{a.zero()};
    for (std::size_t i = 0; i < known.size(); ++i) {
        idx x = known[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
            idx nx = a.add(x, gens[g]);
            idx ny = b.add(map[x], images[g]);
            if (map[nx] < 0) {
                map[nx] = ny;
                known.push_back(nx);
            } else if (map[nx] != ny) {
                return false;
            }
        }
    }
    return known.size() == std::size_t(a.size());
}

inline bool try_iso_images(const FiniteRing& a, const FiniteRing& b,
                           const std::vector<idx>& gens, std::vector<idx>& images,
                           std::size_t depth) {
    if (depth == gens.size()) {
        std::vector<idx> map;
        if (!propagate_hom(a, b, gens, images, map)) return false;
        std::vector<std::uint8_t> hit(b.size(), 0);
        for (idx x = 0; x < a.size(); ++x) {
            if (hit[map[x]]) return false;
            hit[map[x]] = 1;
        }
        if (map[a.one()] != b.one()) return false;
        for (idx x = 0; x < a.size(); ++x)
            for (idx y = 0; y < a.size(); ++y)
                if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
        return true;
    }
    idx want = additive_order(a, gens[depth]);
    for (idx cand = 0; cand < b.size(); ++cand) {
        if (additive_order(b, cand) != want) continue;
        images[depth] = cand;
        if (try_iso_images(a, b, gens, images, depth + 1)) return true;
    }
    return false;
}

}  // namespace detail

/// Unit-preserving ring isomorphism test by exhaustive search over additive
/// generator images. Intended for small rings (the search is exponential in
/// the number of additive generators).
inline bool ring_isomorphic(const RingPtr& a, const RingPtr& b) {
    if (a->size() != b->size()) return false;
    if (a->is_zero_ring()) return true;
    auto gens = detail::additive_generators(*a);
    std::vector<idx> images(gens.size(), -1);
    return detail::try_iso_images(*a, *b, gens, images, 0);
}

// -----------------------------------------------------------------------------
// Theorem checks (one per finite-decidable statement)
// -----------------------------------------------------------------------------

/// The six characterization conditions must agree (all-true and all-false both
/// count as agreement).
inline CheckResult check_lemma_char(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    try {
        UJVerdict v = uj_all_ways(R);
        return CheckResult::pass(v.value() ? "uj=true" : "uj=false");
    } catch (const InternalInconsistency& e) {
        return CheckResult::fail(std::string("conditions disagree: ") + e.what());
    }
}

/// Basic consequences of UJ: 2 in J; division rings collapse to F_2; R/J
/// reduced and abelian; pair absorption; stability under quotients by ideals
/// inside J (sampled by closures of singletons and their pairwise sums);
/// products are UJ exactly when all factors are.
inline CheckResult check_basic(const RingPtr& R, long long cap = kDefaultCap,
                               const std::string& base_dir = "") {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    const bool uj = is_uj(R);
    if (uj) {
        if (!R->in_radical(R->add(R->one(), R->one())))
            return CheckResult::fail("item1: 2 not in J");
        CosetRing q = quotient(R, ElementSet(R, R->radical_elements(), SetRole::TwoSidedIdeal));
        if (!is_reduced(q.quotient)) return CheckResult::fail("item3: R/J not reduced");
        if (!is_abelian(q.quotient)) return CheckResult::fail("item3: R/J not abelian");
        for (idx x = 0; x < R->size(); ++x)
            for (idx y = 0; y < R->size(); ++y) {
                if (!R->in_radical(R->mul(x, y))) continue;
                if (!R->in_radical(R->mul(y, x)))
                    return CheckResult::fail("item4: yx escapes J at x=" + R->name(x) +
                                             ",y=" + R->name(y));
                for (idx t = 0; t < R->size(); ++t)
                    if (!R->in_radical(R->mul(R->mul(x, t), y)) ||
                        !R->in_radical(R->mul(R->mul(y, t), x)))
                        return CheckResult::fail("item4: xRy/yRx escape J at x=" + R->name(x) +
                                                 ",y=" + R->name(y) + ",t=" + R->name(t));
            }
    }
    // item 2: a division ring that is UJ must be F_2
    if (R->unit_elements().size() == std::size_t(R->size()) - 1) {
        if (uj != (R->size() == 2))
            return CheckResult::fail("item2: division ring of size " +
                                     std::to_string(R->size()));
    }
    // item 5: R UJ iff R/I UJ for ideals I inside J
    {
        std::set<std::vector<idx>> ideals;
        ideals.insert({R->zero()});
        std::vector<std::vector<idx>> singletons;
        for (idx j : R->radical_elements()) {
            auto gen = ideal_closure(R, {j}).members();
            if (ideals.insert(gen).second) singletons.push_back(gen);
        }
        std::vector<std::vector<idx>> pairs;
        for (std::size_t i = 0; i < singletons.size(); ++i)
            for (std::size_t j = i + 1; j < singletons.size(); ++j) {
                // the sum of two ideals is already an ideal
                std::vector<std::uint8_t> mask(R->size(), 0);
                for (idx x : singletons[i])
                    for (idx y : singletons[j]) mask[R->add(x, y)] = 1;
                std::vector<idx> sum;
                for (idx x = 0; x < R->size(); ++x)
                    if (mask[x]) sum.push_back(x);
                if (ideals.insert(sum).second) pairs.push_back(sum);
            }
        for (const auto& members : ideals) {
            CosetRing q = quotient(R, ElementSet(R, members, SetRole::TwoSidedIdeal));
            if (q.quotient->is_zero_ring()) continue;
            if (is_uj(q.quotient) != uj)
                return CheckResult::fail("item5: quotient by ideal of size " +
                                         std::to_string(members.size()) + " flips the verdict");
        }
    }
    // item 7: product rings
    {
        RingSpec s;
        bool parsed = false;
        try {
            s = parse_spec(R->provenance());
            parsed = true;
        } catch (const Error&) {
        }
        if (parsed && s.kind == RingSpec::Kind::Prod) {
            bool all = true;
            for (const auto& child : s.children) all = all && is_uj(elaborate(child, cap, base_dir));
            if (all != uj) return CheckResult::fail("item7: product verdict mismatch");
        }
        if (parsed && s.kind == RingSpec::Kind::Boolean && !uj)
            return CheckResult::fail("item7: Boolean product not UJ");
    }
    if (!uj) {
        // converse of item 1/3 has no content; record which side was exercised
        return CheckResult::pass("side=non-uj");
    }
    return CheckResult::pass("side=uj");
}

/// Finite rings are semilocal, so UJ is equivalent to R/J being Boolean
/// (a semisimple Boolean ring is a product of F_2's).
inline CheckResult check_semilocal(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    CosetRing q = quotient(R, ElementSet(R, R->radical_elements(), SetRole::TwoSidedIdeal));
    bool lhs = is_uj(R);
    bool rhs = is_boolean(q.quotient);
    if (lhs != rhs)
        return CheckResult::fail(std::string("uj=") + (lhs ? "true" : "false") +
                                 ",boolean-quotient=" + (rhs ? "true" : "false"));
    return CheckResult::pass(lhs ? "side=uj" : "side=non-uj");
}

/// Family form: Z/n is UJ exactly for powers of two, for all 2 <= n <= n_max.
inline CheckResult check_zn(long long n_max, long long cap = kDefaultCap) {
    for (long long n = 2; n <= n_max; ++n)
        if (is_uj(zmod(n, cap)) != is_power_of_two(n))
            return CheckResult::fail("n=" + std::to_string(n));
    return CheckResult::pass("n_max=" + std::to_string(n_max));
}

/// Per-ring form, applicable to Z<n> corpus entries.
inline CheckResult check_zn_single(const RingPtr& R) {
    RingSpec s;
    try {
        s = parse_spec(R->provenance());
    } catch (const Error&) {
        return CheckResult::skip("not a Z(n) entry");
    }
    if (s.kind != RingSpec::Kind::Zmod) return CheckResult::skip("not a Z(n) entry");
    bool expect = is_power_of_two(s.a);
    if (is_uj(R) != expect)
        return CheckResult::fail("n=" + std::to_string(s.a));
    return CheckResult::pass(expect ? "side=uj" : "side=non-uj");
}

/// Finite rings have nil J, so: UJ iff (UU and N(R) is an ideal).
inline CheckResult check_uu_nil(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    bool lhs = is_uj(R);
    bool nil_ideal = ideal_closure(R, R->nilpotent_elements()).members() == R->nilpotent_elements();
    bool rhs = is_uu(R) && nil_ideal;
    if (lhs != rhs)
        return CheckResult::fail(std::string("uj=") + (lhs ? "true" : "false") + ",uu=" +
                                 (is_uu(R) ? "true" : "false") + ",nil-ideal=" +
                                 (nil_ideal ? "true" : "false"));
    return CheckResult::pass(lhs ? "side=uj" : "side=non-uj");
}

/// The center of a UJ ring is UJ (U(Z) = U(R) n Z holds automatically for
/// the center of a finite ring).
inline CheckResult check_center(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    if (!is_uj(R)) return CheckResult::skip("inapplicable: not a UJ ring");
    Subring z = center(R);
    if (!is_uj(z.ring))
        return CheckResult::fail("center of size " + std::to_string(z.ring->size()) + " not UJ");
    return CheckResult::pass("center-size=" + std::to_string(z.ring->size()));
}

/// For every idempotent e: R is UJ iff both corners are UJ and both
/// off-corners lie in J. Zero-ring corners (e = 0 or 1) count as vacuously UJ.
inline CheckResult check_corners(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    if (R->size() > kCornersSizeBound)
        return CheckResult::skip("size-bounded (corner scan limited to " +
                                 std::to_string(kCornersSizeBound) + ")");
    const bool uj = is_uj(R);
    for (idx e : R->idempotent_elements()) {
        idx f = R->sub(R->one(), e);
        auto corner_uj = [&](idx g) {
            Subring c = corner(R, g);
            return c.ring->is_zero_ring() ? true : is_uj(c.ring);
        };
        bool off_in_j = true;
        for (idx r = 0; r < R->size() && off_in_j; ++r)
            off_in_j = R->in_radical(R->mul(R->mul(e, r), f)) &&
                       R->in_radical(R->mul(R->mul(f, r), e));
        bool rhs = corner_uj(e) && corner_uj(f) && off_in_j;
        if (rhs != uj)
            return CheckResult::fail("e=" + R->name(e) + ",corner-side=" +
                                     (rhs ? "true" : "false"));
    }
    return CheckResult::pass(uj ? "side=uj" : "side=non-uj");
}

/// UJ iff every clean element is J-clean (both directions live on the corpus:
/// non-UJ rings must exhibit a clean element that is not J-clean).
inline CheckResult check_jc(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    bool lhs = is_uj(R);
    bool rhs = true;
    idx witness = -1;
    for (idx r = 0; r < R->size() && rhs; ++r) {
        bool clean = false, jclean = false;
        for (idx e : R->idempotent_elements()) {
            idx t = R->sub(r, e);
            clean = clean || R->is_unit(t);
            jclean = jclean || R->in_radical(t);
        }
        if (clean && !jclean) {
            rhs = false;
            witness = r;
        }
    }
    if (lhs != rhs)
        return CheckResult::fail(std::string("uj=") + (lhs ? "true" : "false") +
                                 ",clean-but-not-jclean=" +
                                 (witness >= 0 ? R->name(witness) : "none"));
    return CheckResult::pass(lhs ? "side=uj" : "side=non-uj");
}

/// Four-way equivalence: clean UJ / R/J Boolean with lifting / J-clean UJ /
/// J-clean.
inline CheckResult check_clean_thm(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    ElementSet J(R, R->radical_elements(), SetRole::TwoSidedIdeal);
    CosetRing q = quotient(R, J);
    bool c1 = is_clean(R).holds && is_uj(R);
    bool c2 = is_boolean(q.quotient) && idempotents_lift(R, J, false);
    bool c3 = is_j_clean(R).holds && is_uj(R);
    bool c4 = is_j_clean(R).holds;
    if (c1 != c2 || c2 != c3 || c3 != c4)
        return CheckResult::fail("items=" + std::to_string(c1) + std::to_string(c2) +
                                 std::to_string(c3) + std::to_string(c4));
    return CheckResult::pass(c1 ? "side=uj" : "side=non-uj");
}

/// Six-way equivalence with nil J (automatic here). Items (4) and (5) use the
/// working definition of conjugate nil clean and are compared softly.
inline CheckResult check_nilclean_thm(const RingPtr& R) {
    if (R->is_zero_ring()) return CheckResult::skip("degenerate ring");
    ElementSet J(R, R->radical_elements(), SetRole::TwoSidedIdeal);
    CosetRing q = quotient(R, J);
    bool i1 = is_clean(R).holds && is_uj(R);
    bool i2 = is_boolean(q.quotient);
    bool i3 = is_nil_clean(R).holds && is_uj(R);
    bool i6 = is_boolean(q.quotient) && is_uu(R);
    if (i1 != i2 || i2 != i3 || i3 != i6)
        return CheckResult::fail("items=" + std::to_string(i1) + std::to_string(i2) +
                                 std::to_string(i3) + std::to_string(i6));
    bool conj = is_conjugate_nil_clean(R);
    bool i4 = conj && is_uj(R);
    bool nil_ideal = ideal_closure(R, R->nilpotent_elements()).members() == R->nilpotent_elements();
    bool i5 = conj && nil_ideal;
    std::string soft = std::string("working-definition:i4=") + (i4 ? "true" : "false") +
                       ",i5=" + (i5 ? "true" : "false") +
                       ",agree=" + ((i4 == i1 && i5 == i1) ? "yes" : "NO");
    return CheckResult::pass((i1 ? "side=uj " : "side=non-uj ") + soft);
}

/// Morita theorem: T UJ iff (R,S UJ and VW in J(R), WV in J(S)) iff
/// (R,S UJ and T/J(T) isomorphic to R/J(R) x S/J(S)). Also pins the radical
/// shape J(T) = (J(R), B; C, J(S)) with the two descriptions of B and C
/// agreeing.
inline CheckResult check_morita(const MoritaContext& ctx, long long cap = kDefaultCap) {
    if (ctx.R->is_zero_ring() || ctx.S->is_zero_ring())
        return CheckResult::skip("degenerate component ring");
    RingPtr T;
    try {
        T = morita_ring(ctx, cap);
    } catch (const CapExceeded&) {
        return CheckResult::skip("context exceeds cap");
    }

    const RingPtr& R = ctx.R;
    const RingPtr& S = ctx.S;
    // B = {v : vW in J(R)} = {v : Wv in J(S)}; C mirrored
    std::vector<idx> b_left, b_right, c_left, c_right;
    for (idx v = 0; v < ctx.V.size; ++v) {
        bool phi_in = true, psi_in = true;
        for (idx w = 0; w < ctx.W.size; ++w) {
            phi_in = phi_in && R->in_radical(ctx.pair_vw(v, w));
            psi_in = psi_in && S->in_radical(ctx.pair_wv(w, v));
        }
        if (phi_in) b_left.push_back(v);
        if (psi_in) b_right.push_back(v);
    }
    for (idx w = 0; w < ctx.W.size; ++w) {
        bool psi_in = true, phi_in = true;
        for (idx v = 0; v < ctx.V.size; ++v) {
            psi_in = psi_in && S->in_radical(ctx.pair_wv(w, v));
            phi_in = phi_in && R->in_radical(ctx.pair_vw(v, w));
        }
        if (psi_in) c_left.push_back(w);
        if (phi_in) c_right.push_back(w);
    }
    if (b_left != b_right) return CheckResult::fail("radical-shape: two descriptions of B differ");
    if (c_left != c_right) return CheckResult::fail("radical-shape: two descriptions of C differ");

    // J(T) must be exactly (J(R), B; C, J(S))
    {
        std::vector<idx> expected;
        const idx nr = R->size(), nv = ctx.V.size, nw = ctx.W.size;
        std::vector<std::uint8_t> bmask(nv, 0), cmask(nw, 0);
        for (idx v : b_left) bmask[v] = 1;
        for (idx w : c_left) cmask[w] = 1;
        for (idx s : S->radical_elements())
            for (idx w = 0; w < nw; ++w) {
                if (!cmask[w]) continue;
                for (idx v = 0; v < nv; ++v) {
                    if (!bmask[v]) continue;
                    for (idx r : R->radical_elements())
                        expected.push_back(r + nr * (v + nv * (w + nw * s)));
                }
            }
        std::sort(expected.begin(), expected.end());
        if (expected != T->radical_elements())
            return CheckResult::fail("radical-shape: J(T) differs from (J(R),B;C,J(S))");
    }

    bool e1 = is_uj(T);
    bool components_uj = is_uj(R) && is_uj(S);
    bool pair_in_j = b_left.size() == std::size_t(ctx.V.size) &&
                     c_left.size() == std::size_t(ctx.W.size);
    bool e2 = components_uj && pair_in_j;

    // item (3): T/J(T) isomorphic to R/J(R) x S/J(S)
    CosetRing qt = quotient(T, ElementSet(T, T->radical_elements(), SetRole::TwoSidedIdeal));
    CosetRing qr = quotient(R, ElementSet(R, R->radical_elements(), SetRole::TwoSidedIdeal));
    CosetRing qs = quotient(S, ElementSet(S, S->radical_elements(), SetRole::TwoSidedIdeal));
    RingPtr rhs = product({qr.quotient, qs.quotient}, cap);
    bool iso;
    std::string iso_mode;
    if (qt.quotient->size() <= kIsoSearchBound && rhs->size() <= kIsoSearchBound) {
        iso = ring_isomorphic(qt.quotient, rhs);
        iso_mode = "search";
    } else {
        // sound fallback for the semisimple quotients at hand
        iso = qt.quotient->size() == rhs->size() &&
              is_boolean(qt.quotient) == is_boolean(rhs) &&
              qt.quotient->idempotent_elements().size() == rhs->idempotent_elements().size() &&
              qt.quotient->unit_elements().size() == rhs->unit_elements().size();
        iso_mode = "fallback";
    }
    bool e3 = components_uj && iso;

    if (e1 != e2 || e2 != e3)
        return CheckResult::fail(std::string("equivalence: t-uj=") + (e1 ? "true" : "false") +
                                 ",pairings=" + (e2 ? "true" : "false") + ",quotient-iso=" +
                                 (e3 ? "true" : "false") + ",iso-mode=" + iso_mode);
    return CheckResult::pass(std::string(e1 ? "side=uj" : "side=non-uj") +
                             ",iso-mode=" + iso_mode);
}

// -----------------------------------------------------------------------------
// Check registry, corpus, and the scan ledger
// -----------------------------------------------------------------------------

struct TheoremCheck {
    enum class Kind { Ring, Context, PermanentSkip };
    std::string id;
    std::string title;
    Kind kind;
    std::function<CheckResult(const RingPtr&, long long, const std::string&)> run_ring;
};

inline const std::vector<TheoremCheck>& theorem_checks() {
    static const std::vector<TheoremCheck> checks = [] {
        std::vector<TheoremCheck> v;
        auto ring = [&](std::string id, std::string title,
                        std::function<CheckResult(const RingPtr&, long long, const std::string&)>
                            fn) { v.push_back({std::move(id), std::move(title),
                                               TheoremCheck::Kind::Ring, std::move(fn)}); };
        ring("lemma-char-uj", "six equivalent UJ conditions agree",
             [](const RingPtr& r, long long, const std::string&) { return check_lemma_char(r); });
        ring("prop-basic", "basic consequences of UJ",
             [](const RingPtr& r, long long cap, const std::string& dir) {
                 return check_basic(r, cap, dir);
             });
        ring("prop-semilocal", "UJ iff R/J is Boolean",
             [](const RingPtr& r, long long, const std::string&) { return check_semilocal(r); });
        ring("cor-zn", "Z/n is UJ iff n is a power of two",
             [](const RingPtr& r, long long, const std::string&) { return check_zn_single(r); });
        ring("rem-uu-nil", "UJ iff UU and N(R) is an ideal",
             [](const RingPtr& r, long long, const std::string&) { return check_uu_nil(r); });
        ring("prop-center", "the center of a UJ ring is UJ",
             [](const RingPtr& r, long long, const std::string&) { return check_center(r); });
        ring("prop-corners", "corner rings characterize UJ",
             [](const RingPtr& r, long long, const std::string&) { return check_corners(r); });
        ring("prop-jc", "UJ iff clean elements are J-clean",
             [](const RingPtr& r, long long, const std::string&) { return check_jc(r); });
        ring("thm-clean", "clean UJ four-way equivalence",
             [](const RingPtr& r, long long, const std::string&) { return check_clean_thm(r); });
        ring("thm-nilclean", "nil-clean six-way equivalence",
             [](const RingPtr& r, long long, const std::string&) {
                 return check_nilclean_thm(r);
             });
        v.push_back({"thm-morita", "Morita context UJ characterization",
                     TheoremCheck::Kind::Context, nullptr});
        auto skip = [&](std::string id, std::string title) {
            v.push_back({std::move(id), std::move(title), TheoremCheck::Kind::PermanentSkip,
                         nullptr});
        };
        skip("lemma-trivial-units", "U(R[X]) stays trivial over trivial-unit rings");
        skip("prop-2primal-poly", "polynomial rings over 2-primal UU rings are UJ");
        skip("prop-poly-necessary", "R[x] UJ forces R UJ with nil radical");
        skip("koethe", "UJ lifting to R[x] is equivalent to Koethe's problem");
        return v;
    }();
    return checks;
}

inline const TheoremCheck* find_check(const std::string& id) {
    for (const auto& c : theorem_checks())
        if (c.id == id) return &c;
    return nullptr;
}

/// One manifest entry: a ring spec or a `context:` line.
struct CorpusEntry {
    enum class Kind { Ring, Context };
    Kind kind;
    std::string text;  // canonical printed form
    RingSpec rspec;
    ContextSpec cspec;
    int line = 0;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::string base_dir;
    std::string path;
};

/// Manifest: one ring spec per line; `context: <ctxspec>` lines declare Morita
/// contexts; '#' starts a comment. Relative file paths resolve against the
/// manifest's directory.
inline Corpus load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest: " + path);
    Corpus corpus;
    corpus.path = path;
    corpus.base_dir = std::filesystem::path(path).parent_path().string();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        CorpusEntry entry;
        entry.line = lineno;
        try {
            if (line.rfind("context:", 0) == 0) {
                entry.kind = CorpusEntry::Kind::Context;
                entry.cspec = parse_context_spec(line.substr(8));
                entry.text = print_context_spec(entry.cspec);
            } else {
                entry.kind = CorpusEntry::Kind::Ring;
                entry.rspec = parse_spec(line);
                entry.text = print_spec(entry.rspec);
            }
        } catch (const SyntaxError& e) {
            throw FileFormatError(path, lineno, std::string("bad spec: ") + e.what());
        }
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

struct LedgerRow {
    std::string check_id;
    std::string spec;
    Verdict verdict;
    std::string note;
};

struct Ledger {
    std::vector<LedgerRow> rows;
    int rings = 0, uj_rings = 0, nonuj_rings = 0;
    int contexts = 0, uj_contexts = 0, nonuj_contexts = 0;
    int pass = 0, fail = 0, skipped = 0;

    std::string to_text() const {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << r.check_id << " " << r.spec << " " << to_string(r.verdict);
            if (!r.note.empty()) out << " " << r.note;
            out << "\n";
        }
        out << "# rings: " << rings << " uj: " << uj_rings << " non-uj: " << nonuj_rings << "\n";
        out << "# contexts: " << contexts << " uj-side: " << uj_contexts
            << " non-uj-side: " << nonuj_contexts << "\n";
        out << "# results: pass: " << pass << " fail: " << fail << " skipped: " << skipped
            << "\n";
        return out.str();
    }
};

struct ScanOptions {
    long long cap = kDefaultCap;
    std::string filter;  // run only the check with this id when nonempty
    int jobs = 1;
};

namespace detail {

struct EntryOutcome {
    std::vector<LedgerRow> rows;
    int rings = 0, uj_rings = 0;
    int contexts = 0, uj_contexts = 0;
};

inline EntryOutcome evaluate_entry(const CorpusEntry& entry, const std::string& base_dir,
                                   const ScanOptions& opt) {
    EntryOutcome out;
    auto wants = [&](const std::string& id) { return opt.filter.empty() || opt.filter == id; };
    if (entry.kind == CorpusEntry::Kind::Ring) {
        std::vector<const TheoremCheck*> matched;
        for (const auto& check : theorem_checks())
            if (check.kind == TheoremCheck::Kind::Ring && wants(check.id))
                matched.push_back(&check);
        if (matched.empty()) return out;
        RingPtr r = elaborate(entry.rspec, opt.cap, base_dir);
        out.rings = 1;
        out.uj_rings = (!r->is_zero_ring() && is_uj(r)) ? 1 : 0;
        for (const TheoremCheck* check : matched) {
            CheckResult res = check->run_ring(r, opt.cap, base_dir);
            out.rows.push_back({check->id, entry.text, res.verdict, res.note});
        }
    } else {
        if (!wants("thm-morita")) return out;
        for (const MoritaContext& ctx : elaborate_context(entry.cspec, opt.cap, base_dir)) {
            ++out.contexts;
            CheckResult res = check_morita(ctx, opt.cap);
            if (res.note.find("side=uj") != std::string::npos) ++out.uj_contexts;
            out.rows.push_back({"thm-morita", "context:" + ctx.provenance, res.verdict,
                                res.note});
        }
    }
    return out;
}

}  // namespace detail

/// Evaluate every (entry, check) pair. Entries may be evaluated in parallel;
/// the ledger is assembled in manifest order regardless, so its text is
/// byte-identical for any job count. Elaboration failures surface as manifest
/// errors tagged with the offending line.
inline Ledger run_corpus(const Corpus& corpus, const ScanOptions& opt = {}) {
    std::vector<detail::EntryOutcome> slots(corpus.entries.size());
    std::vector<std::string> errors(corpus.entries.size());
    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= corpus.entries.size()) break;
            try {
                slots[i] = detail::evaluate_entry(corpus.entries[i], corpus.base_dir, opt);
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < corpus.entries.size(); ++i)
        if (!errors[i].empty())
            throw FileFormatError(corpus.path, corpus.entries[i].line, errors[i]);

    Ledger ledger;
    for (const auto& slot : slots) {
        for (const auto& row : slot.rows) ledger.rows.push_back(row);
        ledger.rings += slot.rings;
        ledger.uj_rings += slot.uj_rings;
        ledger.nonuj_rings += slot.rings - slot.uj_rings;
        ledger.contexts += slot.contexts;
        ledger.uj_contexts += slot.uj_contexts;
        ledger.nonuj_contexts += slot.contexts - slot.uj_contexts;
    }
    // out-of-scope statements stay visible in every non-empty scan
    if (!corpus.entries.empty())
        for (const auto& check : theorem_checks()) {
            if (check.kind != TheoremCheck::Kind::PermanentSkip) continue;
            if (!opt.filter.empty() && opt.filter != check.id) continue;
            ledger.rows.push_back({check.id, "-", Verdict::Skipped, "infinite object"});
        }
    for (const auto& row : ledger.rows) {
        if (row.verdict == Verdict::Pass) ++ledger.pass;
        if (row.verdict == Verdict::Fail) ++ledger.fail;
        if (row.verdict == Verdict::Skipped) ++ledger.skipped;
    }
    return ledger;
}

}  // namespace finring
