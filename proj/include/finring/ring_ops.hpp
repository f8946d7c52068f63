#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// U(R) as a role-tagged set. The inverse map is available on the ring itself.
inline ElementSet units(const RingPtr& R) {
    return ElementSet(R, R->unit_elements(), SetRole::UnitSet);
}

/// C(R), the invertible elements of the circle monoid x o y = x + y - xy.
/// Sealing already asserted C(R) = 1 - U(R) pointwise.
inline ElementSet quasi_regular_set(const RingPtr& R) {
    return ElementSet(R, R->quasi_regular_elements(), SetRole::Subset);
}

inline ElementSet nilpotents(const RingPtr& R) {
    return ElementSet(R, R->nilpotent_elements(), SetRole::Subset);
}

inline ElementSet idempotents(const RingPtr& R) {
    return ElementSet(R, R->idempotent_elements(), SetRole::Subset);
}

/// Least two-sided ideal containing seed: fixed-point closure under addition,
/// negation and multiplication by arbitrary ring elements. Each pass closes
/// the R*x*R orbit first, then the additive span, until stable.
inline ElementSet ideal_closure(const RingPtr& R, const std::vector<idx>& seed) {
    const idx n = R->size();
    std::vector<std::uint8_t> mask(n, 0);
    std::vector<idx> pool;
    mask[R->zero()] = 1;
    pool.push_back(R->zero());
    for (idx s : seed) {
        if (s < 0 || s >= n) throw Error("ideal_closure: seed element out of range");
        if (!mask[s]) {
            mask[s] = 1;
            pool.push_back(s);
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        // multiplicative absorption
        for (std::size_t i = 0; i < pool.size(); ++i) {
            idx x = pool[i];
            for (idx r = 0; r < n; ++r) {
                idx l = R->mul(r, x);
                if (!mask[l]) {
                    mask[l] = 1;
                    pool.push_back(l);
                    grew = true;
                }
                idx rr = R->mul(x, r);
                if (!mask[rr]) {
                    mask[rr] = 1;
                    pool.push_back(rr);
                    grew = true;
                }
            }
        }
        // additive span and negation
        for (std::size_t i = 0; i < pool.size(); ++i) {
            idx x = pool[i];
            idx m = R->neg(x);
            if (!mask[m]) {
                mask[m] = 1;
                pool.push_back(m);
                grew = true;
            }
            for (std::size_t j = 0; j <= i; ++j) {
                idx s = R->add(x, pool[j]);
                if (!mask[s]) {
                    mask[s] = 1;
                    pool.push_back(s);
                    grew = true;
                }
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    return ElementSet(R, std::move(pool), SetRole::TwoSidedIdeal);
}

/// A subring re-indexed as a standalone ring together with the inclusion map
/// (new index -> parent index).
struct Subring {
    RingPtr ring;
    std::vector<idx> embed;
};

namespace detail {

/// Build the ring induced on a multiplicatively and additively closed subset,
/// given its unit element. members must be sorted.
inline Subring subring_on(const RingPtr& parent, const std::vector<idx>& members, idx unit,
                          std::string provenance) {
    const idx m = idx(members.size());
    std::vector<idx> back(parent->size(), -1);
    for (idx i = 0; i < m; ++i) back[members[i]] = i;
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx i = 0; i < m; ++i)
        for (idx j = 0; j < m; ++j) {
            idx s = back[parent->add(members[i], members[j])];
            idx p = back[parent->mul(members[i], members[j])];
            if (s < 0 || p < 0) throw InternalInconsistency("subset is not operation-closed");
            add[std::size_t(i) * m + j] = s;
            mul[std::size_t(i) * m + j] = p;
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx i = 0; i < m; ++i) names.push_back(parent->name(members[i]));
    idx zero = back[parent->zero()];
    if (zero < 0) throw InternalInconsistency("subset misses zero");
    idx one = back[unit];
    return Subring{FiniteRing::seal_trusted(m, std::move(add), std::move(mul), zero, one,
                                            std::move(names), std::move(provenance)),
                   members};
}

}  // namespace detail

/// Z(R) = {z | zr = rz for all r}, as a standalone ring plus embedding.
inline Subring center(const RingPtr& R) {
    std::vector<idx> zs;
    for (idx z = 0; z < R->size(); ++z) {
        bool central = true;
        for (idx r = 0; r < R->size() && central; ++r) central = R->mul(z, r) == R->mul(r, z);
        if (central) zs.push_back(z);
    }
    return detail::subring_on(R, zs, R->one(), "center(" + R->provenance() + ")");
}

/// The corner ring eRe with unit e.
inline Subring corner(const RingPtr& R, idx e) {
    if (e < 0 || e >= R->size()) throw Error("corner: element out of range");
    if (!R->is_idempotent(e)) throw NotIdempotent("corner: e*e != e");
    std::vector<idx> members;
    std::vector<std::uint8_t> seen(R->size(), 0);
    for (idx r = 0; r < R->size(); ++r) {
        idx x = R->mul(R->mul(e, r), e);
        if (!seen[x]) {
            seen[x] = 1;
            members.push_back(x);
        }
    }
    std::sort(members.begin(), members.end());
    return detail::subring_on(R, members, e,
                              "corner(" + R->provenance() + "," + R->name(e) + ")");
}

/// R/I with minimal-index coset representatives.
struct CosetRing {
    RingPtr parent;
    ElementSet ideal;
    std::vector<idx> reps;        ///< quotient index -> minimal parent representative
    std::vector<idx> projection;  ///< parent index -> quotient index
    RingPtr quotient;
};

inline CosetRing quotient(const RingPtr& R, const ElementSet& I) {
    if (I.ring().get() != R.get()) throw NotAnIdeal("ideal belongs to a different ring");
    ElementSet ideal = I.role() == SetRole::TwoSidedIdeal
                           ? I
                           : ElementSet(R, I.members(), SetRole::TwoSidedIdeal);
    const idx n = R->size();
    std::vector<idx> proj(n, -1);
    std::vector<idx> reps;
    for (idx a = 0; a < n; ++a) {
        if (proj[a] >= 0) continue;
        idx q = idx(reps.size());
        std::size_t coset_size = 0;
        for (idx j : ideal.members()) {
            idx b = R->add(a, j);
            if (proj[b] >= 0) throw InternalInconsistency("cosets overlap");
            proj[b] = q;
            ++coset_size;
        }
        if (coset_size != ideal.size()) throw InternalInconsistency("coset size mismatch");
        reps.push_back(a);
    }
    const idx m = idx(reps.size());
    if (std::size_t(m) * ideal.size() != std::size_t(n))
        throw InternalInconsistency("cosets do not partition the carrier");
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx i = 0; i < m; ++i)
        for (idx j = 0; j < m; ++j) {
            add[std::size_t(i) * m + j] = proj[R->add(reps[i], reps[j])];
            mul[std::size_t(i) * m + j] = proj[R->mul(reps[i], reps[j])];
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx i = 0; i < m; ++i) names.push_back(R->name(reps[i]) + "+I");
    RingPtr Q = FiniteRing::seal_trusted(m, std::move(add), std::move(mul),
                                         proj[R->zero()], proj[R->one()], std::move(names),
                                         "quotient(" + R->provenance() + ")");
    // The projection must be a unital ring homomorphism on every pair.
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b) {
            if (proj[R->add(a, b)] != Q->add(proj[a], proj[b]))
                throw InternalInconsistency("projection not additive");
            if (proj[R->mul(a, b)] != Q->mul(proj[a], proj[b]))
                throw InternalInconsistency("projection not multiplicative");
        }
    return CosetRing{R, std::move(ideal), std::move(reps), std::move(proj), std::move(Q)};
}

/// J(R): elements x with rx quasi-regular for all r (left criterion), checked
/// at sealing against the right criterion and the ideal axioms. This wrapper
/// additionally verifies J(R/J) = 0.
inline ElementSet jacobson_radical(const RingPtr& R) {
    ElementSet J(R, R->radical_elements(), SetRole::TwoSidedIdeal);
    CosetRing q = quotient(R, J);
    if (q.quotient->radical_elements() != std::vector<idx>{q.quotient->zero()})
        throw InternalInconsistency("J(R/J) is not zero");
    return J;
}

/// Least k with every k-fold product of radical elements zero, or nullopt if
/// none exists below the bound (impossible for a finite ring; the bound is the
/// carrier size).
inline std::optional<idx> radical_nilpotency_index(const RingPtr& R) {
    const auto& J = R->radical_elements();
    std::vector<idx> cur = J;
    std::vector<std::uint8_t> seen;
    for (idx k = 1; k <= R->size(); ++k) {
        if (cur.size() == 1 && cur[0] == R->zero()) return k;
        seen.assign(R->size(), 0);
        std::vector<idx> next;
        for (idx a : cur)
            for (idx j : J) {
                idx p = R->mul(a, j);
                if (!seen[p]) {
                    seen[p] = 1;
                    next.push_back(p);
                }
            }
        std::sort(next.begin(), next.end());
        if (next == cur && !(next.size() == 1 && next[0] == R->zero())) return std::nullopt;
        cur = std::move(next);
    }
    if (cur.size() == 1 && cur[0] == R->zero()) return R->size();
    return std::nullopt;
}

/// ab = 1 implies ba = 1; returns the failing pair otherwise. Always true on
/// finite rings, kept as a sanity invariant for raw-table inputs.
inline std::pair<bool, std::pair<idx, idx>> is_dedekind_finite(const RingPtr& R) {
    for (idx a = 0; a < R->size(); ++a)
        for (idx b = 0; b < R->size(); ++b)
            if (R->mul(a, b) == R->one() && R->mul(b, a) != R->one())
                return {false, {a, b}};
    return {true, {0, 0}};
}

}  // namespace finring
