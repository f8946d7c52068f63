#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/ring_ops.hpp"

namespace finring {

inline void require_nondegenerate(const RingPtr& R) {
    if (R->is_zero_ring()) throw DegenerateRing();
}

/// R is UJ when U(R) = 1 + J(R). This is the defining condition; the full
/// six-way characterization lives in uj_all_ways().
inline bool is_uj(const RingPtr& R) {
    require_nondegenerate(R);
    std::vector<idx> one_plus_j;
    one_plus_j.reserve(R->radical_elements().size());
    for (idx j : R->radical_elements()) one_plus_j.push_back(R->add(R->one(), j));
    std::sort(one_plus_j.begin(), one_plus_j.end());
    return one_plus_j == R->unit_elements();
}

/// Outcome of evaluating all six equivalent conditions of the UJ
/// characterization independently. agreed is always true in returned values;
/// a disagreement throws InternalInconsistency instead, since the six are
/// provably equivalent.
struct UJVerdict {
    std::array<bool, 6> cond{};
    bool agreed = false;
    std::array<std::string, 6> witness{};  // empty when the condition holds

    bool value() const { return cond[0]; }
};

/// Evaluate the six conditions:
///   (1) U = 1 + J            (2) U(R/J) = {1}        (3) C(R) is an ideal
///   (4) rb - cr in J         (5) ru - vr in J        (6) U + U contained in J
/// Also asserts the sharpenings that hold in the UJ case: C(R) = J(R) and
/// U + U = J exactly.
inline UJVerdict uj_all_ways(const RingPtr& R) {
    require_nondegenerate(R);
    UJVerdict v;
    const auto& U = R->unit_elements();
    const auto& C = R->quasi_regular_elements();
    const auto& J = R->radical_elements();

    {
        std::vector<idx> one_plus_j;
        one_plus_j.reserve(J.size());
        for (idx j : J) one_plus_j.push_back(R->add(R->one(), j));
        std::sort(one_plus_j.begin(), one_plus_j.end());
        v.cond[0] = one_plus_j == U;
        if (!v.cond[0]) {
            for (idx u : U)
                if (!std::binary_search(one_plus_j.begin(), one_plus_j.end(), u)) {
                    v.witness[0] = "unit=" + R->name(u);
                    break;
                }
        }
    }
    {
        CosetRing q = quotient(R, ElementSet(R, J, SetRole::TwoSidedIdeal));
        const auto& qu = q.quotient->unit_elements();
        v.cond[1] = qu.size() == 1 && qu[0] == q.quotient->one();
        if (!v.cond[1])
            for (idx u : qu)
                if (u != q.quotient->one()) {
                    v.witness[1] = "coset-of=" + R->name(q.reps[u]);
                    break;
                }
    }
    {
        ElementSet closure = ideal_closure(R, C);
        v.cond[2] = closure.members() == C;
        if (!v.cond[2])
            for (idx x : closure.members())
                if (!std::binary_search(C.begin(), C.end(), x)) {
                    v.witness[2] = "closure-gains=" + R->name(x);
                    break;
                }
    }
    {
        v.cond[3] = true;
        for (idx r = 0; r < R->size() && v.cond[3]; ++r)
            for (idx b : C) {
                for (idx c : C)
                    if (!R->in_radical(R->sub(R->mul(r, b), R->mul(c, r)))) {
                        v.cond[3] = false;
                        v.witness[3] = "r=" + R->name(r) + ",b=" + R->name(b) + ",c=" + R->name(c);
                        break;
                    }
                if (!v.cond[3]) break;
            }
    }
    {
        v.cond[4] = true;
        for (idx r = 0; r < R->size() && v.cond[4]; ++r)
            for (idx u : U) {
                for (idx w : U)
                    if (!R->in_radical(R->sub(R->mul(r, u), R->mul(w, r)))) {
                        v.cond[4] = false;
                        v.witness[4] = "r=" + R->name(r) + ",u=" + R->name(u) + ",v=" + R->name(w);
                        break;
                    }
                if (!v.cond[4]) break;
            }
    }
    {
        v.cond[5] = true;
        for (idx u : U) {
            for (idx w : U)
                if (!R->in_radical(R->add(u, w))) {
                    v.cond[5] = false;
                    v.witness[5] = "u=" + R->name(u) + ",v=" + R->name(w);
                    break;
                }
            if (!v.cond[5]) break;
        }
    }

    v.agreed = true;
    for (bool c : v.cond) v.agreed = v.agreed && c == v.cond[0];
    if (!v.agreed)
        throw InternalInconsistency("UJ characterization conditions disagree on " +
                                    R->provenance());
    if (v.cond[0]) {
        if (C != J) throw InternalInconsistency("UJ sharpening C(R) = J(R) fails");
        std::vector<std::uint8_t> sums(R->size(), 0);
        for (idx u : U)
            for (idx w : U) sums[R->add(u, w)] = 1;
        std::vector<idx> sum_set;
        for (idx x = 0; x < R->size(); ++x)
            if (sums[x]) sum_set.push_back(x);
        if (sum_set != J) throw InternalInconsistency("UJ sharpening U + U = J fails");
    }
    return v;
}

/// U(R) = 1 + N(R): every unit is unipotent.
inline bool is_uu(const RingPtr& R) {
    require_nondegenerate(R);
    std::vector<idx> one_plus_n;
    one_plus_n.reserve(R->nilpotent_elements().size());
    for (idx q : R->nilpotent_elements()) one_plus_n.push_back(R->add(R->one(), q));
    std::sort(one_plus_n.begin(), one_plus_n.end());
    return one_plus_n == R->unit_elements();
}

/// Every element idempotent.
inline bool is_boolean(const RingPtr& R) {
    require_nondegenerate(R);
    return idx(R->idempotent_elements().size()) == R->size();
}

/// No nonzero nilpotents.
inline bool is_reduced(const RingPtr& R) {
    require_nondegenerate(R);
    return R->nilpotent_elements() == std::vector<idx>{R->zero()};
}

/// Every idempotent central.
inline bool is_abelian(const RingPtr& R) {
    require_nondegenerate(R);
    for (idx e : R->idempotent_elements())
        for (idx r = 0; r < R->size(); ++r)
            if (R->mul(e, r) != R->mul(r, e)) return false;
    return true;
}

/// The non-units form an ideal; since non-units are then exactly J(R), this is
/// decided by |U| + |J| = |R|.
inline bool is_local(const RingPtr& R) {
    require_nondegenerate(R);
    return R->unit_elements().size() + R->radical_elements().size() == std::size_t(R->size());
}

enum class DecompKind { Clean, JClean, NilClean };

inline const char* to_string(DecompKind k) {
    switch (k) {
        case DecompKind::Clean: return "clean";
        case DecompKind::JClean: return "j-clean";
        case DecompKind::NilClean: return "nil-clean";
    }
    return "?";
}

/// r = e + t with e idempotent and t a unit / radical element / nilpotent.
struct Decomposition {
    idx element;
    idx idempotent_part;
    idx other_part;
    DecompKind kind;
};

namespace detail {

inline bool in_witness_set(const FiniteRing& R, idx t, DecompKind kind) {
    switch (kind) {
        case DecompKind::Clean: return R.is_unit(t);
        case DecompKind::JClean: return R.in_radical(t);
        case DecompKind::NilClean: return R.is_nilpotent(t);
    }
    return false;
}

}  // namespace detail

/// All decompositions of r of the given kind, ordered by the idempotent index.
inline std::vector<Decomposition> decompositions(const RingPtr& R, idx r, DecompKind kind) {
    require_nondegenerate(R);
    if (r < 0 || r >= R->size()) throw Error("decompositions: element out of range");
    std::vector<Decomposition> out;
    for (idx e : R->idempotent_elements()) {
        idx t = R->sub(r, e);
        if (detail::in_witness_set(*R, t, kind)) out.push_back({r, e, t, kind});
    }
    return out;
}

/// Does every element decompose? first_failing is the smallest element with
/// no decomposition, or -1.
struct ElementwiseVerdict {
    bool holds = true;
    idx first_failing = -1;
};

inline ElementwiseVerdict elementwise_decomposable(const RingPtr& R, DecompKind kind) {
    require_nondegenerate(R);
    for (idx r = 0; r < R->size(); ++r) {
        bool any = false;
        for (idx e : R->idempotent_elements())
            if (detail::in_witness_set(*R, R->sub(r, e), kind)) {
                any = true;
                break;
            }
        if (!any) return {false, r};
    }
    return {true, -1};
}

inline ElementwiseVerdict is_clean(const RingPtr& R) {
    return elementwise_decomposable(R, DecompKind::Clean);
}
inline ElementwiseVerdict is_j_clean(const RingPtr& R) {
    return elementwise_decomposable(R, DecompKind::JClean);
}
inline ElementwiseVerdict is_nil_clean(const RingPtr& R) {
    return elementwise_decomposable(R, DecompKind::NilClean);
}

/// Every element has exactly one nil-clean decomposition.
inline bool is_uniquely_nil_clean(const RingPtr& R) {
    require_nondegenerate(R);
    for (idx r = 0; r < R->size(); ++r) {
        int count = 0;
        for (idx e : R->idempotent_elements())
            if (detail::in_witness_set(*R, R->sub(r, e), DecompKind::NilClean) && ++count > 1)
                break;
        if (count != 1) return false;
    }
    return true;
}

/// Working definition (the cited source's exact one is unavailable): R is nil
/// clean and for every element any two nil-clean decompositions have
/// conjugate idempotent parts. Reports must label this verdict
/// "working-definition".
inline bool is_conjugate_nil_clean(const RingPtr& R) {
    require_nondegenerate(R);
    if (!is_nil_clean(R).holds) return false;
    // orbit representative (minimal index) of each idempotent under unit conjugation
    std::vector<idx> orbit_rep(R->size(), -1);
    for (idx e : R->idempotent_elements()) {
        if (orbit_rep[e] >= 0) continue;
        std::vector<idx> orbit;
        for (idx u : R->unit_elements()) orbit.push_back(R->mul(R->mul(u, e), R->inverse(u)));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (idx f : orbit) orbit_rep[f] = orbit[0];
    }
    for (idx r = 0; r < R->size(); ++r) {
        idx rep = -1;
        for (idx e : R->idempotent_elements())
            if (detail::in_witness_set(*R, R->sub(r, e), DecompKind::NilClean)) {
                if (rep < 0)
                    rep = orbit_rep[e];
                else if (orbit_rep[e] != rep)
                    return false;
            }
    }
    return true;
}

/// Does every idempotent of R/I lift to an idempotent of R (uniquely, when
/// requested)?
inline bool idempotents_lift(const RingPtr& R, const ElementSet& I, bool unique) {
    if (I.ring().get() != R.get()) throw NotAnIdeal("ideal belongs to a different ring");
    if (I.role() != SetRole::TwoSidedIdeal)
        throw NotAnIdeal("idempotents_lift needs a verified two-sided ideal");
    CosetRing q = quotient(R, I);
    for (idx ebar : q.quotient->idempotent_elements()) {
        int lifts = 0;
        for (idx e : R->idempotent_elements())
            if (q.projection[e] == ebar) ++lifts;
        if (unique ? lifts != 1 : lifts == 0) return false;
    }
    return true;
}

}  // namespace finring
