#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "finring/errors.hpp"

namespace finring {

/// Carrier index. Every element of a finite ring is its index in 0..n-1;
/// display names are cosmetic.
using idx = std::int32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite unital ring given by full addition/multiplication tables.
///
/// Instances are immutable once sealed. Sealing computes the fundamental
/// element sets (units, quasi-regular elements, Jacobson radical, nilpotents,
/// idempotents) exactly once; all later queries read those caches.
class FiniteRing {
  public:
    /// Seal tables that are already known to satisfy the ring axioms
    /// (construction outputs). Performs cheap structural sanity only;
    /// use validate_ring() for untrusted tables.
    static RingPtr seal_trusted(idx n, std::vector<idx> add, std::vector<idx> mul, idx zero,
                                idx one, std::vector<std::string> names, std::string provenance) {
        return RingPtr(new FiniteRing(n, std::move(add), std::move(mul), zero, one,
                                      std::move(names), std::move(provenance)));
    }

    idx size() const { return n_; }
    idx zero() const { return zero_; }
    idx one() const { return one_; }
    bool is_zero_ring() const { return n_ == 1; }

    idx add(idx a, idx b) const { return add_[std::size_t(a) * n_ + b]; }
    idx mul(idx a, idx b) const { return mul_[std::size_t(a) * n_ + b]; }
    idx neg(idx a) const { return neg_[a]; }
    idx sub(idx a, idx b) const { return add(a, neg_[b]); }

    /// x o y = x + y - xy, the circle-monoid operation.
    idx circle(idx x, idx y) const { return sub(add(x, y), mul(x, y)); }

    const std::string& name(idx a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Canonical spec text of the construction that built this ring,
    /// or "raw-table" for rings loaded from explicit tables.
    const std::string& provenance() const { return provenance_; }

    const std::vector<idx>& add_table() const { return add_; }
    const std::vector<idx>& mul_table() const { return mul_; }

    // Sealed caches ---------------------------------------------------------

    const std::vector<idx>& unit_elements() const { return units_; }
    bool is_unit(idx a) const { return inv_[a] >= 0; }
    /// Two-sided multiplicative inverse, or -1 for non-units.
    idx inverse(idx a) const { return inv_[a]; }

    const std::vector<idx>& quasi_regular_elements() const { return quasi_; }
    bool is_quasi_regular(idx a) const { return circle_inv_[a] >= 0; }
    /// Circle inverse, or -1 when a is not quasi-regular.
    idx circle_inverse(idx a) const { return circle_inv_[a]; }

    const std::vector<idx>& radical_elements() const { return radical_; }
    bool in_radical(idx a) const { return radical_mask_[a] != 0; }

    const std::vector<idx>& nilpotent_elements() const { return nilpotents_; }
    bool is_nilpotent(idx a) const { return nilpotent_mask_[a] != 0; }

    const std::vector<idx>& idempotent_elements() const { return idempotents_; }
    bool is_idempotent(idx a) const { return mul(a, a) == a; }

    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

  private:
    FiniteRing(idx n, std::vector<idx> add, std::vector<idx> mul, idx zero, idx one,
               std::vector<std::string> names, std::string provenance)
        : n_(n),
          add_(std::move(add)),
          mul_(std::move(mul)),
          zero_(zero),
          one_(one),
          names_(std::move(names)),
          provenance_(std::move(provenance)) {
        if (n_ <= 0) throw Error("ring size must be positive");
        if (add_.size() != std::size_t(n_) * n_ || mul_.size() != std::size_t(n_) * n_)
            throw Error("table shape mismatch: expected " + std::to_string(n_) + "x" +
                        std::to_string(n_));
        for (idx v : add_)
            if (v < 0 || v >= n_) throw Error("add table entry out of range");
        for (idx v : mul_)
            if (v < 0 || v >= n_) throw Error("mul table entry out of range");
        if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
            throw Error("zero/one index out of range");
        if (names_.empty())
            for (idx a = 0; a < n_; ++a) names_.push_back(std::to_string(a));
        if (names_.size() != std::size_t(n_)) throw Error("names count mismatch");
        if (n_ > 1 && zero_ == one_) throw Error("zero = one in a ring of size > 1");
        seal();
    }

    void seal() {
        compute_negations();
        compute_units();
        compute_quasi_regular();
        compute_radical();
        compute_nilpotents();
        compute_idempotents();
    }

    void compute_negations() {
        neg_.assign(n_, -1);
        for (idx a = 0; a < n_; ++a) {
            if (add(zero_, a) != a || add(a, zero_) != a)
                throw Error("zero is not neutral for addition");
            for (idx b = 0; b < n_; ++b)
                if (add(a, b) == zero_) {
                    neg_[a] = b;
                    break;
                }
            if (neg_[a] < 0) throw Error("element without additive inverse");
        }
        if (mul(one_, one_) != one_) throw Error("one is not multiplicatively idempotent");
    }

    void compute_units() {
        inv_.assign(n_, -1);
        for (idx u = 0; u < n_; ++u) {
            for (idx v = 0; v < n_; ++v)
                if (mul(u, v) == one_ && mul(v, u) == one_) {
                    inv_[u] = v;
                    break;
                }
            if (inv_[u] >= 0) units_.push_back(u);
        }
    }

    void compute_quasi_regular() {
        circle_inv_.assign(n_, -1);
        for (idx x = 0; x < n_; ++x) {
            for (idx y = 0; y < n_; ++y)
                if (circle(x, y) == zero_ && circle(y, x) == zero_) {
                    circle_inv_[x] = y;
                    break;
                }
            if (circle_inv_[x] >= 0) quasi_.push_back(x);
        }
        // C(R) <-> U(R) via x <-> 1 - x; a mismatch is a library bug.
        std::vector<idx> from_units;
        from_units.reserve(units_.size());
        for (idx u : units_) from_units.push_back(sub(one_, u));
        std::sort(from_units.begin(), from_units.end());
        if (from_units != quasi_)
            throw InternalInconsistency("quasi-regular set differs from 1 - U(R)");
    }

    void compute_radical() {
        std::vector<idx> left, right;
        for (idx x = 0; x < n_; ++x) {
            bool ok = true;
            for (idx r = 0; r < n_ && ok; ++r) ok = is_quasi_regular(mul(r, x));
            if (ok) left.push_back(x);
        }
        for (idx x = 0; x < n_; ++x) {
            bool ok = true;
            for (idx r = 0; r < n_ && ok; ++r) ok = is_quasi_regular(mul(x, r));
            if (ok) right.push_back(x);
        }
        if (left != right)
            throw InternalInconsistency("left and right radical criteria disagree");
        radical_ = std::move(left);
        radical_mask_.assign(n_, 0);
        for (idx x : radical_) radical_mask_[x] = 1;
        // The computed set must be a two-sided ideal.
        for (idx a : radical_) {
            if (!radical_mask_[neg_[a]])
                throw InternalInconsistency("radical not closed under negation");
            for (idx b : radical_)
                if (!radical_mask_[add(a, b)])
                    throw InternalInconsistency("radical not closed under addition");
            for (idx r = 0; r < n_; ++r)
                if (!radical_mask_[mul(r, a)] || !radical_mask_[mul(a, r)])
                    throw InternalInconsistency("radical not an absorbing ideal");
        }
    }

    void compute_nilpotents() {
        nilpotent_mask_.assign(n_, 0);
        for (idx x = 0; x < n_; ++x) {
            idx p = x;
            for (idx k = 1; k <= n_; ++k) {
                if (p == zero_) {
                    nilpotent_mask_[x] = 1;
                    break;
                }
                p = mul(p, x);
            }
            if (nilpotent_mask_[x]) nilpotents_.push_back(x);
        }
    }

    void compute_idempotents() {
        for (idx e = 0; e < n_; ++e)
            if (mul(e, e) == e) idempotents_.push_back(e);
    }

    idx n_;
    std::vector<idx> add_;
    std::vector<idx> mul_;
    idx zero_;
    idx one_;
    std::vector<std::string> names_;
    std::string provenance_;

    std::vector<idx> neg_;
    std::vector<idx> units_;
    std::vector<idx> inv_;
    std::vector<idx> quasi_;
    std::vector<idx> circle_inv_;
    std::vector<idx> radical_;
    std::vector<std::uint8_t> radical_mask_;
    std::vector<idx> nilpotents_;
    std::vector<std::uint8_t> nilpotent_mask_;
    std::vector<idx> idempotents_;
};

/// Exhaustive ring-axiom check over raw tables, in a fixed scan order.
/// Throws AxiomViolation naming the first failing axiom and witness triple.
/// O(n^3) in the carrier size; nothing is sampled.
inline void check_ring_axioms(idx n, const std::vector<idx>& add, const std::vector<idx>& mul,
                              idx zero, idx one) {
    if (n <= 0) throw Error("ring size must be positive");
    if (add.size() != std::size_t(n) * n) throw Error("add table is not n x n");
    if (mul.size() != std::size_t(n) * n) throw Error("mul table is not n x n");
    if (zero < 0 || zero >= n) throw Error("zero index out of range");
    if (one < 0 || one >= n) throw Error("one index out of range");
    for (std::size_t i = 0; i < add.size(); ++i)
        if (add[i] < 0 || add[i] >= n)
            throw AxiomViolation("table-entry-range", {std::int64_t(i / n), std::int64_t(i % n), 0});
    for (std::size_t i = 0; i < mul.size(); ++i)
        if (mul[i] < 0 || mul[i] >= n)
            throw AxiomViolation("table-entry-range", {std::int64_t(i / n), std::int64_t(i % n), 1});
    if (n > 1 && zero == one) throw AxiomViolation("zero-distinct-from-one", {zero, one, 0});

    auto A = [&](idx a, idx b) { return add[std::size_t(a) * n + b]; };
    auto M = [&](idx a, idx b) { return mul[std::size_t(a) * n + b]; };

    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b)
            for (idx c = 0; c < n; ++c)
                if (A(A(a, b), c) != A(a, A(b, c)))
                    throw AxiomViolation("add-associative", {a, b, c});
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b)
            if (A(a, b) != A(b, a)) throw AxiomViolation("add-commutative", {a, b, 0});
    for (idx a = 0; a < n; ++a)
        if (A(zero, a) != a) throw AxiomViolation("zero-neutral", {a, 0, 0});
    for (idx a = 0; a < n; ++a) {
        bool found = false;
        for (idx b = 0; b < n && !found; ++b) found = A(a, b) == zero;
        if (!found) throw AxiomViolation("additive-inverse", {a, 0, 0});
    }
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b)
            for (idx c = 0; c < n; ++c)
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw AxiomViolation("mul-associative", {a, b, c});
    for (idx a = 0; a < n; ++a)
        if (M(one, a) != a || M(a, one) != a) throw AxiomViolation("one-identity", {a, 0, 0});
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b)
            for (idx c = 0; c < n; ++c)
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw AxiomViolation("left-distributive", {a, b, c});
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b)
            for (idx c = 0; c < n; ++c)
                if (M(A(a, b), c) != A(M(a, c), M(b, c)))
                    throw AxiomViolation("right-distributive", {a, b, c});
}

/// Validate untrusted raw tables and seal them into a ring.
inline RingPtr validate_ring(idx n, std::vector<idx> add, std::vector<idx> mul, idx zero, idx one,
                             std::vector<std::string> names = {},
                             std::string provenance = "raw-table") {
    check_ring_axioms(n, add, mul, zero, one);
    return FiniteRing::seal_trusted(n, std::move(add), std::move(mul), zero, one,
                                    std::move(names), std::move(provenance));
}

/// Re-run the full axiom suite on an already sealed ring (test support).
inline void check_ring_axioms(const FiniteRing& r) {
    check_ring_axioms(r.size(), r.add_table(), r.mul_table(), r.zero(), r.one());
}

enum class SetRole { Subset, LeftIdeal, RightIdeal, TwoSidedIdeal, Subring, UnitSet };

inline const char* to_string(SetRole role) {
    switch (role) {
        case SetRole::Subset: return "subset";
        case SetRole::LeftIdeal: return "left-ideal";
        case SetRole::RightIdeal: return "right-ideal";
        case SetRole::TwoSidedIdeal: return "two-sided-ideal";
        case SetRole::Subring: return "subring";
        case SetRole::UnitSet: return "unit-set";
    }
    return "?";
}

/// A subset of a ring's carrier with a verified structural role.
/// Construction checks the claimed role exhaustively and throws on a false claim.
class ElementSet {
  public:
    ElementSet(RingPtr ring, std::vector<idx> members, SetRole role)
        : ring_(std::move(ring)), members_(std::move(members)), role_(role) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        for (idx m : members_)
            if (m < 0 || m >= ring_->size()) throw Error("set member out of carrier range");
        verify_role();
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<idx>& members() const { return members_; }
    SetRole role() const { return role_; }
    std::size_t size() const { return members_.size(); }

    bool contains(idx a) const {
        return std::binary_search(members_.begin(), members_.end(), a);
    }

    bool operator==(const ElementSet& o) const {
        return ring_.get() == o.ring_.get() && members_ == o.members_;
    }

  private:
    void verify_role() {
        const FiniteRing& R = *ring_;
        auto in = [&](idx a) { return contains(a); };
        auto additive_closed = [&](const char* what, bool as_ideal) {
            for (idx a : members_) {
                if (!in(R.neg(a))) {
                    std::string msg = std::string(what) + ": not closed under negation";
                    if (as_ideal) throw NotAnIdeal(msg);
                    throw Error(msg);
                }
                for (idx b : members_)
                    if (!in(R.add(a, b))) {
                        std::string msg = std::string(what) + ": not closed under addition";
                        if (as_ideal) throw NotAnIdeal(msg);
                        throw Error(msg);
                    }
            }
        };
        switch (role_) {
            case SetRole::Subset:
                break;
            case SetRole::LeftIdeal:
                additive_closed("left-ideal", true);
                for (idx a : members_)
                    for (idx r = 0; r < R.size(); ++r)
                        if (!in(R.mul(r, a))) throw NotAnIdeal("left absorption fails");
                break;
            case SetRole::RightIdeal:
                additive_closed("right-ideal", true);
                for (idx a : members_)
                    for (idx r = 0; r < R.size(); ++r)
                        if (!in(R.mul(a, r))) throw NotAnIdeal("right absorption fails");
                break;
            case SetRole::TwoSidedIdeal:
                additive_closed("two-sided-ideal", true);
                for (idx a : members_)
                    for (idx r = 0; r < R.size(); ++r)
                        if (!in(R.mul(r, a)) || !in(R.mul(a, r)))
                            throw NotAnIdeal("two-sided absorption fails");
                break;
            case SetRole::Subring:
                additive_closed("subring", false);
                if (!in(R.zero()) || !in(R.one()))
                    throw Error("subring must contain zero and one");
                for (idx a : members_)
                    for (idx b : members_)
                        if (!in(R.mul(a, b)))
                            throw Error("subring: not closed under multiplication");
                break;
            case SetRole::UnitSet:
                for (idx a : members_)
                    if (!R.is_unit(a)) throw Error("unit-set contains a non-unit");
                for (idx u : R.unit_elements())
                    if (!in(u)) throw Error("unit-set is missing a unit");
                break;
        }
    }

    RingPtr ring_;
    std::vector<idx> members_;
    SetRole role_;
};

}  // namespace finring
