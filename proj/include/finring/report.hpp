#pragma once

#include <chrono>
#include <sstream>
#include <string>

#include "finring/predicates.hpp"
#include "finring/ring.hpp"
#include "finring/ring_ops.hpp"

namespace finring {

/// Everything the workbench can say about one ring, in a stable field order.
/// All booleans come straight from the predicates module; timing is wall
/// clock and excluded from any determinism contract.
struct PropertyReport {
    std::string spec;
    idx size = 0;
    std::size_t units = 0;
    std::size_t radical = 0;
    std::size_t nilpotents = 0;
    std::size_t idempotents = 0;
    UJVerdict uj;
    bool uu = false;
    bool boolean_ring = false;
    bool reduced = false;
    bool abelian = false;
    bool local = false;
    bool clean = false;
    bool j_clean = false;
    bool nil_clean = false;
    bool uniquely_nil_clean = false;
    bool conjugate_nil_clean = false;  // working definition
    bool dedekind_finite = false;
    double time_ms = 0.0;
};

inline PropertyReport property_report(const RingPtr& r) {
    auto start = std::chrono::steady_clock::now();
    PropertyReport p;
    p.spec = r->provenance();
    p.size = r->size();
    p.units = r->unit_elements().size();
    p.radical = r->radical_elements().size();
    p.nilpotents = r->nilpotent_elements().size();
    p.idempotents = r->idempotent_elements().size();
    p.uj = uj_all_ways(r);
    p.uu = is_uu(r);
    p.boolean_ring = is_boolean(r);
    p.reduced = is_reduced(r);
    p.abelian = is_abelian(r);
    p.local = is_local(r);
    p.clean = is_clean(r).holds;
    p.j_clean = is_j_clean(r).holds;
    p.nil_clean = is_nil_clean(r).holds;
    p.uniquely_nil_clean = is_uniquely_nil_clean(r);
    p.conjugate_nil_clean = is_conjugate_nil_clean(r);
    p.dedekind_finite = is_dedekind_finite(r).first;
    p.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    return p;
}

inline std::string to_text(const PropertyReport& p) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << "spec: " << p.spec << "\n";
    out << "size: " << p.size << "\n";
    out << "units: " << p.units << "\n";
    out << "radical: " << p.radical << "\n";
    out << "nilpotents: " << p.nilpotents << "\n";
    out << "idempotents: " << p.idempotents << "\n";
    out << "uj: " << b(p.uj.value()) << "\n";
    out << "uj-conditions:";
    for (int i = 0; i < 6; ++i) out << " " << (i + 1) << "=" << b(p.uj.cond[i]);
    out << " agreed=" << b(p.uj.agreed) << "\n";
    out << "uu: " << b(p.uu) << "\n";
    out << "boolean: " << b(p.boolean_ring) << "\n";
    out << "reduced: " << b(p.reduced) << "\n";
    out << "abelian: " << b(p.abelian) << "\n";
    out << "local: " << b(p.local) << "\n";
    out << "clean: " << b(p.clean) << "\n";
    out << "j-clean: " << b(p.j_clean) << "\n";
    out << "nil-clean: " << b(p.nil_clean) << "\n";
    out << "uniquely-nil-clean: " << b(p.uniquely_nil_clean) << "\n";
    out << "conjugate-nil-clean (working-definition): " << b(p.conjugate_nil_clean) << "\n";
    out << "dedekind-finite: " << b(p.dedekind_finite) << "\n";
    out << "time-ms: " << p.time_ms << "\n";
    return out.str();
}

}  // namespace finring
