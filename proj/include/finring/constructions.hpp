#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

/// Default carrier cap. Tables are n^2 entries, so this keeps every
/// exhaustive check at desk scale while still admitting M_2(Z/4) (256)
/// and T_3(Z/4) (4096).
inline constexpr long long kDefaultCap = 4096;

namespace detail {

inline void require_cap(long long size, long long cap, const std::string& what) {
    if (size > cap)
        throw CapExceeded(what + ": size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(cap));
}

inline bool needs_parens(const std::string& s) {
    return s.find('+') != std::string::npos || s.find(' ') != std::string::npos;
}

/// Display "c*v^d" with the usual conventions (unit coefficient omitted,
/// v^0 dropped, composite coefficient names parenthesized).
inline std::string monomial_name(const std::string& coeff, bool coeff_is_one, char var, int deg) {
    if (deg == 0) return coeff;
    std::string v = deg == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(deg);
    if (coeff_is_one) return v;
    if (needs_parens(coeff)) return "(" + coeff + ")" + v;
    return coeff + v;
}

}  // namespace detail

/// Z/nZ with the residue tables.
inline RingPtr zmod(long long n, long long cap = kDefaultCap) {
    if (n == 1) throw DegenerateRing("Z1 is the zero ring");
    if (n < 2) throw Error("zmod: n must be at least 2");
    detail::require_cap(n, cap, "Z" + std::to_string(n));
    const idx m = idx(n);
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx i = 0; i < m; ++i)
        for (idx j = 0; j < m; ++j) {
            add[std::size_t(i) * m + j] = idx((i + j) % m);
            mul[std::size_t(i) * m + j] = idx((1LL * i * j) % m);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx i = 0; i < m; ++i) names.push_back(std::to_string(i));
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul), 0, 1, std::move(names),
                                    "Z" + std::to_string(n));
}

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Polynomials over Z/p as little-endian coefficient vectors (no trailing zeros).
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    // b monic; reduce a by b in place
    const int db = int(b.size()) - 1;
    for (int i = int(a.size()) - 1; i >= db; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& t = a[i - db + j];
            t = ((t - c * b[j]) % p + p) % p;
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline bool poly_divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
    return poly_mod(f, g, p).empty();
}

/// Monic irreducible of degree k over Z/p with the smallest coefficient
/// encoding sum(c_i p^i). Deterministic; ties cannot occur.
inline std::vector<int> smallest_irreducible(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
        std::vector<int> f(k + 1, 0);
        long long e = enc;
        for (int i = 0; i < k; ++i) {
            f[i] = int(e % p);
            e /= p;
        }
        f[k] = 1;
        bool irreducible = true;
        for (int d = 1; irreducible && 2 * d <= k; ++d) {
            long long gc = 1;
            for (int i = 0; i < d; ++i) gc *= p;
            for (long long ge = 0; irreducible && ge < gc; ++ge) {
                std::vector<int> g(d + 1, 0);
                long long t = ge;
                for (int i = 0; i < d; ++i) {
                    g[i] = int(t % p);
                    t /= p;
                }
                g[d] = 1;
                if (poly_divides(g, f, p)) irreducible = false;
            }
        }
        if (irreducible) return f;
    }
    throw InternalInconsistency("no irreducible polynomial found");
}

struct ResidueEncoding {
    idx base;    // |R|
    int degree;  // residues have this many digits
    idx size;    // base^degree

    std::vector<idx> decode(idx v) const {
        std::vector<idx> c(degree);
        for (int i = 0; i < degree; ++i) {
            c[i] = v % base;
            v /= base;
        }
        return c;
    }
    idx encode(const std::vector<idx>& c) const {
        idx v = 0;
        for (int i = degree - 1; i >= 0; --i) v = v * base + c[i];
        return v;
    }
};

/// R[x]/(f) for commutative R and monic f, the shared engine behind gf() and
/// poly_quotient(). Coefficient tuples are little-endian digits base |R|.
inline RingPtr residue_ring(const RingPtr& R, const std::vector<idx>& f, char var,
                            long long cap, const std::string& provenance) {
    const int d = int(f.size()) - 1;
    if (d < 1) throw Error("modulus must have degree at least 1");
    if (f.back() != R->one()) throw NotMonic("leading coefficient is not 1");
    long long size = 1;
    for (int i = 0; i < d; ++i) {
        size *= R->size();
        require_cap(size, cap, provenance);
    }
    ResidueEncoding enc{R->size(), d, idx(size)};

    auto reduce = [&](std::vector<idx> a) {
        for (int i = int(a.size()) - 1; i >= d; --i) {
            idx c = a[i];
            if (c == R->zero()) continue;
            for (int j = 0; j <= d; ++j) {
                idx& t = a[i - d + j];
                t = R->sub(t, R->mul(c, f[j]));
            }
        }
        a.resize(d, R->zero());
        return a;
    };

    const idx m = enc.size;
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    std::vector<std::vector<idx>> digits(m);
    for (idx v = 0; v < m; ++v) digits[v] = enc.decode(v);
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b) {
            std::vector<idx> s(d);
            for (int i = 0; i < d; ++i) s[i] = R->add(digits[a][i], digits[b][i]);
            add[std::size_t(a) * m + b] = enc.encode(s);
            std::vector<idx> p(2 * d - 1, R->zero());
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    p[i + j] = R->add(p[i + j], R->mul(digits[a][i], digits[b][j]));
            mul[std::size_t(a) * m + b] = enc.encode(reduce(std::move(p)));
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx v = 0; v < m; ++v) {
        std::string s;
        for (int i = d - 1; i >= 0; --i) {
            idx c = digits[v][i];
            if (c == R->zero()) continue;
            if (!s.empty()) s += "+";
            s += monomial_name(R->name(c), c == R->one(), var, i);
        }
        names.push_back(s.empty() ? R->name(R->zero()) : s);
    }
    std::vector<idx> one_digits(d, R->zero());
    one_digits[0] = R->one();
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul), 0, enc.encode(one_digits),
                                    std::move(names), provenance);
}

}  // namespace detail

/// GF(p^k) as Z/p[a]/(f) for the deterministically chosen smallest monic
/// irreducible f of degree k.
inline RingPtr gf(long long p, int k, long long cap = kDefaultCap) {
    if (!detail::is_prime(p)) throw NotPrime("GF: " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("GF: extension degree must be at least 1");
    long long size = 1;
    std::string label = "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
    for (int i = 0; i < k; ++i) {
        size *= p;
        detail::require_cap(size, cap, label);
    }
    RingPtr base = zmod(p, cap);
    std::vector<int> f = detail::smallest_irreducible(int(p), k);
    std::vector<idx> fi(f.begin(), f.end());
    return detail::residue_ring(base, fi, 'a', cap, label);
}

/// Componentwise product ring; tuples are positionally encoded with the first
/// factor least significant.
inline RingPtr product(const std::vector<RingPtr>& rings, long long cap = kDefaultCap,
                       std::string provenance = "") {
    if (rings.empty()) throw Error("product: needs at least one factor");
    if (rings.size() == 1 && provenance.empty()) return rings[0];
    long long size = 1;
    for (const auto& r : rings) {
        size *= r->size();
        detail::require_cap(size, cap, "prod");
    }
    const idx m = idx(size);
    const int k = int(rings.size());
    auto decode = [&](idx v) {
        std::vector<idx> t(k);
        for (int i = 0; i < k; ++i) {
            t[i] = v % rings[i]->size();
            v /= rings[i]->size();
        }
        return t;
    };
    auto encode = [&](const std::vector<idx>& t) {
        idx v = 0;
        for (int i = k - 1; i >= 0; --i) v = v * rings[i]->size() + t[i];
        return v;
    };
    std::vector<std::vector<idx>> tup(m);
    for (idx v = 0; v < m; ++v) tup[v] = decode(v);
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b) {
            std::vector<idx> s(k), p(k);
            for (int i = 0; i < k; ++i) {
                s[i] = rings[i]->add(tup[a][i], tup[b][i]);
                p[i] = rings[i]->mul(tup[a][i], tup[b][i]);
            }
            add[std::size_t(a) * m + b] = encode(s);
            mul[std::size_t(a) * m + b] = encode(p);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx v = 0; v < m; ++v) {
        std::string s = "(";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += rings[i]->name(tup[v][i]);
        }
        names.push_back(s + ")");
    }
    std::vector<idx> zt(k), ot(k);
    for (int i = 0; i < k; ++i) {
        zt[i] = rings[i]->zero();
        ot[i] = rings[i]->one();
    }
    if (provenance.empty()) {
        provenance = "prod(";
        for (int i = 0; i < k; ++i) {
            if (i) provenance += ",";
            provenance += rings[i]->provenance();
        }
        provenance += ")";
    }
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul), encode(zt), encode(ot),
                                    std::move(names), std::move(provenance));
}

namespace detail {

/// Shared builder for full and upper-triangular matrix rings. cells lists the
/// stored positions (r,c) in display order; each is one base-|R| digit of the
/// element index, least significant first.
inline RingPtr matrix_like(const RingPtr& R, int k, const std::vector<std::pair<int, int>>& cells,
                           long long cap, const std::string& provenance) {
    long long size = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        size *= R->size();
        require_cap(size, cap, provenance);
    }
    const idx m = idx(size);
    const int nc = int(cells.size());
    std::vector<int> cell_of(std::size_t(k) * k, -1);
    for (int i = 0; i < nc; ++i) cell_of[std::size_t(cells[i].first) * k + cells[i].second] = i;
    auto decode = [&](idx v) {
        std::vector<idx> d(nc);
        for (int i = 0; i < nc; ++i) {
            d[i] = v % R->size();
            v /= R->size();
        }
        return d;
    };
    std::vector<std::vector<idx>> digits(m);
    for (idx v = 0; v < m; ++v) digits[v] = decode(v);
    auto at = [&](const std::vector<idx>& d, int r, int c) {
        int i = cell_of[std::size_t(r) * k + c];
        return i < 0 ? R->zero() : d[i];
    };
    auto encode = [&](const std::vector<idx>& d) {
        idx v = 0;
        for (int i = nc - 1; i >= 0; --i) v = v * R->size() + d[i];
        return v;
    };
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b) {
            std::vector<idx> s(nc), p(nc);
            for (int i = 0; i < nc; ++i) {
                s[i] = R->add(digits[a][i], digits[b][i]);
                auto [r, c] = cells[i];
                idx acc = R->zero();
                for (int t = 0; t < k; ++t)
                    acc = R->add(acc, R->mul(at(digits[a], r, t), at(digits[b], t, c)));
                p[i] = acc;
            }
            add[std::size_t(a) * m + b] = encode(s);
            mul[std::size_t(a) * m + b] = encode(p);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx v = 0; v < m; ++v) {
        std::string s = "[";
        for (int r = 0; r < k; ++r) {
            if (r) s += ",";
            s += "[";
            for (int c = 0; c < k; ++c) {
                if (c) s += ",";
                s += R->name(at(digits[v], r, c));
            }
            s += "]";
        }
        names.push_back(s + "]");
    }
    std::vector<idx> zd(nc, R->zero()), od(nc, R->zero());
    for (int i = 0; i < nc; ++i)
        if (cells[i].first == cells[i].second) od[i] = R->one();
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul), encode(zd), encode(od),
                                    std::move(names), provenance);
}

}  // namespace detail

/// M_k(R), row-major digit encoding.
inline RingPtr matrix_ring(const RingPtr& R, int k, long long cap = kDefaultCap) {
    if (k < 1) throw Error("matrix_ring: k must be at least 1");
    if (k == 1) return R;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) cells.emplace_back(r, c);
    return detail::matrix_like(R, k, cells, cap,
                               "mat(" + std::to_string(k) + "," + R->provenance() + ")");
}

/// T_k(R), upper-triangular matrices with packed digit encoding.
inline RingPtr triangular_ring(const RingPtr& R, int k, long long cap = kDefaultCap) {
    if (k < 1) throw Error("triangular_ring: k must be at least 1");
    if (k == 1) return R;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < k; ++r)
        for (int c = r; c < k; ++c) cells.emplace_back(r, c);
    return detail::matrix_like(R, k, cells, cap,
                               "tri(" + std::to_string(k) + "," + R->provenance() + ")");
}

/// R[x]/(f) for commutative R; f is given ascending-degree and must be monic.
inline RingPtr poly_quotient(const RingPtr& R, const std::vector<idx>& f,
                             long long cap = kDefaultCap, std::string provenance = "") {
    for (idx a = 0; a < R->size(); ++a)
        for (idx b = 0; b < a; ++b)
            if (R->mul(a, b) != R->mul(b, a))
                throw NotCommutative("poly_quotient: base ring is not commutative");
    if (f.size() < 2) throw Error("poly_quotient: modulus must have degree at least 1");
    for (idx c : f)
        if (c < 0 || c >= R->size()) throw Error("poly_quotient: coefficient out of range");
    if (provenance.empty()) {
        provenance = "polyquot(" + R->provenance() + ",[";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) provenance += ",";
            provenance += std::to_string(f[i]);
        }
        provenance += "])";
    }
    return detail::residue_ring(R, f, 'x', cap, provenance);
}

/// A finite group by Cayley table (used by group_algebra).
struct GroupTable {
    idx order = 0;
    std::vector<idx> table;  // order x order
    idx identity = 0;
    std::vector<std::string> names;
    std::string label;
};

/// Exhaustively verify the group axioms; throws NotAGroup with a witness.
inline GroupTable validate_group(idx m, std::vector<idx> table, std::vector<std::string> names,
                                 std::string label) {
    if (m <= 0) throw NotAGroup("group order must be positive");
    if (table.size() != std::size_t(m) * m) throw NotAGroup("table is not n x n");
    for (idx v : table)
        if (v < 0 || v >= m) throw NotAGroup("table entry out of range");
    auto T = [&](idx a, idx b) { return table[std::size_t(a) * m + b]; };
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b)
            for (idx c = 0; c < m; ++c)
                if (T(T(a, b), c) != T(a, T(b, c)))
                    throw NotAGroup("group multiplication not associative at (" +
                                    std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
    idx id = -1;
    for (idx e = 0; e < m && id < 0; ++e) {
        bool ok = true;
        for (idx a = 0; a < m && ok; ++a) ok = T(e, a) == a && T(a, e) == a;
        if (ok) id = e;
    }
    if (id < 0) throw NotAGroup("no identity element");
    for (idx a = 0; a < m; ++a) {
        bool found = false;
        for (idx b = 0; b < m && !found; ++b) found = T(a, b) == id && T(b, a) == id;
        if (!found) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
    if (names.empty())
        for (idx a = 0; a < m; ++a) names.push_back("g" + std::to_string(a));
    if (names.size() != std::size_t(m)) throw NotAGroup("names count mismatch");
    return GroupTable{m, std::move(table), id, std::move(names), std::move(label)};
}

/// The cyclic group C_n.
inline GroupTable cyclic_group(idx n) {
    if (n < 1) throw NotAGroup("cyclic group order must be positive");
    std::vector<idx> table(std::size_t(n) * n);
    for (idx a = 0; a < n; ++a)
        for (idx b = 0; b < n; ++b) table[std::size_t(a) * n + b] = idx((a + b) % n);
    std::vector<std::string> names;
    for (idx a = 0; a < n; ++a)
        names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    return validate_group(n, std::move(table), std::move(names), "C" + std::to_string(n));
}

/// The group algebra R[G]: formal R-combinations of group elements with the
/// convolution product. Coefficient vectors are base-|R| digits, one per
/// group element.
inline RingPtr group_algebra(const RingPtr& R, const GroupTable& G, long long cap = kDefaultCap,
                             std::string provenance = "") {
    long long size = 1;
    std::string label = provenance.empty()
                            ? "groupalg(" + R->provenance() + "," + G.label + ")"
                            : provenance;
    for (idx i = 0; i < G.order; ++i) {
        size *= R->size();
        detail::require_cap(size, cap, label);
    }
    const idx m = idx(size);
    auto decode = [&](idx v) {
        std::vector<idx> c(G.order);
        for (idx i = 0; i < G.order; ++i) {
            c[i] = v % R->size();
            v /= R->size();
        }
        return c;
    };
    auto encode = [&](const std::vector<idx>& c) {
        idx v = 0;
        for (idx i = G.order - 1; i >= 0; --i) v = v * R->size() + c[i];
        return v;
    };
    std::vector<std::vector<idx>> coeffs(m);
    for (idx v = 0; v < m; ++v) coeffs[v] = decode(v);
    std::vector<idx> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (idx a = 0; a < m; ++a)
        for (idx b = 0; b < m; ++b) {
            std::vector<idx> s(G.order), p(G.order, R->zero());
            for (idx i = 0; i < G.order; ++i) s[i] = R->add(coeffs[a][i], coeffs[b][i]);
            for (idx i = 0; i < G.order; ++i)
                for (idx j = 0; j < G.order; ++j) {
                    idx g = G.table[std::size_t(i) * G.order + j];
                    p[g] = R->add(p[g], R->mul(coeffs[a][i], coeffs[b][j]));
                }
            add[std::size_t(a) * m + b] = encode(s);
            mul[std::size_t(a) * m + b] = encode(p);
        }
    std::vector<std::string> names;
    names.reserve(m);
    for (idx v = 0; v < m; ++v) {
        std::string s;
        for (idx i = 0; i < G.order; ++i) {
            idx c = coeffs[v][i];
            if (c == R->zero()) continue;
            if (!s.empty()) s += "+";
            if (i == G.identity) {
                s += R->name(c);
            } else if (c == R->one()) {
                s += G.names[i];
            } else {
                s += (detail::needs_parens(R->name(c)) ? "(" + R->name(c) + ")" : R->name(c)) +
                     G.names[i];
            }
        }
        names.push_back(s.empty() ? R->name(R->zero()) : s);
    }
    std::vector<idx> oc(G.order, R->zero());
    oc[G.identity] = R->one();
    return FiniteRing::seal_trusted(m, std::move(add), std::move(mul), 0, encode(oc),
                                    std::move(names), std::move(label));
}

}  // namespace finring
