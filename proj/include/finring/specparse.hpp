#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/morita.hpp"
#include "finring/ring.hpp"
#include "finring/tableio.hpp"

namespace finring {

/// Expression tree of the construction DSL.
///
/// Grammar (whitespace insignificant, integers decimal):
///   spec   := "Z" int | "GF(" int "," int ")" | "B" int
///           | "prod(" spec {"," spec} ")"
///           | "mat(" int "," spec ")" | "tri(" int "," spec ")"
///           | "polyquot(" spec "," coeffs ")"
///           | "groupalg(" spec "," group ")"
///           | "table(" path ")"
///   coeffs := "[" int {"," int} "]"       (ascending degree, leading coeff last)
///   group  := "C" int | "table(" path ")"
struct RingSpec {
    enum class Kind { Zmod, GF, Boolean, Prod, Mat, Tri, PolyQuot, GroupAlg, Table };
    enum class GroupKind { None, Cyclic, Table };

    Kind kind = Kind::Zmod;
    long long a = 0;  // Zmod n / GF p / Boolean k / Mat k / Tri k
    long long b = 0;  // GF extension degree
    std::vector<RingSpec> children;
    std::vector<long long> coeffs;  // PolyQuot
    GroupKind gkind = GroupKind::None;
    long long gorder = 0;
    std::string gpath;
    std::string path;  // Table

    bool operator==(const RingSpec&) const = default;
};

inline std::string print_spec(const RingSpec& s) {
    using K = RingSpec::Kind;
    switch (s.kind) {
        case K::Zmod: return "Z" + std::to_string(s.a);
        case K::GF: return "GF(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
        case K::Boolean: return "B" + std::to_string(s.a);
        case K::Prod: {
            std::string out = "prod(";
            for (std::size_t i = 0; i < s.children.size(); ++i) {
                if (i) out += ",";
                out += print_spec(s.children[i]);
            }
            return out + ")";
        }
        case K::Mat:
            return "mat(" + std::to_string(s.a) + "," + print_spec(s.children[0]) + ")";
        case K::Tri:
            return "tri(" + std::to_string(s.a) + "," + print_spec(s.children[0]) + ")";
        case K::PolyQuot: {
            std::string out = "polyquot(" + print_spec(s.children[0]) + ",[";
            for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s.coeffs[i]);
            }
            return out + "])";
        }
        case K::GroupAlg: {
            std::string g = s.gkind == RingSpec::GroupKind::Cyclic
                                ? "C" + std::to_string(s.gorder)
                                : "table(" + s.gpath + ")";
            return "groupalg(" + print_spec(s.children[0]) + "," + g + ")";
        }
        case K::Table: return "table(" + s.path + ")";
    }
    return "?";
}

namespace detail {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : text_(text) {
        if (text_.size() > 4096) throw Error("spec text exceeds 4 KiB");
    }

    RingSpec parse() {
        RingSpec s = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("end of input");
        return s;
    }

  private:
    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(line_, col_, expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r'))
            advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool try_consume(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        return true;
    }

    void expect(std::string_view kw) {
        if (!try_consume(kw)) fail("'" + std::string(kw) + "'");
    }

    long long parse_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (1LL << 40)) fail("smaller integer");
            advance();
        }
        return v;
    }

    std::string parse_path() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != '\n') {
            out += text_[pos_];
            advance();
        }
        while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
        if (out.empty()) fail("file path");
        return out;
    }

    RingSpec parse_spec() {
        skip_ws();
        RingSpec s;
        if (try_consume("prod(")) {
            s.kind = RingSpec::Kind::Prod;
            s.children.push_back(parse_spec());
            while (try_consume(",")) s.children.push_back(parse_spec());
            expect(")");
        } else if (try_consume("polyquot(")) {
            s.kind = RingSpec::Kind::PolyQuot;
            s.children.push_back(parse_spec());
            expect(",");
            expect("[");
            s.coeffs.push_back(parse_int());
            while (try_consume(",")) s.coeffs.push_back(parse_int());
            expect("]");
            expect(")");
        } else if (try_consume("groupalg(")) {
            s.kind = RingSpec::Kind::GroupAlg;
            s.children.push_back(parse_spec());
            expect(",");
            if (try_consume("C")) {
                s.gkind = RingSpec::GroupKind::Cyclic;
                s.gorder = parse_int();
            } else if (try_consume("table(")) {
                s.gkind = RingSpec::GroupKind::Table;
                s.gpath = parse_path();
                expect(")");
            } else {
                fail("group ('C<n>' or 'table(<path>)')");
            }
            expect(")");
        } else if (try_consume("mat(")) {
            s.kind = RingSpec::Kind::Mat;
            s.a = parse_int();
            expect(",");
            s.children.push_back(parse_spec());
            expect(")");
        } else if (try_consume("tri(")) {
            s.kind = RingSpec::Kind::Tri;
            s.a = parse_int();
            expect(",");
            s.children.push_back(parse_spec());
            expect(")");
        } else if (try_consume("table(")) {
            s.kind = RingSpec::Kind::Table;
            s.path = parse_path();
            expect(")");
        } else if (try_consume("GF(")) {
            s.kind = RingSpec::Kind::GF;
            s.a = parse_int();
            expect(",");
            s.b = parse_int();
            expect(")");
        } else if (try_consume("Z")) {
            s.kind = RingSpec::Kind::Zmod;
            s.a = parse_int();
        } else if (try_consume("B")) {
            s.kind = RingSpec::Kind::Boolean;
            s.a = parse_int();
        } else {
            fail("spec");
        }
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline std::string resolve_path(const std::string& path, const std::string& base_dir) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) return path;
    return (std::filesystem::path(base_dir) / p).string();
}

/// Rethrow construction errors tagged with the failing node's printed form.
template <typename F>
auto at_node(const RingSpec& s, F&& f) {
    auto tag = [&](const std::string& what) {
        if (what.rfind("at ", 0) == 0) return what;  // already tagged by an inner node
        std::string printed = print_spec(s);
        if (what.find(printed) != std::string::npos) return "at " + what;
        return "at " + printed + ": " + what;
    };
    try {
        return f();
    } catch (const CapExceeded& e) {
        throw CapExceeded(tag(e.what()));
    } catch (const NotPrime& e) {
        throw NotPrime(tag(e.what()));
    } catch (const NotCommutative& e) {
        throw NotCommutative(tag(e.what()));
    } catch (const NotMonic& e) {
        throw NotMonic(tag(e.what()));
    } catch (const NotAGroup& e) {
        throw NotAGroup(tag(e.what()));
    } catch (const DegenerateRing& e) {
        throw DegenerateRing(tag(e.what()));
    }
}

inline RingPtr relabel(const RingPtr& r, const std::string& provenance) {
    if (r->provenance() == provenance) return r;
    return FiniteRing::seal_trusted(r->size(), r->add_table(), r->mul_table(), r->zero(),
                                    r->one(), r->names(), provenance);
}

}  // namespace detail

inline RingSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

namespace detail {

inline RingPtr elaborate_node(const RingSpec& s, long long cap, const std::string& base_dir) {
    using K = RingSpec::Kind;
    return at_node(s, [&]() -> RingPtr {
        switch (s.kind) {
            case K::Zmod: return zmod(s.a, cap);
            case K::GF: return gf(s.a, int(s.b), cap);
            case K::Boolean: {
                if (s.a < 1) throw Error("B<k> needs k >= 1");
                std::vector<RingPtr> fs(std::size_t(s.a), zmod(2, cap));
                return product(fs, cap, print_spec(s));
            }
            case K::Prod: {
                std::vector<RingPtr> rs;
                for (const auto& c : s.children) rs.push_back(elaborate_node(c, cap, base_dir));
                return product(rs, cap);
            }
            case K::Mat: return matrix_ring(elaborate_node(s.children[0], cap, base_dir),
                                            int(s.a), cap);
            case K::Tri: return triangular_ring(elaborate_node(s.children[0], cap, base_dir),
                                                int(s.a), cap);
            case K::PolyQuot: {
                RingPtr base = elaborate_node(s.children[0], cap, base_dir);
                std::vector<idx> f;
                for (long long c : s.coeffs) {
                    if (c < 0 || c >= base->size())
                        throw Error("polyquot coefficient out of range");
                    f.push_back(idx(c));
                }
                return poly_quotient(base, f, cap);
            }
            case K::GroupAlg: {
                RingPtr base = elaborate_node(s.children[0], cap, base_dir);
                GroupTable g = s.gkind == RingSpec::GroupKind::Cyclic
                                   ? cyclic_group(idx(s.gorder))
                                   : load_group_table_file(resolve_path(s.gpath, base_dir));
                return group_algebra(base, g, cap);
            }
            case K::Table: {
                RingPtr r = load_table_file(resolve_path(s.path, base_dir));
                detail::require_cap(r->size(), cap, print_spec(s));
                return r;
            }
        }
        throw Error("unreachable spec kind");
    });
}

}  // namespace detail

/// Build the ring a spec describes. The result carries the canonical printed
/// spec as its provenance. Relative table paths resolve against base_dir.
inline RingPtr elaborate(const RingSpec& s, long long cap = kDefaultCap,
                         const std::string& base_dir = "") {
    return detail::relabel(detail::elaborate_node(s, cap, base_dir), print_spec(s));
}

inline RingPtr elaborate(std::string_view text, long long cap = kDefaultCap,
                         const std::string& base_dir = "") {
    return elaborate(parse_spec(text), cap, base_dir);
}

// Morita-context specs --------------------------------------------------------

/// Context spec grammar:
///   ctx := "diagonal(" spec "," spec ")" | "matrix(" spec ")" | "uppertri(" spec ")"
///        | "allpairs(" spec "," int ")"
///        | "pairing(" spec "," int "," table "," table ")"
///        | "file(" path ")"
///   table := "[" int {"," int} "]"
/// allpairs(Zn,k) expands to every valid pairing pair over R = S = Z/n,
/// V = W = Z/k (k must divide n); pairing(Zn,k,phi,psi) names one such pair
/// inline (row-major k x k tables); the others produce one context each.
struct ContextSpec {
    enum class Kind { Diagonal, Matrix, Uppertri, AllPairs, Pairing, File };
    Kind kind = Kind::Diagonal;
    std::vector<RingSpec> rings;
    long long k = 0;
    std::vector<long long> phi, psi;  // Pairing
    std::string path;

    bool operator==(const ContextSpec&) const = default;
};

inline std::string print_context_spec(const ContextSpec& c) {
    using K = ContextSpec::Kind;
    switch (c.kind) {
        case K::Diagonal:
            return "diagonal(" + print_spec(c.rings[0]) + "," + print_spec(c.rings[1]) + ")";
        case K::Matrix: return "matrix(" + print_spec(c.rings[0]) + ")";
        case K::Uppertri: return "uppertri(" + print_spec(c.rings[0]) + ")";
        case K::AllPairs:
            return "allpairs(" + print_spec(c.rings[0]) + "," + std::to_string(c.k) + ")";
        case K::Pairing: {
            auto table = [](const std::vector<long long>& t) {
                std::string out = "[";
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(t[i]);
                }
                return out + "]";
            };
            return "pairing(" + print_spec(c.rings[0]) + "," + std::to_string(c.k) + "," +
                   table(c.phi) + "," + table(c.psi) + ")";
        }
        case K::File: return "file(" + c.path + ")";
    }
    return "?";
}

inline ContextSpec parse_context_spec(std::string_view text) {
    // reuse the spec parser by pattern matching on the head keyword
    auto strip = [](std::string_view t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t' || t.back() == '\r'))
            t.remove_suffix(1);
        return t;
    };
    std::string_view t = strip(text);
    auto inner = [&](std::string_view head) -> std::string {
        std::string_view body = t.substr(head.size());
        if (body.empty() || body.back() != ')') throw SyntaxError(1, int(t.size()), "')'");
        body.remove_suffix(1);
        return std::string(body);
    };
    auto split_top = [](const std::string& s) {
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (char ch : s) {
            if (ch == '(' || ch == '[') ++depth;
            if (ch == ')' || ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    ContextSpec c;
    if (t.rfind("diagonal(", 0) == 0) {
        c.kind = ContextSpec::Kind::Diagonal;
        auto parts = split_top(inner("diagonal("));
        if (parts.size() != 2) throw SyntaxError(1, 1, "two ring specs in diagonal(...)");
        c.rings.push_back(parse_spec(parts[0]));
        c.rings.push_back(parse_spec(parts[1]));
    } else if (t.rfind("matrix(", 0) == 0) {
        c.kind = ContextSpec::Kind::Matrix;
        c.rings.push_back(parse_spec(inner("matrix(")));
    } else if (t.rfind("uppertri(", 0) == 0) {
        c.kind = ContextSpec::Kind::Uppertri;
        c.rings.push_back(parse_spec(inner("uppertri(")));
    } else if (t.rfind("allpairs(", 0) == 0) {
        c.kind = ContextSpec::Kind::AllPairs;
        auto parts = split_top(inner("allpairs("));
        if (parts.size() != 2) throw SyntaxError(1, 1, "allpairs(<spec>,<k>)");
        c.rings.push_back(parse_spec(parts[0]));
        c.k = std::stoll(parts[1]);
    } else if (t.rfind("pairing(", 0) == 0) {
        c.kind = ContextSpec::Kind::Pairing;
        auto parts = split_top(inner("pairing("));
        if (parts.size() != 4) throw SyntaxError(1, 1, "pairing(<spec>,<k>,<table>,<table>)");
        c.rings.push_back(parse_spec(parts[0]));
        c.k = std::stoll(parts[1]);
        auto table = [](std::string s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
            if (s.size() < 2 || s.front() != '[' || s.back() != ']')
                throw SyntaxError(1, 1, "bracketed pairing table");
            std::vector<long long> out;
            std::string cur;
            for (char ch : s.substr(1, s.size() - 2)) {
                if (ch == ',') {
                    out.push_back(std::stoll(cur));
                    cur.clear();
                } else if (ch != ' ' && ch != '\t') {
                    cur += ch;
                }
            }
            out.push_back(std::stoll(cur));
            return out;
        };
        c.phi = table(parts[2]);
        c.psi = table(parts[3]);
    } else if (t.rfind("file(", 0) == 0) {
        c.kind = ContextSpec::Kind::File;
        c.path = inner("file(");
        if (c.path.empty()) throw SyntaxError(1, 1, "file path");
    } else {
        throw SyntaxError(1, 1, "context spec (diagonal/matrix/uppertri/allpairs/file)");
    }
    return c;
}

/// Context file format:
///   R <spec> / S <spec> / V <size> / W <size>
///   vadd, wadd: addition tables of V and W
///   vleft (|R| x |V|), vright (|V| x |S|), wleft (|S| x |W|), wright (|W| x |R|)
///   phi (|V| x |W|, entries in R), psi (|W| x |V|, entries in S)
inline MoritaContext load_context_file(const std::string& path, long long cap,
                                       const std::string& base_dir) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open context file: " + path);
    detail::LineReader r(in, path);
    auto keyword_spec = [&](const std::string& keyword) {
        std::string line;
        if (!r.next(line)) r.fail("expected '" + keyword + " <spec>', got end of file");
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw != keyword) r.fail("expected '" + keyword + " <spec>'");
        std::string rest;
        std::getline(ss, rest);
        return elaborate(rest, cap, base_dir);
    };
    RingPtr R = keyword_spec("R");
    RingPtr S = keyword_spec("S");
    idx nv = idx(detail::parse_keyword_int(r, "V"));
    idx nw = idx(detail::parse_keyword_int(r, "W"));
    if (nv < 1 || nw < 1) r.fail("bimodule sizes must be positive");
    detail::expect_header(r, "vadd");
    auto vadd = detail::parse_row_block(r, nv, nv);
    detail::expect_header(r, "wadd");
    auto wadd = detail::parse_row_block(r, nw, nw);
    detail::expect_header(r, "vleft");
    auto vleft = detail::parse_row_block(r, R->size(), nv);
    detail::expect_header(r, "vright");
    auto vright = detail::parse_row_block(r, nv, S->size());
    detail::expect_header(r, "wleft");
    auto wleft = detail::parse_row_block(r, S->size(), nw);
    detail::expect_header(r, "wright");
    auto wright = detail::parse_row_block(r, nw, R->size());
    detail::expect_header(r, "phi");
    auto phi = detail::parse_row_block(r, nv, nw);
    detail::expect_header(r, "psi");
    auto psi = detail::parse_row_block(r, nw, nv);
    Bimodule V = validate_bimodule(nv, std::move(vadd), R, S, std::move(vleft), std::move(vright));
    Bimodule W = validate_bimodule(nw, std::move(wadd), S, R, std::move(wleft), std::move(wright));
    return validate_context(R, S, std::move(V), std::move(W), std::move(phi), std::move(psi),
                            "file(" + path + ")");
}

/// Build every context a spec denotes (allpairs expands; the rest are single).
inline std::vector<MoritaContext> elaborate_context(const ContextSpec& c,
                                                    long long cap = kDefaultCap,
                                                    const std::string& base_dir = "") {
    using K = ContextSpec::Kind;
    switch (c.kind) {
        case K::Diagonal:
            return {diagonal_context(elaborate(c.rings[0], cap, base_dir),
                                     elaborate(c.rings[1], cap, base_dir))};
        case K::Matrix: return {matrix_context(elaborate(c.rings[0], cap, base_dir))};
        case K::Uppertri: return {uppertri_context(elaborate(c.rings[0], cap, base_dir))};
        case K::AllPairs: {
            RingPtr R = elaborate(c.rings[0], cap, base_dir);
            if (c.k < 1 || R->size() % c.k != 0)
                throw Error("allpairs: k must divide the ring size");
            Bimodule V = cyclic_bimodule(R, R, idx(c.k));
            Bimodule W = cyclic_bimodule(R, R, idx(c.k));
            return enumerate_pairings(R, R, V, W, print_context_spec(c));
        }
        case K::Pairing: {
            RingPtr R = elaborate(c.rings[0], cap, base_dir);
            if (c.k < 1 || R->size() % c.k != 0)
                throw Error("pairing: k must divide the ring size");
            if (c.phi.size() != std::size_t(c.k) * c.k || c.psi.size() != std::size_t(c.k) * c.k)
                throw Error("pairing: tables must have k*k entries");
            Bimodule V = cyclic_bimodule(R, R, idx(c.k));
            Bimodule W = cyclic_bimodule(R, R, idx(c.k));
            std::vector<idx> phi(c.phi.begin(), c.phi.end());
            std::vector<idx> psi(c.psi.begin(), c.psi.end());
            return {validate_context(R, R, std::move(V), std::move(W), std::move(phi),
                                     std::move(psi), print_context_spec(c))};
        }
        case K::File:
            return {load_context_file(detail::resolve_path(c.path, base_dir), cap, base_dir)};
    }
    throw Error("unreachable context kind");
}

}  // namespace finring
