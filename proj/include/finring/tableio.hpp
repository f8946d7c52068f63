#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "finring/constructions.hpp"
#include "finring/ring.hpp"

namespace finring {

namespace detail {

/// Line-oriented reader that keeps a 1-based line counter for diagnostics.
class LineReader {
  public:
    LineReader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++lineno_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw FileFormatError(path_, lineno_, what);
    }

    int lineno() const { return lineno_; }
    const std::string& path() const { return path_; }

  private:
    std::istream& in_;
    std::string path_;
    int lineno_ = 0;
};

inline long long parse_keyword_int(LineReader& r, const std::string& keyword) {
    std::string line;
    if (!r.next(line)) r.fail("expected '" + keyword + " <n>', got end of file");
    std::istringstream ss(line);
    std::string kw;
    long long value = 0;
    if (!(ss >> kw >> value) || kw != keyword) r.fail("expected '" + keyword + " <n>'");
    std::string extra;
    if (ss >> extra) r.fail("trailing tokens after '" + keyword + "'");
    return value;
}

inline void expect_header(LineReader& r, const std::string& header) {
    std::string line;
    if (!r.next(line)) r.fail("expected '" + header + "' header, got end of file");
    std::istringstream ss(line);
    std::string kw, extra;
    if (!(ss >> kw) || kw != header || (ss >> extra))
        r.fail("expected '" + header + "' header");
}

inline std::vector<idx> parse_row_block(LineReader& r, idx rows, idx cols) {
    std::vector<idx> out;
    out.reserve(std::size_t(rows) * cols);
    for (idx i = 0; i < rows; ++i) {
        std::string line;
        if (!r.next(line)) r.fail("expected " + std::to_string(rows) + " table rows");
        std::istringstream ss(line);
        long long v;
        idx count = 0;
        while (ss >> v) {
            out.push_back(idx(v));
            ++count;
        }
        if (!ss.eof()) r.fail("non-numeric table entry");
        if (count != cols)
            r.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(count));
    }
    return out;
}

}  // namespace detail

/// Read the raw-table ring format:
///   size n / zero i / one j / add + n rows / mul + n rows / optional names + n lines
/// Any deviation is reported with the offending line number. The result goes
/// through the full exhaustive axiom check.
inline RingPtr load_table(std::istream& in, const std::string& path = "<stream>") {
    detail::LineReader r(in, path);
    long long n = detail::parse_keyword_int(r, "size");
    if (n < 1) r.fail("size must be positive");
    long long zero = detail::parse_keyword_int(r, "zero");
    long long one = detail::parse_keyword_int(r, "one");
    if (zero < 0 || zero >= n) r.fail("zero index out of range");
    if (one < 0 || one >= n) r.fail("one index out of range");
    detail::expect_header(r, "add");
    std::vector<idx> add = detail::parse_row_block(r, idx(n), idx(n));
    detail::expect_header(r, "mul");
    std::vector<idx> mul = detail::parse_row_block(r, idx(n), idx(n));
    std::vector<std::string> names;
    std::string line;
    if (r.next(line)) {
        std::istringstream ss(line);
        std::string kw, extra;
        if (!(ss >> kw) || kw != "names" || (ss >> extra)) r.fail("expected 'names' header");
        for (idx i = 0; i < n; ++i) {
            if (!r.next(line)) r.fail("expected " + std::to_string(n) + " name lines");
            names.push_back(line);
        }
        if (r.next(line)) r.fail("unexpected content after names block");
    }
    for (std::size_t i = 0; i < add.size(); ++i)
        if (add[i] < 0 || add[i] >= n)
            throw FileFormatError(path, 0, "add entry out of range at cell " + std::to_string(i));
    for (std::size_t i = 0; i < mul.size(); ++i)
        if (mul[i] < 0 || mul[i] >= n)
            throw FileFormatError(path, 0, "mul entry out of range at cell " + std::to_string(i));
    return validate_ring(idx(n), std::move(add), std::move(mul), idx(zero), idx(one),
                         std::move(names), "raw-table");
}

inline RingPtr load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file: " + path);
    return load_table(in, path);
}

/// Canonical dump; load(dump(R)) reproduces the tables and names bit-exactly.
inline std::string dump_table(const FiniteRing& r) {
    std::ostringstream out;
    out << "size " << r.size() << "\n";
    out << "zero " << r.zero() << "\n";
    out << "one " << r.one() << "\n";
    out << "add\n";
    for (idx i = 0; i < r.size(); ++i) {
        for (idx j = 0; j < r.size(); ++j) out << (j ? " " : "") << r.add(i, j);
        out << "\n";
    }
    out << "mul\n";
    for (idx i = 0; i < r.size(); ++i) {
        for (idx j = 0; j < r.size(); ++j) out << (j ? " " : "") << r.mul(i, j);
        out << "\n";
    }
    out << "names\n";
    for (idx i = 0; i < r.size(); ++i) out << r.name(i) << "\n";
    return out.str();
}

inline void dump_table_file(const FiniteRing& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << dump_table(r);
}

/// Group Cayley-table file: size n / mul + n rows / optional names + n lines.
inline GroupTable load_group_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table file: " + path);
    detail::LineReader r(in, path);
    long long n = detail::parse_keyword_int(r, "size");
    if (n < 1) r.fail("size must be positive");
    detail::expect_header(r, "mul");
    std::vector<idx> table = detail::parse_row_block(r, idx(n), idx(n));
    std::vector<std::string> names;
    std::string line;
    if (r.next(line)) {
        std::istringstream ss(line);
        std::string kw, extra;
        if (!(ss >> kw) || kw != "names" || (ss >> extra)) r.fail("expected 'names' header");
        for (idx i = 0; i < n; ++i) {
            if (!r.next(line)) r.fail("expected " + std::to_string(n) + " name lines");
            names.push_back(line);
        }
    }
    return validate_group(idx(n), std::move(table), std::move(names), "table(" + path + ")");
}

}  // namespace finring
