// Command-line front end for the finite-ring workbench.
//
// Exit codes (stable scripting contract):
//   0  pass / ok
//   1  a theorem check or scan reported a failure
//   2  usage or input error (bad spec, bad file, cap exceeded, unknown id)
//   3  the requested check is skipped for the given input

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "finring/finring.hpp"

namespace {

using namespace finring;

int cmd_info(const std::string& spec, long long cap) {
    RingPtr r = elaborate(spec, cap);
    std::cout << to_text(property_report(r));
    return 0;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Skipped: return 3;
    }
    return 2;
}

void print_row(const std::string& id, const std::string& spec, const CheckResult& res) {
    std::cout << id << " " << spec << " " << to_string(res.verdict);
    if (!res.note.empty()) std::cout << " " << res.note;
    std::cout << "\n";
}

int cmd_check(const std::string& spec, const std::string& id, long long cap) {
    const TheoremCheck* check = find_check(id);
    if (!check) {
        std::cerr << "error: unknown theorem id '" << id << "'\nvalid ids:";
        for (const auto& c : theorem_checks()) std::cerr << " " << c.id;
        std::cerr << "\n";
        return 2;
    }
    if (check->kind == TheoremCheck::Kind::PermanentSkip) {
        print_row(id, spec, CheckResult::skip("infinite object"));
        return 3;
    }
    if (check->kind == TheoremCheck::Kind::Context) {
        std::string text = spec.rfind("context:", 0) == 0 ? spec.substr(8) : spec;
        int fails = 0, passes = 0;
        for (const MoritaContext& ctx : elaborate_context(parse_context_spec(text), cap)) {
            CheckResult res = check_morita(ctx, cap);
            print_row(id, "context:" + ctx.provenance, res);
            if (res.verdict == Verdict::Fail) ++fails;
            if (res.verdict == Verdict::Pass) ++passes;
        }
        if (fails) return 1;
        return passes ? 0 : 3;
    }
    RingPtr r = elaborate(spec, cap);
    CheckResult res = check->run_ring(r, cap, "");
    print_row(id, r->provenance(), res);
    return verdict_exit(res.verdict);
}

int cmd_scan(const std::string& manifest, const std::string& filter, const std::string& out_path,
             const std::string& json_path, int jobs, long long cap) {
    if (!filter.empty() && !find_check(filter)) {
        std::cerr << "error: unknown check id '" << filter << "'\nvalid ids:";
        for (const auto& c : theorem_checks()) std::cerr << " " << c.id;
        std::cerr << "\n";
        return 2;
    }
    Corpus corpus = load_manifest(manifest);
    ScanOptions opt;
    opt.cap = cap;
    opt.filter = filter;
    opt.jobs = jobs;
    Ledger ledger = run_corpus(corpus, opt);
    std::string text = ledger.to_text();
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + out_path);
        out << text;
    }
    if (!json_path.empty()) {
        nlohmann::ordered_json doc;
        doc["manifest"] = manifest;
        doc["filter"] = filter;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : ledger.rows)
            doc["rows"].push_back({{"check", row.check_id},
                                   {"spec", row.spec},
                                   {"verdict", to_string(row.verdict)},
                                   {"note", row.note}});
        doc["summary"] = {{"rings", ledger.rings},
                          {"uj", ledger.uj_rings},
                          {"non_uj", ledger.nonuj_rings},
                          {"contexts", ledger.contexts},
                          {"uj_side", ledger.uj_contexts},
                          {"non_uj_side", ledger.nonuj_contexts},
                          {"pass", ledger.pass},
                          {"fail", ledger.fail},
                          {"skipped", ledger.skipped}};
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw Error("cannot open output file: " + json_path);
        out << doc.dump(2) << "\n";
    }
    return ledger.fail ? 1 : 0;
}

int cmd_decompose(const std::string& spec, const std::string& element, const std::string& kind_s,
                  long long cap) {
    DecompKind kind;
    if (kind_s == "clean")
        kind = DecompKind::Clean;
    else if (kind_s == "jclean")
        kind = DecompKind::JClean;
    else if (kind_s == "nilclean")
        kind = DecompKind::NilClean;
    else {
        std::cerr << "error: kind must be one of clean|jclean|nilclean\n";
        return 2;
    }
    RingPtr r = elaborate(spec, cap);
    idx el = -1;
    try {
        std::size_t used = 0;
        long long v = std::stoll(element, &used);
        if (used == element.size() && v >= 0 && v < r->size()) el = idx(v);
    } catch (const std::exception&) {
    }
    if (el < 0)
        for (idx i = 0; i < r->size(); ++i)
            if (r->name(i) == element) {
                el = i;
                break;
            }
    if (el < 0) {
        std::cerr << "error: element '" << element << "' not found in " << r->provenance()
                  << "\n";
        return 2;
    }
    auto ds = decompositions(r, el, kind);
    if (ds.empty()) {
        std::cout << "none\n";
    } else {
        for (const auto& d : ds)
            std::cout << "(e=" << r->name(d.idempotent_part) << ", t=" << r->name(d.other_part)
                      << ")\n";
    }
    return 0;
}

int cmd_dump(const std::string& spec, const std::string& out_path, long long cap) {
    RingPtr r = elaborate(spec, cap);
    dump_table_file(*r, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finring: a finite-ring workbench for UJ, UU and clean-type properties"};
    app.require_subcommand(1);

    long long cap = finring::kDefaultCap;
    app.add_option("--cap", cap, "carrier size cap (tables are cap^2 entries)")
        ->envname("FINRING_CAP");

    std::string info_spec;
    auto* info = app.add_subcommand("info", "print the property report for a ring spec");
    info->add_option("spec", info_spec, "ring spec, e.g. Z8 or tri(2,Z4)")->required();

    std::string check_spec, check_id;
    auto* check = app.add_subcommand("check", "run one theorem check against a spec");
    check->add_option("spec", check_spec, "ring spec (context spec for thm-morita)")->required();
    check->add_option("theorem-id", check_id, "check id, e.g. lemma-char-uj")->required();

    std::string scan_manifest, scan_filter, scan_out, scan_json;
    int scan_jobs = 1;
    auto* scan = app.add_subcommand("scan", "evaluate every check over a corpus manifest");
    scan->add_option("manifest", scan_manifest, "manifest path")->required();
    scan->add_option("--filter", scan_filter, "run only this check id");
    scan->add_option("--out", scan_out, "also write the ledger to this file");
    scan->add_option("--json", scan_json, "write a machine-readable ledger to this file");
    scan->add_option("--jobs", scan_jobs, "worker threads (output is identical for any value)");

    std::string dec_spec, dec_element, dec_kind;
    auto* dec = app.add_subcommand("decompose", "list clean-type decompositions of an element");
    dec->add_option("spec", dec_spec, "ring spec")->required();
    dec->add_option("element", dec_element, "element index or display name")->required();
    dec->add_option("kind", dec_kind, "clean|jclean|nilclean")->required();

    std::string dump_spec, dump_out;
    auto* dump = app.add_subcommand("dump", "write a ring's raw tables to a file");
    dump->add_option("spec", dump_spec, "ring spec")->required();
    dump->add_option("--out", dump_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(info_spec, cap);
        if (*check) return cmd_check(check_spec, check_id, cap);
        if (*scan) return cmd_scan(scan_manifest, scan_filter, scan_out, scan_json, scan_jobs, cap);
        if (*dec) return cmd_decompose(dec_spec, dec_element, dec_kind, cap);
        if (*dump) return cmd_dump(dump_spec, dump_out, cap);
    } catch (const finring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
