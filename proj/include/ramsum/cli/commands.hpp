#pragma once

// The ramsum command line: ram, foulkes, rnu, table, verify.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ramsum/cli/output.hpp"

namespace ramsum::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceCap = 3 };

struct GlobalOptions {
    std::string format = "text";
    int max_n = 0;  // 0: default caps / default sweep bounds
    unsigned threads = 1;
};

inline OutputDocument cmd_ram(Int n, const std::string& what) {
    if (what == "matrix") return matrix_document(build_matrix(n));
    if (what == "rowsums") return row_sums_document(row_sums(n));
    if (what == "trace") return scalar_document(n, "trace", trace(n));
    if (what == "signed-trace") {
        if (n % 2 != 0)
            throw domain_error("signed-trace is defined for even n only (got n = " + std::to_string(n) + ")");
        return scalar_document(n, "signed-trace", signed_trace(n));
    }
    throw domain_error("unknown --what '" + what + "'");
}

inline OutputDocument cmd_foulkes(int n, int r, ExpansionCache& cache) {
    return schur_document(foulkes_schur_multiplicities(n, r, cache), std::nullopt, r);
}

inline OutputDocument cmd_rnu(int n, unsigned u, const std::string& basis, ExpansionCache& cache) {
    if (basis == "ell") return ell_document(rnu_ell_expansion(n, u), u);
    if (basis == "schur") return schur_document(rnu_schur_expansion(n, u, cache), u);
    throw domain_error("unknown --basis '" + basis + "'");
}

struct TableResult {
    OutputDocument doc;
    bool mismatch = false;
};

inline TableResult cmd_table(const std::vector<int>& ns, unsigned u_max, bool compare, unsigned threads,
                             ExpansionCache& cache) {
    for (int n : ns)
        if (n < 1) throw domain_error("table: every n must be positive");
    const auto cells = positivity_table(ns, u_max, cache, compare ? &expected_values() : nullptr, threads);
    bool mismatch = false;
    for (const auto& c : cells) mismatch = mismatch || !c.matches();
    return {table_document(ns, u_max, cells, compare), mismatch};
}

inline std::pair<OutputDocument, bool> cmd_verify(const std::string& suite, int max_n, ExpansionCache& cache) {
    const auto reports = run_verify(suite, max_n, cache);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    return {verify_document(suite, reports), ok};
}

/// Entry point shared by the ramsum binary and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact Ramanujan sums, Foulkes characters and Schur expansions of R_{n,u}", "ramsum"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--max-n", g.max_n, "Expansion degree cap (verify: sweep bound)")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads for table columns")->check(CLI::Range(1u, 256u));

    Int ram_n = 0;
    std::string ram_what = "matrix";
    auto* ram = app.add_subcommand("ram", "Ramanujan matrix, row sums, trace, signed trace");
    ram->add_option("--n", ram_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    ram->add_option("--what", ram_what, "matrix|rowsums|trace|signed-trace")
        ->check(CLI::IsMember({"matrix", "rowsums", "trace", "signed-trace"}));

    int fk_n = 0, fk_r = 0;
    auto* fk = app.add_subcommand("foulkes", "Schur multiplicities of the Foulkes character l_n^(r)");
    fk->add_option("--n", fk_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    fk->add_option("--r", fk_r, "1 <= r <= n")->required()->check(CLI::PositiveNumber);

    int rnu_n = 0;
    unsigned rnu_u = 0;
    std::string rnu_basis = "schur";
    auto* rnu = app.add_subcommand("rnu", "Expansion of R_{n,u} = sum_{d|n} c_d(n/d)^u p_d^{n/d}");
    rnu->add_option("--n", rnu_n, "n >= 1")->required()->check(CLI::PositiveNumber);
    rnu->add_option("--u", rnu_u, "u >= 0")->required();
    rnu->add_option("--basis", rnu_basis, "ell|schur")->check(CLI::IsMember({"ell", "schur"}));

    std::vector<int> tab_n;
    unsigned tab_u_max = 20;
    bool tab_expected = false;
    auto* tab = app.add_subcommand("table", "Schur positivity grid of R_{n,u}");
    tab->add_option("--n", tab_n, "Comma-separated list of n")->required()->delimiter(',')->check(CLI::PositiveNumber);
    tab->add_option("--u-max", tab_u_max, "Largest u");
    tab->add_flag("--expected", tab_expected, "Compare with the reference table; exit 1 on mismatch");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "Run identity and reference-value suites");
    ver->add_option("--suite", suite, "all|arith|matrix|foulkes|paper-values")
        ->check(CLI::IsMember({"all", "arith", "matrix", "foulkes", "paper-values"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        const Format format = parse_format(g.format);
        int cap = kDefaultPartitionCap;
        if (!ver->parsed() && g.max_n > 0) {
            cap = g.max_n;
            if (cap > kDefaultPartitionCap)
                err << "warning: expansion cap raised to " << cap << "; Schur expansions at this degree need a lot of memory\n";
        }
        ExpansionCache cache(cap);
        int code = kOk;
        OutputDocument doc;
        if (ram->parsed()) {
            doc = cmd_ram(ram_n, ram_what);
        } else if (fk->parsed()) {
            doc = cmd_foulkes(fk_n, fk_r, cache);
        } else if (rnu->parsed()) {
            doc = cmd_rnu(rnu_n, rnu_u, rnu_basis, cache);
        } else if (tab->parsed()) {
            auto res = cmd_table(tab_n, tab_u_max, tab_expected, g.threads, cache);
            doc = std::move(res.doc);
            if (res.mismatch) code = kVerificationFailed;
        } else if (ver->parsed()) {
            auto [d, ok] = cmd_verify(suite, g.max_n, cache);
            doc = std::move(d);
            if (!ok) code = kVerificationFailed;
        }
        out << render(doc, format);
        return code;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const range_error& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
}

}  // namespace ramsum::cli
