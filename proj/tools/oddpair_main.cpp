/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 *
 * Command-line front end. Everything goes through the C API in oddpair.h;
 * graphs travel as graph6 lines, reports as JSON.
 */
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddpair.h"

namespace {

constexpr int kExitOk = 0, kExitFailed = 1, kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { oddpair_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(oddpair_graph* g) const { oddpair_graph_free(g); }
};
using GraphHandle = std::unique_ptr<oddpair_graph, GraphDeleter>;

int fail(oddpair_status s) {
    std::cerr << "oddpair: " << oddpair_status_name(s) << ": "
              << oddpair_last_error() << "\n";
    return s == ODDPAIR_ERR_INVALID_ARGUMENT || s == ODDPAIR_ERR_PARSE
               ? kExitUsage
               : kExitFailed;
}

int emit_graph(const oddpair_graph* g) {
    CString line;
    char* raw = nullptr;
    if (oddpair_status s = oddpair_graph_to_g6(g, &raw)) return fail(s);
    line.reset(raw);
    std::cout << line.get() << "\n";
    return kExitOk;
}

// Writes the report to --json PATH or stdout and prints a one-line summary
// to stderr. Scans exit 0 once the report exists; suites exit 1 on failure.
int deliver_report(const char* json, int passed, const std::string& json_path,
                   const std::string& label, bool passed_gates_exit) {
    if (json_path.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "oddpair: cannot write " << json_path << "\n";
            return kExitFailed;
        }
        out << json << "\n";
    }
    std::cerr << label << ": " << (passed ? "PASS" : "FAIL") << "\n";
    if (passed_gates_exit && !passed) return kExitFailed;
    return kExitOk;
}

struct CommonOpts {
    int n_max = 0;
    int cap = 0;
    bool allow_vacuous = false;
    bool no_vacuous = false;
    bool canonical = false;
    std::uint64_t seed = 0;
    int threads = 0;
    std::size_t verdict_limit = 0;
    std::string json_path;

    void attach(CLI::App* app, bool with_corpus_flags = true) {
        app->add_option("--n-max", n_max, "corpus size bound (0 = command default)");
        app->add_option("--cap", cap, "per-graph search cap");
        app->add_flag("--allow-vacuous", allow_vacuous,
                      "count disconnected pairs as even pairs (literal reading)");
        app->add_flag("--no-vacuous", no_vacuous,
                      "require a connecting path for even pairs in scans");
        if (with_corpus_flags)
            app->add_flag("--canonical", canonical,
                          "scan one representative per isomorphism class");
        app->add_option("--seed", seed, "seed for all randomized corpora");
        app->add_option("--threads", threads, "worker threads (0 = hardware)");
        app->add_option("--verdict-limit", verdict_limit,
                        "max per-graph verdict rows kept in reports");
        app->add_option("--json", json_path, "write the JSON report to this file");
    }

    oddpair_options resolve() const {
        oddpair_options o;
        oddpair_options_init(&o);
        if (n_max > 0) o.n_max = n_max;
        if (cap > 0) o.cap = cap;
        if (allow_vacuous) o.allow_vacuous = 1;
        if (no_vacuous) o.allow_vacuous = 0;
        if (canonical) o.labeled = 0;
        if (seed) o.seed = seed;
        if (threads > 0) o.threads = threads;
        if (verdict_limit > 0) o.verdict_limit = verdict_limit;
        return o;
    }
};

std::string read_stdin() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oddpair: exact desk-scale verification of odd pairs of "
                 "cliques in Berge and perfect graphs"};
    app.require_subcommand(1);

    // --- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name (see `oddpair suites`)")
        ->required();
    CommonOpts verify_opts;
    verify_opts.attach(verify);

    auto* suites = app.add_subcommand("suites", "list verification suites");

    // --- conjecture scans -------------------------------------------------
    auto* cstruct = app.add_subcommand(
        "conjecture-struct",
        "scan Berge graphs for even pairs / odd pairs of maximal cliques");
    CommonOpts cstruct_opts;
    cstruct_opts.attach(cstruct);
    bool cstruct_stdin = false;
    cstruct->add_flag("--stdin", cstruct_stdin,
                      "read the corpus as graph6 lines from standard input");

    auto* cmini = app.add_subcommand(
        "conjecture-mini",
        "odd holes/antiholes: no odd pair of maximal cliques");
    CommonOpts cmini_opts;
    cmini_opts.attach(cmini, false);
    int k_max = 4;
    cmini->add_option("--k-max", k_max, "largest k for C_{2k+1} (default 4)");

    // --- generators --------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "emit graphs as graph6 lines");
    gen->require_subcommand(1);

    auto* ghole = gen->add_subcommand("hole", "cycle C_k");
    auto* ganti = gen->add_subcommand("antihole", "complement of C_k");
    int hole_k = 5;
    ghole->add_option("k", hole_k, "cycle length (>= 4)")->required();
    ganti->add_option("k", hole_k, "cycle length (>= 4)")->required();

    auto* gprism = gen->add_subcommand("prism", "two triangles joined by paths");
    std::vector<int> prism_lens;
    gprism->add_option("lengths", prism_lens, "three path edge lengths")
        ->expected(3);

    auto* gds = gen->add_subcommand("double-split", "double split graph");
    int ds_m = 2, ds_n = 2;
    std::string ds_orientation;
    gds->add_option("m", ds_m, "rows (>= 2)")->required();
    gds->add_option("n", ds_n, "columns (>= 2)")->required();
    gds->add_option("--orientation", ds_orientation,
                    "row-major m*n matrix of 0/1 (default all 1)");

    auto* gbip = gen->add_subcommand("bipartite", "seeded random bipartite graph");
    int bip_a = 4, bip_b = 4;
    double bip_p = 0.5;
    std::uint64_t bip_seed = 1;
    gbip->add_option("a", bip_a, "left side size")->required();
    gbip->add_option("b", bip_b, "right side size")->required();
    gbip->add_option("p", bip_p, "edge probability")->required();
    gbip->add_option("--seed", bip_seed, "SplitMix64 seed");

    auto* gpat = gen->add_subcommand("pattern", "named pattern graph");
    std::string pattern_name;
    gpat->add_option("name", pattern_name,
                     "claw | diamond | double-diamond | lk33e")
        ->required();

    auto* genum = gen->add_subcommand("enumerate", "all graphs on n vertices");
    int enum_n = 4;
    bool enum_canonical = false;
    genum->add_option("n", enum_n, "vertex count")->required();
    genum->add_flag("--canonical", enum_canonical,
                    "one representative per isomorphism class");

    CLI11_PARSE(app, argc, argv);

    if (suites->parsed()) {
        char* raw = nullptr;
        if (oddpair_status s = oddpair_suite_list(&raw)) return fail(s);
        CString json(raw);
        std::cout << json.get() << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const oddpair_options o = verify_opts.resolve();
        char* raw = nullptr;
        int passed = 0;
        if (oddpair_status s = oddpair_run_suite(suite.c_str(), &o, &raw, &passed))
            return fail(s);
        CString json(raw);
        return deliver_report(json.get(), passed, verify_opts.json_path,
                              "suite " + suite, /*passed_gates_exit=*/true);
    }

    if (cstruct->parsed()) {
        const oddpair_options o = cstruct_opts.resolve();
        char* raw = nullptr;
        int passed = 0;
        oddpair_status s;
        if (cstruct_stdin) {
            const std::string corpus = read_stdin();
            s = oddpair_conjecture_struct_corpus(corpus.c_str(), &o, &raw, &passed);
        } else {
            s = oddpair_conjecture_struct_range(&o, &raw, &passed);
        }
        if (s) return fail(s);
        CString json(raw);
        return deliver_report(json.get(), passed, cstruct_opts.json_path,
                              "conjecture-struct", /*passed_gates_exit=*/false);
    }

    if (cmini->parsed()) {
        const oddpair_options o = cmini_opts.resolve();
        char* raw = nullptr;
        int passed = 0;
        if (oddpair_status s = oddpair_conjecture_mini(k_max, &o, &raw, &passed))
            return fail(s);
        CString json(raw);
        return deliver_report(json.get(), passed, cmini_opts.json_path,
                              "conjecture-mini", /*passed_gates_exit=*/true);
    }

    if (gen->parsed()) {
        oddpair_status s = ODDPAIR_OK;
        GraphHandle g;
        oddpair_graph* raw = nullptr;
        if (ghole->parsed()) {
            s = oddpair_gen_hole(hole_k, &raw);
        } else if (ganti->parsed()) {
            s = oddpair_gen_antihole(hole_k, &raw);
        } else if (gprism->parsed()) {
            s = oddpair_gen_prism(prism_lens[0], prism_lens[1], prism_lens[2], &raw);
        } else if (gds->parsed()) {
            std::vector<uint8_t> cells;
            const uint8_t* cells_ptr = nullptr;
            if (!ds_orientation.empty()) {
                for (char c : ds_orientation) {
                    if (c != '0' && c != '1') {
                        std::cerr << "oddpair: orientation must be a 0/1 string\n";
                        return kExitUsage;
                    }
                    cells.push_back(c == '1');
                }
                if (static_cast<int>(cells.size()) != ds_m * ds_n) {
                    std::cerr << "oddpair: orientation needs exactly m*n characters\n";
                    return kExitUsage;
                }
                cells_ptr = cells.data();
            }
            s = oddpair_gen_double_split(ds_m, ds_n, cells_ptr, &raw, nullptr,
                                         nullptr);
        } else if (gbip->parsed()) {
            s = oddpair_gen_random_bipartite(bip_a, bip_b, bip_p, bip_seed, &raw);
        } else if (gpat->parsed()) {
            s = oddpair_pattern(pattern_name.c_str(), &raw);
        } else if (genum->parsed()) {
            oddpair_graph_iter* it = nullptr;
            if ((s = oddpair_enumerate_open(enum_n, enum_canonical ? 1 : 0, &it)))
                return fail(s);
            for (;;) {
                oddpair_graph* next = nullptr;
                const int r = oddpair_enumerate_next(it, &next);
                if (r < 0) {
                    oddpair_enumerate_close(it);
                    return fail(static_cast<oddpair_status>(-r));
                }
                if (r == 0) break;
                GraphHandle h(next);
                if (int rc = emit_graph(h.get()); rc != kExitOk) {
                    oddpair_enumerate_close(it);
                    return rc;
                }
            }
            oddpair_enumerate_close(it);
            return kExitOk;
        }
        if (s) return fail(s);
        g.reset(raw);
        return emit_graph(g.get());
    }

    return kExitUsage;
}
