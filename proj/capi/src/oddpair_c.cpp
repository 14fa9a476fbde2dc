/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "oddpair/berge.hpp"
#include "oddpair/generators.hpp"
#include "oddpair/graph.hpp"
#include "oddpair/harness.hpp"
#include "oddpair/invariants.hpp"
#include "oddpair/paths.hpp"

using oddpair::Graph;

struct oddpair_graph {
    Graph g;
};

struct oddpair_graph_iter {
    int n = 0;
    bool canonical = false;
    std::uint64_t next_code = 0;
    std::uint64_t code_count = 0;
    std::vector<Graph> reps;
    std::size_t next_rep = 0;
};

namespace {

thread_local std::string t_last_error;

oddpair_status note_error(oddpair_status s, const char* what) {
    t_last_error = what ? what : "";
    return s;
}

template <typename Fn>
oddpair_status guarded(Fn&& fn) {
    try {
        fn();
        return ODDPAIR_OK;
    } catch (const oddpair::ParseError& e) {
        return note_error(ODDPAIR_ERR_PARSE, e.what());
    } catch (const oddpair::CapExceeded& e) {
        return note_error(ODDPAIR_ERR_CAP_EXCEEDED, e.what());
    } catch (const oddpair::PreconditionFailed& e) {
        return note_error(ODDPAIR_ERR_PRECONDITION, e.what());
    } catch (const oddpair::InvalidArgument& e) {
        return note_error(ODDPAIR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc& e) {
        return note_error(ODDPAIR_ERR_NOMEM, e.what());
    } catch (const std::exception& e) {
        return note_error(ODDPAIR_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

oddpair_status require(bool ok, const char* what) {
    return ok ? ODDPAIR_OK : note_error(ODDPAIR_ERR_INVALID_ARGUMENT, what);
}

oddpair_status hand_out(Graph g, oddpair_graph** out) {
    *out = new oddpair_graph{std::move(g)};
    return ODDPAIR_OK;
}

oddpair::harness::ScanOptions to_scan_options(const oddpair_options* opt) {
    oddpair::harness::ScanOptions o;
    if (!opt) return o;
    o.n_max = opt->n_max;
    if (opt->cap > 0) o.cap = opt->cap;
    o.allow_vacuous = opt->allow_vacuous != 0;
    o.labeled = opt->labeled != 0;
    o.seed = opt->seed;
    o.threads = opt->threads;
    if (opt->verdict_limit > 0) o.verdict_limit = opt->verdict_limit;
    return o;
}

oddpair_status hand_out_report(const nlohmann::json& rep, char** json_out,
                               int* passed) {
    if (passed) *passed = oddpair::harness::report_passed(rep) ? 1 : 0;
    *json_out = dup_string(rep.dump(2));
    return ODDPAIR_OK;
}

}  // namespace

extern "C" {

const char* oddpair_version(void) { return "1.0.0"; }

const char* oddpair_status_name(oddpair_status status) {
    switch (status) {
        case ODDPAIR_OK: return "ok";
        case ODDPAIR_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case ODDPAIR_ERR_PARSE: return "parse_error";
        case ODDPAIR_ERR_CAP_EXCEEDED: return "cap_exceeded";
        case ODDPAIR_ERR_PRECONDITION: return "precondition_failed";
        case ODDPAIR_ERR_INTERNAL: return "internal_error";
        case ODDPAIR_ERR_NOMEM: return "out_of_memory";
    }
    return "unknown";
}

const char* oddpair_last_error(void) { return t_last_error.c_str(); }

void oddpair_string_free(char* s) { std::free(s); }

void oddpair_graph_free(oddpair_graph* g) { delete g; }

oddpair_status oddpair_graph_build(int n, const int* edges, size_t edge_count,
                                   oddpair_graph** out) {
    if (auto s = require(out && (edges || edge_count == 0), "null argument")) return s;
    return guarded([&] {
        std::vector<oddpair::Edge> es;
        es.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            es.push_back({edges[2 * i], edges[2 * i + 1]});
        hand_out(Graph::from_edges(n, es), out);
    });
}

oddpair_status oddpair_graph_from_g6(const char* line, oddpair_graph** out) {
    if (auto s = require(line && out, "null argument")) return s;
    return guarded([&] { hand_out(oddpair::decode_graph6(line), out); });
}

oddpair_status oddpair_graph_to_g6(const oddpair_graph* g, char** out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(oddpair::encode_graph6(g->g)); });
}

oddpair_status oddpair_graph_complement(const oddpair_graph* g,
                                        oddpair_graph** out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { hand_out(g->g.complement(), out); });
}

oddpair_status oddpair_graph_contract(const oddpair_graph* g, int x, int y,
                                      oddpair_graph** out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { hand_out(g->g.contracted(x, y), out); });
}

oddpair_status oddpair_graph_induced(const oddpair_graph* g, uint64_t members,
                                     oddpair_graph** out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { hand_out(g->g.induced(members).first, out); });
}

int oddpair_graph_order(const oddpair_graph* g) { return g ? g->g.order() : -1; }

int oddpair_graph_edge_count(const oddpair_graph* g) {
    return g ? g->g.edge_count() : -1;
}

int oddpair_graph_has_edge(const oddpair_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->g.order() || v >= g->g.order()) return -1;
    return g->g.has_edge(u, v) ? 1 : 0;
}

oddpair_status oddpair_gen_hole(int k, oddpair_graph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] { hand_out(oddpair::gen_hole(k), out); });
}

oddpair_status oddpair_gen_antihole(int k, oddpair_graph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] { hand_out(oddpair::gen_antihole(k), out); });
}

oddpair_status oddpair_gen_prism(int l1, int l2, int l3, oddpair_graph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] { hand_out(oddpair::gen_prism(l1, l2, l3), out); });
}

oddpair_status oddpair_gen_double_split(int m, int n, const uint8_t* straight,
                                        oddpair_graph** out, uint64_t* k_a,
                                        uint64_t* k_b) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        oddpair::DoubleSplitSpec spec;
        spec.m = m;
        spec.n = n;
        const size_t cells = m > 0 && n > 0 ? static_cast<size_t>(m * n) : 0;
        spec.straight.assign(cells, true);
        if (straight)
            for (size_t i = 0; i < cells; ++i) spec.straight[i] = straight[i] != 0;
        auto r = oddpair::gen_double_split(spec);
        if (k_a) *k_a = r.k_a;
        if (k_b) *k_b = r.k_b;
        hand_out(std::move(r.graph), out);
    });
}

oddpair_status oddpair_gen_random_bipartite(int a, int b, double p,
                                            uint64_t seed, oddpair_graph** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded(
        [&] { hand_out(oddpair::gen_random_bipartite(a, b, p, seed).graph, out); });
}

oddpair_status oddpair_pattern(const char* name, oddpair_graph** out) {
    if (auto s = require(name && out, "null argument")) return s;
    return guarded([&] { hand_out(oddpair::pattern_by_name(name), out); });
}

oddpair_status oddpair_enumerate_open(int n, int canonical,
                                      oddpair_graph_iter** out) {
    if (auto s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        auto it = std::make_unique<oddpair_graph_iter>();
        it->n = n;
        it->canonical = canonical != 0;
        if (it->canonical) {
            it->reps = oddpair::enumerate_canonical(n);
        } else {
            if (n < 0 || n > 8)
                throw oddpair::CapExceeded("labeled enumeration supports n <= 8");
            it->code_count = std::uint64_t{1} << (n * (n - 1) / 2);
        }
        *out = it.release();
    });
}

int oddpair_enumerate_next(oddpair_graph_iter* it, oddpair_graph** out) {
    if (!it || !out) return -static_cast<int>(ODDPAIR_ERR_INVALID_ARGUMENT);
    oddpair_status s = guarded([&] {
        if (it->canonical) {
            if (it->next_rep >= it->reps.size()) {
                *out = nullptr;
                return;
            }
            hand_out(it->reps[it->next_rep++], out);
        } else {
            if (it->next_code >= it->code_count) {
                *out = nullptr;
                return;
            }
            hand_out(oddpair::graph_from_edge_code(it->n, it->next_code++), out);
        }
    });
    if (s != ODDPAIR_OK) return -static_cast<int>(s);
    return *out ? 1 : 0;
}

void oddpair_enumerate_close(oddpair_graph_iter* it) { delete it; }

oddpair_status oddpair_clique_number(const oddpair_graph* g, int* out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = oddpair::clique_number(g->g); });
}

oddpair_status oddpair_independence_number(const oddpair_graph* g, int* out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = oddpair::independence_number(g->g); });
}

oddpair_status oddpair_chromatic_number(const oddpair_graph* g, int cap,
                                        int* out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded(
        [&] { *out = oddpair::chromatic_number(g->g, cap > 0 ? cap : 20).chi; });
}

oddpair_status oddpair_is_perfect(const oddpair_graph* g, int cap, int* out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded([&] {
        *out = oddpair::is_perfect(g->g, cap > 0 ? cap : 11).perfect ? 1 : 0;
    });
}

oddpair_status oddpair_is_berge(const oddpair_graph* g, int cap, int* out) {
    if (auto s = require(g && out, "null argument")) return s;
    return guarded(
        [&] { *out = oddpair::is_berge(g->g, cap > 0 ? cap : 14) ? 1 : 0; });
}

oddpair_status oddpair_find_even_pair(const oddpair_graph* g, int allow_vacuous,
                                      int* u, int* v, int* found) {
    if (auto s = require(g && u && v && found, "null argument")) return s;
    return guarded([&] {
        const auto p = oddpair::find_even_pair(g->g, allow_vacuous != 0);
        *found = p.has_value() ? 1 : 0;
        *u = p ? p->first : -1;
        *v = p ? p->second : -1;
    });
}

oddpair_status oddpair_classify_clique_pair(const oddpair_graph* g, uint64_t k1,
                                            uint64_t k2, int cap,
                                            char** json_out) {
    if (auto s = require(g && json_out, "null argument")) return s;
    return guarded([&] {
        const auto cls =
            oddpair::classify_clique_pair(g->g, k1, k2, cap > 0 ? cap : 16);
        nlohmann::json j{{"verdict", oddpair::to_string(cls.verdict)}};
        auto path_json = [](const oddpair::PathWitness& p) {
            return nlohmann::json{{"vertices", p.vertices}, {"length", p.length()}};
        };
        if (cls.odd_witness) j["odd_witness"] = path_json(*cls.odd_witness);
        if (cls.even_witness) j["even_witness"] = path_json(*cls.even_witness);
        *json_out = dup_string(j.dump());
    });
}

void oddpair_options_init(oddpair_options* opt) {
    if (!opt) return;
    const oddpair::harness::ScanOptions d;
    opt->n_max = d.n_max;
    opt->cap = d.cap;
    opt->allow_vacuous = d.allow_vacuous ? 1 : 0;
    opt->labeled = d.labeled ? 1 : 0;
    opt->seed = d.seed;
    opt->threads = d.threads;
    opt->verdict_limit = d.verdict_limit;
}

oddpair_status oddpair_suite_list(char** json_out) {
    if (auto s = require(json_out != nullptr, "null argument")) return s;
    return guarded([&] {
        *json_out = dup_string(nlohmann::json(oddpair::harness::suite_names()).dump());
    });
}

oddpair_status oddpair_run_suite(const char* name, const oddpair_options* opt,
                                 char** json_out, int* passed) {
    if (auto s = require(name && json_out, "null argument")) return s;
    return guarded([&] {
        hand_out_report(oddpair::harness::run_suite(name, to_scan_options(opt)),
                        json_out, passed);
    });
}

oddpair_status oddpair_conjecture_struct_range(const oddpair_options* opt,
                                               char** json_out, int* passed) {
    if (auto s = require(json_out != nullptr, "null argument")) return s;
    return guarded([&] {
        hand_out_report(
            oddpair::harness::conjecture_struct_scan_range(to_scan_options(opt)),
            json_out, passed);
    });
}

oddpair_status oddpair_conjecture_struct_corpus(const char* g6_corpus,
                                                const oddpair_options* opt,
                                                char** json_out, int* passed) {
    if (auto s = require(g6_corpus && json_out, "null argument")) return s;
    return guarded([&] {
        std::vector<std::string> lines;
        std::istringstream in(g6_corpus);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        hand_out_report(oddpair::harness::conjecture_struct_scan_corpus(
                            lines, to_scan_options(opt)),
                        json_out, passed);
    });
}

oddpair_status oddpair_conjecture_mini(int k_max, const oddpair_options* opt,
                                       char** json_out, int* passed) {
    if (auto s = require(json_out != nullptr, "null argument")) return s;
    return guarded([&] {
        hand_out_report(
            oddpair::harness::conjecture_mini_scan(k_max, to_scan_options(opt)),
            json_out, passed);
    });
}

}  // extern "C"
