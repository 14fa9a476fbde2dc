/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddpair/graph.hpp"

namespace oddpair::harness {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct ScanOptions {
    int n_max = 0;              // 0 = command-specific default
    int cap = 16;               // per-graph search cap
    bool allow_vacuous = true;  // literal even-pair reading in conjecture scans
    bool labeled = true;        // full labeled corpus (false: canonical reps)
    std::uint64_t seed = 20260811;
    int threads = 0;  // 0 = hardware concurrency
    std::size_t verdict_limit = 5000;
};

/// Conjecture scan: every Berge graph on >= 2 vertices must have an even pair
/// in itself or its complement, or an odd pair of maximal cliques in one of
/// them. Graphs violating both are emitted with self-contained witness data.
json conjecture_struct_scan_range(const ScanOptions& opt);
json conjecture_struct_scan_corpus(const std::vector<std::string>& g6_lines,
                                   const ScanOptions& opt);

/// Odd holes and antiholes up to 2*k_max+1 vertices: no odd pair of maximal
/// cliques, the omega-sum theorem, and the classical parity facts about their
/// maximal-clique pairs.
json conjecture_mini_scan(int k_max, const ScanOptions& opt);

/// Named verification suites; see suite_names(). Unknown names raise
/// InvalidArgument.
json run_suite(const std::string& name, const ScanOptions& opt);
std::vector<std::string> suite_names();

bool report_passed(const json& report);

// Report-building helpers shared with tools and tests.
json vset_to_json(Vset s);
json graph_to_json(const Graph& g);

}  // namespace oddpair::harness
