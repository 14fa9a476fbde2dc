/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "oddpair/graph.hpp"

namespace oddpair {

/// Proper vertex coloring: colors[v] in [0, palette), adjacent vertices
/// differ. palette counts the colors actually in use.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;
};

bool coloring_is_proper(const Graph& g, const Coloring& c);

struct InvariantSummary {
    int n = 0;
    int omega = 0;
    int alpha = 0;
    int chi = 0;
};

/// Exact maximum clique size. Branch and bound over candidate bitmasks.
int clique_number(const Graph& g);

/// Exact maximum stable set size, computed by its own search (tests rely on
/// alpha(g) == omega(complement(g)) as a genuine cross-check).
int independence_number(const Graph& g);

/// One maximum clique / maximum stable set (lowest mask among optima).
Vset max_clique_witness(const Graph& g);
Vset max_stable_witness(const Graph& g);

/// Exact chromatic number with a witness coloring. Branch and bound on color
/// classes, maximum-clique lower bound, vertices tried in decreasing-degree
/// order. Throws CapExceeded above the cap (default 20 vertices).
struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};
ChromaticResult chromatic_number(const Graph& g, int cap = 20);

InvariantSummary invariant_summary(const Graph& g, int chi_cap = 20);

/// All inclusion-maximal cliques, deduplicated, sorted by mask value.
std::vector<Vset> maximal_cliques(const Graph& g);

/// All cliques of size exactly omega(g) / stable sets of size alpha(g),
/// sorted by mask value.
std::vector<Vset> omega_cliques(const Graph& g);
std::vector<Vset> alpha_stable_sets(const Graph& g);

/// Every nonempty clique, ascending mask order. Subset scan; small graphs.
std::vector<Vset> all_cliques(const Graph& g);

/// Every proper coloring of g with at most `palette` colors, reported as a
/// partition into color classes (class list sorted by mask; duplicates under
/// color renaming collapse to one entry). Stops early at `limit` partitions
/// when limit > 0.
std::vector<std::vector<Vset>> proper_partitions(const Graph& g, int palette,
                                                 std::size_t limit = 0);

/// Brute-force perfectness: chi(H) == omega(H) for every induced subgraph H,
/// subsets scanned in increasing size then mask order so a returned witness
/// is a smallest violating subset.
struct PerfectnessResult {
    bool perfect = true;
    std::optional<Vset> violating_subset;
};
PerfectnessResult is_perfect(const Graph& g, int cap = 11);

/// Lovasz bound alpha(H)*omega(H) >= |V(H)| over every induced subgraph;
/// same scan order and witness convention as is_perfect.
struct LovaszResult {
    bool holds = true;
    std::optional<Vset> violating_subset;
};
LovaszResult lovasz_bound_holds(const Graph& g, int cap = 11);

}  // namespace oddpair
