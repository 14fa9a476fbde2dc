/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "oddpair/graph.hpp"
#include "oddpair/invariants.hpp"
#include "oddpair/paths.hpp"

namespace oddpair {

/// The graph with every missing K1 x K2 edge added.
struct MergeResult {
    Graph merged;
    std::vector<Edge> added_edges;
    Vset k1 = 0;
    Vset k2 = 0;
};

/// Requires two disjoint nonempty cliques. Idempotent: merging the same pair
/// again adds nothing.
MergeResult merge_cliques(const Graph& g, Vset k1, Vset k2);

enum class MergedCliqueCase { CliqueOfG, InsideUnion };

/// Dichotomy for a clique K of the merged graph: K is already a clique of g,
/// or K sits inside K1 u K2. When {K1, K2} is not an odd pair the dichotomy
/// can fail; the failure comes back as the even external path v1 - v - v2
/// that refutes it.
struct MergedCliqueClass {
    std::optional<MergedCliqueCase> verdict;
    std::optional<PathWitness> failure_path;
};

MergedCliqueClass classify_merged_clique(const Graph& g, Vset k1, Vset k2, Vset k);

/// Same dichotomy against an already-computed merge (scan loops).
MergedCliqueClass classify_merged_clique(const Graph& g, const MergeResult& m, Vset k);

/// One bichromatic exchange: the two colors swapped and the component of the
/// red/blue subgraph of g that was flipped.
struct KempeSwap {
    int duplicate_color = 0;  // color shared across K1 and K2 before the swap
    int absent_color = 0;     // color absent from K1 u K2, swapped in
    Vset component = 0;
};

struct RecolorResult {
    MergeResult merge;
    Coloring coloring;  // proper for merge.merged, max(omega, |K1|+|K2|) colors
    int fresh_colors = 0;
    std::vector<KempeSwap> swaps;
};

/// Thrown by the exchange loop when the Kempe component of v1 reaches v2; the
/// shortest red/blue path is then an even external path between the cliques,
/// refuting the odd-pair precondition.
struct OddPairRefuted : PreconditionFailed {
    explicit OddPairRefuted(PathWitness w)
        : PreconditionFailed("Kempe component joins the cliques: pair is not odd"),
          witness(std::move(w)) {}
    PathWitness witness;
};

/// Extends an omega(g)-coloring of g to a proper coloring of the merged graph
/// with exactly max(omega(g), |K1|+|K2|) colors: colors outside K1 u K2 are
/// kept, fresh colors go to duplicated union vertices, remaining duplicates
/// across the cliques are cleared by bichromatic exchanges. The odd-pair
/// precondition is verified unless verify_pair is false (tests use that to
/// drive the OddPairRefuted path).
RecolorResult recolor_after_merge(const Graph& g, const Coloring& coloring,
                                  Vset k1, Vset k2, bool verify_pair = true,
                                  int cap = 16);

}  // namespace oddpair
