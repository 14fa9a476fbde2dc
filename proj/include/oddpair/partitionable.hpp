/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "oddpair/graph.hpp"
#include "oddpair/paths.hpp"

namespace oddpair {

/// (p,q)-partitionable witness: for every vertex v, G \ v splits into p
/// cliques of size q and into q stable sets of size p (n = pq + 1).
struct PartitionWitness {
    int p = 0;
    int q = 0;
    struct PerVertex {
        std::vector<Vset> clique_parts;
        std::vector<Vset> stable_parts;
    };
    std::vector<PerVertex> per_vertex;
};

bool partition_witness_valid(const Graph& g, const PartitionWitness& w);

/// Tries (p,q) = (alpha, omega) first, then every factorization of n-1 with
/// p,q >= 1, using exact-cover backtracking over precomputed parts.
std::optional<PartitionWitness> find_partitionable_witness(const Graph& g,
                                                           int cap = 13);

/// The eight Bland-Huang-Trotter properties, each recomputed from scratch by
/// enumeration (property 8 by full enumeration of omega-colorings of G \ v as
/// color-class partitions).
struct BHTReport {
    bool witness_valid = false;
    std::array<bool, 8> property{};
    bool all_hold = false;
    int n = 0, omega = 0, alpha = 0;
    int omega_clique_count = 0;
    int alpha_stable_count = 0;
};

BHTReport bht_report(const Graph& g, const PartitionWitness& w);

/// Exhaustive scan of non-trivial odd pairs of cliques of a desk-scale
/// minimal imperfect graph (an odd hole or odd antihole, verified): none may
/// have |K1| + |K2| = omega. Reports the size distribution of the pairs.
struct OmegaSumReport {
    bool ok = true;
    int omega = 0;
    int nontrivial_odd_pairs = 0;
    std::map<std::pair<int, int>, int> size_distribution;  // (|K1|,|K2|), |K1|<=|K2|
    std::optional<std::pair<Vset, Vset>> violation;
};

OmegaSumReport check_omega_sum_theorem(const Graph& g, int cap = 16);

/// Case |K1|+|K2| < omega of the minimal-imperfect analysis: the added edges
/// must destroy no alpha-stable set, and the merged graph must again be
/// partitionable. Both facts are recomputed by enumeration; the report draws
/// no further conclusion.
struct StablePreservationReport {
    bool stables_preserved = false;
    std::optional<Vset> destroyed_stable;
    int alpha_before = 0;
    int alpha_after = 0;
    bool merged_partitionable = false;
};

StablePreservationReport check_stable_preservation(const Graph& g, Vset k1, Vset k2,
                                                   int cap = 13);

/// Case |K1|+|K2| > omega: the merged graph must have K1 u K2 as its unique
/// maximum clique; partitionability (expected to fail) is reported alongside.
struct UniqueMaxCliqueReport {
    bool unique = false;
    int omega_merged = 0;
    int omega_clique_count = 0;
    bool union_is_max = false;
    bool merged_partitionable = false;
};

UniqueMaxCliqueReport check_unique_max_clique(const Graph& g, Vset k1, Vset k2,
                                              int cap = 13);

/// True when the whole vertex set induces a chordless odd cycle >= 5 or the
/// complement does: the desk-scale minimal imperfect graphs.
bool is_odd_hole_graph(const Graph& g);
bool is_minimal_imperfect_desk(const Graph& g);

}  // namespace oddpair
