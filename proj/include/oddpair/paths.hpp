/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "oddpair/graph.hpp"

namespace oddpair {

/// Chordless (induced) path as an ordered vertex sequence. A single vertex is
/// a path of length 0; an edge has length 1.
struct PathWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool odd() const { return length() % 2 == 1; }
};

/// Re-checks the PathWitness invariants against g: consecutive vertices
/// adjacent, non-consecutive non-adjacent, no repeats.
bool path_is_chordless(const Graph& g, const PathWitness& p);

/// Every chordless path between u and v, each exactly once, oriented from the
/// smaller endpoint. Deterministic depth-first order. Requires u != v and
/// order <= cap.
std::vector<PathWitness> enumerate_induced_paths(const Graph& g, int u, int v,
                                                 int cap = 16);

struct EvenPairResult {
    bool even = false;      // every chordless path has even length
    bool no_path = false;   // vacuous: the two vertices are not connected
    std::optional<PathWitness> odd_witness;
};

/// Even-pair test for non-adjacent u, v (adjacent input is rejected). A
/// disconnected pair reports even with the no_path flag set; callers choose
/// whether the vacuous reading counts.
EvenPairResult is_even_pair(const Graph& g, int u, int v, int cap = 16);

/// First even pair in lexicographic (u, v) scan order. Vacuously-even pairs
/// (no connecting path) are skipped unless allow_vacuous.
std::optional<std::pair<int, int>> find_even_pair(const Graph& g,
                                                  bool allow_vacuous = false,
                                                  int cap = 16);

bool has_even_pair(const Graph& g, bool allow_vacuous = false, int cap = 16);

/// A path is external from K1 to K2 when it has exactly one end-vertex in
/// K1, exactly one in K2, and every other vertex outside K1 u K2. A common
/// vertex of the two cliques is an external path of length 0; a path of
/// positive length runs from K1 \ K2 to K2 \ K1. Paths are oriented from
/// their K1 end.
std::vector<PathWitness> external_paths(const Graph& g, Vset k1, Vset k2,
                                        int cap = 16);

/// Streaming form of external_paths; the visitor returns false to stop the
/// walk early. Enumeration order matches external_paths before its final
/// sort.
void walk_external_paths(const Graph& g, Vset k1, Vset k2,
                         const std::function<bool(const PathWitness&)>& visit,
                         int cap = 16);

enum class PairVerdict { OddPair, EvenPair, Mixed, NoExternalPath };

const char* to_string(PairVerdict v);

struct PairClassification {
    PairVerdict verdict = PairVerdict::NoExternalPath;
    std::optional<PathWitness> odd_witness;
    std::optional<PathWitness> even_witness;
};

/// Parity classification of all external paths between two cliques. Stops
/// enumerating once both parities are witnessed; witnesses are the first path
/// of each parity in enumeration order either way.
PairClassification classify_clique_pair(const Graph& g, Vset k1, Vset k2,
                                        int cap = 16);

/// Two disjoint nonempty cliques whose union is again a clique.
bool is_trivial_odd_pair(const Graph& g, Vset k1, Vset k2);

/// Scans unordered pairs of maximal cliques (mask order) for the first pair
/// classified OddPair.
std::optional<std::pair<Vset, Vset>> find_odd_pair_of_maximal_cliques(
    const Graph& g, int cap = 16);

struct QuasiParityStatus {
    bool strict_qp = true;  // every induced subgraph is a clique or has an even pair
    bool qp = true;         // every induced subgraph (>= 2 vertices) has an even
                            // pair in itself or its complement
    std::optional<Vset> strict_witness;
    std::optional<Vset> qp_witness;
};

/// Checks the two quasi-parity class definitions over every induced subgraph.
/// Uses the literal reading of the even-pair definition by default, under
/// which a disconnected pair counts. Witnesses are smallest failing subsets.
QuasiParityStatus quasi_parity_status(const Graph& g, int cap = 9,
                                      bool allow_vacuous = true);

}  // namespace oddpair
