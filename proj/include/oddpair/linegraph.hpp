/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddpair/graph.hpp"
#include "oddpair/paths.hpp"

namespace oddpair {

struct LineGraphResult {
    Graph graph;                      // one vertex per edge of the root
    std::vector<Edge> edge_of_vertex; // root edge behind each line-graph vertex
};

/// Line graph: vertices are the edges of r in lexicographic order, adjacent
/// iff the edges share an endpoint.
LineGraphResult line_graph(const Graph& r);

struct PatternHit {
    std::string pattern;
    std::vector<int> vertices;
};

struct ClawDiamondResult {
    bool free = true;
    std::optional<PatternHit> hit;
};

ClawDiamondResult is_claw_diamond_free(const Graph& g);

/// Root graph R of a claw- and diamond-free graph g: one clique vertex per
/// maximal clique of g (mask order, indices 0..k-1), one pendant vertex per
/// g-vertex lying in a single maximal clique (source order, indices k..).
/// Clique vertices are adjacent iff the cliques intersect; each pendant hangs
/// off its clique vertex. L(R) is isomorphic to g via redge_of_gvertex, which
/// names the R-edge corresponding to each g-vertex; the constructor verifies
/// this before returning. An isolated g-vertex contributes a clique vertex
/// plus a pendant, so the round trip stays total.
struct RootGraph {
    Graph graph;
    std::vector<Vset> cliques;
    std::vector<int> pendant_source;
    std::vector<Edge> redge_of_gvertex;

    int clique_vertex_count() const { return static_cast<int>(cliques.size()); }
    bool is_clique_vertex(int r_vertex) const {
        return r_vertex < clique_vertex_count();
    }
};

/// Throws PreconditionFailed (naming the witness) when g has a claw or a
/// diamond, and Error on internal consistency failures that the structure
/// theory rules out (a vertex in three maximal cliques, an overlap of two).
RootGraph root_graph(const Graph& g);

struct CliqueBipartition {
    std::vector<Vset> side_a;
    std::vector<Vset> side_b;
};

struct BipartitionResult {
    bool ok = false;
    CliqueBipartition partition;          // when ok
    std::vector<Vset> odd_clique_cycle;   // when not: cliques forming an odd cycle
};

/// Splits the maximal cliques of a claw/diamond-free graph into the two
/// stable sides of its root graph. When the root is not bipartite, fails and
/// returns a shortest odd cycle of pairwise-intersecting cliques instead.
BipartitionResult clique_bipartition(const Graph& g);

struct BipartitionViolation {
    Vset k1 = 0;
    Vset k2 = 0;
    bool same_side = false;
    PairVerdict got = PairVerdict::NoExternalPath;
};

struct BipartitionReport {
    bool ok = true;
    int pairs_checked = 0;
    std::string structural_error;  // partition does not list each clique once
    std::vector<BipartitionViolation> violations;
};

/// Checks a claimed bipartition against path parity: same-side pairs must
/// classify OddPair, cross-side pairs EvenPair (NoExternalPath passes both).
BipartitionReport verify_bipartition(const Graph& g, const CliqueBipartition& part,
                                     int cap = 16);

}  // namespace oddpair
