/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddpair/graph.hpp"

namespace oddpair {

/// Chordless cycle on >= 4 vertices, reported in the graph itself or in its
/// complement.
struct HoleWitness {
    std::vector<int> cycle;
    bool in_complement = false;
    int length() const { return static_cast<int>(cycle.size()); }
};

bool cycle_is_chordless(const Graph& g, const std::vector<int>& cycle);

/// Shortest odd chordless cycle of length >= 5, or nothing. Cycles are
/// enumerated by extending induced paths from their minimum vertex, so the
/// witness is deterministic.
std::optional<HoleWitness> find_odd_hole(const Graph& g, int cap = 14);

/// No odd hole in g and none in its complement.
bool is_berge(const Graph& g, int cap = 14);

/// First injective map carrying pattern edges to edges and pattern non-edges
/// to non-edges (induced embedding), or nothing.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);

/// Named pattern library: "claw", "diamond", "double-diamond", "lk33e".
/// Unknown names raise InvalidArgument.
Graph pattern_by_name(std::string_view name);
std::vector<std::string> pattern_names();

/// Two vertex-disjoint triangles joined by three vertex-disjoint induced
/// paths, no other edges. Long when it has at least 7 vertices.
struct PrismWitness {
    std::vector<int> triangle1;           // a0 a1 a2, ascending
    std::vector<int> triangle2;           // b0 b1 b2; path i joins a_i to b_i
    std::vector<std::vector<int>> paths;  // full vertex sequences, ends included
    int total_vertices = 0;
};

std::optional<PrismWitness> find_long_prism(const Graph& g, int cap = 14);

enum class BipartisanViolation { OddHole, LongPrism, DoubleDiamond, LK33e };

const char* to_string(BipartisanViolation v);

struct BipartisanResult {
    bool bipartisan = true;
    std::optional<BipartisanViolation> violation;
    bool in_complement = false;
    std::vector<int> witness;  // vertices of the offending pattern
};

/// Neither g nor its complement contains an odd hole, a long prism, a
/// double-diamond, or L(K3,3 minus an edge) as an induced subgraph.
BipartisanResult is_bipartisan(const Graph& g, int cap = 14);

/// Vertex cutset containing a member adjacent to all other members.
struct StarCutset {
    int center = -1;
    Vset members = 0;
};

bool star_cutset_is_valid(const Graph& g, const StarCutset& c);

/// First star cutset in deterministic order (center ascending, then member
/// subset of the open neighborhood in ascending mask order), or nothing.
std::optional<StarCutset> find_star_cutset(const Graph& g);

/// Constructive cutset for nested odd pairs: given an odd pair {K1, K2} with
/// K2 maximal and a proper nonempty subclique K1_sub with {K1_sub, K2} again
/// an odd pair, returns the cutset {a} u N(a) \ {c} for the first
/// non-adjacent a in K1_sub, b in K2 and the first c in K1 \ K1_sub, verified
/// to separate c from b. Precondition failures name the violated clause.
StarCutset star_cutset_from_nested_pairs(const Graph& g, Vset k1, Vset k1_sub,
                                         Vset k2, int cap = 16);

}  // namespace oddpair
