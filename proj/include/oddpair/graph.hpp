/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddpair/bits.hpp"
#include "oddpair/error.hpp"

namespace oddpair {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, adjacency stored as
/// one neighbor bitmask per vertex. All operations return new values; a Graph
/// is safe to share between threads.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an unordered edge list. Throws InvalidArgument on
    /// an out-of-range endpoint or a self-loop (message names the pair).
    /// Duplicate edges are tolerated.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return contains(adj_[u], v); }
    Vset neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return count(adj_[v]); }
    Vset vertices() const { return full_set(n_); }

    /// Edges as (u,v) with u < v, lexicographic order.
    std::vector<Edge> edge_list() const;

    Graph complement() const;

    /// Subgraph induced by the member set, vertices relabeled 0..|s|-1 in
    /// ascending order of original index. Second element maps new -> old.
    std::pair<Graph, std::vector<int>> induced(Vset members) const;

    /// The graph G/xy: x and y replaced by one vertex adjacent to N(x)uN(y).
    /// The merged vertex lands at index min(x,y); indices above max(x,y)
    /// shift down one slot. Requires x != y and x,y non-adjacent.
    Graph contracted(int x, int y) const;

    bool is_clique(Vset s) const;
    bool is_stable(Vset s) const;

    Vset closed_neighborhood(int v) const { return adj_[v] | bit(v); }

    /// Connected components of the subgraph induced by `within`.
    std::vector<Vset> components(Vset within) const;
    bool is_connected_within(Vset within) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::vector<Vset> adj_;

    friend class GraphBuilder;
};

/// Mutable accumulator used by generators and decoders; sealed into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int order() const { return g_.order(); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

// --- graph6 interchange ------------------------------------------------
//
// One graph per text line, per the published graph6 convention: a size
// header (n+63 for n <= 62) followed by the upper triangle of the adjacency
// matrix in column-major order (bit (u,v), u<v, listed for v = 1..n-1),
// packed 6 bits per character, most significant bit first, each character
// offset by 63. Padding bits must be zero.

std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. Throws ParseError on malformed characters,
/// wrong line length, or nonzero padding; InvalidArgument for the multi-byte
/// size tiers (n > 62 is out of scope).
Graph decode_graph6(std::string_view line);

}  // namespace oddpair
