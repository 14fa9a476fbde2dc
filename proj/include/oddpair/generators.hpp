/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oddpair/graph.hpp"

namespace oddpair {

/// Cycle C_k / its complement, k >= 4.
Graph gen_hole(int k);
Graph gen_antihole(int k);

/// Two triangles {0,1,2} and {3,4,5} joined by three vertex-disjoint induced
/// paths of the given edge lengths (each >= 1); interior vertices are
/// appended after 5 in path order. 6 + sum(l_i - 1) vertices.
Graph gen_prism(int l1, int l2, int l3);

/// Double split construction on a_1..a_m, b_1..b_m, c_1..c_n, d_1..d_n
/// (vertex layout in that order). straight[i*n + j] selects the matched pair
/// of edges between {a_i, b_i} and {c_j, d_j}: true gives a_i c_j and
/// b_i d_j, false the crossed pair. Columns are relabeled on construction so
/// that a_1 sees every c_j and b_1 every d_j.
struct DoubleSplitSpec {
    int m = 2;
    int n = 2;
    std::vector<bool> straight;  // row-major m x n

    bool orientation(int i, int j) const {
        return straight[static_cast<size_t>(i) * static_cast<size_t>(n) +
                        static_cast<size_t>(j)];
    }
};

struct DoubleSplitResult {
    Graph graph;
    Vset k_a = 0;  // {a_1, c_1..c_n}, a maximal clique
    Vset k_b = 0;  // {b_1, d_1..d_n}, a maximal clique
    int a(int i) const { return i; }
    int b(int i) const { return m + i; }
    int c(int j) const { return 2 * m + j; }
    int d(int j) const { return 2 * m + n + j; }
    int m = 0, n = 0;
};

DoubleSplitResult gen_double_split(const DoubleSplitSpec& spec);

/// SplitMix64 (Steele, Lea, Vigna): the fixed published generator behind all
/// seeded randomness, so streams reproduce across implementations.
struct SplitMix64 {
    std::uint64_t state = 0;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct BipartiteSample {
    Graph graph;
    Vset left = 0;   // vertices 0..a-1
    Vset right = 0;  // vertices a..a+b-1
};

/// Each left-right pair (row-major) gets an independent edge draw with
/// probability p from a SplitMix64 stream seeded as given.
BipartiteSample gen_random_bipartite(int a, int b, double p, std::uint64_t seed);

/// Graph on n vertices from the column-major upper-triangle bit code used by
/// edge_code (and graph6). Inverse of edge_code.
Graph graph_from_edge_code(int n, std::uint64_t code);

/// Streams all 2^(n(n-1)/2) labeled graphs in edge-code order (n <= 8). The
/// visitor returns false to stop.
void enumerate_labeled(int n, const std::function<bool(const Graph&)>& visit);

/// One representative per isomorphism class, built level by level by vertex
/// extension and canonical-code deduplication. The optional filter must be
/// hereditary under vertex deletion (e.g. triangle-freeness); it prunes the
/// extension tree. Output sorted by canonical code.
std::vector<Graph> enumerate_canonical(
    int n, const std::function<bool(const Graph&)>& keep = nullptr);

bool is_triangle_free(const Graph& g);

}  // namespace oddpair
