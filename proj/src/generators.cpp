/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/generators.hpp"

#include <algorithm>
#include <map>

#include "oddpair/isomorphism.hpp"

namespace oddpair {

Graph gen_hole(int k) {
    if (k < 4) throw InvalidArgument("holes need at least 4 vertices");
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
    return std::move(b).build();
}

Graph gen_antihole(int k) { return gen_hole(k).complement(); }

Graph gen_prism(int l1, int l2, int l3) {
    const int lens[3] = {l1, l2, l3};
    for (int l : lens)
        if (l < 1) throw InvalidArgument("prism path lengths must be >= 1");

    const int n = 6 + (l1 - 1) + (l2 - 1) + (l3 - 1);
    GraphBuilder b(n);
    b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(1, 2);
    b.add_edge(3, 4), b.add_edge(3, 5), b.add_edge(4, 5);
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        int prev = i;  // a_i
        for (int step = 1; step < lens[i]; ++step) {
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, 3 + i);  // close onto b_i
    }
    return std::move(b).build();
}

DoubleSplitResult gen_double_split(const DoubleSplitSpec& spec) {
    const int m = spec.m, n = spec.n;
    if (m < 2 || n < 2) throw InvalidArgument("double split requires m, n >= 2");
    if (spec.straight.size() != static_cast<size_t>(m) * static_cast<size_t>(n))
        throw InvalidArgument("orientation matrix must have m*n entries");
    if (2 * (m + n) > Graph::kMaxVertices)
        throw InvalidArgument("double split too large");

    // Column relabeling c_j <-> d_j so that a_1 sees every c_j (and hence
    // b_1 every d_j).
    std::vector<bool> orient = spec.straight;
    for (int j = 0; j < n; ++j)
        if (!orient[static_cast<size_t>(j)])
            for (int i = 0; i < m; ++i)
                orient[static_cast<size_t>(i) * static_cast<size_t>(n) +
                       static_cast<size_t>(j)] =
                    !orient[static_cast<size_t>(i) * static_cast<size_t>(n) +
                            static_cast<size_t>(j)];

    DoubleSplitResult r;
    r.m = m;
    r.n = n;
    GraphBuilder b(2 * (m + n));
    for (int i = 0; i < m; ++i) b.add_edge(r.a(i), r.b(i));
    for (int j = 0; j < n; ++j)
        for (int jj = j + 1; jj < n; ++jj) {
            b.add_edge(r.c(j), r.c(jj));
            b.add_edge(r.c(j), r.d(jj));
            b.add_edge(r.d(j), r.c(jj));
            b.add_edge(r.d(j), r.d(jj));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (orient[static_cast<size_t>(i) * static_cast<size_t>(n) +
                       static_cast<size_t>(j)]) {
                b.add_edge(r.a(i), r.c(j));
                b.add_edge(r.b(i), r.d(j));
            } else {
                b.add_edge(r.a(i), r.d(j));
                b.add_edge(r.b(i), r.c(j));
            }
        }
    r.graph = std::move(b).build();
    r.k_a = bit(r.a(0));
    r.k_b = bit(r.b(0));
    for (int j = 0; j < n; ++j) r.k_a |= bit(r.c(j)), r.k_b |= bit(r.d(j));
    return r;
}

BipartiteSample gen_random_bipartite(int a, int b, double p, std::uint64_t seed) {
    if (a < 0 || b < 0 || a + b > Graph::kMaxVertices)
        throw InvalidArgument("bad bipartite side sizes");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("edge probability outside [0, 1]");
    SplitMix64 rng{seed};
    GraphBuilder builder(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (rng.next_unit() < p) builder.add_edge(i, a + j);
    BipartiteSample s;
    s.graph = std::move(builder).build();
    s.left = full_set(a);
    s.right = full_set(a + b) & ~s.left;
    return s;
}

Graph graph_from_edge_code(int n, std::uint64_t code) {
    const int m = n * (n - 1) / 2;
    GraphBuilder b(n);
    int pos = m - 1;  // bit (0,1) is the most significant
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, --pos)
            if ((code >> pos) & 1) b.add_edge(u, v);
    return std::move(b).build();
}

void enumerate_labeled(int n, const std::function<bool(const Graph&)>& visit) {
    if (n < 0 || n > 8)
        throw CapExceeded("labeled enumeration supports n <= 8 (n = " +
                          std::to_string(n) + ")");
    const int m = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code)
        if (!visit(graph_from_edge_code(n, code))) return;
}

bool is_triangle_free(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        for (int u : bits(g.neighbors(v) & ~full_set(v + 1)))
            if (g.neighbors(v) & g.neighbors(u)) return false;
    return true;
}

std::vector<Graph> enumerate_canonical(int n,
                                       const std::function<bool(const Graph&)>& keep) {
    if (n < 0 || n > 11)
        throw CapExceeded("canonical enumeration supports n <= 11 (n = " +
                          std::to_string(n) + ")");
    if (n == 0) return {};

    std::vector<Graph> level{Graph(1)};
    if (keep && !keep(level.front())) level.clear();

    for (int k = 2; k <= n; ++k) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level) {
            for (Vset nbhd = 0; nbhd < (Vset{1} << (k - 1)); ++nbhd) {
                auto edges = g.edge_list();
                for (int u : bits(nbhd)) edges.push_back({u, k - 1});
                Graph candidate = Graph::from_edges(k, edges);
                if (keep && !keep(candidate)) continue;
                const std::uint64_t canon = canonical_code(candidate);
                next.emplace(canon, std::move(candidate));
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace oddpair
