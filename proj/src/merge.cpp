/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/merge.hpp"

#include <algorithm>
#include <deque>

namespace oddpair {

namespace {

void require_disjoint_cliques(const Graph& g, Vset k1, Vset k2) {
    if (k1 == 0 || k2 == 0)
        throw InvalidArgument("clique merge requires nonempty cliques");
    if ((k1 | k2) & ~g.vertices())
        throw InvalidArgument("clique contains an out-of-range vertex");
    if (!g.is_clique(k1)) throw PreconditionFailed("K1 is not a clique");
    if (!g.is_clique(k2)) throw PreconditionFailed("K2 is not a clique");
    if (k1 & k2) throw PreconditionFailed("K1 and K2 overlap");
}

}  // namespace

MergeResult merge_cliques(const Graph& g, Vset k1, Vset k2) {
    require_disjoint_cliques(g, k1, k2);
    MergeResult r;
    r.k1 = k1;
    r.k2 = k2;
    auto edges = g.edge_list();
    for (int u : bits(k1))
        for (int v : bits(k2))
            if (!g.has_edge(u, v)) {
                r.added_edges.push_back({std::min(u, v), std::max(u, v)});
                edges.push_back(r.added_edges.back());
            }
    r.merged = Graph::from_edges(g.order(), edges);
    return r;
}

MergedCliqueClass classify_merged_clique(const Graph& g, Vset k1, Vset k2, Vset k) {
    return classify_merged_clique(g, merge_cliques(g, k1, k2), k);
}

MergedCliqueClass classify_merged_clique(const Graph& g, const MergeResult& m, Vset k) {
    const Vset k1 = m.k1, k2 = m.k2;
    if (!m.merged.is_clique(k))
        throw PreconditionFailed("K is not a clique of the merged graph");

    if (g.is_clique(k)) return {MergedCliqueCase::CliqueOfG, std::nullopt};
    if ((k & ~(k1 | k2)) == 0) return {MergedCliqueCase::InsideUnion, std::nullopt};

    // Neither case: exhibit the even external path of the dichotomy proof.
    // K gained an edge, so it has non-adjacent ends v1 in K1, v2 in K2, and
    // an outside vertex v of K sees both in g.
    for (int v1 : bits(k & k1))
        for (int v2 : bits(k & k2)) {
            if (g.has_edge(v1, v2)) continue;
            for (int v : bits(k & ~(k1 | k2)))
                if (g.has_edge(v, v1) && g.has_edge(v, v2))
                    return {std::nullopt, PathWitness{{v1, v, v2}}};
        }
    throw Error("internal consistency failure: merged-clique dichotomy holds "
                "but no case matched");
}

namespace {

// Shortest path between two vertices inside `within`, by breadth-first
// search; empty if unreachable.
std::vector<int> shortest_within(const Graph& g, Vset within, int from, int to) {
    std::vector<int> parent(static_cast<size_t>(g.order()), -1);
    std::deque<int> queue{from};
    Vset seen = bit(from);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : bits(g.neighbors(u) & within & ~seen)) {
            parent[static_cast<size_t>(w)] = u;
            seen |= bit(w);
            queue.push_back(w);
        }
    }
    if (!contains(seen, to)) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

RecolorResult recolor_after_merge(const Graph& g, const Coloring& coloring,
                                  Vset k1, Vset k2, bool verify_pair, int cap) {
    const int omega = clique_number(g);
    if (!coloring_is_proper(g, coloring) || coloring.palette != omega)
        throw PreconditionFailed("input coloring must be proper with exactly omega(g) = " +
                                 std::to_string(omega) + " colors");
    if (verify_pair) {
        const auto cls = classify_clique_pair(g, k1, k2, cap);
        if (cls.verdict != PairVerdict::OddPair)
            throw PreconditionFailed(std::string("{K1, K2} is not an odd pair of cliques "
                                                 "(classified ") +
                                     to_string(cls.verdict) + ")");
    }

    RecolorResult out;
    out.merge = merge_cliques(g, k1, k2);
    const Vset all = k1 | k2;

    std::vector<int> colors = coloring.colors;
    const int gamma = std::max(0, count(all) - omega);
    const int palette = omega + gamma;

    auto duplicated = [&](int v) {
        for (int u : bits(all & ~bit(v)))
            if (colors[static_cast<size_t>(u)] == colors[static_cast<size_t>(v)])
                return true;
        return false;
    };

    // Fresh colors for gamma union vertices whose color repeats in the union,
    // lowest vertex index first, re-evaluated after each assignment.
    for (int i = 0; i < gamma; ++i) {
        int pick = -1;
        for (int v : bits(all))
            if (duplicated(v)) { pick = v; break; }
        if (pick < 0)
            throw Error("internal consistency failure: fewer duplicated colors "
                        "than fresh colors needed");
        colors[static_cast<size_t>(pick)] = omega + i;
        out.fresh_colors++;
    }

    for (;;) {
        // Smallest (color, v1, v2) with the color on both sides.
        int red = -1, v1 = -1, v2 = -1;
        for (int c = 0; c < palette && red < 0; ++c) {
            int in1 = -1, in2 = -1;
            for (int v : bits(k1))
                if (colors[static_cast<size_t>(v)] == c) { in1 = v; break; }
            for (int v : bits(k2))
                if (colors[static_cast<size_t>(v)] == c) { in2 = v; break; }
            if (in1 >= 0 && in2 >= 0) red = c, v1 = in1, v2 = in2;
        }
        if (red < 0) break;

        Vset used_in_union = 0;
        for (int v : bits(all)) used_in_union |= Vset{1} << colors[static_cast<size_t>(v)];
        int blue = -1;
        for (int c = 0; c < palette; ++c)
            if (!contains(used_in_union, c)) { blue = c; break; }
        if (blue < 0)
            throw Error("internal consistency failure: no color absent from the union");

        Vset bichromatic = 0;
        for (int v = 0; v < g.order(); ++v)
            if (colors[static_cast<size_t>(v)] == red ||
                colors[static_cast<size_t>(v)] == blue)
                bichromatic |= bit(v);
        Vset comp = bit(v1);
        for (;;) {
            Vset grown = comp;
            for (int v : bits(comp)) grown |= g.neighbors(v) & bichromatic;
            if (grown == comp) break;
            comp = grown;
        }
        if (contains(comp, v2)) {
            // The exchange is blocked: the shortest red/blue path from v1 to
            // v2 is an even external path, so the pair was not odd.
            PathWitness w{shortest_within(g, comp, v1, v2)};
            if (!path_is_chordless(g, w) || w.odd())
                throw Error("internal consistency failure: blocked exchange "
                            "without an even chordless path");
            throw OddPairRefuted(std::move(w));
        }

        for (int v : bits(comp))
            colors[static_cast<size_t>(v)] =
                colors[static_cast<size_t>(v)] == red ? blue : red;
        out.swaps.push_back({red, blue, comp});
        if (static_cast<int>(out.swaps.size()) > std::min(count(k1), count(k2)))
            throw Error("internal consistency failure: exchange loop exceeded "
                        "its swap bound");
    }

    out.coloring = {std::move(colors), palette};
    if (!coloring_is_proper(out.merge.merged, out.coloring))
        throw Error("internal consistency failure: recoloring is not proper "
                    "on the merged graph");
    return out;
}

}  // namespace oddpair
