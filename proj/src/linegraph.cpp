/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/linegraph.hpp"

#include <algorithm>
#include <map>

#include "oddpair/berge.hpp"
#include "oddpair/invariants.hpp"

namespace oddpair {

LineGraphResult line_graph(const Graph& r) {
    const auto edges = r.edge_list();
    if (static_cast<int>(edges.size()) > Graph::kMaxVertices)
        throw CapExceeded("line graph would exceed " +
                          std::to_string(Graph::kMaxVertices) + " vertices");
    GraphBuilder b(static_cast<int>(edges.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &e = edges[i], &f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return {std::move(b).build(), edges};
}

ClawDiamondResult is_claw_diamond_free(const Graph& g) {
    for (const char* name : {"claw", "diamond"})
        if (auto hit = find_induced(g, pattern_by_name(name)))
            return {false, PatternHit{name, *hit}};
    return {};
}

namespace {

std::string join_vertices(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

}  // namespace

RootGraph root_graph(const Graph& g) {
    const auto cd = is_claw_diamond_free(g);
    if (!cd.free)
        throw PreconditionFailed("root graph requires a claw- and diamond-free input; found " +
                                 cd.hit->pattern + " on vertices " +
                                 join_vertices(cd.hit->vertices));

    RootGraph r;
    r.cliques = maximal_cliques(g);
    const int k = static_cast<int>(r.cliques.size());

    std::vector<std::vector<int>> homes(static_cast<size_t>(g.order()));
    for (int i = 0; i < k; ++i)
        for (int v : bits(r.cliques[i])) homes[static_cast<size_t>(v)].push_back(i);

    for (int v = 0; v < g.order(); ++v) {
        const auto& h = homes[static_cast<size_t>(v)];
        if (h.empty() || h.size() > 2)
            throw Error("internal consistency failure: vertex " + std::to_string(v) +
                        " lies in " + std::to_string(h.size()) +
                        " maximal cliques of a claw/diamond-free graph");
        if (h.size() == 1) r.pendant_source.push_back(v);
    }

    const int total = k + static_cast<int>(r.pendant_source.size());
    if (total > Graph::kMaxVertices)
        throw CapExceeded("root graph would exceed " +
                          std::to_string(Graph::kMaxVertices) + " vertices");

    GraphBuilder b(total);
    r.redge_of_gvertex.assign(static_cast<size_t>(g.order()), Edge{-1, -1});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Vset shared = r.cliques[static_cast<size_t>(i)] &
                                r.cliques[static_cast<size_t>(j)];
            if (!shared) continue;
            if (count(shared) > 1)
                throw Error("internal consistency failure: maximal cliques sharing "
                            "two vertices in a claw/diamond-free graph");
            b.add_edge(i, j);
            r.redge_of_gvertex[static_cast<size_t>(lowest(shared))] = {i, j};
        }
    for (size_t p = 0; p < r.pendant_source.size(); ++p) {
        const int v = r.pendant_source[p];
        const int clique = homes[static_cast<size_t>(v)].front();
        const int pendant = k + static_cast<int>(p);
        b.add_edge(clique, pendant);
        r.redge_of_gvertex[static_cast<size_t>(v)] = {clique, pendant};
    }
    r.graph = std::move(b).build();

    // Postcondition: L(R) reproduces g under the edge correspondence.
    const auto lg = line_graph(r.graph);
    std::map<std::pair<int, int>, int> lg_index;
    for (size_t i = 0; i < lg.edge_of_vertex.size(); ++i)
        lg_index[{lg.edge_of_vertex[i].u, lg.edge_of_vertex[i].v}] =
            static_cast<int>(i);
    auto lg_vertex = [&](int v) {
        Edge e = r.redge_of_gvertex[static_cast<size_t>(v)];
        if (e.u > e.v) std::swap(e.u, e.v);
        const auto it = lg_index.find({e.u, e.v});
        return it == lg_index.end() ? -1 : it->second;
    };
    for (int u = 0; u < g.order(); ++u) {
        if (lg_vertex(u) < 0)
            throw Error("internal consistency failure: unmapped vertex in root graph");
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v) != lg.graph.has_edge(lg_vertex(u), lg_vertex(v)))
                throw Error("internal consistency failure: L(R) does not reproduce "
                            "the input graph");
    }
    return r;
}

BipartitionResult clique_bipartition(const Graph& g) {
    const RootGraph r = root_graph(g);
    const Graph& R = r.graph;

    std::vector<int> color(static_cast<size_t>(R.order()), -1);
    bool bipartite = true;
    for (int s = 0; s < R.order() && bipartite; ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        while (!queue.empty() && bipartite) {
            const int u = queue.back();
            queue.pop_back();
            for (int w : bits(R.neighbors(u))) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(u)]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }

    BipartitionResult out;
    if (bipartite) {
        out.ok = true;
        for (int i = 0; i < r.clique_vertex_count(); ++i)
            (color[static_cast<size_t>(i)] == 0 ? out.partition.side_a
                                                : out.partition.side_b)
                .push_back(r.cliques[static_cast<size_t>(i)]);
        return out;
    }

    // Shortest odd chordless cycle of R (triangle-free, so length >= 5);
    // pendants have degree 1 and never sit on it.
    const auto hole = find_odd_hole(R, R.order());
    if (!hole) throw Error("internal consistency failure: non-bipartite root without odd hole");
    for (int v : hole->cycle) {
        if (!r.is_clique_vertex(v))
            throw Error("internal consistency failure: pendant vertex on a cycle");
        out.odd_clique_cycle.push_back(r.cliques[static_cast<size_t>(v)]);
    }
    return out;
}

BipartitionReport verify_bipartition(const Graph& g, const CliqueBipartition& part,
                                     int cap) {
    BipartitionReport rep;

    auto expected = maximal_cliques(g);
    auto claimed = part.side_a;
    claimed.insert(claimed.end(), part.side_b.begin(), part.side_b.end());
    std::sort(claimed.begin(), claimed.end());
    if (claimed != expected) {
        rep.ok = false;
        rep.structural_error =
            "sides do not list each maximal clique exactly once";
        return rep;
    }

    struct Entry {
        Vset clique;
        bool in_a;
    };
    std::vector<Entry> all;
    for (Vset c : part.side_a) all.push_back({c, true});
    for (Vset c : part.side_b) all.push_back({c, false});

    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            const bool same = all[i].in_a == all[j].in_a;
            const PairVerdict got =
                classify_clique_pair(g, all[i].clique, all[j].clique, cap).verdict;
            ++rep.pairs_checked;
            const bool fine = got == PairVerdict::NoExternalPath ||
                              got == (same ? PairVerdict::OddPair
                                           : PairVerdict::EvenPair);
            if (!fine) {
                rep.ok = false;
                rep.violations.push_back({all[i].clique, all[j].clique, same, got});
            }
        }
    return rep;
}

}  // namespace oddpair
