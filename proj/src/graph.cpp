/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/graph.hpp"

#include <algorithm>
#include <numeric>

namespace oddpair {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidArgument("vertex count " + std::to_string(n) +
                              " outside [0, " + std::to_string(kMaxVertices) + "]");
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InvalidArgument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") has an endpoint outside 0.." +
                                  std::to_string(n - 1));
        if (e.u == e.v)
            throw InvalidArgument("self-loop (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") rejected");
        g.add_edge_unchecked(e.u, e.v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
    int twice = 0;
    for (Vset row : adj_) twice += count(row);
    return twice / 2;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : bits(adj_[u] & ~full_set(u + 1))) out.push_back({u, v});
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = full_set(n_) & ~adj_[v] & ~bit(v);
    return g;
}

std::pair<Graph, std::vector<int>> Graph::induced(Vset members) const {
    if ((members & ~vertices()) != 0)
        throw InvalidArgument("induced subgraph member outside vertex range");
    std::vector<int> old_of_new;
    old_of_new.reserve(static_cast<size_t>(count(members)));
    for (int v : bits(members)) old_of_new.push_back(v);

    Graph g(static_cast<int>(old_of_new.size()));
    for (size_t i = 0; i < old_of_new.size(); ++i)
        for (size_t j = i + 1; j < old_of_new.size(); ++j)
            if (has_edge(old_of_new[i], old_of_new[j]))
                g.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
    return {std::move(g), std::move(old_of_new)};
}

Graph Graph::contracted(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || x == y)
        throw InvalidArgument("contraction requires two distinct vertices in range");
    if (has_edge(x, y))
        throw PreconditionFailed("contraction of adjacent pair (" + std::to_string(x) +
                                 "," + std::to_string(y) + ") rejected");
    const int keep = std::min(x, y);
    const int drop = std::max(x, y);

    // old -> new index map: drop removed, everything above shifts down.
    auto renumber = [&](int v) { return v > drop ? v - 1 : v; };

    Graph g(n_ - 1);
    const Vset merged = (adj_[x] | adj_[y]) & ~bit(x) & ~bit(y);
    for (int u = 0; u < n_; ++u) {
        if (u == x || u == y) continue;
        if (contains(merged, u)) g.add_edge_unchecked(renumber(u), keep);
        for (int w : bits(adj_[u] & ~full_set(u + 1)))
            if (w != x && w != y) g.add_edge_unchecked(renumber(u), renumber(w));
    }
    return g;
}

bool Graph::is_clique(Vset s) const {
    for (int v : bits(s))
        if ((adj_[v] & s) != (s & ~bit(v))) return false;
    return true;
}

bool Graph::is_stable(Vset s) const {
    for (int v : bits(s))
        if ((adj_[v] & s) != 0) return false;
    return true;
}

std::vector<Vset> Graph::components(Vset within) const {
    std::vector<Vset> comps;
    Vset left = within & vertices();
    while (left) {
        Vset comp = bit(lowest(left));
        for (;;) {
            Vset grown = comp;
            for (int v : bits(comp)) grown |= adj_[v] & within;
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool Graph::is_connected_within(Vset within) const {
    return components(within).size() <= 1;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= g_.order() || v < 0 || v >= g_.order() || u == v)
        throw InvalidArgument("bad edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    g_.add_edge_unchecked(u, v);
}

// --- graph6 -------------------------------------------------------------

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));

    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view line) {
    // Tolerate the optional ">>graph6<<" prefix and a trailing newline.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line");

    if (line[0] == '~')
        throw InvalidArgument("multi-byte graph6 size tier unsupported (n > 62)");
    const int n = static_cast<int>(line[0]) - 63;
    if (n < 0 || n > Graph::kMaxVertices)
        throw ParseError("malformed graph6 size character");

    const int nbits = n * (n - 1) / 2;
    const size_t expect = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (line.size() < expect) throw ParseError("truncated graph6 bit field");
    if (line.size() > expect) throw ParseError("trailing characters after graph6 data");

    GraphBuilder b(n);
    int idx = 0;
    for (size_t pos = 1; pos < line.size(); ++pos) {
        const int c = static_cast<unsigned char>(line[pos]) - 63;
        if (c < 0 || c > 63) throw ParseError("malformed graph6 character");
        for (int k = 5; k >= 0; --k, ++idx) {
            const bool on = (c >> k) & 1;
            if (idx >= nbits) {
                if (on) throw ParseError("nonzero graph6 padding bits");
                continue;
            }
            if (on) {
                // idx-th cell of the column-major upper triangle.
                int v = 1;
                int rem = idx;
                while (rem >= v) rem -= v, ++v;
                b.add_edge(rem, v);
            }
        }
    }
    return std::move(b).build();
}

}  // namespace oddpair
