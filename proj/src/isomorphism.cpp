/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace oddpair {

namespace {

// Column-major upper-triangle bit order: column v contributes bits
// (0,v)..(v-1,v). Placing vertices left to right then appends whole columns,
// which is what makes prefix pruning in canonical_code work.
std::uint64_t code_under_order(const Graph& g, const std::vector<int>& order) {
    std::uint64_t code = 0;
    const int n = static_cast<int>(order.size());
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            code = (code << 1) | (g.has_edge(order[u], order[v]) ? 1 : 0);
    return code;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::uint64_t best;
    int total_bits;
    std::vector<int> placed;

    void run(std::uint64_t partial, int placed_bits, Vset used) {
        const int k = static_cast<int>(placed.size());
        if (k == n) {
            best = std::min(best, partial);
            return;
        }
        for (int w : bits(full_set(n) & ~used)) {
            std::uint64_t col = 0;
            for (int i = 0; i < k; ++i)
                col = (col << 1) | (g.has_edge(placed[i], w) ? 1 : 0);
            const std::uint64_t next = (partial << k) | col;
            const int next_bits = placed_bits + k;
            // Compare against the same-length prefix of the incumbent.
            if (next > (best >> (total_bits - next_bits))) continue;
            placed.push_back(w);
            run(next, next_bits, used | bit(w));
            placed.pop_back();
        }
    }
};

}  // namespace

std::uint64_t edge_code(const Graph& g) {
    if (g.order() > 11) throw CapExceeded("edge_code requires n <= 11 (64-bit code)");
    std::vector<int> identity(static_cast<size_t>(g.order()));
    std::iota(identity.begin(), identity.end(), 0);
    return code_under_order(g, identity);
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 11) throw CapExceeded("canonical_code requires n <= 11 (64-bit code)");
    if (n <= 1) return 0;

    // Seed the incumbent with an ascending-degree ordering; low-degree
    // vertices early put zero bits in the most significant columns.
    std::vector<int> seed(static_cast<size_t>(n));
    std::iota(seed.begin(), seed.end(), 0);
    std::stable_sort(seed.begin(), seed.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });

    CanonSearch s{g, n, code_under_order(g, seed), n * (n - 1) / 2, {}};
    s.placed.reserve(static_cast<size_t>(n));
    s.run(0, 0, 0);
    return s.best;
}

namespace {

bool extend_map(const Graph& g, const Graph& h, std::vector<int>& image,
                const std::vector<int>& order, size_t depth, Vset used) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int cand = 0; cand < h.order(); ++cand) {
        if (contains(used, cand) || g.degree(u) != h.degree(cand)) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i)
            ok = g.has_edge(order[i], u) == h.has_edge(image[order[i]], cand);
        if (!ok) continue;
        image[u] = cand;
        if (extend_map(g, h, image, order, depth + 1, used | bit(cand))) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    const int n = g.order();

    std::vector<int> dg(static_cast<size_t>(n)), dh(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) dg[v] = g.degree(v), dh[v] = h.degree(v);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    // Most-constrained-first: descending degree, neighbors of mapped vertices
    // pulled forward greedily.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dg[a] > dg[b]; });
    for (size_t i = 1; i < order.size(); ++i) {
        Vset seen = 0;
        for (size_t j = 0; j < i; ++j) seen |= bit(order[j]);
        size_t pick = i;
        for (size_t j = i; j < order.size(); ++j)
            if (g.neighbors(order[j]) & seen) { pick = j; break; }
        std::rotate(order.begin() + i, order.begin() + pick, order.begin() + pick + 1);
    }

    std::vector<int> image(static_cast<size_t>(n), -1);
    if (extend_map(g, h, image, order, 0, 0)) return image;
    return std::nullopt;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace oddpair
