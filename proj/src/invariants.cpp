/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace oddpair {

bool coloring_is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (c.colors[v] < 0 || c.colors[v] >= c.palette) return false;
        for (int u : bits(g.neighbors(v) & ~full_set(v + 1)))
            if (c.colors[u] == c.colors[v]) return false;
    }
    return true;
}

namespace {

struct MaxSetSearch {
    const Graph& g;
    bool stable;  // extend by non-neighbors instead of neighbors
    int best = 0;
    Vset best_set = 0;

    Vset candidates(int v, Vset p) const {
        return stable ? p & ~g.neighbors(v) : p & g.neighbors(v);
    }

    void go(Vset r, int rsize, Vset p) {
        if (rsize > best) {
            best = rsize;
            best_set = r;
        }
        while (p) {
            if (rsize + count(p) <= best) return;
            const int v = lowest(p);
            p &= p - 1;
            go(r | bit(v), rsize + 1, candidates(v, p));
        }
    }
};

MaxSetSearch run_max_search(const Graph& g, bool stable) {
    MaxSetSearch s{g, stable};
    s.go(0, 0, g.vertices());
    return s;
}

}  // namespace

int clique_number(const Graph& g) { return run_max_search(g, false).best; }

int independence_number(const Graph& g) { return run_max_search(g, true).best; }

Vset max_clique_witness(const Graph& g) { return run_max_search(g, false).best_set; }

Vset max_stable_witness(const Graph& g) { return run_max_search(g, true).best_set; }

namespace {

// Order vertices by decreasing degree, index ascending on ties.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

bool color_with(const Graph& g, const std::vector<int>& order, int k,
                std::vector<int>& colors, size_t depth, int used) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    // New color indices are introduced in order, so each color-class
    // partition is tried once.
    const int tries = std::min(k, used + 1);
    for (int c = 0; c < tries; ++c) {
        bool clash = false;
        for (int u : bits(g.neighbors(v)))
            if (colors[u] == c) { clash = true; break; }
        if (clash) continue;
        colors[v] = c;
        if (color_with(g, order, k, colors, depth + 1, std::max(used, c + 1)))
            return true;
        colors[v] = -1;
    }
    return false;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw CapExceeded("chromatic_number cap " + std::to_string(cap) +
                          " exceeded (n = " + std::to_string(n) + ")");
    if (n == 0) return {0, {{}, 0}};

    const auto order = degree_order(g);
    const int lb = clique_number(g);

    // Greedy upper bound; exact when it meets the clique bound.
    std::vector<int> greedy(static_cast<size_t>(n), -1);
    int ub = 0;
    for (int v : order) {
        Vset taken = 0;
        for (int u : bits(g.neighbors(v)))
            if (greedy[u] >= 0) taken |= bit(greedy[u]);
        const int c = lowest(~taken);
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }
    if (ub == lb) return {ub, {std::move(greedy), ub}};

    for (int k = lb; ; ++k) {
        std::vector<int> colors(static_cast<size_t>(n), -1);
        if (color_with(g, order, k, colors, 0, 0)) return {k, {std::move(colors), k}};
    }
}

InvariantSummary invariant_summary(const Graph& g, int chi_cap) {
    return {g.order(), clique_number(g), independence_number(g),
            chromatic_number(g, chi_cap).chi};
}

namespace {

void bron_kerbosch(const Graph& g, Vset r, Vset p, Vset x, std::vector<Vset>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X with most neighbors in P.
    int pivot = -1, pivot_deg = -1;
    for (int u : bits(p | x)) {
        const int d = count(p & g.neighbors(u));
        if (d > pivot_deg) pivot = u, pivot_deg = d;
    }
    for (int v : bits(p & ~g.neighbors(pivot))) {
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

void sets_of_size(const Graph& g, bool stable, int target, Vset r, int rsize,
                  Vset p, std::vector<Vset>& out) {
    if (rsize == target) {
        out.push_back(r);
        return;
    }
    while (p) {
        if (rsize + count(p) < target) return;
        const int v = lowest(p);
        p &= p - 1;
        sets_of_size(g, stable, target, r | bit(v), rsize + 1,
                     stable ? p & ~g.neighbors(v) : p & g.neighbors(v), out);
    }
}

}  // namespace

std::vector<Vset> maximal_cliques(const Graph& g) {
    if (g.order() == 0) return {};
    std::vector<Vset> out;
    bron_kerbosch(g, 0, g.vertices(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vset> omega_cliques(const Graph& g) {
    std::vector<Vset> out;
    const int w = clique_number(g);
    if (w == 0) return out;
    sets_of_size(g, false, w, 0, 0, g.vertices(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vset> alpha_stable_sets(const Graph& g) {
    std::vector<Vset> out;
    const int a = independence_number(g);
    if (a == 0) return out;
    sets_of_size(g, true, a, 0, 0, g.vertices(), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vset> all_cliques(const Graph& g) {
    std::vector<Vset> out;
    for (Vset s = 1; s < (Vset{1} << g.order()); ++s)
        if (g.is_clique(s)) out.push_back(s);
    return out;
}

namespace {

void partition_search(const Graph& g, int palette, std::size_t limit, int v,
                      std::vector<Vset>& classes,
                      std::vector<std::vector<Vset>>& out) {
    if (limit > 0 && out.size() >= limit) return;
    if (v == g.order()) {
        out.push_back(classes);
        return;
    }
    // First-use ordering of classes: each partition appears exactly once.
    const int open = static_cast<int>(classes.size());
    for (int c = 0; c < open; ++c) {
        if (g.neighbors(v) & classes[c]) continue;
        classes[c] |= bit(v);
        partition_search(g, palette, limit, v + 1, classes, out);
        classes[c] &= ~bit(v);
    }
    if (open < palette) {
        classes.push_back(bit(v));
        partition_search(g, palette, limit, v + 1, classes, out);
        classes.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Vset>> proper_partitions(const Graph& g, int palette,
                                                 std::size_t limit) {
    std::vector<std::vector<Vset>> out;
    if (palette <= 0 && g.order() > 0) return out;
    std::vector<Vset> classes;
    partition_search(g, palette, limit, 0, classes, out);
    return out;
}

namespace {

std::vector<Vset> subsets_by_size(int n) {
    std::vector<Vset> subsets;
    subsets.reserve(size_t{1} << n);
    for (Vset s = 0; s < (Vset{1} << n); ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Vset a, Vset b) { return count(a) < count(b); });
    return subsets;
}

}  // namespace

PerfectnessResult is_perfect(const Graph& g, int cap) {
    if (g.order() > cap)
        throw CapExceeded("is_perfect cap " + std::to_string(cap) +
                          " exceeded (n = " + std::to_string(g.order()) + ")");
    for (Vset s : subsets_by_size(g.order())) {
        auto [h, mapping] = g.induced(s);
        if (chromatic_number(h).chi != clique_number(h)) return {false, s};
    }
    return {true, std::nullopt};
}

LovaszResult lovasz_bound_holds(const Graph& g, int cap) {
    if (g.order() > cap)
        throw CapExceeded("lovasz_bound_holds cap " + std::to_string(cap) +
                          " exceeded (n = " + std::to_string(g.order()) + ")");
    for (Vset s : subsets_by_size(g.order())) {
        auto [h, mapping] = g.induced(s);
        if (independence_number(h) * clique_number(h) < h.order()) return {false, s};
    }
    return {true, std::nullopt};
}

}  // namespace oddpair
