/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/partitionable.hpp"

#include <algorithm>

#include "oddpair/invariants.hpp"
#include "oddpair/merge.hpp"

namespace oddpair {

bool is_odd_hole_graph(const Graph& g) {
    const int n = g.order();
    if (n < 5 || n % 2 == 0) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return g.is_connected_within(g.vertices());  // connected 2-regular = C_n
}

bool is_minimal_imperfect_desk(const Graph& g) {
    return is_odd_hole_graph(g) || is_odd_hole_graph(g.complement());
}

namespace {

// Exact cover of `universe` by parts drawn from `parts`; lowest uncovered
// vertex first. Appends the chosen parts to `chosen`.
bool exact_cover(const std::vector<Vset>& parts, Vset universe,
                 std::vector<Vset>& chosen) {
    if (universe == 0) return true;
    const int pivot = lowest(universe);
    for (Vset part : parts) {
        if (!contains(part, pivot) || (part & ~universe)) continue;
        chosen.push_back(part);
        if (exact_cover(parts, universe & ~part, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

std::vector<Vset> parts_of_size(const Graph& g, int size, bool stable) {
    std::vector<Vset> out;
    for (Vset s = 0; s < (Vset{1} << g.order()); ++s) {
        if (count(s) != size) continue;
        if (stable ? g.is_stable(s) : g.is_clique(s)) out.push_back(s);
    }
    return out;
}

std::optional<PartitionWitness> try_pq(const Graph& g, int p, int q) {
    PartitionWitness w;
    w.p = p;
    w.q = q;
    const auto cliques = parts_of_size(g, q, false);
    const auto stables = parts_of_size(g, p, true);
    for (int v = 0; v < g.order(); ++v) {
        PartitionWitness::PerVertex pv;
        const Vset rest = g.vertices() & ~bit(v);
        if (!exact_cover(cliques, rest, pv.clique_parts)) return std::nullopt;
        if (!exact_cover(stables, rest, pv.stable_parts)) return std::nullopt;
        w.per_vertex.push_back(std::move(pv));
    }
    return w;
}

}  // namespace

bool partition_witness_valid(const Graph& g, const PartitionWitness& w) {
    const int n = g.order();
    if (w.p < 1 || w.q < 1 || w.p * w.q + 1 != n) return false;
    if (static_cast<int>(w.per_vertex.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        const auto& pv = w.per_vertex[static_cast<size_t>(v)];
        const Vset rest = g.vertices() & ~bit(v);
        if (static_cast<int>(pv.clique_parts.size()) != w.p) return false;
        if (static_cast<int>(pv.stable_parts.size()) != w.q) return false;
        Vset covered = 0;
        for (Vset part : pv.clique_parts) {
            if (count(part) != w.q || !g.is_clique(part) || (part & covered)) return false;
            covered |= part;
        }
        if (covered != rest) return false;
        covered = 0;
        for (Vset part : pv.stable_parts) {
            if (count(part) != w.p || !g.is_stable(part) || (part & covered)) return false;
            covered |= part;
        }
        if (covered != rest) return false;
    }
    return true;
}

std::optional<PartitionWitness> find_partitionable_witness(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap)
        throw CapExceeded("partitionable search cap " + std::to_string(cap) +
                          " exceeded (n = " + std::to_string(n) + ")");
    if (n < 2) return std::nullopt;

    std::vector<std::pair<int, int>> options;
    const int a = independence_number(g), o = clique_number(g);
    if (a * o == n - 1) options.push_back({a, o});
    for (int p = 1; p <= n - 1; ++p)
        if ((n - 1) % p == 0 && std::pair{p, (n - 1) / p} != std::pair{a, o})
            options.push_back({p, (n - 1) / p});

    for (auto [p, q] : options)
        if (auto w = try_pq(g, p, q)) return w;
    return std::nullopt;
}

BHTReport bht_report(const Graph& g, const PartitionWitness& w) {
    BHTReport r;
    r.witness_valid = partition_witness_valid(g, w);
    if (!r.witness_valid)
        throw PreconditionFailed("invalid partition witness");

    r.n = g.order();
    r.omega = clique_number(g);
    r.alpha = independence_number(g);

    const auto wcliques = omega_cliques(g);
    const auto astables = alpha_stable_sets(g);
    r.omega_clique_count = static_cast<int>(wcliques.size());
    r.alpha_stable_count = static_cast<int>(astables.size());

    r.property[0] = (r.alpha == w.p && r.omega == w.q);
    r.property[1] = (r.omega_clique_count == r.n);
    r.property[2] = (r.alpha_stable_count == r.n);

    r.property[3] = r.property[4] = true;
    for (int v = 0; v < r.n; ++v) {
        int inc = 0, ins = 0;
        for (Vset c : wcliques) inc += contains(c, v);
        for (Vset s : astables) ins += contains(s, v);
        if (inc != r.omega) r.property[3] = false;
        if (ins != r.alpha) r.property[4] = false;
    }

    r.property[5] = r.property[6] = true;
    for (Vset c : wcliques) {
        int disjoint = 0;
        for (Vset s : astables) disjoint += (c & s) == 0;
        if (disjoint != 1) r.property[5] = false;
    }
    for (Vset s : astables) {
        int disjoint = 0;
        for (Vset c : wcliques) disjoint += (c & s) == 0;
        if (disjoint != 1) r.property[6] = false;
    }

    r.property[7] = true;
    for (int v = 0; v < r.n; ++v) {
        auto [h, mapping] = g.induced(g.vertices() & ~bit(v));
        if (proper_partitions(h, r.omega).size() != 1) r.property[7] = false;
    }

    r.all_hold = std::all_of(r.property.begin(), r.property.end(),
                             [](bool b) { return b; });
    return r;
}

OmegaSumReport check_omega_sum_theorem(const Graph& g, int cap) {
    if (!is_minimal_imperfect_desk(g))
        throw PreconditionFailed("input is not an odd hole or odd antihole");
    if (g.order() > cap)
        throw CapExceeded("omega-sum scan cap " + std::to_string(cap) + " exceeded");

    OmegaSumReport r;
    r.omega = clique_number(g);
    const auto cliques = all_cliques(g);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (size_t j = i + 1; j < cliques.size(); ++j) {
            const Vset k1 = cliques[i], k2 = cliques[j];
            if (k1 & k2) continue;
            if (g.is_clique(k1 | k2)) continue;  // trivial odd pair
            if (classify_clique_pair(g, k1, k2, cap).verdict != PairVerdict::OddPair)
                continue;
            ++r.nontrivial_odd_pairs;
            const int s1 = count(k1), s2 = count(k2);
            ++r.size_distribution[{std::min(s1, s2), std::max(s1, s2)}];
            if (s1 + s2 == r.omega && !r.violation) {
                r.ok = false;
                r.violation = {k1, k2};
            }
        }
    return r;
}

namespace {

void require_partitionable_odd_pair(const Graph& g, Vset k1, Vset k2, int cap,
                                    const char* sum_clause, bool want_less) {
    if (!find_partitionable_witness(g, cap))
        throw PreconditionFailed("graph is not partitionable");
    if (classify_clique_pair(g, k1, k2).verdict != PairVerdict::OddPair)
        throw PreconditionFailed("{K1, K2} is not an odd pair of cliques");
    const int sum = count(k1) + count(k2);
    const int omega = clique_number(g);
    if (want_less ? sum >= omega : sum <= omega)
        throw PreconditionFailed(sum_clause);
}

}  // namespace

StablePreservationReport check_stable_preservation(const Graph& g, Vset k1, Vset k2,
                                                   int cap) {
    require_partitionable_odd_pair(g, k1, k2, cap,
                                   "requires |K1| + |K2| < omega(G)", true);
    StablePreservationReport r;
    r.alpha_before = independence_number(g);
    r.stables_preserved = true;
    for (Vset s : alpha_stable_sets(g))
        if ((s & k1) && (s & k2)) {
            r.stables_preserved = false;
            r.destroyed_stable = s;
            break;
        }
    const MergeResult m = merge_cliques(g, k1, k2);
    r.alpha_after = independence_number(m.merged);
    r.merged_partitionable = find_partitionable_witness(m.merged, cap).has_value();
    return r;
}

UniqueMaxCliqueReport check_unique_max_clique(const Graph& g, Vset k1, Vset k2,
                                              int cap) {
    require_partitionable_odd_pair(g, k1, k2, cap,
                                   "requires |K1| + |K2| > omega(G)", false);
    UniqueMaxCliqueReport r;
    const MergeResult m = merge_cliques(g, k1, k2);
    r.omega_merged = clique_number(m.merged);
    const auto wc = omega_cliques(m.merged);
    r.omega_clique_count = static_cast<int>(wc.size());
    r.union_is_max = !wc.empty() && wc.front() == (k1 | k2);
    r.unique = r.omega_clique_count == 1 && r.union_is_max;
    r.merged_partitionable = find_partitionable_witness(m.merged, cap).has_value();
    return r;
}

}  // namespace oddpair
