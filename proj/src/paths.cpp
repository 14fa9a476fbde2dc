/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#include "oddpair/paths.hpp"

#include <algorithm>

#include "oddpair/invariants.hpp"

namespace oddpair {

bool path_is_chordless(const Graph& g, const PathWitness& p) {
    const auto& vs = p.vertices;
    Vset seen = 0;
    for (int v : vs) {
        if (v < 0 || v >= g.order() || contains(seen, v)) return false;
        seen |= bit(v);
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]) != (j == i + 1)) return false;
    return true;
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw CapExceeded(std::string(what) + " cap " + std::to_string(cap) +
                          " exceeded (n = " + std::to_string(g.order()) + ")");
}

// Depth-first chordless path extension. `terminals` are vertices that end a
// path (recorded, never extended); `interior` are vertices allowed strictly
// inside. A vertex may be appended only when adjacent to the current last
// vertex and to no earlier path vertex.
struct PathWalk {
    const Graph& g;
    Vset terminals;
    Vset interior;
    const std::function<bool(const PathWitness&)>& visit;
    PathWitness path;
    Vset onpath = 0;
    bool stopped = false;

    void run(int start) {
        path.vertices.assign(1, start);
        onpath = bit(start);
        extend(start);
    }

    void extend(int last) {
        if (stopped) return;
        const Vset blocked = onpath & ~bit(last);
        for (int w : bits(g.neighbors(last) & (terminals | interior) & ~onpath)) {
            if (g.neighbors(w) & blocked) continue;  // chord to an earlier vertex
            path.vertices.push_back(w);
            onpath |= bit(w);
            if (contains(terminals, w)) {
                if (!visit(path)) stopped = true;
            } else {
                extend(w);
            }
            onpath &= ~bit(w);
            path.vertices.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

std::vector<PathWitness> enumerate_induced_paths(const Graph& g, int u, int v,
                                                 int cap) {
    check_cap(g, cap, "induced path enumeration");
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw InvalidArgument("path enumeration requires two distinct vertices in range");
    const int a = std::min(u, v), b = std::max(u, v);
    std::vector<PathWitness> out;
    auto collect = [&](const PathWitness& p) {
        out.push_back(p);
        return true;
    };
    std::function<bool(const PathWitness&)> fn = collect;
    PathWalk walk{g, bit(b), g.vertices() & ~bit(a) & ~bit(b), fn, {}};
    walk.run(a);
    return out;
}

EvenPairResult is_even_pair(const Graph& g, int u, int v, int cap) {
    if (u == v) throw InvalidArgument("even pair requires two distinct vertices");
    if (g.has_edge(u, v))
        throw PreconditionFailed("even pair rejected: vertices " + std::to_string(u) +
                                 "," + std::to_string(v) + " are adjacent");
    EvenPairResult r;
    bool any = false;
    const int a = std::min(u, v), b = std::max(u, v);
    auto inspect = [&](const PathWitness& p) {
        any = true;
        if (p.odd()) {
            r.odd_witness = p;
            return false;  // one odd path settles it
        }
        return true;
    };
    std::function<bool(const PathWitness&)> fn = inspect;
    check_cap(g, cap, "even pair");
    PathWalk walk{g, bit(b), g.vertices() & ~bit(a) & ~bit(b), fn, {}};
    walk.run(a);
    r.even = !r.odd_witness.has_value();
    r.no_path = !any;
    return r;
}

std::optional<std::pair<int, int>> find_even_pair(const Graph& g,
                                                  bool allow_vacuous, int cap) {
    check_cap(g, cap, "even pair scan");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            const EvenPairResult r = is_even_pair(g, u, v, cap);
            if (r.even && (allow_vacuous || !r.no_path)) return {{u, v}};
        }
    return std::nullopt;
}

bool has_even_pair(const Graph& g, bool allow_vacuous, int cap) {
    return find_even_pair(g, allow_vacuous, cap).has_value();
}

namespace {

void require_clique(const Graph& g, Vset k, const char* name) {
    if ((k & ~g.vertices()) != 0)
        throw InvalidArgument(std::string(name) + " contains an out-of-range vertex");
    if (!g.is_clique(k))
        throw PreconditionFailed(std::string(name) + " is not a clique");
}

}  // namespace

void walk_external_paths(const Graph& g, Vset k1, Vset k2,
                         const std::function<bool(const PathWitness&)>& visit,
                         int cap) {
    check_cap(g, cap, "external path enumeration");
    require_clique(g, k1, "K1");
    require_clique(g, k2, "K2");

    // Shared vertices are external paths of length 0.
    for (int v : bits(k1 & k2)) {
        PathWitness p{{v}};
        if (!visit(p)) return;
    }

    // A path of positive length has exactly one vertex in each clique: its
    // K1-end outside K2 and its K2-end outside K1. (Otherwise every pair of
    // intersecting maximal cliques would gain spurious odd paths through the
    // shared vertex's neighbors.) Every interior vertex avoids the union, so
    // each path is discovered exactly once, from its K1 end.
    const Vset interior = g.vertices() & ~(k1 | k2);
    bool stopped = false;
    auto record = [&](const PathWitness& p) {
        if (!visit(p)) {
            stopped = true;
            return false;
        }
        return true;
    };
    std::function<bool(const PathWitness&)> fn = record;
    for (int a : bits(k1 & ~k2)) {
        PathWalk walk{g, k2 & ~k1, interior, fn, {}};
        walk.run(a);
        if (stopped) return;
    }
}

std::vector<PathWitness> external_paths(const Graph& g, Vset k1, Vset k2, int cap) {
    std::vector<PathWitness> out;
    walk_external_paths(
        g, k1, k2,
        [&](const PathWitness& p) {
            out.push_back(p);
            return true;
        },
        cap);
    std::sort(out.begin(), out.end(), [](const PathWitness& x, const PathWitness& y) {
        if (x.vertices.size() != y.vertices.size())
            return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return out;
}

const char* to_string(PairVerdict v) {
    switch (v) {
        case PairVerdict::OddPair: return "odd_pair";
        case PairVerdict::EvenPair: return "even_pair";
        case PairVerdict::Mixed: return "mixed";
        case PairVerdict::NoExternalPath: return "no_external_path";
    }
    return "?";
}

PairClassification classify_clique_pair(const Graph& g, Vset k1, Vset k2, int cap) {
    PairClassification r;
    walk_external_paths(
        g, k1, k2,
        [&](const PathWitness& p) {
            if (p.odd()) {
                if (!r.odd_witness) r.odd_witness = p;
            } else {
                if (!r.even_witness) r.even_witness = p;
            }
            return !(r.odd_witness && r.even_witness);
        },
        cap);
    if (r.odd_witness && r.even_witness) r.verdict = PairVerdict::Mixed;
    else if (r.odd_witness) r.verdict = PairVerdict::OddPair;
    else if (r.even_witness) r.verdict = PairVerdict::EvenPair;
    else r.verdict = PairVerdict::NoExternalPath;
    return r;
}

bool is_trivial_odd_pair(const Graph& g, Vset k1, Vset k2) {
    require_clique(g, k1, "K1");
    require_clique(g, k2, "K2");
    if (k1 == 0 || k2 == 0) throw InvalidArgument("trivial odd pair requires nonempty cliques");
    if (k1 & k2) throw PreconditionFailed("trivial odd pair requires disjoint cliques");
    return g.is_clique(k1 | k2);
}

std::optional<std::pair<Vset, Vset>> find_odd_pair_of_maximal_cliques(const Graph& g,
                                                                      int cap) {
    check_cap(g, cap, "odd pair scan");
    const auto cliques = maximal_cliques(g);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (size_t j = i + 1; j < cliques.size(); ++j)
            if (classify_clique_pair(g, cliques[i], cliques[j], cap).verdict ==
                PairVerdict::OddPair)
                return {{cliques[i], cliques[j]}};
    return std::nullopt;
}

QuasiParityStatus quasi_parity_status(const Graph& g, int cap, bool allow_vacuous) {
    check_cap(g, cap, "quasi-parity");
    QuasiParityStatus st;

    std::vector<Vset> subsets;
    for (Vset s = 0; s < (Vset{1} << g.order()); ++s)
        if (count(s) >= 2) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Vset a, Vset b) { return count(a) < count(b); });

    for (Vset s : subsets) {
        auto [h, mapping] = g.induced(s);
        const bool ep = has_even_pair(h, allow_vacuous, cap);
        if (st.strict_qp && !h.is_clique(h.vertices()) && !ep) {
            st.strict_qp = false;
            st.strict_witness = s;
        }
        if (st.qp && !ep && !has_even_pair(h.complement(), allow_vacuous, cap)) {
            st.qp = false;
            st.qp_witness = s;
        }
        if (!st.strict_qp && !st.qp) break;
    }
    return st;
}

}  // namespace oddpair
