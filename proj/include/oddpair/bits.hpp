/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <bit>
#include <cstdint>

namespace oddpair {

// Vertex subsets are 64-bit masks, vertex i <-> bit i. Graphs are capped at
// 62 vertices (the graph6 single-byte size tier), so one word always fits.
using Vset = std::uint64_t;

inline constexpr Vset bit(int v) { return Vset{1} << v; }

inline constexpr bool contains(Vset s, int v) { return (s >> v) & 1; }

inline constexpr int count(Vset s) { return std::popcount(s); }

inline constexpr Vset full_set(int n) {
    return n == 0 ? 0 : (~Vset{0} >> (64 - n));
}

// Index of the lowest set bit; undefined on 0.
inline constexpr int lowest(Vset s) { return std::countr_zero(s); }

// Iteration over set bits in ascending order:
//   for (int v : bits(s)) ...
struct BitRange {
    struct iterator {
        Vset rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    Vset s;
    iterator begin() const { return {s}; }
    iterator end() const { return {0}; }
};

inline BitRange bits(Vset s) { return {s}; }

}  // namespace oddpair
