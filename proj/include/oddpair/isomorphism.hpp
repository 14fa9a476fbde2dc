/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddpair/graph.hpp"

namespace oddpair {

/// Upper-triangle edge code of g under the identity labeling, bit (u,v)
/// (u < v, row-major) at position u*n - u*(u+1)/2 + (v-u-1) counted from the
/// most significant end. Fits 64 bits for n <= 11.
std::uint64_t edge_code(const Graph& g);

/// Minimum edge code over all vertex relabelings; equal codes iff isomorphic.
/// Exhaustive permutation search with prefix pruning; intended for n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Isomorphism test by backtracking over degree-compatible assignments.
/// Returns an image map (h-vertex for each g-vertex) when isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace oddpair
