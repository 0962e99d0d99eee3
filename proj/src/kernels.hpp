#pragma once

// Exact combinatorial kernels over small dense graphs given as bitset adjacency rows.

#include <vector>

#include "ferrers/bitset.hpp"

namespace ferrers::detail {

using AdjacencyRows = std::vector<Bitset>;

/// Maximum clique by branch and bound with a greedy-colouring bound. Returns the
/// vertices of one maximum clique in ascending order.
std::vector<int> maximum_clique(const AdjacencyRows& adj);

/// Maximum independent set (maximum clique of the complement).
std::vector<int> maximum_independent_set(const AdjacencyRows& adj);

/// Exact vertex colouring by saturation-ordered branch and bound. Colour per vertex,
/// colours numbered 0..k-1 by first use in the search.
std::vector<int> exact_coloring(const AdjacencyRows& adj, long long* nodes = nullptr);

/// Maximum bipartite matching (augmenting paths, left vertices in index order).
/// `edges[a]` lists the right vertices adjacent to left vertex a. Returns match of
/// each right vertex, -1 when unmatched.
std::vector<int> maximum_bipartite_matching(const std::vector<std::vector<int>>& edges, int right_count);

}  // namespace ferrers::detail
