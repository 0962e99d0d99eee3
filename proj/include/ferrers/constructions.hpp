#pragma once

// Closed-form Ferrers partitions for the named families. Each function returns the
// partition of the graph that generate() builds for the matching FamilySpec.

#include <span>

#include "ferrers/edge_partition.hpp"
#include "ferrers/graph.hpp"

namespace ferrers {

/// Consecutive blocks of three edges along P_n. Requires n >= 2.
EdgePartition path_partition(int n);

/// Blocks of three around C_n starting at the edge between vertices 0 and 1, last block
/// short. Requires even n >= 4.
EdgePartition cycle_partition(int n);

/// E+ = {u_i v_j : i < j} and E- = {u_i v_j : i > j}. Requires n >= 3.
EdgePartition crown_partition(int n);

/// K_{m,n} minus {u_i v_i : i < t}. One part when t <= 1; otherwise
/// E+ = {u_i v_j : i < j < t} ∪ {u_i v : i < t, v unmatched} and E- = E \ E+.
EdgePartition kmn_minus_matching_partition(int m, int n, int t);

/// ceil(n/2) parts. Part j takes the square on columns 2j, 2j+1 plus the two rails
/// leaving column 2j+1 to the right; a trailing odd column is its rung alone.
EdgePartition ladder_partition(int n);

/// A component graph, its partition, and where its vertices sit in the host.
struct PlacedPartition {
  const BipartiteGraph* graph = nullptr;
  EdgePartition partition;
  int u_offset = 0;
  int v_offset = 0;
};

/// Concatenates per-component partitions into one on `host`. Parts keep their order,
/// component by component. Throws InputError if two pieces claim overlapping vertex
/// ranges or a piece's edge does not exist in `host`.
EdgePartition union_partition(const BipartiteGraph& host, std::span<const PlacedPartition> pieces);

/// Lays the pieces out side by side (as generate does for disjoint unions) and
/// returns the union graph together with its concatenated partition.
std::pair<BipartiteGraph, EdgePartition> union_partition(
    std::span<const std::pair<BipartiteGraph, EdgePartition>> pieces);

}  // namespace ferrers
