#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ferrers/graph.hpp"

namespace ferrers {

/// Edge ids grouped into parts. The container can hold invalid states (missing or
/// repeated edges) so that a parsed certificate can be checked; see verify_partition.
class EdgePartition {
 public:
  EdgePartition() = default;
  explicit EdgePartition(std::vector<std::vector<EdgeId>> parts);

  /// Builds parts from a complete assignment edge -> part index in [0, part_count).
  static EdgePartition from_assignment(std::span<const int> part_of, int part_count);

  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<EdgeId>>& parts() const { return parts_; }
  const std::vector<EdgeId>& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// Part index per edge id, -1 for edges in no part. Assumes the partition is valid
  /// for a graph with `edge_count` edges.
  std::vector<int> assignment(int edge_count) const;

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;

 private:
  std::vector<std::vector<EdgeId>> parts_;
};

/// `parts <k>` followed by `part <i>: <u,v> <u,v> ...` with each part in edge-id order.
std::string to_text(const BipartiteGraph& g, const EdgePartition& p);

/// Inverse of to_text; endpoints are resolved against `g`. Throws InputError on a
/// malformed line or an edge that is not in `g`.
EdgePartition parse_partition(const BipartiteGraph& g, std::string_view text);

}  // namespace ferrers
