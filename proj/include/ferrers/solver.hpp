#pragma once

// Exact Ferrers partition number: Ferrers-k-Partition decided by pruned exhaustive
// search, iterated over k between the lower and upper bounds.

#include <optional>
#include <string>

#include "ferrers/edge_partition.hpp"
#include "ferrers/graph.hpp"
#include "ferrers/recognition.hpp"

namespace ferrers {

struct PartitionVerdict {
  enum class Violation { none, double_assigned, missing_edge, not_ferrers };

  Violation violation = Violation::none;
  EdgeId edge = -1;  // double_assigned / missing_edge
  int part = -1;     // not_ferrers, or the second part holding a double-assigned edge
  std::optional<TwoK2Witness> witness;

  bool ok() const { return violation == Violation::none; }
  std::string describe(const BipartiteGraph& g) const;
};

/// NP certificate check: parts disjoint, union is E(g), every part Ferrers.
/// Throws InputError if the partition names an edge id outside g.
PartitionVerdict verify_partition(const BipartiteGraph& g, const EdgePartition& p);

struct SolverOptions {
  /// fp_exact refuses graphs with more edges than this.
  int edge_cap = 40;
  /// Worker threads for decide_k subtrees.
  int jobs = 1;
  /// Keep only the full-assignment recognition check (no conflict or 2K2 pruning).
  bool leaf_check_only = false;
  /// With jobs > 1, return the witness sequential search would find first.
  bool deterministic = true;
};

struct SearchStats {
  long long nodes = 0;
  double milliseconds = 0.0;
};

/// A partition of E(g) into at most k Ferrers parts (padded with empty parts to
/// exactly k), or nullopt if none exists. Requires k >= 1.
std::optional<EdgePartition> decide_k(const BipartiteGraph& g, int k, const SolverOptions& options = {},
                                      SearchStats* stats = nullptr);

struct FpResult {
  int value = 0;
  EdgePartition witness;
  int lower = 0;
  int upper = 0;
  SearchStats stats;

  std::string stats_line() const;
  /// `fp = <k>`, the partition text, and (optionally) the stats line.
  std::string to_text(const BipartiteGraph& g, bool with_stats = true) const;
};

/// Minimum k with decide_k feasible. Components with edges are solved separately and
/// summed; each one searches k upward from max(nu_ind, chi(C_host)) and stops at the
/// Dilworth-width construction. Throws SizeCapExceeded above options.edge_cap edges.
FpResult fp_exact(const BipartiteGraph& g, const SolverOptions& options = {});

/// Reference value by enumerating every set partition of E. Requires |E| <= 10.
int fp_bruteforce(const BipartiteGraph& g);

}  // namespace ferrers
