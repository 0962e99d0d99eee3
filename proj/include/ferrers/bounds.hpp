#pragma once

// Lower and upper bounds on the Ferrers partition number:
//   nu_ind(G) <= fp(G),  chi(C_host(G)) <= fp(G),  fp(G) <= min(width_U, width_V).

#include <optional>
#include <string>
#include <vector>

#include "ferrers/bitset.hpp"
#include "ferrers/edge_partition.hpp"
#include "ferrers/graph.hpp"

namespace ferrers {

enum class Side { u, v };

std::string to_string(Side s);

struct InducedMatching {
  int size = 0;
  std::vector<EdgeId> edges;
};

/// Exact maximum induced matching. Edges e and f clash when they share a vertex or a
/// host edge joins an endpoint of e to an endpoint of f; the answer is a maximum
/// independent set of that clash graph.
InducedMatching induced_matching_number(const BipartiteGraph& g);

/// Checks the definition directly: pairwise vertex-disjoint, no host edge across.
bool is_induced_matching(const BipartiteGraph& g, std::span<const EdgeId> edges);

/// Width of the neighbourhood-inclusion poset on one side, with equal-neighbourhood
/// classes collapsed.
struct DilworthResult {
  int width = 0;
  /// One representative (smallest index) per class of a maximum antichain.
  std::vector<int> antichain;
  /// Minimum chain cover. Each chain lists its vertices from the smallest
  /// neighbourhood up; members of one class appear together.
  std::vector<std::vector<int>> chains;
};

DilworthResult dilworth_width(const BipartiteGraph& g, Side side);

/// Part i holds the edges incident to chain i of dilworth_width(g, side).
EdgePartition chain_decomposition_partition(const BipartiteGraph& g, Side side);

/// Graph on host edge ids: e=(u,v) ~ f=(u',v') iff u != u', v != v', and both
/// uv' and u'v are absent from the host.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::vector<Bitset> rows);

  int node_count() const { return static_cast<int>(rows_.size()); }
  int edge_count() const { return edge_count_; }
  bool adjacent(EdgeId a, EdgeId b) const { return rows_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  int degree(EdgeId e) const { return static_cast<int>(rows_[static_cast<std::size_t>(e)].count()); }
  const Bitset& row(EdgeId e) const { return rows_[static_cast<std::size_t>(e)]; }
  const std::vector<Bitset>& rows() const { return rows_; }

 private:
  std::vector<Bitset> rows_;
  int edge_count_ = 0;
};

ConflictGraph conflict_graph(const BipartiteGraph& g);

struct Coloring {
  int colors = 0;
  std::vector<int> color_of;
};

/// Exact chromatic number with a witness colouring.
Coloring conflict_chromatic(const ConflictGraph& cg);

/// A maximum clique of the conflict graph; its size is a sound lower bound on chi.
std::vector<EdgeId> conflict_clique(const ConflictGraph& cg);

bool is_proper_coloring(const ConflictGraph& cg, const Coloring& c);

struct BoundsOptions {
  bool exact_chi = true;
};

struct BoundsReport {
  int u_count = 0;
  int v_count = 0;
  int edge_count = 0;
  InducedMatching nu_ind;
  DilworthResult width_u;
  DilworthResult width_v;
  int conflict_edges = 0;
  std::vector<EdgeId> conflict_clique;
  std::optional<Coloring> chi_conflict;
  Side upper_side = Side::u;
  EdgePartition upper_partition;
  std::optional<int> fp;
  std::optional<EdgePartition> fp_witness;

  int lower_bound() const;
  int upper_bound() const;

  /// One `name = value` per line.
  std::string to_key_value(const BipartiteGraph& g) const;
  /// Aligned two-column table.
  std::string to_table() const;
};

BoundsReport compute_bounds(const BipartiteGraph& g, const BoundsOptions& options = {});

}  // namespace ferrers
