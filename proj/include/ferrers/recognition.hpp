#pragma once

// Certifying recognition of Ferrers (chain) graphs on edge subsets of a host.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ferrers/graph.hpp"

namespace ferrers {

/// An induced 2K2: edges (u, v) and (u2, v2) are in the part, (u, v2) and (u2, v) are not.
struct TwoK2Witness {
  int u = 0;
  int v = 0;
  int u2 = 0;
  int v2 = 0;

  std::string to_string() const;
  friend bool operator==(const TwoK2Witness&, const TwoK2Witness&) = default;
};

struct FerrersCertificate {
  bool ferrers = false;
  // Positive: N(u_order[0]) ⊇ N(u_order[1]) ⊇ ... within the part, and every row
  // becomes a prefix of ones under v_order.
  std::vector<int> u_order;
  std::vector<int> v_order;
  // Negative.
  std::optional<TwoK2Witness> witness;
};

/// Decides whether (U, V, part) has no induced 2K2 and returns a certificate either way.
/// Throws InputError if an edge id is out of range or repeated.
FerrersCertificate is_ferrers(const BipartiteGraph& g, std::span<const EdgeId> part);

/// Whole-graph recognition (part = E).
FerrersCertificate is_ferrers(const BipartiteGraph& g);

/// Independent check of a certificate against the part's incidences.
bool certificate_holds(const BipartiteGraph& g, std::span<const EdgeId> part,
                       const FerrersCertificate& cert);

/// The staircase form of a Ferrers part: row i of `matrix` is vertex row_perm[i] of U,
/// column j is vertex col_perm[j] of V, and each row is a prefix of ones no shorter
/// than the next row's.
struct Staircase {
  MatrixView matrix;
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  std::vector<int> row_lengths() const;
};

class NotFerrersError : public std::runtime_error {
 public:
  explicit NotFerrersError(const TwoK2Witness& w)
      : std::runtime_error("part is not Ferrers: induced 2K2 " + w.to_string()), witness_(w) {}
  const TwoK2Witness& witness() const { return witness_; }

 private:
  TwoK2Witness witness_;
};

/// Throws NotFerrersError if the part has an induced 2K2.
Staircase ferrers_staircase(const BipartiteGraph& g, std::span<const EdgeId> part);

/// Number of connected components of (U, V, part) that contain at least one edge.
int count_nontrivial_components(const BipartiteGraph& g, std::span<const EdgeId> part);

}  // namespace ferrers
