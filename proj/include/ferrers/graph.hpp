#pragma once

// Bipartite host graphs, family generators and the text formats they travel in.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

using EdgeId = std::int32_t;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A bipartite graph G = (U, V, E) with U and V as separate 0-based index spaces.
///
/// Edges are stored sorted lexicographically by (u, v); an edge's position in
/// that order is its EdgeId. Isolated vertices are kept. Immutable once built.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws InputError on out-of-range endpoints or duplicate edges.
  BipartiteGraph(int u_count, int v_count, std::vector<Edge> edges);

  int u_count() const { return u_count_; }
  int v_count() const { return v_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  bool has_edge(int u, int v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(int u, int v) const;

  /// Neighbors of u in V, ascending. Edge ids of u are contiguous and follow the same order.
  std::span<const int> u_neighbors(int u) const;
  std::span<const int> v_neighbors(int v) const;
  /// Ids of the edges at v, ordered by u.
  std::span<const EdgeId> v_edges(int v) const;
  EdgeId first_edge_of_u(int u) const { return u_offsets_[static_cast<std::size_t>(u)]; }

  int u_degree(int u) const { return static_cast<int>(u_neighbors(u).size()); }
  int v_degree(int v) const { return static_cast<int>(v_neighbors(v).size()); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.u_count_ == b.u_count_ && a.v_count_ == b.v_count_ && a.edges_ == b.edges_;
  }

 private:
  int u_count_ = 0;
  int v_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> u_offsets_{0};
  std::vector<int> u_adj_;
  std::vector<int> v_offsets_{0};
  std::vector<int> v_adj_;
  std::vector<EdgeId> v_edge_ids_;
};

/// Parameters of a deterministic labeled graph family.
struct FamilySpec {
  enum class Kind { path, cycle, ladder, crown, complete_minus_matching, disjoint_union };

  Kind kind = Kind::path;
  // path/cycle/ladder/crown: {n}; complete_minus_matching: {m, n, t}.
  std::vector<int> params;
  std::vector<FamilySpec> members;

  static FamilySpec path(int n) { return {Kind::path, {n}, {}}; }
  static FamilySpec cycle(int n) { return {Kind::cycle, {n}, {}}; }
  static FamilySpec ladder(int n) { return {Kind::ladder, {n}, {}}; }
  static FamilySpec crown(int n) { return {Kind::crown, {n}, {}}; }
  static FamilySpec complete_minus_matching(int m, int n, int t) {
    return {Kind::complete_minus_matching, {m, n, t}, {}};
  }
  static FamilySpec disjoint_union(std::vector<FamilySpec> members) {
    return {Kind::disjoint_union, {}, std::move(members)};
  }

  /// Throws InputError when the parameters are out of their domain.
  void validate() const;
  std::string describe() const;
};

/// Builds the labeled graph for `spec`.
///
/// Labeling conventions:
///  - path P_n: vertex i lies on U iff i is even, at side index i/2; edges join i and i+1.
///  - cycle C_n: as the path, plus the closing edge between vertices n-1 and 0.
///  - ladder L_n: column c (0-based) holds one U vertex u_c and one V vertex v_c. The top
///    vertex sits on U in even columns, the bottom vertex in odd columns. Rungs are
///    (u_c, v_c); the two rails between columns c and c+1 are (u_c, v_{c+1}) and (u_{c+1}, v_c).
///  - crown H_n: K_{n,n} minus {(u_i, v_i)}.
///  - complete_minus_matching(m, n, t): K_{m,n} minus {(u_i, v_i) : i < t}.
///  - disjoint_union: members laid out left to right in both index spaces.
BipartiteGraph generate(const FamilySpec& spec);

/// Same graph with both sides laid out after one another; `members` must be non-empty.
BipartiteGraph disjoint_union(std::span<const BipartiteGraph> members);

/// Edge-list text: `bip <u_count> <v_count>` then one `<u> <v>` line per edge.
/// Blank lines and lines starting with `#` are skipped.
BipartiteGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const BipartiteGraph& g);

/// Row-major 0-1 matrix with rows indexed by U and columns by V.
struct MatrixView {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;

  MatrixView() = default;
  MatrixView(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {}

  bool at(int i, int j) const { return bits[static_cast<std::size_t>(i) * cols + j] != 0; }
  void set(int i, int j, bool value = true) {
    bits[static_cast<std::size_t>(i) * cols + j] = value ? 1 : 0;
  }

  /// Throws InputError if the rows have different lengths or hold values other than 0/1.
  static MatrixView from_rows(const std::vector<std::vector<int>>& rows);

  friend bool operator==(const MatrixView&, const MatrixView&) = default;
};

MatrixView to_matrix(const BipartiteGraph& g);
BipartiteGraph from_matrix(const MatrixView& m);

/// One line of `0`/`1` characters per row; all rows must have equal length.
MatrixView parse_matrix(std::string_view text);
std::string to_matrix_text(const MatrixView& m);

struct Component {
  std::vector<int> u;
  std::vector<int> v;

  bool has_edge_in(const BipartiteGraph& g) const;
};

/// Connected components; isolated vertices come out as singletons. Components are
/// listed in order of their first vertex, scanning U before V; members are ascending.
std::vector<Component> components(const BipartiteGraph& g);

/// Subgraph induced by a component, reindexed densely in ascending vertex order.
/// `edge_map` (optional) receives, per subgraph edge id, the host edge id.
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const Component& c,
                                std::vector<EdgeId>* edge_map = nullptr);

}  // namespace ferrers
