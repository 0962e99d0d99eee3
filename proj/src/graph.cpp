#include "ferrers/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ferrers/error.hpp"
#include "text_util.hpp"

namespace ferrers {

BipartiteGraph::BipartiteGraph(int u_count, int v_count, std::vector<Edge> edges)
    : u_count_(u_count), v_count_(v_count), edges_(std::move(edges)) {
  if (u_count < 0 || v_count < 0) throw InputError("negative side size");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= u_count || e.v < 0 || e.v >= v_count) {
      std::ostringstream msg;
      msg << "edge (" << e.u << "," << e.v << ") out of range for bip " << u_count << " "
          << v_count;
      throw InputError(msg.str());
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw InputError(msg.str());
  }

  u_offsets_.assign(static_cast<std::size_t>(u_count) + 1, 0);
  v_offsets_.assign(static_cast<std::size_t>(v_count) + 1, 0);
  for (const auto& e : edges_) {
    ++u_offsets_[static_cast<std::size_t>(e.u) + 1];
    ++v_offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  std::partial_sum(u_offsets_.begin(), u_offsets_.end(), u_offsets_.begin());
  std::partial_sum(v_offsets_.begin(), v_offsets_.end(), v_offsets_.begin());

  u_adj_.resize(edges_.size());
  v_adj_.resize(edges_.size());
  v_edge_ids_.resize(edges_.size());
  std::vector<int> v_fill(v_offsets_.begin(), v_offsets_.end() - 1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    u_adj_[id] = e.v;
    auto slot = static_cast<std::size_t>(v_fill[static_cast<std::size_t>(e.v)]++);
    v_adj_[slot] = e.u;
    v_edge_ids_[slot] = static_cast<EdgeId>(id);
  }
}

std::optional<EdgeId> BipartiteGraph::edge_id(int u, int v) const {
  if (u < 0 || u >= u_count_ || v < 0 || v >= v_count_) return std::nullopt;
  auto nbrs = u_neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return u_offsets_[static_cast<std::size_t>(u)] + static_cast<EdgeId>(it - nbrs.begin());
}

std::span<const int> BipartiteGraph::u_neighbors(int u) const {
  auto b = static_cast<std::size_t>(u_offsets_[static_cast<std::size_t>(u)]);
  auto e = static_cast<std::size_t>(u_offsets_[static_cast<std::size_t>(u) + 1]);
  return std::span<const int>(u_adj_).subspan(b, e - b);
}

std::span<const int> BipartiteGraph::v_neighbors(int v) const {
  auto b = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v)]);
  auto e = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(v_adj_).subspan(b, e - b);
}

std::span<const EdgeId> BipartiteGraph::v_edges(int v) const {
  auto b = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v)]);
  auto e = static_cast<std::size_t>(v_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const EdgeId>(v_edge_ids_).subspan(b, e - b);
}

// ---------------------------------------------------------------------------
// Families

void FamilySpec::validate() const {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError(describe() + ": expected " + std::to_string(count) + " parameter(s)");
  };
  switch (kind) {
    case Kind::path:
    case Kind::ladder:
    case Kind::crown:
      need(1);
      if (params[0] < 1) throw InputError(describe() + ": size must be positive");
      break;
    case Kind::cycle:
      need(1);
      if (params[0] < 4 || params[0] % 2 != 0)
        throw InputError(describe() + ": cycle length must be even and at least 4");
      break;
    case Kind::complete_minus_matching:
      need(3);
      if (params[0] < 1 || params[1] < 1) throw InputError(describe() + ": sides must be positive");
      if (params[2] < 0 || params[2] > std::min(params[0], params[1]))
        throw InputError(describe() + ": matching size must satisfy 0 <= t <= min(m, n)");
      break;
    case Kind::disjoint_union:
      if (members.empty()) throw InputError("union: needs at least one member");
      for (const auto& m : members) m.validate();
      break;
  }
}

std::string FamilySpec::describe() const {
  std::ostringstream out;
  auto join = [&] {
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
  };
  switch (kind) {
    case Kind::path: out << "path("; join(); out << ")"; break;
    case Kind::cycle: out << "cycle("; join(); out << ")"; break;
    case Kind::ladder: out << "ladder("; join(); out << ")"; break;
    case Kind::crown: out << "crown("; join(); out << ")"; break;
    case Kind::complete_minus_matching: out << "kmn-minus-matching("; join(); out << ")"; break;
    case Kind::disjoint_union:
      out << "union(";
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i].describe();
      out << ")";
      break;
  }
  return out.str();
}

namespace {

BipartiteGraph make_path_like(int n, bool close) {
  std::vector<Edge> edges;
  auto endpoint = [](int vertex, Edge& e) {
    if (vertex % 2 == 0)
      e.u = vertex / 2;
    else
      e.v = vertex / 2;
  };
  for (int i = 0; i + 1 < n; ++i) {
    Edge e;
    endpoint(i, e);
    endpoint(i + 1, e);
    edges.push_back(e);
  }
  if (close) {
    Edge e;
    endpoint(n - 1, e);
    endpoint(0, e);
    edges.push_back(e);
  }
  return BipartiteGraph((n + 1) / 2, n / 2, std::move(edges));
}

BipartiteGraph make_ladder(int n) {
  std::vector<Edge> edges;
  for (int c = 0; c < n; ++c) {
    edges.push_back({c, c});
    if (c + 1 < n) {
      edges.push_back({c, c + 1});
      edges.push_back({c + 1, c});
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph make_complete_minus_matching(int m, int n, int t) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (!(i == j && i < t)) edges.push_back({i, j});
  return BipartiteGraph(m, n, std::move(edges));
}

}  // namespace

BipartiteGraph generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilySpec::Kind::path: return make_path_like(spec.params[0], false);
    case FamilySpec::Kind::cycle: return make_path_like(spec.params[0], true);
    case FamilySpec::Kind::ladder: return make_ladder(spec.params[0]);
    case FamilySpec::Kind::crown:
      return make_complete_minus_matching(spec.params[0], spec.params[0], spec.params[0]);
    case FamilySpec::Kind::complete_minus_matching:
      return make_complete_minus_matching(spec.params[0], spec.params[1], spec.params[2]);
    case FamilySpec::Kind::disjoint_union: {
      std::vector<BipartiteGraph> parts;
      parts.reserve(spec.members.size());
      for (const auto& m : spec.members) parts.push_back(generate(m));
      return disjoint_union(parts);
    }
  }
  throw InputError("unknown family kind");
}

BipartiteGraph disjoint_union(std::span<const BipartiteGraph> members) {
  if (members.empty()) throw InputError("union: needs at least one member");
  std::vector<Edge> edges;
  int uo = 0;
  int vo = 0;
  for (const auto& g : members) {
    for (const auto& e : g.edges()) edges.push_back({e.u + uo, e.v + vo});
    uo += g.u_count();
    vo += g.v_count();
  }
  return BipartiteGraph(uo, vo, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text formats

BipartiteGraph parse_edge_list(std::string_view text) {
  int u_count = -1;
  int v_count = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_ws(line);
    auto fail = [&](const std::string& what) {
      throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
    };
    if (u_count < 0) {
      if (fields.size() != 3 || fields[0] != "bip") fail("expected header 'bip <u_count> <v_count>'");
      auto a = detail::parse_int(fields[1]);
      auto b = detail::parse_int(fields[2]);
      if (!a || !b || *a < 0 || *b < 0) fail("bad side sizes in header");
      u_count = *a;
      v_count = *b;
      continue;
    }
    if (fields.size() != 2) fail("expected '<u> <v>'");
    auto u = detail::parse_int(fields[0]);
    auto v = detail::parse_int(fields[1]);
    if (!u || !v) fail("non-integer vertex index");
    if (*u < 0 || *u >= u_count || *v < 0 || *v >= v_count) fail("vertex index out of range");
    edges.push_back({*u, *v});
  }
  if (u_count < 0) throw InputError("edge list: missing 'bip' header");
  return BipartiteGraph(u_count, v_count, std::move(edges));
}

std::string to_edge_list(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bip " << g.u_count() << " " << g.v_count() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

MatrixView MatrixView::from_rows(const std::vector<std::vector<int>>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  MatrixView m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != cols) throw InputError("ragged matrix rows");
    for (int j = 0; j < cols; ++j) {
      int b = row[static_cast<std::size_t>(j)];
      if (b != 0 && b != 1) throw InputError("matrix entries must be 0 or 1");
      m.set(i, j, b == 1);
    }
  }
  return m;
}

MatrixView to_matrix(const BipartiteGraph& g) {
  MatrixView m(g.u_count(), g.v_count());
  for (const auto& e : g.edges()) m.set(e.u, e.v);
  return m;
}

BipartiteGraph from_matrix(const MatrixView& m) {
  if (m.rows < 0 || m.cols < 0 ||
      m.bits.size() != static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols))
    throw InputError("matrix dimensions do not match its contents");
  std::vector<Edge> edges;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j)) edges.push_back({i, j});
  return BipartiteGraph(m.rows, m.cols, std::move(edges));
}

MatrixView parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  for (auto line : detail::split_lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<int> row;
    row.reserve(line.size());
    for (char c : line) {
      if (c != '0' && c != '1')
        throw InputError("matrix line " + std::to_string(line_no) + ": expected only '0'/'1'");
      row.push_back(c - '0');
    }
    rows.push_back(std::move(row));
  }
  return MatrixView::from_rows(rows);
}

std::string to_matrix_text(const MatrixView& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows) * (static_cast<std::size_t>(m.cols) + 1));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out.push_back(m.at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Components

bool Component::has_edge_in(const BipartiteGraph& g) const {
  return std::any_of(u.begin(), u.end(), [&](int x) { return g.u_degree(x) > 0; });
}

std::vector<Component> components(const BipartiteGraph& g) {
  // Vertices are numbered 0..u_count-1 for U, then u_count.. for V.
  const int total = g.u_count() + g.v_count();
  std::vector<int> label(static_cast<std::size_t>(total), -1);
  std::vector<Component> out;
  std::vector<int> stack;
  for (int start = 0; start < total; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    label[static_cast<std::size_t>(start)] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      auto visit = [&](int y) {
        if (label[static_cast<std::size_t>(y)] < 0) {
          label[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      };
      if (x < g.u_count()) {
        out.back().u.push_back(x);
        for (int v : g.u_neighbors(x)) visit(g.u_count() + v);
      } else {
        out.back().v.push_back(x - g.u_count());
        for (int u : g.v_neighbors(x - g.u_count())) visit(u);
      }
    }
    std::sort(out.back().u.begin(), out.back().u.end());
    std::sort(out.back().v.begin(), out.back().v.end());
  }
  return out;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const Component& c,
                                std::vector<EdgeId>* edge_map) {
  std::vector<int> v_index(static_cast<std::size_t>(g.v_count()), -1);
  for (std::size_t j = 0; j < c.v.size(); ++j) v_index[static_cast<std::size_t>(c.v[j])] = static_cast<int>(j);
  std::vector<Edge> edges;
  std::vector<EdgeId> map;
  for (std::size_t i = 0; i < c.u.size(); ++i) {
    int u = c.u[i];
    EdgeId id = g.first_edge_of_u(u);
    for (int v : g.u_neighbors(u)) {
      int vj = v_index[static_cast<std::size_t>(v)];
      if (vj >= 0) {
        edges.push_back({static_cast<int>(i), vj});
        map.push_back(id);
      }
      ++id;
    }
  }
  // Edges were emitted in (u, v) order with u and v both monotone, so ids line up.
  if (edge_map) *edge_map = std::move(map);
  return BipartiteGraph(static_cast<int>(c.u.size()), static_cast<int>(c.v.size()), std::move(edges));
}

}  // namespace ferrers
