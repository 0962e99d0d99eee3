#include "ferrers/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ferrers/error.hpp"

namespace ferrers {

std::string TwoK2Witness::to_string() const {
  std::ostringstream out;
  out << "(u" << u << ",v" << v << ",u" << u2 << ",v" << v2 << ")";
  return out.str();
}

namespace {

struct PartAdjacency {
  std::vector<std::vector<int>> u_nbrs;  // ascending
  std::vector<int> v_degree;
};

PartAdjacency part_adjacency(const BipartiteGraph& g, std::span<const EdgeId> part) {
  PartAdjacency adj;
  adj.u_nbrs.resize(static_cast<std::size_t>(g.u_count()));
  adj.v_degree.assign(static_cast<std::size_t>(g.v_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId id : part) {
    if (id < 0 || id >= g.edge_count())
      throw InputError("edge id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)]++) throw InputError("edge id " + std::to_string(id) + " repeated in part");
    const Edge& e = g.edge(id);
    adj.u_nbrs[static_cast<std::size_t>(e.u)].push_back(e.v);
    ++adj.v_degree[static_cast<std::size_t>(e.v)];
  }
  for (auto& n : adj.u_nbrs) std::sort(n.begin(), n.end());
  return adj;
}

// Stable descending-degree order; ties keep ascending index.
std::vector<int> by_degree_desc(const std::vector<int>& degree) {
  std::vector<int> order(degree.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
  });
  return order;
}

int first_missing(const std::vector<int>& from, const std::vector<int>& in) {
  for (int x : from)
    if (!std::binary_search(in.begin(), in.end(), x)) return x;
  return -1;
}

}  // namespace

FerrersCertificate is_ferrers(const BipartiteGraph& g, std::span<const EdgeId> part) {
  auto adj = part_adjacency(g, part);
  std::vector<int> u_degree(adj.u_nbrs.size());
  for (std::size_t i = 0; i < u_degree.size(); ++i) u_degree[i] = static_cast<int>(adj.u_nbrs[i].size());

  FerrersCertificate cert;
  auto order = by_degree_desc(u_degree);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    int a = order[i];
    int b = order[i + 1];
    const auto& na = adj.u_nbrs[static_cast<std::size_t>(a)];
    const auto& nb = adj.u_nbrs[static_cast<std::size_t>(b)];
    if (nb.empty()) break;  // the remaining rows are empty as well
    if (std::includes(na.begin(), na.end(), nb.begin(), nb.end())) continue;
    // |N(a)| >= |N(b)| and N(b) ⊄ N(a), so N(a) ⊄ N(b) too.
    cert.witness = TwoK2Witness{a, first_missing(na, nb), b, first_missing(nb, na)};
    return cert;
  }
  cert.ferrers = true;
  cert.u_order = std::move(order);
  cert.v_order = by_degree_desc(adj.v_degree);
  return cert;
}

FerrersCertificate is_ferrers(const BipartiteGraph& g) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  std::iota(all.begin(), all.end(), 0);
  return is_ferrers(g, all);
}

bool certificate_holds(const BipartiteGraph& g, std::span<const EdgeId> part,
                       const FerrersCertificate& cert) {
  auto adj = part_adjacency(g, part);
  auto in_part = [&](int u, int v) {
    if (u < 0 || u >= g.u_count() || v < 0 || v >= g.v_count()) return false;
    const auto& n = adj.u_nbrs[static_cast<std::size_t>(u)];
    return std::binary_search(n.begin(), n.end(), v);
  };
  if (!cert.ferrers) {
    if (!cert.witness) return false;
    const auto& w = *cert.witness;
    return w.u != w.u2 && w.v != w.v2 && in_part(w.u, w.v) && in_part(w.u2, w.v2) &&
           !in_part(w.u, w.v2) && !in_part(w.u2, w.v);
  }

  auto is_permutation_of = [](std::vector<int> p, int n) {
    std::sort(p.begin(), p.end());
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[static_cast<std::size_t>(i)] != i) return false;
    return static_cast<int>(p.size()) == n;
  };
  if (!is_permutation_of(cert.u_order, g.u_count()) || !is_permutation_of(cert.v_order, g.v_count()))
    return false;

  for (std::size_t i = 0; i + 1 < cert.u_order.size(); ++i) {
    const auto& hi = adj.u_nbrs[static_cast<std::size_t>(cert.u_order[i])];
    const auto& lo = adj.u_nbrs[static_cast<std::size_t>(cert.u_order[i + 1])];
    if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) return false;
  }
  std::vector<int> column(static_cast<std::size_t>(g.v_count()));
  for (std::size_t j = 0; j < cert.v_order.size(); ++j) column[static_cast<std::size_t>(cert.v_order[j])] = static_cast<int>(j);
  for (const auto& row : adj.u_nbrs) {
    int deg = static_cast<int>(row.size());
    for (int v : row)
      if (column[static_cast<std::size_t>(v)] >= deg) return false;
  }
  return true;
}

std::vector<int> Staircase::row_lengths() const {
  std::vector<int> out(static_cast<std::size_t>(matrix.rows), 0);
  for (int i = 0; i < matrix.rows; ++i)
    for (int j = 0; j < matrix.cols && matrix.at(i, j); ++j) ++out[static_cast<std::size_t>(i)];
  return out;
}

Staircase ferrers_staircase(const BipartiteGraph& g, std::span<const EdgeId> part) {
  auto cert = is_ferrers(g, part);
  if (!cert.ferrers) throw NotFerrersError(*cert.witness);
  Staircase s;
  s.row_perm = cert.u_order;
  s.col_perm = cert.v_order;
  s.matrix = MatrixView(g.u_count(), g.v_count());
  std::vector<int> row(static_cast<std::size_t>(g.u_count()));
  std::vector<int> col(static_cast<std::size_t>(g.v_count()));
  for (std::size_t i = 0; i < s.row_perm.size(); ++i) row[static_cast<std::size_t>(s.row_perm[i])] = static_cast<int>(i);
  for (std::size_t j = 0; j < s.col_perm.size(); ++j) col[static_cast<std::size_t>(s.col_perm[j])] = static_cast<int>(j);
  for (EdgeId id : part) {
    const Edge& e = g.edge(id);
    s.matrix.set(row[static_cast<std::size_t>(e.u)], col[static_cast<std::size_t>(e.v)]);
  }
  return s;
}

int count_nontrivial_components(const BipartiteGraph& g, std::span<const EdgeId> part) {
  // Union-find over U (0..u_count-1) followed by V.
  std::vector<int> parent(static_cast<std::size_t>(g.u_count() + g.v_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (EdgeId id : part) {
    if (id < 0 || id >= g.edge_count()) throw InputError("edge id " + std::to_string(id) + " out of range");
    const Edge& e = g.edge(id);
    int a = find(e.u);
    int b = find(g.u_count() + e.v);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::vector<int> roots;
  for (EdgeId id : part) roots.push_back(find(g.edge(id).u));
  std::sort(roots.begin(), roots.end());
  return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

}  // namespace ferrers
