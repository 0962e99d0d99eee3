#include "ferrers/constructions.hpp"

#include <algorithm>

#include "ferrers/error.hpp"

namespace ferrers {

namespace {

// Edge between path vertices i and i+1 under the generate() labeling.
Edge path_step(int i) {
  if (i % 2 == 0) return {i / 2, i / 2};
  return {(i + 1) / 2, i / 2};
}

EdgeId id_of(const BipartiteGraph& g, Edge e) {
  auto id = g.edge_id(e.u, e.v);
  if (!id) throw std::logic_error("construction produced an edge missing from its graph");
  return *id;
}

}  // namespace

EdgePartition path_partition(int n) {
  if (n < 2) throw InputError("path_partition: n must be at least 2");
  auto g = generate(FamilySpec::path(n));
  std::vector<std::vector<EdgeId>> parts(static_cast<std::size_t>((n - 1 + 2) / 3));
  for (int i = 0; i + 1 < n; ++i) parts[static_cast<std::size_t>(i / 3)].push_back(id_of(g, path_step(i)));
  return EdgePartition(std::move(parts));
}

EdgePartition cycle_partition(int n) {
  if (n < 4 || n % 2 != 0) throw InputError("cycle_partition: n must be even and at least 4");
  auto g = generate(FamilySpec::cycle(n));
  std::vector<std::vector<EdgeId>> parts(static_cast<std::size_t>((n + 2) / 3));
  for (int i = 0; i < n; ++i) {
    Edge e = i + 1 < n ? path_step(i) : Edge{0, (n - 1) / 2};
    parts[static_cast<std::size_t>(i / 3)].push_back(id_of(g, e));
  }
  return EdgePartition(std::move(parts));
}

EdgePartition crown_partition(int n) {
  if (n < 3) throw InputError("crown_partition: n must be at least 3");
  auto g = generate(FamilySpec::crown(n));
  std::vector<std::vector<EdgeId>> parts(2);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    parts[e.u < e.v ? 0 : 1].push_back(id);
  }
  return EdgePartition(std::move(parts));
}

EdgePartition kmn_minus_matching_partition(int m, int n, int t) {
  auto g = generate(FamilySpec::complete_minus_matching(m, n, t));
  if (g.edge_count() == 0) return EdgePartition{};
  if (t <= 1) {
    std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId id = 0; id < g.edge_count(); ++id) all[static_cast<std::size_t>(id)] = id;
    return EdgePartition({std::move(all)});
  }
  std::vector<std::vector<EdgeId>> parts(2);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    bool plus = e.u < t && ((e.v < t && e.u < e.v) || e.v >= t);
    parts[plus ? 0 : 1].push_back(id);
  }
  return EdgePartition(std::move(parts));
}

EdgePartition ladder_partition(int n) {
  if (n < 1) throw InputError("ladder_partition: n must be at least 1");
  auto g = generate(FamilySpec::ladder(n));
  std::vector<std::vector<EdgeId>> parts(static_cast<std::size_t>((n + 1) / 2));
  for (int j = 0; 2 * j < n; ++j) {
    auto& part = parts[static_cast<std::size_t>(j)];
    int a = 2 * j;
    int b = a + 1;
    part.push_back(id_of(g, {a, a}));
    if (b < n) {
      part.push_back(id_of(g, {b, b}));
      part.push_back(id_of(g, {a, b}));
      part.push_back(id_of(g, {b, a}));
      if (b + 1 < n) {
        part.push_back(id_of(g, {b, b + 1}));
        part.push_back(id_of(g, {b + 1, b}));
      }
    }
  }
  return EdgePartition(std::move(parts));
}

EdgePartition union_partition(const BipartiteGraph& host, std::span<const PlacedPartition> pieces) {
  auto overlaps = [](int a0, int a1, int b0, int b1) { return a0 < b1 && b0 < a1; };
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!p.graph) throw InputError("union_partition: piece without a graph");
    if (p.u_offset < 0 || p.v_offset < 0 || p.u_offset + p.graph->u_count() > host.u_count() ||
        p.v_offset + p.graph->v_count() > host.v_count())
      throw InputError("union_partition: piece " + std::to_string(i) + " does not fit in the host");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& q = pieces[j];
      if (overlaps(p.u_offset, p.u_offset + p.graph->u_count(), q.u_offset, q.u_offset + q.graph->u_count()) ||
          overlaps(p.v_offset, p.v_offset + p.graph->v_count(), q.v_offset, q.v_offset + q.graph->v_count()))
        throw InputError("union_partition: pieces " + std::to_string(j) + " and " + std::to_string(i) +
                         " have overlapping vertex index spaces");
    }
  }
  std::vector<std::vector<EdgeId>> parts;
  for (const auto& p : pieces) {
    for (const auto& sub : p.partition.parts()) {
      std::vector<EdgeId> part;
      part.reserve(sub.size());
      for (EdgeId id : sub) {
        if (id < 0 || id >= p.graph->edge_count()) throw InputError("union_partition: edge id out of range");
        const Edge& e = p.graph->edge(id);
        auto hid = host.edge_id(e.u + p.u_offset, e.v + p.v_offset);
        if (!hid) throw InputError("union_partition: piece edge missing from host");
        part.push_back(*hid);
      }
      parts.push_back(std::move(part));
    }
  }
  return EdgePartition(std::move(parts));
}

std::pair<BipartiteGraph, EdgePartition> union_partition(
    std::span<const std::pair<BipartiteGraph, EdgePartition>> pieces) {
  std::vector<BipartiteGraph> graphs;
  std::vector<PlacedPartition> placed;
  int uo = 0;
  int vo = 0;
  for (const auto& [graph, partition] : pieces) {
    graphs.push_back(graph);
    placed.push_back({&graph, partition, uo, vo});
    uo += graph.u_count();
    vo += graph.v_count();
  }
  auto host = disjoint_union(graphs);
  auto partition = union_partition(host, placed);
  return {std::move(host), std::move(partition)};
}

}  // namespace ferrers
