#include "ferrers/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "ferrers/bounds.hpp"
#include "ferrers/error.hpp"

namespace ferrers {

std::string PartitionVerdict::describe(const BipartiteGraph& g) const {
  std::ostringstream out;
  auto edge_text = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return std::to_string(e.u) + "," + std::to_string(e.v);
  };
  switch (violation) {
    case Violation::none: out << "ok"; break;
    case Violation::double_assigned:
      out << "double_assigned edge " << edge_text(edge) << " (again in part " << part << ")";
      break;
    case Violation::missing_edge: out << "missing_edge " << edge_text(edge); break;
    case Violation::not_ferrers:
      out << "not_ferrers part " << part << " induced 2K2 " << witness->to_string();
      break;
  }
  return out.str();
}

PartitionVerdict verify_partition(const BipartiteGraph& g, const EdgePartition& p) {
  for (const auto& part : p.parts())
    for (EdgeId id : part)
      if (id < 0 || id >= g.edge_count())
        throw InputError("partition references unknown edge id " + std::to_string(id));

  PartitionVerdict verdict;
  std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), -1);
  for (int i = 0; i < p.part_count(); ++i) {
    for (EdgeId id : p.part(i)) {
      if (owner[static_cast<std::size_t>(id)] >= 0) {
        verdict.violation = PartitionVerdict::Violation::double_assigned;
        verdict.edge = id;
        verdict.part = i;
        return verdict;
      }
      owner[static_cast<std::size_t>(id)] = i;
    }
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (owner[static_cast<std::size_t>(id)] < 0) {
      verdict.violation = PartitionVerdict::Violation::missing_edge;
      verdict.edge = id;
      return verdict;
    }
  }
  for (int i = 0; i < p.part_count(); ++i) {
    auto cert = is_ferrers(g, p.part(i));
    if (!cert.ferrers) {
      verdict.violation = PartitionVerdict::Violation::not_ferrers;
      verdict.part = i;
      verdict.witness = cert.witness;
      return verdict;
    }
  }
  return verdict;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Depth-first assignment of edges (in a fixed order) to at most k parts.
class PartitionSearch {
 public:
  PartitionSearch(const BipartiteGraph& g, const ConflictGraph& cg, const std::vector<EdgeId>& order, int k,
                  bool prune)
      : g_(g), cg_(cg), order_(order), k_(k), prune_(prune),
        assignment_(static_cast<std::size_t>(g.edge_count()), -1),
        part_bits_(static_cast<std::size_t>(k), Bitset(static_cast<std::size_t>(g.edge_count()))),
        part_edges_(static_cast<std::size_t>(k)),
        part_u_nbrs_(static_cast<std::size_t>(k),
                     std::vector<Bitset>(static_cast<std::size_t>(g.u_count()), Bitset(static_cast<std::size_t>(g.v_count())))),
        part_v_nbrs_(static_cast<std::size_t>(k),
                     std::vector<Bitset>(static_cast<std::size_t>(g.v_count()), Bitset(static_cast<std::size_t>(g.u_count())))) {}

  long long nodes() const { return nodes_; }
  const std::vector<int>& assignment() const { return assignment_; }

  // Candidate parts for the edge at position `pos`: every open part, then one new part.
  int candidate_limit() const { return std::min(open_parts_ + 1, k_); }

  bool place(std::size_t pos, int p) {
    EdgeId e = order_[pos];
    if (prune_ && !admissible(e, p)) return false;
    apply(e, p);
    if (p == open_parts_) ++open_parts_;
    return true;
  }

  void unplace(std::size_t pos) {
    EdgeId e = order_[pos];
    int p = assignment_[static_cast<std::size_t>(e)];
    retract(e, p);
    if (p == open_parts_ - 1 && part_edges_[static_cast<std::size_t>(p)].empty()) --open_parts_;
  }

  // Explores the subtree below `pos`; on success the full assignment stays in place.
  bool dfs(std::size_t pos, const std::function<bool()>& stop) {
    ++nodes_;
    if ((nodes_ & 0x3ff) == 0 && stop && stop()) return false;
    if (pos == order_.size()) return leaf_ok();
    int limit = candidate_limit();
    for (int p = 0; p < limit; ++p) {
      if (!place(pos, p)) continue;
      if (dfs(pos + 1, stop)) return true;
      unplace(pos);
    }
    return false;
  }

  // Valid prefixes of length `depth`, in the order dfs would visit them.
  void collect_frontier(std::size_t pos, std::size_t depth, std::vector<int>& prefix,
                        std::vector<std::vector<int>>& out) {
    if (pos == depth) {
      out.push_back(prefix);
      return;
    }
    int limit = candidate_limit();
    for (int p = 0; p < limit; ++p) {
      if (!place(pos, p)) continue;
      prefix.push_back(p);
      collect_frontier(pos + 1, depth, prefix, out);
      prefix.pop_back();
      unplace(pos);
    }
  }

 private:
  // Can (u', v') still end up in part p?
  bool available(int u, int v, int p) const {
    auto id = g_.edge_id(u, v);
    if (!id) return false;
    int a = assignment_[static_cast<std::size_t>(*id)];
    return a < 0 || a == p;
  }

  bool admissible(EdgeId e, int p) const {
    // (a) host-forced conflicts never share a part.
    if (cg_.row(e).intersects(part_bits_[static_cast<std::size_t>(p)])) return false;
    const Edge& a = g_.edge(e);
    // (b) a 2K2 with e inside part p whose cross edges can no longer join p.
    for (EdgeId f : part_edges_[static_cast<std::size_t>(p)]) {
      const Edge& b = g_.edge(f);
      if (b.u == a.u || b.v == a.v) continue;
      if (!available(a.u, b.v, p) && !available(b.u, a.v, p)) return false;
    }
    // Placing e in p removes it as a cross edge for every other part q: a pair
    // (u, v'), (u', v) already in q is then a permanent 2K2 unless (u', v') can join q.
    for (int q = 0; q < open_parts_; ++q) {
      if (q == p) continue;
      const Bitset& at_u = part_u_nbrs_[static_cast<std::size_t>(q)][static_cast<std::size_t>(a.u)];
      const Bitset& at_v = part_v_nbrs_[static_cast<std::size_t>(q)][static_cast<std::size_t>(a.v)];
      if (at_u.none() || at_v.none()) continue;
      for (auto v2 = at_u.find_first(); v2 != Bitset::npos; v2 = at_u.find_next(v2))
        for (auto u2 = at_v.find_first(); u2 != Bitset::npos; u2 = at_v.find_next(u2))
          if (!available(static_cast<int>(u2), static_cast<int>(v2), q)) return false;
    }
    return true;
  }

  void apply(EdgeId e, int p) {
    const Edge& a = g_.edge(e);
    assignment_[static_cast<std::size_t>(e)] = p;
    part_bits_[static_cast<std::size_t>(p)].set(static_cast<std::size_t>(e));
    part_edges_[static_cast<std::size_t>(p)].push_back(e);
    part_u_nbrs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a.u)].set(static_cast<std::size_t>(a.v));
    part_v_nbrs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a.v)].set(static_cast<std::size_t>(a.u));
  }

  void retract(EdgeId e, int p) {
    const Edge& a = g_.edge(e);
    assignment_[static_cast<std::size_t>(e)] = -1;
    part_bits_[static_cast<std::size_t>(p)].reset(static_cast<std::size_t>(e));
    part_edges_[static_cast<std::size_t>(p)].pop_back();
    part_u_nbrs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a.u)].reset(static_cast<std::size_t>(a.v));
    part_v_nbrs_[static_cast<std::size_t>(p)][static_cast<std::size_t>(a.v)].reset(static_cast<std::size_t>(a.u));
  }

  // (c) full assignment: every part re-checked by recognition.
  bool leaf_ok() const {
    for (const auto& part : part_edges_)
      if (!is_ferrers(g_, part).ferrers) return false;
    return true;
  }

  const BipartiteGraph& g_;
  const ConflictGraph& cg_;
  const std::vector<EdgeId>& order_;
  int k_;
  bool prune_;
  std::vector<int> assignment_;
  std::vector<Bitset> part_bits_;
  std::vector<std::vector<EdgeId>> part_edges_;
  std::vector<std::vector<Bitset>> part_u_nbrs_;
  std::vector<std::vector<Bitset>> part_v_nbrs_;
  int open_parts_ = 0;
  long long nodes_ = 0;
};

std::vector<EdgeId> search_order(const ConflictGraph& cg) {
  std::vector<EdgeId> order(static_cast<std::size_t>(cg.node_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return cg.degree(a) > cg.degree(b); });
  return order;
}

EdgePartition padded(std::span<const int> assignment, int k) {
  return EdgePartition::from_assignment(assignment, k);
}

std::optional<std::vector<int>> decide_parallel(const BipartiteGraph& g, const ConflictGraph& cg,
                                                const std::vector<EdgeId>& order, int k,
                                                const SolverOptions& options, long long& nodes) {
  const bool prune = !options.leaf_check_only;
  const auto jobs = static_cast<std::size_t>(options.jobs);

  std::vector<std::vector<int>> frontier;
  std::size_t depth = 0;
  {
    PartitionSearch probe(g, cg, order, k, prune);
    while (depth < order.size()) {
      ++depth;
      std::vector<int> prefix;
      frontier.clear();
      probe.collect_frontier(0, depth, prefix, frontier);
      if (frontier.size() >= 4 * jobs || frontier.empty()) break;
    }
  }
  if (frontier.empty()) return std::nullopt;

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> found{frontier.size()};
  std::atomic<long long> total_nodes{0};
  std::vector<std::optional<std::vector<int>>> results(frontier.size());

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= frontier.size()) return;
      if (options.deterministic ? found.load() < i : found.load() < frontier.size()) return;
      PartitionSearch s(g, cg, order, k, prune);
      for (std::size_t pos = 0; pos < depth; ++pos) s.place(pos, frontier[i][pos]);
      std::function<bool()> stop = [&, i] {
        std::size_t f = found.load();
        return options.deterministic ? f < i : f < frontier.size();
      };
      bool ok = s.dfs(depth, stop);
      total_nodes += s.nodes();
      if (ok) {
        results[i] = s.assignment();
        std::size_t cur = found.load();
        while (i < cur && !found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  nodes += total_nodes.load();
  if (found.load() >= frontier.size()) return std::nullopt;
  return results[found.load()];
}

}  // namespace

std::optional<EdgePartition> decide_k(const BipartiteGraph& g, int k, const SolverOptions& options,
                                      SearchStats* stats) {
  if (k < 1) throw InputError("decide_k: k must be at least 1");
  auto start = Clock::now();
  auto cg = conflict_graph(g);
  auto order = search_order(cg);
  long long nodes = 0;
  std::optional<std::vector<int>> found;
  if (options.jobs > 1 && !order.empty()) {
    found = decide_parallel(g, cg, order, k, options, nodes);
  } else {
    PartitionSearch s(g, cg, order, k, !options.leaf_check_only);
    if (s.dfs(0, {})) found = s.assignment();
    nodes = s.nodes();
  }
  if (stats) {
    stats->nodes += nodes;
    stats->milliseconds += elapsed_ms(start);
  }
  if (!found) return std::nullopt;
  return padded(*found, k);
}

std::string FpResult::stats_line() const {
  std::ostringstream out;
  out << "stats: nodes=" << stats.nodes << " ms=" << static_cast<long long>(stats.milliseconds + 0.5)
      << " lower=" << lower << " upper=" << upper;
  return out.str();
}

std::string FpResult::to_text(const BipartiteGraph& g, bool with_stats) const {
  std::string out = "fp = " + std::to_string(value) + "\n" + ferrers::to_text(g, witness);
  if (with_stats) out += stats_line() + "\n";
  return out;
}

FpResult fp_exact(const BipartiteGraph& g, const SolverOptions& options) {
  if (g.edge_count() > options.edge_cap)
    throw SizeCapExceeded("graph has " + std::to_string(g.edge_count()) + " edges, above the cap of " +
                          std::to_string(options.edge_cap) + " (raise it with --cap)");
  auto start = Clock::now();
  FpResult result;
  std::vector<std::vector<EdgeId>> parts;

  for (const auto& comp : components(g)) {
    if (!comp.has_edge_in(g)) continue;
    std::vector<EdgeId> to_host;
    auto sub = induced_subgraph(g, comp, &to_host);

    auto cg = conflict_graph(sub);
    int lower = std::max({1, induced_matching_number(sub).size, conflict_chromatic(cg).colors});
    auto wu = dilworth_width(sub, Side::u);
    auto wv = dilworth_width(sub, Side::v);
    Side side = wv.width < wu.width ? Side::v : Side::u;
    int upper = std::min(wu.width, wv.width);

    std::optional<EdgePartition> best;
    for (int k = lower; k < upper && !best; ++k) best = decide_k(sub, k, options, &result.stats);
    if (!best) best = chain_decomposition_partition(sub, side);

    result.lower += lower;
    result.upper += upper;
    result.value += best->part_count();
    for (const auto& part : best->parts()) {
      std::vector<EdgeId> mapped;
      for (EdgeId id : part) mapped.push_back(to_host[static_cast<std::size_t>(id)]);
      parts.push_back(std::move(mapped));
    }
  }
  result.witness = EdgePartition(std::move(parts));
  result.stats.milliseconds = elapsed_ms(start);
  return result;
}

namespace {

// Standalone 2K2 test over a block; deliberately shares nothing with recognition.
bool block_has_no_induced_2k2(const BipartiteGraph& g, const std::vector<EdgeId>& block) {
  auto in_block = [&](int u, int v) {
    return std::any_of(block.begin(), block.end(), [&](EdgeId id) {
      return g.edge(id).u == u && g.edge(id).v == v;
    });
  };
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      const Edge& a = g.edge(block[i]);
      const Edge& b = g.edge(block[j]);
      if (a.u != b.u && a.v != b.v && !in_block(a.u, b.v) && !in_block(b.u, a.v)) return false;
    }
  return true;
}

void enumerate_blocks(const BipartiteGraph& g, EdgeId next, std::vector<std::vector<EdgeId>>& blocks, int& best) {
  if (static_cast<int>(blocks.size()) >= best) return;
  if (next == g.edge_count()) {
    if (std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return block_has_no_induced_2k2(g, b); }))
      best = static_cast<int>(blocks.size());
    return;
  }
  // Index loop: the recursion appends to `blocks`, which may reallocate.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(next);
    enumerate_blocks(g, next + 1, blocks, best);
    blocks[i].pop_back();
  }
  blocks.push_back({next});
  enumerate_blocks(g, next + 1, blocks, best);
  blocks.pop_back();
}

}  // namespace

int fp_bruteforce(const BipartiteGraph& g) {
  if (g.edge_count() > 10) throw InputError("fp_bruteforce: at most 10 edges");
  int best = g.edge_count() + 1;
  if (g.edge_count() == 0) return 0;
  std::vector<std::vector<EdgeId>> blocks;
  enumerate_blocks(g, 0, blocks, best);
  return best;
}

}  // namespace ferrers
