#include "kernels.hpp"

#include <algorithm>
#include <numeric>

namespace ferrers::detail {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const AdjacencyRows& adj) : n_(static_cast<int>(adj.size())) {
    std::vector<int> degree(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) degree[v] = static_cast<int>(adj[v].count());
    order_.resize(adj.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });
    std::vector<int> position(adj.size());
    for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    rows_.assign(adj.size(), Bitset(adj.size()));
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (auto w = adj[v].find_first(); w != Bitset::npos; w = adj[v].find_next(w))
        if (w != v) rows_[static_cast<std::size_t>(position[v])].set(static_cast<std::size_t>(position[w]));
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    Bitset all(static_cast<std::size_t>(n_));
    all.set_all();
    std::vector<int> current;
    expand(current, all);
    std::vector<int> out;
    for (int v : best_) out.push_back(order_[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<int>& current, Bitset candidates) {
    std::vector<int> verts;
    std::vector<int> bound;
    Bitset uncoloured = candidates;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset open = uncoloured;
      for (auto v = open.find_first(); v != Bitset::npos; v = open.find_first()) {
        open.reset(v);
        open.subtract(rows_[v]);
        uncoloured.reset(v);
        verts.push_back(static_cast<int>(v));
        bound.push_back(colour);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      auto v = static_cast<std::size_t>(verts[i]);
      current.push_back(verts[i]);
      Bitset next = candidates;
      next &= rows_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  int n_;
  std::vector<int> order_;
  AdjacencyRows rows_;
  std::vector<int> best_;
};

class Colourer {
 public:
  explicit Colourer(const AdjacencyRows& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), colour_(adj.size(), -1),
        counts_(adj.size(), std::vector<int>(adj.size() + 1, 0)), sat_(adj.size(), 0), degree_(adj.size()) {
    for (std::size_t v = 0; v < adj.size(); ++v) degree_[v] = static_cast<int>(adj[v].count());
  }

  std::vector<int> run(long long* nodes) {
    if (n_ == 0) return {};
    lower_ = static_cast<int>(maximum_clique(adj_).size());
    greedy();
    if (best_k_ > lower_) search(0, 0);
    if (nodes) *nodes = nodes_;
    return best_;
  }

 private:
  int select() const {
    int pick = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
      if (pick < 0 || sat_[static_cast<std::size_t>(v)] > sat_[static_cast<std::size_t>(pick)] ||
          (sat_[static_cast<std::size_t>(v)] == sat_[static_cast<std::size_t>(pick)] &&
           degree_[static_cast<std::size_t>(v)] > degree_[static_cast<std::size_t>(pick)]))
        pick = v;
    }
    return pick;
  }

  void assign(int v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    const auto& row = adj_[static_cast<std::size_t>(v)];
    for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w))
      if (counts_[w][static_cast<std::size_t>(c)]++ == 0) ++sat_[w];
  }

  void unassign(int v) {
    auto c = static_cast<std::size_t>(colour_[static_cast<std::size_t>(v)]);
    colour_[static_cast<std::size_t>(v)] = -1;
    const auto& row = adj_[static_cast<std::size_t>(v)];
    for (auto w = row.find_first(); w != Bitset::npos; w = row.find_next(w))
      if (--counts_[w][c] == 0) --sat_[w];
  }

  // Plain DSATUR: the initial upper bound.
  void greedy() {
    int used = 0;
    for (int step = 0; step < n_; ++step) {
      int v = select();
      int c = 0;
      while (counts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    best_ = colour_;
    best_k_ = used;
    for (int v = 0; v < n_; ++v) unassign(v);
  }

  void search(int coloured, int used) {
    if (best_k_ == lower_ || used >= best_k_) return;
    ++nodes_;
    if (coloured == n_) {
      best_k_ = used;
      best_ = colour_;
      return;
    }
    int v = select();
    for (int c = 0; c < used; ++c) {
      if (counts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
      assign(v, c);
      search(coloured + 1, used);
      unassign(v);
      if (best_k_ == lower_ || used >= best_k_) return;
    }
    if (used + 1 < best_k_) {
      assign(v, used);
      search(coloured + 1, used + 1);
      unassign(v);
    }
  }

  const AdjacencyRows& adj_;
  int n_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> sat_;
  std::vector<int> degree_;
  std::vector<int> best_;
  int best_k_ = 0;
  int lower_ = 0;
  long long nodes_ = 0;
};

bool augment(int a, const std::vector<std::vector<int>>& edges, std::vector<int>& match_right,
             std::vector<char>& visited) {
  for (int b : edges[static_cast<std::size_t>(a)]) {
    if (visited[static_cast<std::size_t>(b)]) continue;
    visited[static_cast<std::size_t>(b)] = 1;
    if (match_right[static_cast<std::size_t>(b)] < 0 ||
        augment(match_right[static_cast<std::size_t>(b)], edges, match_right, visited)) {
      match_right[static_cast<std::size_t>(b)] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> maximum_clique(const AdjacencyRows& adj) { return CliqueSearch(adj).run(); }

std::vector<int> maximum_independent_set(const AdjacencyRows& adj) {
  AdjacencyRows complement = adj;
  for (std::size_t v = 0; v < complement.size(); ++v) {
    complement[v].flip();
    complement[v].reset(v);
  }
  return maximum_clique(complement);
}

std::vector<int> exact_coloring(const AdjacencyRows& adj, long long* nodes) {
  return Colourer(adj).run(nodes);
}

std::vector<int> maximum_bipartite_matching(const std::vector<std::vector<int>>& edges, int right_count) {
  std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
  std::vector<char> visited;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    visited.assign(static_cast<std::size_t>(right_count), 0);
    augment(static_cast<int>(a), edges, match_right, visited);
  }
  return match_right;
}

}  // namespace ferrers::detail
