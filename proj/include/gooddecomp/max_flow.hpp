#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace gooddecomp {

/// Dinic's algorithm on integral capacities.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t node_count() const noexcept { return adj_.size(); }

  /// Returns an edge id usable with flow().
  std::size_t add_edge(std::size_t from, std::size_t to, Capacity capacity) {
    const std::size_t id = edges_.size();
    edges_.push_back({to, capacity});
    edges_.push_back({from, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    initial_.push_back(capacity);
    initial_.push_back(0);
    return id;
  }

  Capacity run(std::size_t source, std::size_t sink,
               Capacity limit = std::numeric_limits<Capacity>::max()) {
    Capacity total = 0;
    while (total < limit && build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (total < limit) {
        const Capacity pushed = augment(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  Capacity flow(std::size_t edge_id) const {
    return initial_[edge_id] - edges_[edge_id].residual;
  }

  /// Nodes reachable from `source` in the residual network (valid after run).
  std::vector<bool> residual_reachable(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.residual > 0 && !seen[e.to]) {
          seen[e.to] = true;
          stack.push_back(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    Capacity residual;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t id : adj_[u]) {
        const Edge& e = edges_[id];
        if (e.residual > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity augment(std::size_t u, std::size_t sink, Capacity pushed) {
    if (u == sink) return pushed;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      const std::size_t id = adj_[u][i];
      Edge& e = edges_[id];
      if (e.residual <= 0 || level_[e.to] != level_[u] + 1) continue;
      const Capacity got = augment(e.to, sink, std::min(pushed, e.residual));
      if (got > 0) {
        e.residual -= got;
        edges_[id ^ 1].residual += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<Capacity> initial_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace gooddecomp
