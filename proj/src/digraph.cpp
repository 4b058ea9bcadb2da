#include "gooddecomp/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gooddecomp/max_flow.hpp"

namespace gooddecomp {

Digraph::Digraph(std::size_t order) : out_(order), in_(order) {}

Digraph::Digraph(std::size_t order, std::span<const Arc> arcs)
    : arcs_(arcs.begin(), arcs.end()), out_(order), in_(order) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  index_arcs();
}

Digraph::Digraph(std::size_t order, const ArcSet& arcs)
    : arcs_(arcs.begin(), arcs.end()), out_(order), in_(order) {
  index_arcs();
}

void Digraph::index_arcs() {
  for (const Arc& a : arcs_) {
    if (a.tail >= order() || a.head >= order()) {
      throw std::invalid_argument("arc endpoint out of range: " + std::to_string(a.tail) +
                                  " " + std::to_string(a.head));
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("loop at vertex " + std::to_string(a.tail));
    }
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  // arcs_ is sorted by (tail, head), so out-lists are already sorted.
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  if (tail >= order()) return false;
  const auto& list = out_[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

std::string Digraph::label(VertexId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Digraph Digraph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) {
    throw std::invalid_argument("label count does not match order");
  }
  Digraph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (VertexId v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  }
  return Digraph(n, arcs);
}

Digraph directed_path(std::size_t n) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, arcs);
}

Digraph complete_digraph(std::size_t n) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

Digraph empty_digraph(std::size_t n) { return Digraph(n); }

Digraph s4_digraph() {
  const std::vector<Arc> arcs{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 3}, {1, 2}, {3, 1}, {2, 0}};
  return Digraph(4, arcs);
}

Digraph spanning_subdigraph(const Digraph& host, const ArcSet& arcs) {
  return Digraph(host.order(), arcs);
}

Digraph induced_subdigraph(const Digraph& d, std::span<const VertexId> vertices) {
  std::vector<std::size_t> position(d.order(), d.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = i;
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (position[a.tail] < d.order() && position[a.head] < d.order()) {
      arcs.push_back({position[a.tail], position[a.head]});
    }
  }
  return Digraph(vertices.size(), arcs);
}

namespace {

std::vector<std::vector<VertexId>> adjacency(std::size_t order, const ArcSet& arcs,
                                             bool reversed) {
  std::vector<std::vector<VertexId>> adj(order);
  for (const Arc& a : arcs) {
    if (reversed) {
      adj.at(a.head).push_back(a.tail);
    } else {
      adj.at(a.tail).push_back(a.head);
    }
  }
  return adj;
}

std::vector<bool> reach_from(const std::vector<std::vector<VertexId>>& adj, VertexId start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId w : adj[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::optional<Arc> unreachable_pair(std::size_t order, const ArcSet& arcs) {
  if (order <= 1) return std::nullopt;
  const auto forward = reach_from(adjacency(order, arcs, false), 0);
  for (VertexId v = 1; v < order; ++v)
    if (!forward[v]) return Arc{0, v};
  const auto backward = reach_from(adjacency(order, arcs, true), 0);
  for (VertexId v = 1; v < order; ++v)
    if (!backward[v]) return Arc{v, 0};
  return std::nullopt;
}

bool is_strong(std::size_t order, const ArcSet& arcs) {
  return !unreachable_pair(order, arcs).has_value();
}

bool is_strong(const Digraph& d) {
  if (d.order() <= 1) return true;
  std::vector<bool> seen(d.order(), false);
  auto sweep = [&](bool reversed) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : reversed ? d.in_neighbors(u) : d.out_neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == d.order();
  };
  return sweep(false) && sweep(true);
}

std::size_t local_arc_connectivity(const Digraph& d, VertexId source, VertexId sink) {
  MaxFlow flow(d.order());
  for (const Arc& a : d.arcs()) flow.add_edge(a.tail, a.head, 1);
  return static_cast<std::size_t>(flow.run(source, sink));
}

std::size_t arc_connectivity(const Digraph& d) {
  if (d.order() < 2) throw std::invalid_argument("undefined for trivial digraph");
  std::size_t best = d.arc_count();
  for (VertexId x = 0; x < d.order(); ++x) {
    best = std::min(best, d.out_degree(x));
    best = std::min(best, d.in_degree(x));
  }
  for (VertexId x = 0; x < d.order() && best > 0; ++x) {
    for (VertexId y = 0; y < d.order() && best > 0; ++y) {
      if (x == y) continue;
      MaxFlow flow(d.order());
      for (const Arc& a : d.arcs()) flow.add_edge(a.tail, a.head, 1);
      best = std::min(best, static_cast<std::size_t>(
                                flow.run(x, y, static_cast<MaxFlow::Capacity>(best))));
    }
  }
  return best;
}

bool is_semicomplete(const Digraph& d) {
  for (VertexId u = 0; u < d.order(); ++u)
    for (VertexId v = u + 1; v < d.order(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
  return true;
}

Digraph permute(const Digraph& d, std::span<const VertexId> perm) {
  if (perm.size() != d.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  return Digraph(d.order(), arcs);
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Digraph& a, const Digraph& b)
      : a_(a), b_(b), n_(a.order()), map_(n_, kUnset), used_(n_, false) {
    for (VertexId v = 0; v < n_; ++v) {
      sig_a_.push_back(signature(a, v));
      sig_b_.push_back(signature(b, v));
    }
    // Most constrained first: high total degree, ties by index.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
      return a.out_degree(x) + a.in_degree(x) > a.out_degree(y) + a.in_degree(y);
    });
  }

  std::optional<std::vector<VertexId>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr VertexId kUnset = static_cast<VertexId>(-1);

  static std::tuple<std::size_t, std::size_t, std::size_t> signature(const Digraph& d,
                                                                    VertexId v) {
    std::size_t digons = 0;
    for (VertexId w : d.out_neighbors(v))
      if (d.has_arc(w, v)) ++digons;
    return {d.out_degree(v), d.in_degree(v), digons};
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const VertexId v = order_[depth];
    for (VertexId w = 0; w < n_; ++w) {
      if (used_[w] || sig_a_[v] != sig_b_[w]) continue;
      if (!consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kUnset;
    }
    return false;
  }

  bool consistent(VertexId v, VertexId w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const VertexId x = order_[i];
      const VertexId y = map_[x];
      if (a_.has_arc(v, x) != b_.has_arc(w, y)) return false;
      if (a_.has_arc(x, v) != b_.has_arc(y, w)) return false;
    }
    return true;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::size_t n_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
  std::vector<VertexId> order_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> sig_a_;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> sig_b_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Digraph& a, const Digraph& b) {
  if (a.order() > kMaxIsomorphismOrder || b.order() > kMaxIsomorphismOrder) {
    throw std::invalid_argument("isomorphism bound exceeded");
  }
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return std::nullopt;
  auto degrees = [](const Digraph& d) {
    std::vector<std::pair<std::size_t, std::size_t>> seq;
    for (VertexId v = 0; v < d.order(); ++v) seq.emplace_back(d.out_degree(v), d.in_degree(v));
    std::sort(seq.begin(), seq.end());
    return seq;
  };
  if (degrees(a) != degrees(b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphic_small(const Digraph& a, const Digraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace gooddecomp
