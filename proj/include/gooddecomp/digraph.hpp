#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gooddecomp {

using VertexId = std::size_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arcs over a host digraph's vertex set. Ordered lexicographically.
using ArcSet = std::set<Arc>;

/// Loop-free digraph with at most one arc per ordered pair.
///
/// Values are immutable once built. Every iteration order exposed here is
/// sorted, so algorithms built on top are deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t order);

  /// Duplicate arcs collapse. Loops and out-of-range endpoints throw
  /// std::invalid_argument.
  Digraph(std::size_t order, std::span<const Arc> arcs);
  Digraph(std::size_t order, const ArcSet& arcs);

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(VertexId tail, VertexId head) const;
  bool has_arc(const Arc& a) const { return has_arc(a.tail, a.head); }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_.at(v).size(); }

  /// Display labels; empty when none were attached.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Label of v, or its decimal index when unlabeled.
  std::string label(VertexId v) const;
  Digraph with_labels(std::vector<std::string> labels) const;

  ArcSet arc_set() const { return ArcSet(arcs_.begin(), arcs_.end()); }

  /// Structural equality: order and arcs. Labels are ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  void index_arcs();

  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<std::string> labels_;
};

// Common small digraphs.
Digraph directed_cycle(std::size_t n);
Digraph directed_path(std::size_t n);
Digraph complete_digraph(std::size_t n);
Digraph empty_digraph(std::size_t n);
/// K_4 minus the directed 4-cycle 0->2->1->3->0.
Digraph s4_digraph();

/// Spanning subdigraph (same vertex set) with the given arcs.
Digraph spanning_subdigraph(const Digraph& host, const ArcSet& arcs);
/// Subdigraph induced by `vertices`, renumbered in the given order.
Digraph induced_subdigraph(const Digraph& d, std::span<const VertexId> vertices);

/// Order 0 and order 1 are strong by convention.
bool is_strong(const Digraph& d);
/// Strongness of the spanning subdigraph (V(order), arcs).
bool is_strong(std::size_t order, const ArcSet& arcs);
/// First ordered pair (x, y) with no x->y path, if any.
std::optional<Arc> unreachable_pair(std::size_t order, const ArcSet& arcs);

/// Largest k such that d is k-arc-strong: the minimum over all ordered pairs
/// of the number of arc-disjoint paths. Throws for order < 2.
std::size_t arc_connectivity(const Digraph& d);
/// Number of arc-disjoint source->sink paths.
std::size_t local_arc_connectivity(const Digraph& d, VertexId source, VertexId sink);

bool is_semicomplete(const Digraph& d);

/// Largest order accepted by the isomorphism search.
inline constexpr std::size_t kMaxIsomorphismOrder = 12;

/// An arc-preserving bijection `m` with a->b iff m[a]->m[b], if one exists.
/// Throws std::invalid_argument when either order exceeds
/// kMaxIsomorphismOrder.
std::optional<std::vector<VertexId>> find_isomorphism(const Digraph& a, const Digraph& b);
bool is_isomorphic_small(const Digraph& a, const Digraph& b);

/// Relabel d by the permutation perm (vertex v becomes perm[v]).
Digraph permute(const Digraph& d, std::span<const VertexId> perm);

}  // namespace gooddecomp
