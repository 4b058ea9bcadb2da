#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gooddecomp/digraph.hpp"

namespace gooddecomp {

// ---------------------------------------------------------------------------
// Flow networks with lower and upper bounds.
// ---------------------------------------------------------------------------

using FlowValue = std::int64_t;

struct Bounds {
  FlowValue lower = 0;
  FlowValue upper = 0;
};

/// Nodes may carry throughput bounds; they are realized by splitting the
/// node into an in-half and an out-half joined by one internal arc.
class FlowNetwork {
 public:
  struct NetworkArc {
    std::size_t from;
    std::size_t to;
    Bounds bounds;
  };

  std::size_t add_node(std::string name = {});
  std::size_t add_node(Bounds throughput, std::string name = {});
  /// Throws std::invalid_argument when lower > upper or lower < 0.
  std::size_t add_arc(std::size_t from, std::size_t to, Bounds bounds);

  std::size_t node_count() const noexcept { return names_.size(); }
  const std::vector<NetworkArc>& arcs() const noexcept { return arcs_; }
  const std::optional<Bounds>& node_bounds(std::size_t node) const { return node_bounds_.at(node); }
  const std::string& node_name(std::size_t node) const { return names_.at(node); }

 private:
  std::vector<std::string> names_;
  std::vector<std::optional<Bounds>> node_bounds_;
  std::vector<NetworkArc> arcs_;
};

/// Hoffman witness: a set of split-network nodes whose incoming lower bounds
/// exceed the outgoing upper bounds. Nodes are named "<name>.in"/"<name>.out"
/// for bounded nodes and "<name>" otherwise.
struct FlowCertificate {
  std::vector<std::string> side;
  FlowValue lower_in = 0;
  FlowValue upper_out = 0;

  std::string to_string() const;
};

struct Circulation {
  /// Flow on each network arc, indexed like FlowNetwork::arcs().
  std::vector<FlowValue> arc_flow;
  /// Throughput of each node (sum of incoming flow).
  std::vector<FlowValue> node_flow;
};

struct CirculationResult {
  std::optional<Circulation> flow;
  /// Set exactly when `flow` is empty.
  std::optional<FlowCertificate> certificate;

  bool feasible() const noexcept { return flow.has_value(); }
};

/// An integral circulation meeting every arc and node bound, or a
/// certificate of infeasibility.
CirculationResult feasible_circulation(const FlowNetwork& net);

// ---------------------------------------------------------------------------
// Cycles, cycle covers and ear decompositions.
// ---------------------------------------------------------------------------

/// Cyclic vertex sequence v0 -> v1 -> ... -> v(k-1) -> v0 with k >= 2.
using Cycle = std::vector<VertexId>;

std::vector<Arc> cycle_arcs(const Cycle& cycle);
/// Distinct vertices, length >= 2, and every consecutive arc present in d.
bool is_cycle_of(const Digraph& d, const Cycle& cycle);

struct CycleCover {
  std::vector<Cycle> cycles;
};

/// Empty string when the cover is valid for d, otherwise the first violation.
std::string validate_cycle_cover(const Digraph& d, const CycleCover& cover);

/// The flow network with vertex bounds [1, min(d-(x), d+(x))] and arc bounds
/// [0, 1]. Node i corresponds to vertex i and arc i to d.arcs()[i].
FlowNetwork cycle_cover_network(const Digraph& d);

struct CycleCoverResult {
  std::optional<CycleCover> cover;
  std::optional<FlowCertificate> certificate;
};

/// Arc-disjoint cycles covering every vertex, extracted from a feasible
/// circulation. Throws std::invalid_argument("requires strong digraph") unless
/// d is strong of order >= 2.
CycleCoverResult find_cycle_cover(const Digraph& d);
std::optional<CycleCover> cycle_cover(const Digraph& d);

struct Ear {
  /// For a cycle ear: v0 ... vk with the closing arc vk -> v0.
  /// For a path ear: v0 ... vk, arcs between consecutive entries.
  std::vector<VertexId> vertices;
  bool is_cycle = false;

  std::vector<Arc> arcs() const;
};

struct EarDecomposition {
  std::vector<Ear> ears;
};

/// Empty string when `ed` is a valid ear decomposition of d.
std::string validate_ear_decomposition(const Digraph& d, const EarDecomposition& ed);

/// Throws std::invalid_argument for non-strong input, order < 2, or a start
/// cycle that is not a cycle of d. Without a start cycle the shortest cycle
/// through vertex 0 is used.
EarDecomposition ear_decomposition(const Digraph& d, const std::optional<Cycle>& start = {});

/// Shortest cycle through v (smallest-index tie breaking), if any.
std::optional<Cycle> shortest_cycle_through(const Digraph& d, VertexId v);

// ---------------------------------------------------------------------------
// Hamiltonian cycles.
// ---------------------------------------------------------------------------

/// Camion-style insertion on a strong semicomplete digraph of order >= 2.
Cycle hamiltonian_cycle_semicomplete(const Digraph& d);

/// Backtracking bound. C_p x C_q with p, q <= 6 must be in range.
inline constexpr std::size_t kMaxBruteforceHamiltonOrder = 40;

/// Exhaustive search with degree propagation. Throws when the order exceeds
/// kMaxBruteforceHamiltonOrder.
std::optional<Cycle> hamiltonian_cycle_bruteforce(const Digraph& d);

}  // namespace gooddecomp
