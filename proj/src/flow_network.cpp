#include <sstream>
#include <stdexcept>

#include "gooddecomp/max_flow.hpp"
#include "gooddecomp/structure.hpp"

namespace gooddecomp {

std::size_t FlowNetwork::add_node(std::string name) {
  if (name.empty()) name = std::to_string(names_.size());
  names_.push_back(std::move(name));
  node_bounds_.emplace_back();
  return names_.size() - 1;
}

std::size_t FlowNetwork::add_node(Bounds throughput, std::string name) {
  if (throughput.lower < 0 || throughput.lower > throughput.upper) {
    throw std::invalid_argument("node bounds need 0 <= lower <= upper");
  }
  const std::size_t id = add_node(std::move(name));
  node_bounds_[id] = throughput;
  return id;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, Bounds bounds) {
  if (from >= node_count() || to >= node_count()) {
    throw std::invalid_argument("arc endpoint is not a node");
  }
  if (bounds.lower < 0 || bounds.lower > bounds.upper) {
    throw std::invalid_argument("arc bounds need 0 <= lower <= upper");
  }
  arcs_.push_back({from, to, bounds});
  return arcs_.size() - 1;
}

std::string FlowCertificate::to_string() const {
  std::ostringstream os;
  os << "cut {";
  for (std::size_t i = 0; i < side.size(); ++i) os << (i ? " " : "") << side[i];
  os << "} lower-in=" << lower_in << " > upper-out=" << upper_out;
  return os.str();
}

namespace {

struct SplitArc {
  std::size_t from;
  std::size_t to;
  Bounds bounds;
};

// Network with every bounded node replaced by an in-half and out-half.
struct SplitNetwork {
  std::vector<std::string> names;
  std::vector<std::size_t> in_half;
  std::vector<std::size_t> out_half;
  std::vector<SplitArc> arcs;
  // Index into `arcs` for each original arc, and for each bounded node.
  std::vector<std::size_t> original_arc;
  std::vector<std::optional<std::size_t>> internal_arc;
};

SplitNetwork split(const FlowNetwork& net) {
  SplitNetwork s;
  s.in_half.resize(net.node_count());
  s.out_half.resize(net.node_count());
  s.internal_arc.resize(net.node_count());
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    const auto& b = net.node_bounds(v);
    if (!b) {
      s.in_half[v] = s.out_half[v] = s.names.size();
      s.names.push_back(net.node_name(v));
      continue;
    }
    s.in_half[v] = s.names.size();
    s.names.push_back(net.node_name(v) + ".in");
    s.out_half[v] = s.names.size();
    s.names.push_back(net.node_name(v) + ".out");
    s.internal_arc[v] = s.arcs.size();
    s.arcs.push_back({s.in_half[v], s.out_half[v], *b});
  }
  for (const auto& a : net.arcs()) {
    s.original_arc.push_back(s.arcs.size());
    s.arcs.push_back({s.out_half[a.from], s.in_half[a.to], a.bounds});
  }
  return s;
}

}  // namespace

CirculationResult feasible_circulation(const FlowNetwork& net) {
  const SplitNetwork s = split(net);
  const std::size_t n = s.names.size();
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  MaxFlow flow(n + 2);
  std::vector<FlowValue> excess(n, 0);
  std::vector<std::size_t> edge_ids;
  edge_ids.reserve(s.arcs.size());
  for (const SplitArc& a : s.arcs) {
    edge_ids.push_back(flow.add_edge(a.from, a.to, a.bounds.upper - a.bounds.lower));
    excess[a.to] += a.bounds.lower;
    excess[a.from] -= a.bounds.lower;
  }
  FlowValue required = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      flow.add_edge(source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      flow.add_edge(v, sink, -excess[v]);
    }
  }
  const FlowValue pushed = flow.run(source, sink);

  CirculationResult result;
  if (pushed < required) {
    // Source side of a minimum cut violates Hoffman's condition.
    const std::vector<bool> reach = flow.residual_reachable(source);
    FlowCertificate cert;
    for (std::size_t v = 0; v < n; ++v)
      if (reach[v]) cert.side.push_back(s.names[v]);
    for (const SplitArc& a : s.arcs) {
      if (!reach[a.from] && reach[a.to]) cert.lower_in += a.bounds.lower;
      if (reach[a.from] && !reach[a.to]) cert.upper_out += a.bounds.upper;
    }
    result.certificate = std::move(cert);
    return result;
  }

  Circulation c;
  std::vector<FlowValue> split_flow(s.arcs.size());
  for (std::size_t i = 0; i < s.arcs.size(); ++i) {
    split_flow[i] = s.arcs[i].bounds.lower + flow.flow(edge_ids[i]);
  }
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    c.arc_flow.push_back(split_flow[s.original_arc[i]]);
  }
  c.node_flow.assign(net.node_count(), 0);
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (s.internal_arc[v]) c.node_flow[v] = split_flow[*s.internal_arc[v]];
  }
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const std::size_t to = net.arcs()[i].to;
    if (!s.internal_arc[to]) c.node_flow[to] += c.arc_flow[i];
  }
  result.flow = std::move(c);
  return result;
}

}  // namespace gooddecomp
