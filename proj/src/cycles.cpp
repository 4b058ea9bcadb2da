#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "gooddecomp/structure.hpp"

namespace gooddecomp {

std::vector<Arc> cycle_arcs(const Cycle& cycle) {
  std::vector<Arc> arcs;
  if (cycle.size() < 2) return arcs;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    arcs.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  }
  return arcs;
}

bool is_cycle_of(const Digraph& d, const Cycle& cycle) {
  if (cycle.size() < 2) return false;
  std::vector<bool> seen(d.order(), false);
  for (VertexId v : cycle) {
    if (v >= d.order() || seen[v]) return false;
    seen[v] = true;
  }
  for (const Arc& a : cycle_arcs(cycle))
    if (!d.has_arc(a)) return false;
  return true;
}

std::string validate_cycle_cover(const Digraph& d, const CycleCover& cover) {
  ArcSet used;
  std::vector<bool> covered(d.order(), false);
  for (std::size_t i = 0; i < cover.cycles.size(); ++i) {
    const Cycle& c = cover.cycles[i];
    if (!is_cycle_of(d, c)) return "cycle " + std::to_string(i) + " is not a cycle of the digraph";
    for (const Arc& a : cycle_arcs(c)) {
      if (!used.insert(a).second) {
        return "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
               " used by two cycles";
      }
    }
    for (VertexId v : c) covered[v] = true;
  }
  for (VertexId v = 0; v < d.order(); ++v)
    if (!covered[v]) return "vertex " + std::to_string(v) + " is not covered";
  return {};
}

FlowNetwork cycle_cover_network(const Digraph& d) {
  FlowNetwork net;
  for (VertexId v = 0; v < d.order(); ++v) {
    const auto cap = static_cast<FlowValue>(std::min(d.in_degree(v), d.out_degree(v)));
    if (cap == 0) throw std::invalid_argument("every vertex needs an in-arc and an out-arc");
    net.add_node({1, cap}, std::to_string(v));
  }
  for (const Arc& a : d.arcs()) net.add_arc(a.tail, a.head, {0, 1});
  return net;
}

namespace {

// Peel the 0/1 flow support into cycles, least vertex first.
std::vector<Cycle> peel_cycles(std::size_t order, std::vector<Arc> support) {
  std::vector<std::vector<VertexId>> out(order);
  std::sort(support.begin(), support.end());
  for (const Arc& a : support) out[a.tail].push_back(a.head);
  for (auto& list : out) std::reverse(list.begin(), list.end());  // pop_back yields smallest

  std::vector<Cycle> cycles;
  std::vector<std::size_t> position(order, order);
  for (;;) {
    VertexId start = order;
    for (VertexId v = 0; v < order; ++v) {
      if (!out[v].empty()) {
        start = v;
        break;
      }
    }
    if (start == order) break;
    std::vector<VertexId> walk{start};
    position[start] = 0;
    for (;;) {
      const VertexId u = walk.back();
      const VertexId w = out[u].back();
      out[u].pop_back();
      if (position[w] != order) {
        Cycle c(walk.begin() + static_cast<std::ptrdiff_t>(position[w]), walk.end());
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        cycles.push_back(std::move(c));
        // Arcs on the walk before w are not part of the cycle; restore them.
        for (std::size_t i = 0; i < position[w]; ++i) out[walk[i]].push_back(walk[i + 1]);
        for (VertexId v : walk) position[v] = order;
        for (auto& list : out) std::sort(list.rbegin(), list.rend());
        break;
      }
      position[w] = walk.size();
      walk.push_back(w);
    }
  }
  return cycles;
}

}  // namespace

CycleCoverResult find_cycle_cover(const Digraph& d) {
  if (d.order() < 2 || !is_strong(d)) throw std::invalid_argument("requires strong digraph");
  const FlowNetwork net = cycle_cover_network(d);
  CirculationResult circ = feasible_circulation(net);
  CycleCoverResult result;
  if (!circ.feasible()) {
    result.certificate = std::move(circ.certificate);
    return result;
  }
  std::vector<Arc> support;
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    if (circ.flow->arc_flow[i] > 0) support.push_back(d.arcs()[i]);
  }
  CycleCover cover{peel_cycles(d.order(), std::move(support))};
  const std::string problem = validate_cycle_cover(d, cover);
  if (!problem.empty()) throw std::logic_error("cycle cover extraction failed: " + problem);
  result.cover = std::move(cover);
  return result;
}

std::optional<CycleCover> cycle_cover(const Digraph& d) { return find_cycle_cover(d).cover; }

std::vector<Arc> Ear::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back({vertices[i], vertices[i + 1]});
  if (is_cycle && vertices.size() >= 2) out.push_back({vertices.back(), vertices.front()});
  return out;
}

std::string validate_ear_decomposition(const Digraph& d, const EarDecomposition& ed) {
  if (ed.ears.empty()) return "no ears";
  if (!ed.ears.front().is_cycle) return "first ear is not a cycle";
  std::vector<bool> covered(d.order(), false);
  ArcSet used;
  for (std::size_t i = 0; i < ed.ears.size(); ++i) {
    const Ear& ear = ed.ears[i];
    const std::string where = "ear " + std::to_string(i) + ": ";
    const auto& vs = ear.vertices;
    if (vs.size() < 2) return where + "too short";
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return where + "repeats a vertex";
    }
    for (const Arc& a : ear.arcs()) {
      if (a.tail >= d.order() || a.head >= d.order() || !d.has_arc(a)) {
        return where + "uses a non-arc";
      }
      if (!used.insert(a).second) return where + "reuses an arc";
    }
    if (i == 0) {
      for (VertexId v : vs) covered[v] = true;
      continue;
    }
    if (ear.is_cycle) {
      const auto common = std::count_if(vs.begin(), vs.end(), [&](VertexId v) { return covered[v]; });
      if (common != 1) return where + "cycle ear must meet earlier ears in exactly one vertex";
    } else {
      if (!covered[vs.front()] || !covered[vs.back()]) return where + "path ear endpoints not attached";
      for (std::size_t k = 1; k + 1 < vs.size(); ++k)
        if (covered[vs[k]]) return where + "path ear interior touches earlier ears";
    }
    for (VertexId v : vs) covered[v] = true;
  }
  if (used.size() != d.arc_count()) return "ears do not exhaust the arcs";
  for (VertexId v = 0; v < d.order(); ++v)
    if (!covered[v]) return "vertex " + std::to_string(v) + " not covered";
  return {};
}

std::optional<Cycle> shortest_cycle_through(const Digraph& d, VertexId v) {
  const std::size_t none = d.order();
  std::vector<std::size_t> parent(d.order(), none);
  std::queue<VertexId> q;
  q.push(v);
  parent[v] = v;
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop();
    if (u != v && d.has_arc(u, v)) {
      Cycle c;
      for (VertexId x = u; x != v; x = parent[x]) c.push_back(x);
      c.push_back(v);
      std::reverse(c.begin(), c.end());
      return c;
    }
    for (VertexId w : d.out_neighbors(u)) {
      if (parent[w] == none) {
        parent[w] = u;
        q.push(w);
      }
    }
  }
  return std::nullopt;
}

EarDecomposition ear_decomposition(const Digraph& d, const std::optional<Cycle>& start) {
  if (d.order() < 2 || !is_strong(d)) {
    throw std::invalid_argument("ear decomposition requires a strong digraph of order >= 2");
  }
  Cycle first;
  if (start) {
    if (!is_cycle_of(d, *start)) throw std::invalid_argument("start cycle is not a cycle of the digraph");
    first = *start;
  } else {
    first = *shortest_cycle_through(d, 0);
  }

  EarDecomposition ed;
  std::vector<bool> covered(d.order(), false);
  ArcSet used;
  for (VertexId v : first) covered[v] = true;
  for (const Arc& a : cycle_arcs(first)) used.insert(a);
  ed.ears.push_back({first, true});

  while (used.size() < d.arc_count()) {
    const Arc* next = nullptr;
    for (const Arc& a : d.arcs()) {
      if (covered[a.tail] && !used.contains(a)) {
        next = &a;
        break;
      }
    }
    if (next == nullptr) throw std::logic_error("no attachable arc in a strong digraph");
    Ear ear;
    if (covered[next->head]) {
      ear.vertices = {next->tail, next->head};
    } else {
      // BFS from the head through uncovered vertices until an attached vertex.
      const std::size_t none = d.order();
      std::vector<std::size_t> parent(d.order(), none);
      std::queue<VertexId> q;
      q.push(next->head);
      parent[next->head] = next->head;
      VertexId end = none;
      VertexId before_end = none;
      while (!q.empty() && end == none) {
        const VertexId u = q.front();
        q.pop();
        for (VertexId w : d.out_neighbors(u)) {
          if (covered[w]) {
            end = w;
            before_end = u;
            break;
          }
          if (parent[w] == none) {
            parent[w] = u;
            q.push(w);
          }
        }
      }
      std::vector<VertexId> middle;
      for (VertexId x = before_end; x != next->head; x = parent[x]) middle.push_back(x);
      middle.push_back(next->head);
      std::reverse(middle.begin(), middle.end());
      ear.vertices.push_back(next->tail);
      ear.vertices.insert(ear.vertices.end(), middle.begin(), middle.end());
      if (end == next->tail) {
        ear.is_cycle = true;
      } else {
        ear.vertices.push_back(end);
      }
    }
    for (const Arc& a : ear.arcs()) used.insert(a);
    for (VertexId v : ear.vertices) covered[v] = true;
    ed.ears.push_back(std::move(ear));
  }
  return ed;
}

Cycle hamiltonian_cycle_semicomplete(const Digraph& d) {
  if (d.order() < 2 || !is_semicomplete(d) || !is_strong(d)) {
    throw std::invalid_argument("requires a strong semicomplete digraph of order >= 2");
  }
  const std::size_t n = d.order();
  Cycle cycle = *shortest_cycle_through(d, 0);
  std::vector<bool> on_cycle(n, false);
  for (VertexId v : cycle) on_cycle[v] = true;

  while (cycle.size() < n) {
    bool inserted = false;
    for (VertexId v = 0; v < n && !inserted; ++v) {
      if (on_cycle[v]) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const VertexId next = cycle[(i + 1) % cycle.size()];
        if (d.has_arc(cycle[i], v) && d.has_arc(v, next)) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
          on_cycle[v] = true;
          inserted = true;
          break;
        }
      }
    }
    if (inserted) continue;
    // Every outside vertex is dominated by the cycle or dominates it; strong
    // connectivity gives an arc from the first kind to the second.
    auto dominated = [&](VertexId v) { return d.has_arc(cycle[0], v); };
    bool bridged = false;
    for (VertexId o = 0; o < n && !bridged; ++o) {
      if (on_cycle[o] || !dominated(o)) continue;
      for (VertexId i : d.out_neighbors(o)) {
        if (on_cycle[i] || dominated(i)) continue;
        cycle.insert(cycle.begin() + 1, {o, i});
        on_cycle[o] = on_cycle[i] = true;
        bridged = true;
        break;
      }
    }
    if (!bridged) throw std::logic_error("Hamiltonian insertion stalled");
  }
  return cycle;
}

namespace {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Digraph& d)
      : d_(d), n_(d.order()), visited_(n_, false), in_avail_(n_), out_avail_(n_) {
    for (VertexId v = 0; v < n_; ++v) {
      in_avail_[v] = d.in_degree(v);
      out_avail_[v] = d.out_degree(v);
    }
  }

  std::optional<Cycle> run() {
    path_.push_back(0);
    visited_[0] = true;
    for (VertexId v = 1; v < n_; ++v)
      if (in_avail_[v] == 0 || out_avail_[v] == 0) return std::nullopt;
    if (search()) return path_;
    return std::nullopt;
  }

 private:
  bool search() {
    const VertexId u = path_.back();
    if (path_.size() == n_) return d_.has_arc(u, path_.front());
    // A vertex whose only available predecessor is u must come next.
    std::vector<VertexId> candidates;
    VertexId forced = n_;
    for (VertexId w : d_.out_neighbors(u)) {
      if (visited_[w]) continue;
      if (in_avail_[w] == 1) {
        if (forced != n_) return false;
        forced = w;
      }
      candidates.push_back(w);
    }
    if (forced != n_) candidates = {forced};
    for (VertexId w : candidates) {
      if (step(u, w) && search()) return true;
      undo(u, w);
    }
    return false;
  }

  // Moves the path end from u to w; false when some vertex becomes stranded.
  bool step(VertexId u, VertexId w) {
    bool ok = true;
    for (VertexId x : d_.out_neighbors(u)) {
      if (visited_[x] || x == w) continue;
      if (--in_avail_[x] == 0) ok = false;
    }
    visited_[w] = true;
    path_.push_back(w);
    for (VertexId y : d_.in_neighbors(w)) {
      if (visited_[y]) continue;
      if (--out_avail_[y] == 0) ok = false;
    }
    return ok;
  }

  void undo(VertexId u, VertexId w) {
    for (VertexId y : d_.in_neighbors(w))
      if (!visited_[y]) ++out_avail_[y];
    path_.pop_back();
    visited_[w] = false;
    for (VertexId x : d_.out_neighbors(u))
      if (!visited_[x] && x != w) ++in_avail_[x];
  }

  const Digraph& d_;
  std::size_t n_;
  std::vector<bool> visited_;
  std::vector<std::size_t> in_avail_;
  std::vector<std::size_t> out_avail_;
  Cycle path_;
};

}  // namespace

std::optional<Cycle> hamiltonian_cycle_bruteforce(const Digraph& d) {
  if (d.order() > kMaxBruteforceHamiltonOrder) {
    throw std::invalid_argument("Hamiltonian search bound exceeded");
  }
  if (d.order() < 2) return std::nullopt;
  return HamiltonSearch(d).run();
}

}  // namespace gooddecomp
