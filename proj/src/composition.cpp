#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gooddecomp/composition.hpp"

namespace gooddecomp {

namespace {

void check_kept(const CompositionSpec& spec, const KeptVertices& kept) {
  if (kept.size() != spec.outer.order()) {
    throw std::invalid_argument("kept lists must match the number of blocks");
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].empty()) {
      throw std::invalid_argument("block " + std::to_string(i) + " keeps no vertex");
    }
    std::vector<bool> seen(spec.inners[i].order(), false);
    for (std::size_t j : kept[i]) {
      if (j >= seen.size() || seen[j]) {
        throw std::invalid_argument("kept list of block " + std::to_string(i) + " is invalid");
      }
      seen[j] = true;
    }
  }
}

// Start of each block inside Q*.
std::vector<std::size_t> kept_offsets(const KeptVertices& kept) {
  std::vector<std::size_t> offset(kept.size() + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) offset[i + 1] = offset[i] + kept[i].size();
  return offset;
}

KeptVertices first_vertices(const CompositionSpec& spec, std::size_t per_block) {
  KeptVertices kept(spec.outer.order());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const std::size_t m = std::min(per_block, spec.inners[i].order());
    kept[i].resize(m);
    std::iota(kept[i].begin(), kept[i].end(), std::size_t{0});
  }
  return kept;
}

// Arcs on Q* given by (position on a cycle of T, slot within the kept list).
// Positions are translated through `blocks`, the block at each position.
class SkeletonBuilder {
 public:
  SkeletonBuilder(std::vector<std::size_t> blocks, const KeptVertices& kept)
      : blocks_(std::move(blocks)), offset_(kept_offsets(kept)) {}

  VertexId at(std::size_t position, std::size_t slot) const {
    return offset_[blocks_[position]] + slot;
  }

  void add(int side, std::size_t p1, std::size_t s1, std::size_t p2, std::size_t s2) {
    sides_[side].insert({at(p1, s1), at(p2, s2)});
  }
  void add_arc(int side, const Arc& a) { sides_[side].insert(a); }

  // The two standard skeletons over two slots per position: straight arcs on
  // side 0, crossed arcs on side 1.
  // With c(k) = k % 2, the second side is a single cycle when t is even and
  // otherwise splits into C = {(k, c(k))} and Z = {(k, 1 - c(k))}.
  void add_two_slot_skeleton() {
    const std::size_t t = blocks_.size();
    for (std::size_t k = 0; k + 1 < t; ++k) {
      for (std::size_t r = 0; r < 2; ++r) {
        add(0, k, r, k + 1, r);
        add(1, k, r, k + 1, 1 - r);
      }
    }
    add(0, t - 1, 0, 0, 1);
    add(0, t - 1, 1, 0, 0);
    add(1, t - 1, 0, 0, 0);
    add(1, t - 1, 1, 0, 1);
  }

  const ArcSet& side(int s) const { return sides_[s]; }

 private:
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> offset_;
  std::array<ArcSet, 2> sides_;
};

std::size_t c_slot(std::size_t position) { return position % 2; }
std::size_t z_slot(std::size_t position) { return 1 - position % 2; }

Decomposition lift(const CompositionSpec& spec, const KeptVertices& kept,
                   const SkeletonBuilder& b, const std::string& tag) {
  Digraph qstar = kept_subcomposition(spec, kept);
  const Decomposition base = certify(qstar, b.side(0), b.side(1), tag);
  return extend_by_twins(qstar, base, spec, kept);
}

std::vector<std::size_t> rotated(const Cycle& cycle, std::size_t start) {
  std::vector<std::size_t> out(cycle.size());
  for (std::size_t k = 0; k < cycle.size(); ++k) out[k] = cycle[(start + k) % cycle.size()];
  return out;
}

std::size_t inners_with_arcs(const CompositionSpec& spec) {
  return static_cast<std::size_t>(std::count_if(spec.inners.begin(), spec.inners.end(),
                                                [](const Digraph& h) { return h.arc_count() > 0; }));
}

bool all_orders_at_least(const CompositionSpec& spec, std::size_t m) {
  return std::all_of(spec.inners.begin(), spec.inners.end(),
                     [m](const Digraph& h) { return h.order() >= m; });
}

enum class HamiltonCase { even, two_inner_arcs, triples };

std::optional<HamiltonCase> hamilton_case(const CompositionSpec& spec) {
  const std::size_t t = spec.outer.order();
  if (t < 2 || !all_orders_at_least(spec, 2)) return std::nullopt;
  if (t % 2 == 0) return HamiltonCase::even;
  if (inners_with_arcs(spec) >= 2) return HamiltonCase::two_inner_arcs;
  const auto small = std::count_if(spec.inners.begin(), spec.inners.end(),
                                   [](const Digraph& h) { return h.order() < 3; });
  if (small <= 1) return HamiltonCase::triples;
  return std::nullopt;
}

// Explicit eight-vertex construction for t = 3, n = (2, 3, 3) and its path
// extension to larger odd t. Position 0 holds the block that may have only
// two vertices.
Decomposition triples_construction(const CompositionSpec& spec, const Cycle& hc) {
  const std::size_t t = hc.size();
  std::size_t start = 0;
  for (std::size_t k = 0; k < t; ++k) {
    if (spec.inners[hc[k]].order() < spec.inners[hc[start]].order()) start = k;
  }
  const std::vector<std::size_t> blocks = rotated(hc, start);
  KeptVertices kept = first_vertices(spec, 3);
  kept[blocks[0]].resize(2);
  SkeletonBuilder b(blocks, kept);

  // 1-based (i, j) as in u_{i,j}; i = t is the last position.
  auto arc = [&](int side, std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    b.add(side, i1 - 1, j1 - 1, i2 - 1, j2 - 1);
  };
  // Walk from u_{2,s} through positions 3..t-1 choosing slots by parity,
  // ending at u_{t,e} (or at position t-1 when e == 0).
  auto path = [&](int side, std::size_t s, std::size_t odd, std::size_t even, std::size_t e) {
    std::size_t pos = 2;
    std::size_t slot = s;
    for (std::size_t i = 3; i <= t - 1; ++i) {
      const std::size_t next = i % 2 ? odd : even;
      arc(side, pos, slot, i, next);
      pos = i;
      slot = next;
    }
    if (e != 0) arc(side, pos, slot, t, e);
  };

  arc(0, 1, 1, 2, 1);
  arc(0, t, 1, 1, 1);
  arc(0, 1, 2, 2, 2);
  arc(0, 1, 2, 2, 3);
  arc(0, t, 2, 1, 2);
  arc(0, t, 3, 1, 2);
  path(0, 1, 1, 1, 2);
  path(0, 2, 2, 2, 1);
  path(0, 3, 3, 3, 3);

  arc(1, 1, 1, 2, 2);
  arc(1, 1, 1, 2, 3);
  arc(1, t, 2, 1, 1);
  arc(1, t, 3, 1, 1);
  arc(1, 1, 2, 2, 1);
  arc(1, t, 1, 1, 2);
  path(1, 1, 2, 1, 3);
  path(1, 2, 1, 2, 2);
  path(1, 3, 2, 3, 1);
  if (t >= 5) path(1, 2, 3, 2, 0);

  return lift(spec, kept, b, "composition/hamiltonian-triples");
}

Decomposition two_inner_arcs_construction(const CompositionSpec& spec, const Cycle& hc) {
  const std::size_t t = hc.size();
  std::vector<std::size_t> with_arcs;
  for (std::size_t k = 0; k < t && with_arcs.size() < 2; ++k) {
    if (spec.inners[hc[k]].arc_count() > 0) with_arcs.push_back(k);
  }
  const std::size_t p = with_arcs[0];
  const std::size_t q = with_arcs[1];
  KeptVertices kept = first_vertices(spec, 2);
  // e_p must run from C to Z and e_q from Z to C.
  const Arc ep = spec.inners[hc[p]].arcs().front();
  const Arc eq = spec.inners[hc[q]].arcs().front();
  kept[hc[p]] = c_slot(p) == 0 ? std::vector{ep.tail, ep.head} : std::vector{ep.head, ep.tail};
  kept[hc[q]] = c_slot(q) == 0 ? std::vector{eq.head, eq.tail} : std::vector{eq.tail, eq.head};

  SkeletonBuilder b({hc.begin(), hc.end()}, kept);
  b.add_two_slot_skeleton();
  b.add(1, p, c_slot(p), p, z_slot(p));
  b.add(1, q, z_slot(q), q, c_slot(q));
  return lift(spec, kept, b, "composition/hamiltonian-inner-arcs");
}

void check_hamiltonian(const Digraph& t, const Cycle& hc) {
  if (hc.size() != t.order() || !is_cycle_of(t, hc)) {
    throw std::invalid_argument("not a Hamiltonian cycle of the outer digraph");
  }
}

std::optional<Cycle> outer_hamiltonian_cycle(const Digraph& t) {
  if (t.order() >= 2 && is_semicomplete(t) && is_strong(t)) return hamiltonian_cycle_semicomplete(t);
  if (t.order() > kMaxBruteforceHamiltonOrder) return std::nullopt;
  return hamiltonian_cycle_bruteforce(t);
}

}  // namespace

Digraph kept_subcomposition(const CompositionSpec& spec, const KeptVertices& kept) {
  spec.validate();
  check_kept(spec, kept);
  const Built q = compose(spec);
  std::vector<VertexId> chosen;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j : kept[i]) {
      chosen.push_back(q.coords.vertex(i, j));
      labels.push_back(q.digraph.label(chosen.back()));
    }
  }
  return induced_subdigraph(q.digraph, chosen).with_labels(std::move(labels));
}

Decomposition extend_by_twins(const Digraph& qstar, const Decomposition& d,
                              const CompositionSpec& spec, const KeptVertices& kept) {
  if (!(kept_subcomposition(spec, kept) == qstar) || !(d.host() == qstar)) {
    throw std::invalid_argument("decomposition is not over the kept sub-composition");
  }
  const Built q = compose(spec);
  const std::vector<std::size_t> offset = kept_offsets(kept);
  std::vector<VertexId> to_q;
  std::vector<std::size_t> block_of;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j : kept[i]) {
      to_q.push_back(q.coords.vertex(i, j));
      block_of.push_back(i);
    }
  }

  std::array<ArcSet, 2> sides;
  const std::array<const ArcSet*, 2> given{&d.first(), &d.second()};
  for (int s = 0; s < 2; ++s) {
    for (const Arc& a : *given[s]) sides[s].insert({to_q[a.tail], to_q[a.head]});
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const VertexId rep = offset[i];
      std::vector<bool> is_kept(spec.inners[i].order(), false);
      for (std::size_t j : kept[i]) is_kept[j] = true;
      for (std::size_t j = 0; j < is_kept.size(); ++j) {
        if (is_kept[j]) continue;
        const VertexId twin = q.coords.vertex(i, j);
        for (const Arc& a : *given[s]) {
          if (a.tail == rep && block_of[a.head] != i) sides[s].insert({twin, to_q[a.head]});
          if (a.head == rep && block_of[a.tail] != i) sides[s].insert({to_q[a.tail], twin});
        }
      }
    }
  }
  return certify(q.digraph, std::move(sides[0]), std::move(sides[1]), d.construction());
}

Decomposition decompose_comp_semicomplete(const CompositionSpec& spec,
                                          const CompositionOptions& options) {
  spec.validate();
  const Digraph& t = spec.outer;
  if (t.order() < 2 || !is_semicomplete(t) || arc_connectivity(t) < 2) {
    throw NotApplicable("outer digraph is not 2-arc-strong semicomplete");
  }

  const Digraph s4 = s4_digraph();
  if (t.order() == 4 && t.arc_count() == s4.arc_count()) {
    std::array<VertexId, 4> phi{0, 1, 2, 3};
    bool is_s4 = false;
    do {
      if (permute(s4, phi) == t) {
        is_s4 = true;
        if (spec.inners[phi[0]].order() >= 2) break;
      }
    } while (std::next_permutation(phi.begin(), phi.end()));
    if (is_s4) {
      if (spec.inners[phi[0]].order() < 2) {
        throw NotApplicable("composition is isomorphic to S_4");
      }
      // S_4 is vertex-transitive, so some labeling puts a large block first.
      KeptVertices kept = first_vertices(spec, 1);
      kept[phi[0]] = {0, 1};
      const std::vector<std::size_t> blocks(phi.begin(), phi.end());
      SkeletonBuilder b(blocks, kept);
      auto arc = [&](int side, std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
        b.add(side, i1 - 1, j1 - 1, i2 - 1, j2 - 1);
      };
      arc(0, 1, 1, 2, 1);
      arc(0, 2, 1, 1, 2);
      arc(0, 1, 2, 4, 1);
      arc(0, 4, 1, 3, 1);
      arc(0, 3, 1, 1, 1);
      arc(1, 2, 1, 1, 1);
      arc(1, 1, 1, 4, 1);
      arc(1, 4, 1, 2, 1);
      arc(1, 2, 1, 3, 1);
      arc(1, 3, 1, 1, 2);
      arc(1, 1, 2, 2, 1);
      return lift(spec, kept, b, "composition/semicomplete-s4");
    }
  }

  const OracleReport report = oracle_good_decomposition(t, options.oracle_budget);
  if (report.outcome == OracleOutcome::aborted) {
    throw NotApplicable("oracle budget exhausted on the outer digraph");
  }
  if (report.outcome == OracleOutcome::none) {
    throw ConstructionError("2-arc-strong semicomplete outer without good decomposition");
  }
  const KeptVertices kept = first_vertices(spec, 1);
  Digraph qstar = kept_subcomposition(spec, kept);
  const Decomposition base = certify(qstar, report.decomposition->first(),
                                     report.decomposition->second(), "composition/semicomplete");
  return extend_by_twins(qstar, base, spec, kept);
}

Decomposition decompose_comp_hamiltonian(const CompositionSpec& spec, const Cycle& hcycle) {
  spec.validate();
  check_hamiltonian(spec.outer, hcycle);
  const auto which = hamilton_case(spec);
  if (!which) throw NotApplicable("block sizes do not meet the Hamiltonian conditions");
  switch (*which) {
    case HamiltonCase::even: {
      const KeptVertices kept = first_vertices(spec, 2);
      SkeletonBuilder b({hcycle.begin(), hcycle.end()}, kept);
      b.add_two_slot_skeleton();
      return lift(spec, kept, b, "composition/hamiltonian-even");
    }
    case HamiltonCase::two_inner_arcs:
      return two_inner_arcs_construction(spec, hcycle);
    case HamiltonCase::triples:
      return triples_construction(spec, hcycle);
  }
  throw std::logic_error("unreachable");
}

Decomposition decompose_comp_strong_parts(const CompositionSpec& spec) {
  spec.validate();
  if (spec.outer.order() < 2 || !is_strong(spec.outer)) {
    throw NotApplicable("outer digraph is not strong of order >= 2");
  }
  for (const Digraph& h : spec.inners) {
    if (h.order() < 2 || !is_strong(h)) throw NotApplicable("inner digraph is not strong of order >= 2");
  }
  const Built q = compose(spec);
  ArcSet a1;
  for (const Arc& a : spec.outer.arcs()) {
    a1.insert({q.coords.vertex(a.tail, 0), q.coords.vertex(a.head, 0)});
  }
  for (std::size_t i = 0; i < spec.inners.size(); ++i) {
    for (const Arc& a : spec.inners[i].arcs()) {
      a1.insert({q.coords.vertex(i, a.tail), q.coords.vertex(i, a.head)});
    }
  }
  ArcSet a2 = complement(q.digraph, a1);
  return certify(q.digraph, std::move(a1), std::move(a2), "composition/strong-parts");
}

std::optional<Decomposition> decompose_composition(const CompositionSpec& spec,
                                                   const CompositionOptions& options) {
  spec.validate();
  if (spec.outer.order() < 2) throw std::invalid_argument("composition needs t >= 2");
  const Digraph& t = spec.outer;

  if (is_semicomplete(t) && arc_connectivity(t) >= 2) {
    try {
      return decompose_comp_semicomplete(spec, options);
    } catch (const NotApplicable&) {
    }
  }
  if (hamilton_case(spec)) {
    if (const auto hc = outer_hamiltonian_cycle(t)) return decompose_comp_hamiltonian(spec, *hc);
  }
  try {
    return decompose_comp_strong_parts(spec);
  } catch (const NotApplicable&) {
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Characterization for strong semicomplete outer digraphs.
// ---------------------------------------------------------------------------

std::string_view to_string(ExceptionTag tag) {
  switch (tag) {
    case ExceptionTag::S4: return "S4";
    case ExceptionTag::C3_K2_K2_K2: return "C3_K2_K2_K2";
    case ExceptionTag::C3_P2_K2_K2: return "C3_P2_K2_K2";
    case ExceptionTag::C3_K2_K2_K3: return "C3_K2_K2_K3";
  }
  return "?";
}

Digraph exceptional_digraph(ExceptionTag tag) {
  auto c3 = [](Digraph h1, std::size_t n3) {
    return compose({directed_cycle(3), {std::move(h1), empty_digraph(2), empty_digraph(n3)}}).digraph;
  };
  switch (tag) {
    case ExceptionTag::S4: return s4_digraph();
    case ExceptionTag::C3_K2_K2_K2: return c3(empty_digraph(2), 2);
    case ExceptionTag::C3_P2_K2_K2: return c3(directed_path(2), 2);
    case ExceptionTag::C3_K2_K2_K3: return c3(empty_digraph(2), 3);
  }
  throw std::logic_error("unknown exception tag");
}

std::optional<ExceptionMatch> match_exception(const Digraph& d) {
  for (ExceptionTag tag : {ExceptionTag::S4, ExceptionTag::C3_K2_K2_K2, ExceptionTag::C3_P2_K2_K2,
                           ExceptionTag::C3_K2_K2_K3}) {
    const Digraph e = exceptional_digraph(tag);
    if (e.order() != d.order() || e.arc_count() != d.arc_count()) continue;
    if (auto iso = find_isomorphism(e, d)) return ExceptionMatch{tag, std::move(*iso)};
  }
  return std::nullopt;
}

namespace {

// Two arcs of a non-cycle outer arc a -> b, one from C to Z and one back,
// replace the inner arcs of the two-inner-arcs case.
Decomposition chord_repair(const CompositionSpec& spec, const Cycle& hc, std::size_t a,
                           std::size_t b) {
  const KeptVertices kept = first_vertices(spec, 2);
  SkeletonBuilder sb({hc.begin(), hc.end()}, kept);
  sb.add_two_slot_skeleton();
  sb.add(1, a, c_slot(a), b, z_slot(b));
  sb.add(1, a, z_slot(a), b, c_slot(b));
  return lift(spec, kept, sb, "characterization/chord-repair");
}

// Outer C_3 with blocks at positions 0, 1 of size two and position 2 of
// size at least four.
Decomposition large_third_block(const CompositionSpec& spec, const std::vector<std::size_t>& blocks) {
  KeptVertices kept = first_vertices(spec, 2);
  kept[blocks[2]] = {0, 1, 2, 3};
  SkeletonBuilder b(blocks, kept);
  auto walk = [&](int side, std::initializer_list<std::pair<std::size_t, std::size_t>> seq) {
    for (auto it = seq.begin(); std::next(it) != seq.end(); ++it) {
      const auto nx = *std::next(it);
      b.add(side, it->first - 1, it->second - 1, nx.first - 1, nx.second - 1);
    }
  };
  walk(0, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 1}});
  walk(0, {{2, 1}, {3, 4}, {1, 1}});
  walk(0, {{2, 2}, {3, 3}, {1, 2}});
  walk(1, {{1, 1}, {2, 2}, {3, 1}, {1, 1}});
  walk(1, {{1, 2}, {2, 1}, {3, 2}, {1, 2}});
  walk(1, {{2, 1}, {3, 3}, {1, 1}});
  walk(1, {{2, 2}, {3, 4}, {1, 2}});
  return lift(spec, kept, b, "characterization/large-third-block");
}

// Outer C_3, block sizes (2, 2, 3) and exactly one inner with arcs.
Decomposition single_inner_arc(const CompositionSpec& spec, const std::vector<std::size_t>& blocks) {
  KeptVertices kept = first_vertices(spec, 3);
  std::size_t p = 0;
  while (spec.inners[blocks[p]].arc_count() == 0) ++p;
  const Arc a = spec.inners[blocks[p]].arcs().front();
  // Relabel so the arc reads u12u11, u21u22 or u32u31.
  if (p == 1) {
    kept[blocks[p]] = {a.tail, a.head};
  } else {
    std::vector<std::size_t> order{a.head, a.tail};
    for (std::size_t j = 0; j < spec.inners[blocks[p]].order(); ++j)
      if (j != a.head && j != a.tail) order.push_back(j);
    kept[blocks[p]] = std::move(order);
  }
  SkeletonBuilder b(blocks, kept);
  auto walk = [&](int side, std::initializer_list<std::pair<std::size_t, std::size_t>> seq) {
    for (auto it = seq.begin(); std::next(it) != seq.end(); ++it) {
      const auto nx = *std::next(it);
      b.add(side, it->first - 1, it->second - 1, nx.first - 1, nx.second - 1);
    }
  };
  walk(0, {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 1}});
  walk(0, {{2, 1}, {3, 3}, {1, 1}});
  walk(1, {{1, 1}, {2, 2}, {3, 1}, {1, 1}});
  walk(1, {{1, 2}, {2, 1}, {3, 2}, {1, 2}});
  walk(1, {{2, 2}, {3, 3}, {1, 2}});
  if (p == 0) walk(1, {{1, 2}, {1, 1}});
  if (p == 1) walk(1, {{2, 1}, {2, 2}});
  if (p == 2) walk(1, {{3, 2}, {3, 1}});
  return lift(spec, kept, b, "characterization/single-inner-arc");
}

// All blocks of size two and one inner digon; both digon arcs join C and Z.
Decomposition inner_digon(const CompositionSpec& spec, const Cycle& hc) {
  std::size_t p = 0;
  while (spec.inners[hc[p]].arc_count() < 2) ++p;
  const KeptVertices kept = first_vertices(spec, 2);
  SkeletonBuilder b({hc.begin(), hc.end()}, kept);
  b.add_two_slot_skeleton();
  b.add(1, p, 0, p, 1);
  b.add(1, p, 1, p, 0);
  return lift(spec, kept, b, "characterization/inner-digon");
}

}  // namespace

CharacterizationResult characterize_semicomplete_composition(const CompositionSpec& spec,
                                                             const CompositionOptions& options) {
  spec.validate();
  const Digraph& t = spec.outer;
  if (t.order() < 2 || !is_strong(t) || !is_semicomplete(t) || !all_orders_at_least(spec, 2)) {
    throw std::invalid_argument("requires strong semicomplete outer and nontrivial inners");
  }
  const Digraph q = compose(spec).digraph;
  if (q.order() <= kMaxIsomorphismOrder) {
    if (auto m = match_exception(q)) return *m;
  }
  if (auto d = decompose_composition(spec, options)) return std::move(*d);

  // Only odd t with at least two blocks of size two gets here.
  const Cycle hc = hamiltonian_cycle_semicomplete(t);
  const std::size_t n = hc.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 2) % n;
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      if ((a + 1) % n != b && t.has_arc(hc[a], hc[b])) return chord_repair(spec, hc, a, b);
    }
  }
  if (n != 3) throw std::logic_error("characterization: no branch for this composition");

  std::size_t r = 0;
  while (spec.inners[hc[r]].order() != 2 || spec.inners[hc[(r + 1) % 3]].order() != 2) {
    if (++r == 3) throw std::logic_error("characterization: no two consecutive blocks of size two");
  }
  const std::vector<std::size_t> blocks = rotated(hc, r);
  const std::size_t n3 = spec.inners[blocks[2]].order();
  if (n3 >= 4) return large_third_block(spec, blocks);
  if (n3 == 3) return single_inner_arc(spec, blocks);
  return inner_digon(spec, hc);
}

}  // namespace gooddecomp
