#include "support.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace gooddecomp::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

using Key = std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>;

Key invariant_key(const Digraph& d) {
  std::vector<std::pair<std::size_t, std::size_t>> degrees;
  for (VertexId v = 0; v < d.order(); ++v) degrees.push_back({d.out_degree(v), d.in_degree(v)});
  std::sort(degrees.begin(), degrees.end());
  return {{d.order(), d.arc_count()}, degrees};
}

class ClassSet {
 public:
  // True when d starts a new class.
  bool insert(const Digraph& d) {
    auto& bucket = buckets_[invariant_key(d)];
    for (const Digraph& e : bucket)
      if (is_isomorphic_small(d, e)) return false;
    bucket.push_back(d);
    all_.push_back(d);
    return true;
  }
  const std::vector<Digraph>& all() const { return all_; }

 private:
  std::map<Key, std::vector<Digraph>> buckets_;
  std::vector<Digraph> all_;
};

using Mask = std::uint64_t;

bool strong_masks(std::size_t n, const std::vector<Mask>& out, const std::vector<Mask>& in) {
  if (n <= 1) return true;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (const auto* adj : {&out, &in}) {
    Mask seen = 1, frontier = 1;
    while (frontier) {
      const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      const Mask fresh = (*adj)[v] & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    if (seen != all) return false;
  }
  return true;
}

}  // namespace

Digraph random_strong(Rng& rng, std::size_t n, std::size_t extra_arcs) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  ArcSet arcs;
  std::size_t covered = pick(rng, 2, n);
  for (std::size_t i = 0; i < covered; ++i) arcs.insert({perm[i], perm[(i + 1) % covered]});
  while (covered < n) {
    const VertexId u = perm[pick(rng, 0, covered - 1)];
    const VertexId v = perm[pick(rng, 0, covered - 1)];
    const std::size_t fresh = pick(rng, 1, n - covered);
    VertexId prev = u;
    for (std::size_t i = 0; i < fresh; ++i) {
      arcs.insert({prev, perm[covered + i]});
      prev = perm[covered + i];
    }
    arcs.insert({prev, v});
    covered += fresh;
  }
  for (std::size_t i = 0; i < extra_arcs; ++i) {
    const VertexId u = pick(rng, 0, n - 1);
    const VertexId v = pick(rng, 0, n - 1);
    if (u != v) arcs.insert({u, v});
  }
  return Digraph(n, arcs);
}

Digraph random_digraph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  ArcSet arcs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.insert({u, v});
  return Digraph(n, arcs);
}

Digraph random_semicomplete(Rng& rng, std::size_t n, double digon_probability) {
  std::bernoulli_distribution both(digon_probability), dir(0.5);
  ArcSet arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (both(rng)) {
        arcs.insert({u, v});
        arcs.insert({v, u});
      } else if (dir(rng)) {
        arcs.insert({u, v});
      } else {
        arcs.insert({v, u});
      }
    }
  }
  return Digraph(n, arcs);
}

std::vector<Digraph> strong_digraphs_up_to(std::size_t max_arcs) {
  std::vector<ClassSet> by_arcs(max_arcs + 1);
  for (std::size_t k = 2; k <= max_arcs; ++k) by_arcs[k].insert(directed_cycle(k));
  for (std::size_t m = 2; m <= max_arcs; ++m) {
    const std::vector<Digraph> level = by_arcs[m].all();
    for (const Digraph& d : level) {
      const std::size_t n = d.order();
      for (std::size_t len = 1; m + len <= max_arcs; ++len) {
        const std::size_t fresh = len - 1;
        for (VertexId u = 0; u < n; ++u) {
          for (VertexId v = 0; v < n; ++v) {
            if (u == v && len < 2) continue;
            if (len == 1 && d.has_arc(u, v)) continue;
            ArcSet arcs = d.arc_set();
            VertexId prev = u;
            for (std::size_t i = 0; i < fresh; ++i) {
              arcs.insert({prev, n + i});
              prev = n + i;
            }
            arcs.insert({prev, v});
            by_arcs[m + len].insert(Digraph(n + fresh, arcs));
          }
        }
      }
    }
  }
  std::vector<Digraph> out;
  for (const ClassSet& c : by_arcs)
    out.insert(out.end(), c.all().begin(), c.all().end());
  return out;
}

std::vector<Cycle> all_cycles(const Digraph& d) {
  std::vector<Cycle> cycles;
  const std::size_t n = d.order();
  std::vector<bool> on_path(n, false);
  Cycle path;
  auto dfs = [&](auto&& self, VertexId start, VertexId u) -> void {
    for (VertexId w : d.out_neighbors(u)) {
      if (w == start && path.size() >= 2) cycles.push_back(path);
      if (w <= start || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return cycles;
}

bool has_cycle_cover_exhaustive(const Digraph& d) {
  const std::vector<Cycle> cycles = all_cycles(d);
  std::vector<std::vector<Arc>> arcs;
  for (const Cycle& c : cycles) arcs.push_back(cycle_arcs(c));
  std::vector<int> covered(d.order(), 0);
  ArcSet used;
  auto search = [&](auto&& self) -> bool {
    const auto it = std::find(covered.begin(), covered.end(), 0);
    if (it == covered.end()) return true;
    const auto v = static_cast<VertexId>(it - covered.begin());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (std::find(cycles[c].begin(), cycles[c].end(), v) == cycles[c].end()) continue;
      if (std::any_of(arcs[c].begin(), arcs[c].end(), [&](const Arc& a) { return used.contains(a); })) continue;
      for (const Arc& a : arcs[c]) used.insert(a);
      for (VertexId x : cycles[c]) ++covered[x];
      const bool ok = self(self);
      for (VertexId x : cycles[c]) --covered[x];
      for (const Arc& a : arcs[c]) used.erase(a);
      if (ok) return true;
    }
    return false;
  };
  return search(search);
}

bool has_good_decomposition_naive(const Digraph& d) {
  const std::size_t n = d.order();
  const std::vector<Arc> arcs = d.arcs();
  std::vector<Mask> out1(n, 0), in1(n, 0), out2(n, 0), in2(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == arcs.size()) return strong_masks(n, out1, in1) && strong_masks(n, out2, in2);
    const Arc a = arcs[i];
    const Mask h = Mask{1} << a.head, t = Mask{1} << a.tail;
    if (self(self, i + 1)) return true;  // unused
    out1[a.tail] |= h;
    in1[a.head] |= t;
    const bool one = self(self, i + 1);
    out1[a.tail] &= ~h;
    in1[a.head] &= ~t;
    if (one) return true;
    out2[a.tail] |= h;
    in2[a.head] |= t;
    const bool two = self(self, i + 1);
    out2[a.tail] &= ~h;
    in2[a.head] &= ~t;
    return two;
  };
  return rec(rec, 0);
}

std::vector<Digraph> semicomplete_census(std::size_t n, std::size_t min_arc_strong) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  ClassSet classes;
  for (std::size_t code = 0; code < total; ++code) {
    ArcSet arcs;
    std::size_t rest = code;
    for (const auto& [u, v] : pairs) {
      const std::size_t c = rest % 3;
      rest /= 3;
      if (c != 1) arcs.insert({u, v});
      if (c != 0) arcs.insert({v, u});
    }
    Digraph d(n, arcs);
    if (min_arc_strong > 0 && (n < 2 || arc_connectivity(d) < min_arc_strong)) continue;
    classes.insert(d);
  }
  return classes.all();
}

bool is_hamiltonian_cycle_arcs(std::size_t order, const ArcSet& arcs) {
  if (arcs.size() != order) return false;
  std::vector<int> in(order, 0), out(order, 0);
  for (const Arc& a : arcs) {
    ++out[a.tail];
    ++in[a.head];
  }
  for (std::size_t v = 0; v < order; ++v)
    if (in[v] != 1 || out[v] != 1) return false;
  return is_strong(order, arcs);
}

bool cover_union_connected(const CycleCover& cover) {
  if (cover.cycles.empty()) return false;
  std::vector<bool> used(cover.cycles.size(), false);
  std::vector<VertexId> seen(cover.cycles[0].begin(), cover.cycles[0].end());
  used[0] = true;
  for (std::size_t step = 1; step < cover.cycles.size(); ++step) {
    bool progressed = false;
    for (std::size_t c = 0; c < cover.cycles.size() && !progressed; ++c) {
      if (used[c]) continue;
      for (VertexId v : cover.cycles[c]) {
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
          progressed = used[c] = true;
          seen.insert(seen.end(), cover.cycles[c].begin(), cover.cycles[c].end());
          break;
        }
      }
    }
    if (!progressed) return false;
  }
  return true;
}

std::vector<Digraph> dedup_isomorphic(const std::vector<Digraph>& ds) {
  ClassSet classes;
  for (const Digraph& d : ds) classes.insert(d);
  return classes.all();
}

}  // namespace gooddecomp::testing
