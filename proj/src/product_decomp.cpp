#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gooddecomp/products.hpp"

namespace gooddecomp {

namespace {

// Vertex (x, x') of a product whose second factor has `m` vertices.
struct Pair {
  std::size_t m;
  VertexId operator()(std::size_t x, std::size_t y) const { return x * m + y; }
};

void require_strong(const Digraph& d, const char* what) {
  if (d.order() < 2 || !is_strong(d)) {
    throw std::invalid_argument(std::string(what) + " must be strong of order >= 2");
  }
}

}  // namespace

Decomposition decompose_cn_square(std::size_t n) {
  if (n < 2) throw std::invalid_argument("C_n square needs n >= 2");
  const Built d = cartesian_product(directed_cycle(n), directed_cycle(n));
  // 1-based u_{i,j}; indices wrap modulo n.
  auto u = [&](std::size_t i, std::size_t j) {
    return Pair{n}((i + n - 1) % n, (j + n - 1) % n);
  };
  ArcSet first;
  for (std::size_t i = 1; i <= n; ++i) {
    // P_i = G(v_i) minus the arc leaving u_{n-i,i}.
    const std::size_t skip = n - i;
    for (std::size_t x = 1; x <= n; ++x) {
      if (x % n == skip % n) continue;
      first.insert({u(x, i), u(x + 1, i)});
    }
  }
  for (std::size_t i = 1; i < n; ++i) first.insert({u(n - i, i), u(n - i, i + 1)});
  first.insert({u(n, n), u(n, 1)});
  ArcSet second = complement(d.digraph, first);
  return certify(d.digraph, std::move(first), std::move(second), "cartesian/cn-square");
}

Decomposition decompose_cartesian_square(const Digraph& g, const CycleCover& cover) {
  require_strong(g, "G");
  if (const std::string why = validate_cycle_cover(g, cover); !why.empty()) {
    throw std::invalid_argument("invalid cycle cover: " + why);
  }
  const std::size_t n = g.order();
  const Pair at{n};
  const Built host = cartesian_product(g, g);

  std::vector<bool> in_union(n, false);
  std::vector<Arc> union_arcs;
  ArcSet first;

  // Embeds the C_k square decomposition onto cycle x cycle.
  auto cycle_square_first = [&](const Cycle& c) {
    const Decomposition base = decompose_cn_square(c.size());
    ArcSet out;
    for (const Arc& a : base.first()) {
      const auto k = c.size();
      out.insert({at(c[a.tail / k], c[a.tail % k]), at(c[a.head / k], c[a.head % k])});
    }
    return out;
  };

  std::vector<bool> used(cover.cycles.size(), false);
  for (std::size_t step = 0; step < cover.cycles.size(); ++step) {
    std::size_t pick = cover.cycles.size();
    for (std::size_t c = 0; c < cover.cycles.size() && pick == cover.cycles.size(); ++c) {
      if (used[c]) continue;
      if (step == 0) pick = c;
      for (VertexId v : cover.cycles[c])
        if (in_union[v]) pick = c;
    }
    if (pick == cover.cycles.size()) {
      throw std::invalid_argument("cover union disconnected; construction not defined by the paper");
    }
    used[pick] = true;
    const Cycle& p = cover.cycles[pick];
    const std::vector<Arc> p_arcs = cycle_arcs(p);

    if (step == 0) {
      first = cycle_square_first(p);
    } else {
      std::vector<bool> on_p(n, false);
      for (VertexId v : p) on_p[v] = true;
      std::vector<VertexId> only_old, fresh;
      for (VertexId v = 0; v < n; ++v) {
        if (in_union[v] && !on_p[v]) only_old.push_back(v);
        if (on_p[v] && !in_union[v]) fresh.push_back(v);
      }
      if (only_old.empty()) {
        // P covers the union: P x P alone is spanning.
        first = cycle_square_first(p);
      } else if (!fresh.empty()) {
        const ArcSet bar = cycle_square_first(p);
        first.insert(bar.begin(), bar.end());
        // Copies of G_h in G(v_j) and H(u_j) for every new vertex j.
        for (VertexId j : fresh) {
          for (const Arc& a : union_arcs) {
            first.insert({at(a.tail, j), at(a.head, j)});
            first.insert({at(j, a.tail), at(j, a.head)});
          }
        }
      }
      // Otherwise P adds no vertex and the old first side stays spanning.
    }
    for (VertexId v : p) in_union[v] = true;
    union_arcs.insert(union_arcs.end(), p_arcs.begin(), p_arcs.end());
  }
  ArcSet second = complement(host.digraph, first);
  return certify(host.digraph, std::move(first), std::move(second), "cartesian/square");
}

Decomposition decompose_cartesian_with_good_factor(const Decomposition& dg, const Digraph& h) {
  require_strong(h, "H");
  const Digraph& g = dg.host();
  const Built host = cartesian_product(g, h);
  const Pair at{h.order()};
  ArcSet first;
  for (const Arc& a : h.arcs()) first.insert({at(0, a.tail), at(0, a.head)});
  for (std::size_t j = 0; j < h.order(); ++j) {
    for (const Arc& a : dg.first()) first.insert({at(a.tail, j), at(a.head, j)});
  }
  ArcSet second = complement(host.digraph, first);
  return certify(host.digraph, std::move(first), std::move(second), "cartesian/good-factor");
}

NoCycleCover::NoCycleCover(FlowCertificate certificate)
    : std::invalid_argument("no arc-disjoint cycle cover: " + certificate.to_string()),
      certificate_(std::move(certificate)) {}

Decomposition decompose_cartesian_power(const Digraph& g, std::size_t k) {
  if (k < 2) throw std::invalid_argument("Cartesian power needs k >= 2");
  require_strong(g, "G");
  CycleCoverResult cover = find_cycle_cover(g);
  if (!cover.cover) throw NoCycleCover(std::move(*cover.certificate));
  Decomposition d = decompose_cartesian_square(g, *cover.cover);
  for (std::size_t i = 3; i <= k; ++i) d = decompose_cartesian_with_good_factor(d, g);
  const Built host = cartesian_power(g, k);
  return certify(host.digraph, d.first(), d.second(), "cartesian/power");
}

Decomposition decompose_cn_boxtimes_cm(std::size_t n, std::size_t m) {
  if (n < 2 || m < 2) throw std::invalid_argument("C_n x C_m needs n, m >= 2");
  const Built d = strong_product(directed_cycle(n), directed_cycle(m));
  auto u = [&](std::size_t i, std::size_t j) { return Pair{m}(i - 1, j - 1); };
  ArcSet first;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t i = 1; i <= n; ++i) first.insert({u(i, j), u(i % n + 1, j)});
  }
  for (std::size_t j = 1; j < m; ++j) first.insert({u(n, j), u(1, j + 1)});
  first.insert({u(1, m), u(2, 1)});
  ArcSet second = complement(d.digraph, first);
  return certify(d.digraph, std::move(first), std::move(second), "strong/cn-cm");
}

Decomposition decompose_strong_product(const Digraph& g, const Digraph& h) {
  require_strong(g, "G");
  require_strong(h, "H");
  const EarDecomposition eg = ear_decomposition(g);
  const EarDecomposition eh = ear_decomposition(h);
  const Built host = strong_product(g, h);
  const Pair at{h.order()};

  const Cycle& p0 = eg.ears.front().vertices;
  const Cycle& q0 = eh.ears.front().vertices;
  const Decomposition base = decompose_cn_boxtimes_cm(p0.size(), q0.size());
  ArcSet first;
  const std::size_t qm = q0.size();
  for (const Arc& a : base.first()) {
    first.insert({at(p0[a.tail / qm], q0[a.tail % qm]), at(p0[a.head / qm], q0[a.head % qm])});
  }

  std::set<VertexId> g_vertices(p0.begin(), p0.end());
  std::set<VertexId> h_vertices(q0.begin(), q0.end());
  // Each ear's arcs are copied into every current copy of its factor.
  for (std::size_t e = 1; e < eg.ears.size(); ++e) {
    for (const Arc& a : eg.ears[e].arcs())
      for (VertexId j : h_vertices) first.insert({at(a.tail, j), at(a.head, j)});
    for (VertexId v : eg.ears[e].vertices) g_vertices.insert(v);
  }
  for (std::size_t e = 1; e < eh.ears.size(); ++e) {
    for (const Arc& a : eh.ears[e].arcs())
      for (VertexId i : g_vertices) first.insert({at(i, a.tail), at(i, a.head)});
    for (VertexId v : eh.ears[e].vertices) h_vertices.insert(v);
  }
  ArcSet second = complement(host.digraph, first);
  return certify(host.digraph, std::move(first), std::move(second), "strong/ears");
}

std::string validate_packing(const Digraph& host, const std::vector<ArcSet>& parts) {
  ArcSet seen;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (const Arc& a : parts[k]) {
      if (!host.has_arc(a)) {
        return "part " + std::to_string(k + 1) + " has arc " + std::to_string(a.tail) + "->" +
               std::to_string(a.head) + " outside the host";
      }
      if (!seen.insert(a).second) {
        return "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
               " is in two parts";
      }
    }
    if (auto gap = unreachable_pair(host.order(), parts[k])) {
      return "part " + std::to_string(k + 1) + " is not strong: no path from " +
             std::to_string(gap->tail) + " to " + std::to_string(gap->head);
    }
  }
  return {};
}

StrongPacking decompose_lexicographic(const Digraph& g, const Digraph& h,
                                      const std::optional<std::vector<ArcSet>>& h_parts) {
  require_strong(g, "G");
  require_strong(h, "H");
  const Built host = lexicographic_product(g, h);
  const Pair at{h.order()};
  StrongPacking result{host.digraph, {}};

  if (!h_parts) {
    ArcSet first = decompose_strong_product(g, h).first();
    ArcSet rest = complement(host.digraph, first);
    result.parts = {std::move(first), std::move(rest)};
  } else {
    if (h_parts->empty()) throw std::invalid_argument("need at least one part of H");
    if (const std::string why = validate_packing(h, *h_parts); !why.empty()) {
      throw std::invalid_argument("parts of H: " + why);
    }
    const std::size_t ell = h_parts->size();
    ArcSet taken;
    for (std::size_t k = 0; k < ell; ++k) {
      ArcSet part;
      for (std::size_t x = 0; x < g.order(); ++x)
        for (const Arc& a : (*h_parts)[k]) part.insert({at(x, a.tail), at(x, a.head)});
      // Every vertex of H has out-degree >= ell, so coordinate k exists.
      for (const Arc& a : g.arcs()) part.insert({at(a.tail, k), at(a.head, k)});
      taken.insert(part.begin(), part.end());
      result.parts.push_back(std::move(part));
    }
    ArcSet last;
    for (const Arc& a : g.arcs()) {
      for (std::size_t y = 0; y < h.order(); ++y) {
        for (std::size_t z = 0; z < h.order(); ++z) {
          const Arc arc{at(a.tail, y), at(a.head, z)};
          if (!taken.contains(arc)) last.insert(arc);
        }
      }
    }
    result.parts.push_back(std::move(last));
  }
  if (const std::string why = validate_packing(result.host, result.parts); !why.empty()) {
    throw ConstructionError("lexicographic: construction failed verification: " + why);
  }
  return result;
}

bool trotter_erdos_hamiltonian(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw std::invalid_argument("Trotter-Erdos test needs p, q >= 2");
  const std::size_t d = std::gcd(p, q);
  if (d < 2) return false;
  for (std::size_t d1 = 0; d1 <= d; ++d1) {
    if (std::gcd(p, d1) == 1 && std::gcd(q, d - d1) == 1) return true;
  }
  return false;
}

}  // namespace gooddecomp
