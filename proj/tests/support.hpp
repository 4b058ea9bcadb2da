#pragma once

// Generators and slow reference implementations shared by the unit tests and
// the acceptance binary. Nothing here is used by the library itself.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gooddecomp/builders.hpp"
#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/structure.hpp"

namespace gooddecomp::testing {

using Rng = std::mt19937_64;

/// Strong digraph on exactly n >= 2 vertices grown from a random cycle by
/// random ears, plus about extra_arcs further random arcs.
Digraph random_strong(Rng& rng, std::size_t n, std::size_t extra_arcs);

/// Random digraph where each ordered pair is an arc with probability p.
Digraph random_digraph(Rng& rng, std::size_t n, double p);

/// Random semicomplete digraph; each pair gets one or both directions.
Digraph random_semicomplete(Rng& rng, std::size_t n, double digon_probability);

/// Every strong digraph of order >= 2 with at most max_arcs arcs, one per
/// isomorphism class, built by adding ears to cycles.
std::vector<Digraph> strong_digraphs_up_to(std::size_t max_arcs);

/// All directed cycles of d (each once, starting at its least vertex).
std::vector<Cycle> all_cycles(const Digraph& d);

/// Exhaustive search over sets of pairwise arc-disjoint cycles.
bool has_cycle_cover_exhaustive(const Digraph& d);

/// Naive 3^|A| search over (A1, A2, unused) assignments.
bool has_good_decomposition_naive(const Digraph& d);

/// Labeled enumeration of all semicomplete digraphs of order n, reduced by
/// pairwise isomorphism tests.
std::vector<Digraph> semicomplete_census(std::size_t n, std::size_t min_arc_strong);

/// True when every vertex has in- and out-degree exactly 1 in arcs and the
/// arcs form one spanning cycle.
bool is_hamiltonian_cycle_arcs(std::size_t order, const ArcSet& arcs);

/// Whether the cycles can be ordered so each meets the union of the earlier ones.
bool cover_union_connected(const CycleCover& cover);

/// Classes of `ds` up to isomorphism (first representative kept).
std::vector<Digraph> dedup_isomorphic(const std::vector<Digraph>& ds);

}  // namespace gooddecomp::testing
