#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "gooddecomp/builders.hpp"
#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/oracle.hpp"
#include "gooddecomp/structure.hpp"

namespace gooddecomp {

/// A decomposer was called outside the hypotheses of its construction.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// kept[i] lists the indices (within H_i) of the block-i vertices that survive
/// in the sub-composition Q*. Lists must be non-empty and duplicate-free.
using KeptVertices = std::vector<std::vector<std::size_t>>;

/// The subdigraph of compose(spec) induced by the kept vertices. Vertex order
/// is block by block, following each kept list.
Digraph kept_subcomposition(const CompositionSpec& spec, const KeptVertices& kept);

/// Lifts a decomposition of Q* to Q = compose(spec). Every dropped vertex of
/// block i copies, on both sides, the arcs between kept[i][0] and other blocks.
Decomposition extend_by_twins(const Digraph& qstar, const Decomposition& d,
                              const CompositionSpec& spec, const KeptVertices& kept);

struct CompositionOptions {
  /// Node budget for the oracle call on a 2-arc-strong semicomplete outer.
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

/// T 2-arc-strong semicomplete and Q not isomorphic to S_4. Uses the explicit
/// five-vertex construction when T is S_4, and the oracle on T otherwise;
/// throws NotApplicable when the oracle gives up.
Decomposition decompose_comp_semicomplete(const CompositionSpec& spec,
                                          const CompositionOptions& options = {});

/// Hamiltonian outer cycle `hcycle`, with the block-size / inner-arc
/// conditions on the blocks. Tries the even case, the case with two inner
/// arcs, then the case with blocks of size three.
Decomposition decompose_comp_hamiltonian(const CompositionSpec& spec, const Cycle& hcycle);

/// T and every H_i strong with at least two vertices.
Decomposition decompose_comp_strong_parts(const CompositionSpec& spec);

/// Tries the semicomplete, Hamiltonian and strong-parts constructions in that
/// order; nullopt when none applies. Throws std::invalid_argument for t < 2.
std::optional<Decomposition> decompose_composition(const CompositionSpec& spec,
                                                   const CompositionOptions& options = {});

enum class ExceptionTag { S4, C3_K2_K2_K2, C3_P2_K2_K2, C3_K2_K2_K3 };

std::string_view to_string(ExceptionTag tag);
/// The fixed digraph behind a tag.
Digraph exceptional_digraph(ExceptionTag tag);

struct ExceptionMatch {
  ExceptionTag tag;
  /// Isomorphism from exceptional_digraph(tag) onto the input.
  std::vector<VertexId> isomorphism;
};

/// Matches d against the four known digraphs without a good decomposition.
std::optional<ExceptionMatch> match_exception(const Digraph& d);

using CharacterizationResult = std::variant<Decomposition, ExceptionMatch>;

/// Outer strong semicomplete with t >= 2, every inner of order >= 2. Throws
/// std::invalid_argument("requires strong semicomplete outer and nontrivial
/// inners") otherwise.
CharacterizationResult characterize_semicomplete_composition(
    const CompositionSpec& spec, const CompositionOptions& options = {});

}  // namespace gooddecomp
