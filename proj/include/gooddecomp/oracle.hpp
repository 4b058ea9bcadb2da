#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/digraph.hpp"

namespace gooddecomp {

enum class OracleOutcome { found, none, aborted };

std::string_view to_string(OracleOutcome outcome);

struct OracleReport {
  OracleOutcome outcome = OracleOutcome::aborted;
  /// Set exactly when outcome == found.
  std::optional<Decomposition> decomposition;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t kDefaultOracleBudget = 20'000'000;
/// Arc count up to which the search is expected to finish at desk scale.
inline constexpr std::size_t kOracleExhaustiveArcs = 26;
inline constexpr std::size_t kOracleMaxOrder = 64;

/// Exact search for a good decomposition.
///
/// Only A1 is branched on; A2 is always the complement of A1, which loses
/// nothing because any superset of a strong spanning arc set is strong.
/// The first arc is fixed in A1 to break the A1/A2 symmetry. Throws
/// std::invalid_argument above kOracleMaxOrder vertices.
OracleReport oracle_good_decomposition(const Digraph& d,
                                       std::uint64_t budget = kDefaultOracleBudget);

/// Semicomplete digraphs of order n (n <= 6) with arc-connectivity at least
/// min_arc_strong, one per isomorphism class, in canonical-code order.
std::vector<Digraph> enumerate_semicomplete(std::size_t n, std::size_t min_arc_strong);

}  // namespace gooddecomp
