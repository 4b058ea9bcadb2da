#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gooddecomp/digraph.hpp"

namespace gooddecomp {

/// Outer digraph T with one inner digraph per vertex of T.
struct CompositionSpec {
  Digraph outer;
  std::vector<Digraph> inners;

  /// Throws std::invalid_argument unless inners.size() == outer.order() and
  /// every inner has at least one vertex.
  void validate() const;
  std::vector<std::size_t> inner_orders() const;
};

/// Bijection between (block, index-in-block) coordinates and vertex ids.
/// Block i occupies the contiguous range [offset(i), offset(i) + size(i)).
class CoordinateMap {
 public:
  CoordinateMap() = default;
  explicit CoordinateMap(std::vector<std::size_t> block_sizes);
  /// `blocks` blocks of equal size, as for a product G x H.
  static CoordinateMap uniform(std::size_t blocks, std::size_t block_size);

  std::size_t block_count() const noexcept { return sizes_.size(); }
  std::size_t block_size(std::size_t block) const { return sizes_.at(block); }
  std::size_t total() const noexcept { return total_; }

  VertexId vertex(std::size_t block, std::size_t index) const;
  std::pair<std::size_t, std::size_t> coordinates(VertexId v) const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
  std::size_t total_ = 0;
};

struct Built {
  Digraph digraph;
  CoordinateMap coords;
};

/// T[H_1, ..., H_t]. Vertex (i, j) is numbered sum_{p<i} n_p + j and labeled
/// "u<i+1>,<j+1>".
Built compose(const CompositionSpec& spec);

/// Product vertex (x, x') is numbered x * |V(H)| + x'.
Built cartesian_product(const Digraph& g, const Digraph& h);
/// Iterated (((G x G) x G) ...). Throws for k == 0.
Built cartesian_power(const Digraph& g, std::size_t k);
Built strong_product(const Digraph& g, const Digraph& h);
Built lexicographic_product(const Digraph& g, const Digraph& h);

}  // namespace gooddecomp
