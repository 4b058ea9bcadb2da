#include "gooddecomp/builders.hpp"

#include <stdexcept>
#include <string>

namespace gooddecomp {

void CompositionSpec::validate() const {
  if (inners.size() != outer.order()) {
    throw std::invalid_argument("composition needs one inner digraph per outer vertex");
  }
  for (const Digraph& h : inners) {
    if (h.order() == 0) throw std::invalid_argument("inner digraphs must be nonempty");
  }
}

std::vector<std::size_t> CompositionSpec::inner_orders() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(inners.size());
  for (const Digraph& h : inners) sizes.push_back(h.order());
  return sizes;
}

CoordinateMap::CoordinateMap(std::vector<std::size_t> block_sizes)
    : sizes_(std::move(block_sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    offsets_.push_back(total_);
    total_ += sizes_[i];
    block_of_.insert(block_of_.end(), sizes_[i], i);
  }
}

CoordinateMap CoordinateMap::uniform(std::size_t blocks, std::size_t block_size) {
  return CoordinateMap(std::vector<std::size_t>(blocks, block_size));
}

VertexId CoordinateMap::vertex(std::size_t block, std::size_t index) const {
  if (block >= sizes_.size() || index >= sizes_[block]) {
    throw std::out_of_range("coordinate out of range");
  }
  return offsets_[block] + index;
}

std::pair<std::size_t, std::size_t> CoordinateMap::coordinates(VertexId v) const {
  const std::size_t block = block_of_.at(v);
  return {block, v - offsets_[block]};
}

Built compose(const CompositionSpec& spec) {
  spec.validate();
  CoordinateMap coords(spec.inner_orders());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < spec.inners.size(); ++i) {
    for (const Arc& a : spec.inners[i].arcs()) {
      arcs.push_back({coords.vertex(i, a.tail), coords.vertex(i, a.head)});
    }
  }
  for (const Arc& a : spec.outer.arcs()) {
    for (std::size_t j = 0; j < coords.block_size(a.tail); ++j)
      for (std::size_t q = 0; q < coords.block_size(a.head); ++q)
        arcs.push_back({coords.vertex(a.tail, j), coords.vertex(a.head, q)});
  }
  std::vector<std::string> labels;
  labels.reserve(coords.total());
  for (std::size_t i = 0; i < coords.block_count(); ++i)
    for (std::size_t j = 0; j < coords.block_size(i); ++j)
      labels.push_back("u" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  return {Digraph(coords.total(), arcs).with_labels(std::move(labels)), std::move(coords)};
}

namespace {

enum class ProductKind { kCartesian, kStrong, kLexicographic };

std::vector<std::string> product_labels(const Digraph& g, const Digraph& h) {
  std::vector<std::string> labels;
  labels.reserve(g.order() * h.order());
  for (VertexId x = 0; x < g.order(); ++x) {
    // Cartesian powers nest their labels; keep them flat as "(a,b,c)".
    std::string left = g.label(x);
    if (left.size() >= 2 && left.front() == '(' && left.back() == ')') {
      left = left.substr(1, left.size() - 2);
    }
    for (VertexId y = 0; y < h.order(); ++y) labels.push_back("(" + left + "," + h.label(y) + ")");
  }
  return labels;
}

Built product(const Digraph& g, const Digraph& h, ProductKind kind) {
  const std::size_t m = h.order();
  auto id = [m](VertexId x, VertexId y) { return x * m + y; };
  std::vector<Arc> arcs;
  // G-moves holding the H coordinate.
  if (kind != ProductKind::kLexicographic) {
    for (const Arc& a : g.arcs())
      for (VertexId y = 0; y < m; ++y) arcs.push_back({id(a.tail, y), id(a.head, y)});
  }
  // H-moves holding the G coordinate.
  for (VertexId x = 0; x < g.order(); ++x)
    for (const Arc& b : h.arcs()) arcs.push_back({id(x, b.tail), id(x, b.head)});
  if (kind == ProductKind::kStrong) {
    for (const Arc& a : g.arcs())
      for (const Arc& b : h.arcs()) arcs.push_back({id(a.tail, b.tail), id(a.head, b.head)});
  }
  if (kind == ProductKind::kLexicographic) {
    for (const Arc& a : g.arcs())
      for (VertexId y = 0; y < m; ++y)
        for (VertexId y2 = 0; y2 < m; ++y2) arcs.push_back({id(a.tail, y), id(a.head, y2)});
  }
  Digraph d = Digraph(g.order() * m, arcs).with_labels(product_labels(g, h));
  return {std::move(d), CoordinateMap::uniform(g.order(), m)};
}

}  // namespace

Built cartesian_product(const Digraph& g, const Digraph& h) {
  return product(g, h, ProductKind::kCartesian);
}

Built strong_product(const Digraph& g, const Digraph& h) {
  return product(g, h, ProductKind::kStrong);
}

Built lexicographic_product(const Digraph& g, const Digraph& h) {
  return product(g, h, ProductKind::kLexicographic);
}

Built cartesian_power(const Digraph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("cartesian power needs k >= 1");
  if (k == 1) return {g, CoordinateMap::uniform(g.order(), 1)};
  Built acc = cartesian_product(g, g);
  for (std::size_t i = 2; i < k; ++i) acc = cartesian_product(acc.digraph, g);
  return acc;
}

}  // namespace gooddecomp
