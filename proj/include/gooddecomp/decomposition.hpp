#pragma once

#include <stdexcept>
#include <string>

#include "gooddecomp/digraph.hpp"

namespace gooddecomp {

struct VerifyReport {
  bool valid = false;
  /// Names the first violated condition; empty when valid.
  std::string diagnostic;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks that a1 and a2 are disjoint arc sets of `host` and that both
/// spanning subdigraphs (V, a1) and (V, a2) are strong. Arcs may be left
/// unused.
VerifyReport verify(const Digraph& host, const ArcSet& a1, const ArcSet& a2);

/// Thrown when a construction produces arc sets that fail verification.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A verified good decomposition. Only certify() creates one, so holding a
/// Decomposition means verify() has passed on it.
class Decomposition {
 public:
  const Digraph& host() const noexcept { return host_; }
  const ArcSet& first() const noexcept { return first_; }
  const ArcSet& second() const noexcept { return second_; }
  /// Short tag naming the construction that produced it.
  const std::string& construction() const noexcept { return construction_; }

 private:
  friend Decomposition certify(Digraph, ArcSet, ArcSet, std::string);
  Decomposition(Digraph host, ArcSet a1, ArcSet a2, std::string construction)
      : host_(std::move(host)),
        first_(std::move(a1)),
        second_(std::move(a2)),
        construction_(std::move(construction)) {}

  Digraph host_;
  ArcSet first_;
  ArcSet second_;
  std::string construction_;
};

/// Runs verify() and throws ConstructionError with its diagnostic on failure.
Decomposition certify(Digraph host, ArcSet a1, ArcSet a2, std::string construction);

/// host arcs minus `taken`.
ArcSet complement(const Digraph& host, const ArcSet& taken);

}  // namespace gooddecomp
