#include <string>

#include "gooddecomp/decomposition.hpp"

namespace gooddecomp {

namespace {

std::string arc_text(const Arc& a) {
  return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

}  // namespace

VerifyReport verify(const Digraph& host, const ArcSet& a1, const ArcSet& a2) {
  for (const ArcSet* side : {&a1, &a2}) {
    for (const Arc& a : *side) {
      if (!host.has_arc(a)) {
        return {false, "arc " + arc_text(a) + " is not an arc of the host"};
      }
    }
  }
  for (const Arc& a : a1) {
    if (a2.contains(a)) return {false, "overlap: arc " + arc_text(a) + " is in both A1 and A2"};
  }
  const char* names[] = {"A1", "A2"};
  const ArcSet* sides[] = {&a1, &a2};
  for (int i = 0; i < 2; ++i) {
    if (auto gap = unreachable_pair(host.order(), *sides[i])) {
      return {false, std::string(names[i]) + " is not strong: no path from " +
                         std::to_string(gap->tail) + " to " + std::to_string(gap->head)};
    }
  }
  return {true, {}};
}

Decomposition certify(Digraph host, ArcSet a1, ArcSet a2, std::string construction) {
  const VerifyReport report = verify(host, a1, a2);
  if (!report) {
    throw ConstructionError(construction + ": construction failed verification: " +
                            report.diagnostic);
  }
  return Decomposition(std::move(host), std::move(a1), std::move(a2), std::move(construction));
}

ArcSet complement(const Digraph& host, const ArcSet& taken) {
  ArcSet rest;
  for (const Arc& a : host.arcs())
    if (!taken.contains(a)) rest.insert(rest.end(), a);
  return rest;
}

}  // namespace gooddecomp
