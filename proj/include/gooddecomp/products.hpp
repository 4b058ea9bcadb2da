#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gooddecomp/builders.hpp"
#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/structure.hpp"

namespace gooddecomp {

// Product vertices follow the builders: (x, x') is x * |V(H)| + x'. In the
// comments u_{i,j} is (u_i, v_j), G(v_j) is the copy of G at second
// coordinate j and H(u_i) the copy of H at first coordinate i.

/// C_n x C_n (Cartesian) split into two arc-disjoint Hamiltonian cycles.
/// Throws std::invalid_argument for n < 2.
Decomposition decompose_cn_square(std::size_t n);

/// G x G (Cartesian) by induction over the cycles of `cover`. Cycles are
/// processed in the given order where possible, otherwise the next cycle
/// meeting the union so far; throws std::invalid_argument("cover union
/// disconnected; construction not defined by the paper") when none does.
Decomposition decompose_cartesian_square(const Digraph& g, const CycleCover& cover);

/// G x H (Cartesian) from a good decomposition of G: side one is H(u_1) plus
/// the copy of dg's first side in every G(v_j); side two is the rest.
Decomposition decompose_cartesian_with_good_factor(const Decomposition& dg, const Digraph& h);

/// G has no arc-disjoint cycle cover; carries the flow certificate.
class NoCycleCover : public std::invalid_argument {
 public:
  NoCycleCover(FlowCertificate certificate);
  const FlowCertificate& certificate() const noexcept { return certificate_; }

 private:
  FlowCertificate certificate_;
};

/// G^k (Cartesian) for k >= 2: the square, then one factor at a time.
Decomposition decompose_cartesian_power(const Digraph& g, std::size_t k);

/// C_n x C_m (strong product), n, m >= 2.
Decomposition decompose_cn_boxtimes_cm(std::size_t n, std::size_t m);

/// G x H (strong product) for strong G, H of order >= 2, by induction over
/// ear decompositions of G and then H.
Decomposition decompose_strong_product(const Digraph& g, const Digraph& h);

/// Pairwise arc-disjoint strong spanning arc sets of one host.
struct StrongPacking {
  Digraph host;
  std::vector<ArcSet> parts;
};

/// Empty when `parts` are pairwise disjoint strong spanning arc sets of host.
std::string validate_packing(const Digraph& host, const std::vector<ArcSet>& parts);

/// G o H split into l + 1 arc-disjoint strong spanning subdigraphs, given l
/// such subdigraphs of H (H itself when omitted, l = 1).
///
/// Without explicit parts the first part is the first side of the strong
/// product construction. With parts, part k takes every copy of H_k together
/// with the G-arcs at H-coordinate k - 1; the last part takes all other
/// arcs between blocks.
StrongPacking decompose_lexicographic(const Digraph& g, const Digraph& h,
                                      const std::optional<std::vector<ArcSet>>& h_parts = {});

/// Whether C_p x C_q (Cartesian) is Hamiltonian: some d1 + d2 = gcd(p, q) >= 2
/// with gcd(p, d1) = gcd(q, d2) = 1. Throws for p or q below 2.
bool trotter_erdos_hamiltonian(std::size_t p, std::size_t q);

}  // namespace gooddecomp
