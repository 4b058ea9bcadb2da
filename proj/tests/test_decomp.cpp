#include <doctest.h>

#include <variant>

#include "gooddecomp/builders.hpp"
#include "gooddecomp/composition.hpp"
#include "gooddecomp/oracle.hpp"
#include "gooddecomp/products.hpp"
#include "support.hpp"

using namespace gooddecomp;
using gooddecomp::testing::Rng;

namespace {

void check_decomposition_of(const Decomposition& d, const Digraph& host) {
  CHECK(d.host() == host);
  const VerifyReport r = verify(d.host(), d.first(), d.second());
  CHECK_MESSAGE(r.valid, r.diagnostic);
}

CompositionSpec uniform_spec(const Digraph& outer, const Digraph& inner) {
  return {outer, std::vector<Digraph>(outer.order(), inner)};
}

}  // namespace

// --- verify ---------------------------------------------------------------

TEST_CASE("verify accepts a good decomposition of K_3") {
  const Digraph k3 = complete_digraph(3);
  const ArcSet a1{{0, 1}, {1, 2}, {2, 0}};
  const ArcSet a2{{1, 0}, {2, 1}, {0, 2}};
  const VerifyReport r = verify(k3, a1, a2);
  CHECK(r.valid);
  CHECK(r.diagnostic.empty());
  CHECK(static_cast<bool>(r));
}

TEST_CASE("verify names the first violation") {
  const Digraph k3 = complete_digraph(3);
  const ArcSet a1{{0, 1}, {1, 2}, {2, 0}};
  const ArcSet overlapping{{1, 0}, {2, 1}, {0, 2}, {0, 1}};
  CHECK(verify(k3, a1, overlapping).diagnostic == "overlap: arc 0->1 is in both A1 and A2");

  const ArcSet not_strong{{1, 0}, {2, 1}};
  const VerifyReport r = verify(k3, a1, not_strong);
  CHECK_FALSE(r.valid);
  CHECK(r.diagnostic.rfind("A2 is not strong: no path from", 0) == 0);

  const ArcSet foreign{{0, 1}, {1, 2}, {2, 0}};
  const VerifyReport outside = verify(directed_cycle(3), foreign, ArcSet{{1, 0}});
  CHECK_FALSE(outside.valid);
  CHECK(outside.diagnostic.find("not an arc of the host") != std::string::npos);
}

TEST_CASE("verify allows unused arcs and trivial hosts") {
  const Digraph k3 = complete_digraph(3);
  ArcSet a1{{0, 1}, {1, 2}, {2, 0}};
  ArcSet a2 = complement(k3, a1);
  CHECK(verify(k3, a1, a2).valid);
  CHECK(verify(Digraph(1), {}, {}).valid);
  CHECK_FALSE(verify(directed_cycle(3), directed_cycle(3).arc_set(), {}).valid);
}

TEST_CASE("certify throws ConstructionError with the tag") {
  CHECK_THROWS_WITH_AS(certify(directed_cycle(3), directed_cycle(3).arc_set(), {}, "demo"),
                       doctest::Contains("demo: construction failed verification"), ConstructionError);
  const Decomposition d =
      certify(complete_digraph(3), ArcSet{{0, 1}, {1, 2}, {2, 0}}, ArcSet{{1, 0}, {2, 1}, {0, 2}}, "x");
  CHECK(d.construction() == "x");
}

// --- composition ----------------------------------------------------------

TEST_CASE("extend_by_twins copies the representative's outer arcs") {
  const CompositionSpec spec = uniform_spec(complete_digraph(2), empty_digraph(3));
  const KeptVertices kept{{0}, {0}};
  const Digraph qstar = kept_subcomposition(spec, kept);
  CHECK(qstar.order() == 2);
  // K_2 itself has no good decomposition; use K_2[K_2] on two kept vertices each.
  const KeptVertices kept2{{0, 1}, {0, 1}};
  const Digraph q4 = kept_subcomposition(spec, kept2);
  REQUIRE(q4.order() == 4);
  CHECK(q4.arc_count() == 8);
  // Two 4-cycles through the bipartite digon structure.
  const ArcSet a1{{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  const ArcSet a2 = complement(q4, a1);
  const Decomposition base = certify(q4, a1, a2, "hand");
  const Decomposition lifted = extend_by_twins(q4, base, spec, kept2);
  check_decomposition_of(lifted, compose(spec).digraph);
  CHECK(lifted.construction() == "hand");

  CHECK_THROWS_AS(extend_by_twins(qstar, base, spec, kept2), std::invalid_argument);
  CHECK_THROWS_AS(kept_subcomposition(spec, {{0, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(kept_subcomposition(spec, {{}, {1}}), std::invalid_argument);
}

TEST_CASE("composition examples") {
  const Digraph c2 = directed_cycle(2), c3 = directed_cycle(3);
  SUBCASE("C2[K2, K2] by the Hamiltonian even case") {
    const CompositionSpec spec = uniform_spec(c2, empty_digraph(2));
    const auto d = decompose_composition(spec);
    REQUIRE(d.has_value());
    check_decomposition_of(*d, compose(spec).digraph);
  }
  SUBCASE("C3[C2, C2, C2] by strong parts") {
    const CompositionSpec spec = uniform_spec(c3, c2);
    check_decomposition_of(decompose_comp_strong_parts(spec), compose(spec).digraph);
  }
  SUBCASE("C3[K2, K2, K2] is not covered") {
    const CompositionSpec spec = uniform_spec(c3, empty_digraph(2));
    CHECK_FALSE(decompose_composition(spec).has_value());
    CHECK_THROWS_AS(decompose_comp_hamiltonian(spec, {0, 1, 2}), NotApplicable);
    CHECK_THROWS_AS(decompose_comp_strong_parts(spec), NotApplicable);
    CHECK_THROWS_AS(decompose_comp_semicomplete(spec), NotApplicable);
  }
  SUBCASE("C4 with empty blocks uses the two-slot skeleton") {
    const CompositionSpec spec{directed_cycle(4),
                               {empty_digraph(2), empty_digraph(3), empty_digraph(2), empty_digraph(4)}};
    const Decomposition d = decompose_comp_hamiltonian(spec, {0, 1, 2, 3});
    check_decomposition_of(d, compose(spec).digraph);
    CHECK(d.construction() == "composition/hamiltonian-even");
  }
  SUBCASE("C3 with blocks (2, 3, 3) keeps nine arcs per side on Q*") {
    const CompositionSpec spec{c3, {empty_digraph(2), empty_digraph(3), empty_digraph(3)}};
    const Decomposition d = decompose_comp_hamiltonian(spec, {0, 1, 2});
    check_decomposition_of(d, compose(spec).digraph);
    CHECK(d.construction() == "composition/hamiltonian-triples");
    // Q* is Q here, with 6 + 9 + 6 = 21 arcs; the construction uses 18.
    CHECK(d.first().size() == 9);
    CHECK(d.second().size() == 9);
  }
  SUBCASE("C3 with two inner arcs") {
    const CompositionSpec spec{c3, {directed_path(2), empty_digraph(2), c2}};
    const Decomposition d = decompose_comp_hamiltonian(spec, {0, 1, 2});
    check_decomposition_of(d, compose(spec).digraph);
    CHECK(d.construction() == "composition/hamiltonian-inner-arcs");
  }
  SUBCASE("2-arc-strong semicomplete outer") {
    const CompositionSpec k4 = uniform_spec(complete_digraph(4), empty_digraph(2));
    check_decomposition_of(decompose_comp_semicomplete(k4), compose(k4).digraph);
    const CompositionSpec s4{s4_digraph(), {Digraph(1), empty_digraph(3), Digraph(1), Digraph(1)}};
    const Decomposition d = decompose_comp_semicomplete(s4);
    check_decomposition_of(d, compose(s4).digraph);
    CHECK(d.construction() == "composition/semicomplete-s4");
    const CompositionSpec bare = uniform_spec(s4_digraph(), Digraph(1));
    CHECK_THROWS_AS(decompose_comp_semicomplete(bare), NotApplicable);
  }
  CHECK_THROWS_AS(decompose_composition({Digraph(1), {c3}}), std::invalid_argument);
}

TEST_CASE("property: Hamiltonian constructions over random odd and even cycles") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t t = 2 + rng() % 6;
    CompositionSpec spec{directed_cycle(t), {}};
    for (std::size_t i = 0; i < t; ++i) spec.inners.push_back(empty_digraph(3 + rng() % 2));
    spec.inners[rng() % t] = empty_digraph(2);
    Cycle hc(t);
    for (std::size_t i = 0; i < t; ++i) hc[i] = (i + trial) % t;
    check_decomposition_of(decompose_comp_hamiltonian(spec, hc), compose(spec).digraph);
  }
}

TEST_CASE("exception matching") {
  for (ExceptionTag tag : {ExceptionTag::S4, ExceptionTag::C3_K2_K2_K2, ExceptionTag::C3_P2_K2_K2,
                           ExceptionTag::C3_K2_K2_K3}) {
    const Digraph e = exceptional_digraph(tag);
    std::vector<VertexId> perm(e.order());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (i + 1) % perm.size();
    const Digraph shuffled = permute(e, perm);
    const auto m = match_exception(shuffled);
    REQUIRE(m.has_value());
    CHECK(m->tag == tag);
    CHECK(permute(e, m->isomorphism) == shuffled);
  }
  CHECK(exceptional_digraph(ExceptionTag::C3_P2_K2_K2).arc_count() == 13);
  CHECK(exceptional_digraph(ExceptionTag::C3_K2_K2_K3).arc_count() == 16);
  CHECK_FALSE(match_exception(complete_digraph(4)).has_value());
  CHECK(to_string(ExceptionTag::C3_K2_K2_K3) == "C3_K2_K2_K3");
}

TEST_CASE("characterization examples") {
  const Digraph c3 = directed_cycle(3);
  auto verdict = [](const CompositionSpec& spec) { return characterize_semicomplete_composition(spec); };

  const auto k2k2k2 = verdict(uniform_spec(c3, empty_digraph(2)));
  REQUIRE(std::holds_alternative<ExceptionMatch>(k2k2k2));
  CHECK(std::get<ExceptionMatch>(k2k2k2).tag == ExceptionTag::C3_K2_K2_K2);

  const auto k2k2k3 = verdict({c3, {empty_digraph(2), empty_digraph(3), empty_digraph(2)}});
  REQUIRE(std::holds_alternative<ExceptionMatch>(k2k2k3));
  CHECK(std::get<ExceptionMatch>(k2k2k3).tag == ExceptionTag::C3_K2_K2_K3);

  const CompositionSpec k4_block{c3, {empty_digraph(2), empty_digraph(2), empty_digraph(4)}};
  const auto large = verdict(k4_block);
  REQUIRE(std::holds_alternative<Decomposition>(large));
  check_decomposition_of(std::get<Decomposition>(large), compose(k4_block).digraph);
  CHECK(std::get<Decomposition>(large).construction() == "characterization/large-third-block");

  const CompositionSpec one_arc{c3, {empty_digraph(2), empty_digraph(2), directed_path(3)}};
  const auto single = verdict(one_arc);
  REQUIRE(std::holds_alternative<Decomposition>(single));
  check_decomposition_of(std::get<Decomposition>(single), compose(one_arc).digraph);

  const CompositionSpec digon{c3, {directed_cycle(2), empty_digraph(2), empty_digraph(2)}};
  const auto dg = verdict(digon);
  REQUIRE(std::holds_alternative<Decomposition>(dg));
  check_decomposition_of(std::get<Decomposition>(dg), compose(digon).digraph);

  // A tournament on five vertices with a chord: handled by chord repair.
  ArcSet arcs;
  for (VertexId i = 0; i < 5; ++i) {
    arcs.insert({i, static_cast<VertexId>((i + 1) % 5)});
    arcs.insert({static_cast<VertexId>((i + 2) % 5), i});
  }
  const CompositionSpec chord = uniform_spec(Digraph(5, arcs), empty_digraph(2));
  const auto repaired = verdict(chord);
  REQUIRE(std::holds_alternative<Decomposition>(repaired));
  check_decomposition_of(std::get<Decomposition>(repaired), compose(chord).digraph);

  CHECK_THROWS_WITH_AS(verdict({directed_cycle(4), std::vector<Digraph>(4, empty_digraph(2))}),
                       "requires strong semicomplete outer and nontrivial inners", std::invalid_argument);
  CHECK_THROWS_AS(verdict({c3, {Digraph(1), empty_digraph(2), empty_digraph(2)}}), std::invalid_argument);
}

// --- products -------------------------------------------------------------

TEST_CASE("C_n x C_n splits into two Hamiltonian cycles") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Decomposition d = decompose_cn_square(n);
    check_decomposition_of(d, cartesian_product(directed_cycle(n), directed_cycle(n)).digraph);
    CHECK(gooddecomp::testing::is_hamiltonian_cycle_arcs(n * n, d.first()));
    CHECK(gooddecomp::testing::is_hamiltonian_cycle_arcs(n * n, d.second()));
  }
  CHECK_THROWS_AS(decompose_cn_square(1), std::invalid_argument);
}

TEST_CASE("Cartesian constructions") {
  const Digraph c3 = directed_cycle(3);
  const auto cover = cycle_cover(complete_digraph(3));
  REQUIRE(cover.has_value());
  check_decomposition_of(decompose_cartesian_square(complete_digraph(3), *cover),
                         cartesian_product(complete_digraph(3), complete_digraph(3)).digraph);

  const Decomposition c3sq = decompose_cn_square(3);
  check_decomposition_of(decompose_cartesian_with_good_factor(c3sq, directed_cycle(2)),
                         cartesian_product(c3sq.host(), directed_cycle(2)).digraph);

  check_decomposition_of(decompose_cartesian_power(c3, 3), cartesian_power(c3, 3).digraph);
  CHECK_THROWS_AS(decompose_cartesian_power(c3, 1), std::invalid_argument);

  // Two triangles sharing an arc have no arc-disjoint cycle cover.
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}};
  try {
    decompose_cartesian_power(Digraph(4, arcs), 2);
    FAIL("expected NoCycleCover");
  } catch (const NoCycleCover& e) {
    CHECK(e.certificate().lower_in > e.certificate().upper_out);
  }

  // Two digons joined only through a middle vertex, covered by disjoint digons.
  const CycleCover apart{{{0, 1}, {2, 3}}};
  const std::vector<Arc> chain{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}, {3, 0}};
  CHECK_THROWS_WITH_AS(decompose_cartesian_square(Digraph(4, chain), apart),
                       "cover union disconnected; construction not defined by the paper",
                       std::invalid_argument);
}

TEST_CASE("property: Cartesian square and power on random covered digraphs") {
  Rng rng(42);
  int done = 0;
  while (done < 30) {
    const Digraph g = gooddecomp::testing::random_strong(rng, 2 + rng() % 4, rng() % 4);
    const auto cover = cycle_cover(g);
    if (!cover || !gooddecomp::testing::cover_union_connected(*cover)) continue;
    ++done;
    check_decomposition_of(decompose_cartesian_square(g, *cover), cartesian_product(g, g).digraph);
    check_decomposition_of(decompose_cartesian_power(g, 2), cartesian_power(g, 2).digraph);
  }
}

TEST_CASE("strong products") {
  const Decomposition d44 = decompose_cn_boxtimes_cm(4, 4);
  check_decomposition_of(d44, strong_product(directed_cycle(4), directed_cycle(4)).digraph);
  CHECK(d44.first().size() == 20);
  CHECK_THROWS_AS(decompose_cn_boxtimes_cm(1, 3), std::invalid_argument);

  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = gooddecomp::testing::random_strong(rng, 2 + rng() % 3, rng() % 3);
    const Digraph h = gooddecomp::testing::random_strong(rng, 2 + rng() % 3, rng() % 3);
    check_decomposition_of(decompose_strong_product(g, h), strong_product(g, h).digraph);
  }
  CHECK_THROWS_AS(decompose_strong_product(directed_path(2), directed_cycle(2)), std::invalid_argument);
}

TEST_CASE("lexicographic packings") {
  const Digraph c3 = directed_cycle(3);
  const StrongPacking one = decompose_lexicographic(c3, directed_cycle(2));
  CHECK(one.parts.size() == 2);
  CHECK(validate_packing(one.host, one.parts).empty());
  CHECK(one.host == lexicographic_product(c3, directed_cycle(2)).digraph);

  const Digraph k3 = complete_digraph(3);
  const std::vector<ArcSet> triangles{{{0, 1}, {1, 2}, {2, 0}}, {{1, 0}, {2, 1}, {0, 2}}};
  const StrongPacking three = decompose_lexicographic(c3, k3, triangles);
  CHECK(three.parts.size() == 3);
  CHECK(validate_packing(three.host, three.parts).empty());

  const std::vector<ArcSet> overlapping{{{0, 1}, {1, 2}, {2, 0}}, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_THROWS_AS(decompose_lexicographic(c3, k3, overlapping), std::invalid_argument);
  CHECK_FALSE(validate_packing(k3, overlapping).empty());
}

TEST_CASE("Trotter-Erdos criterion") {
  CHECK(trotter_erdos_hamiltonian(2, 2));
  CHECK_FALSE(trotter_erdos_hamiltonian(2, 3));
  CHECK(trotter_erdos_hamiltonian(3, 6));
  CHECK(trotter_erdos_hamiltonian(4, 6));
  CHECK_FALSE(trotter_erdos_hamiltonian(5, 6));
  CHECK_THROWS_AS(trotter_erdos_hamiltonian(1, 4), std::invalid_argument);
}
