#include <doctest.h>

#include "gfit/char_series.hpp"
#include "gfit/corpus.hpp"
#include "gfit/engel.hpp"
#include "gfit/errors.hpp"
#include "oracles.hpp"

using namespace gfit;

namespace {

Index idx(const GroupPtr &g, const char *cycles) { return g->require_index(parse_cycles(cycles, g->degree())); }

std::size_t involution_index(const GroupPtr &g) {
  for (Index i = 0; i < g->order(); ++i)
    if (g->element_order(i) == 2)
      return i;
  return 0;
}

} // namespace

TEST_CASE("automorphisms from generator images") {
  auto c5 = builtin("cyclic(5)");
  const auto &inv = c5.automorphism("inversion");
  CHECK(inv.order() == 2);
  CHECK(inv.is_involution());
  for (Index g = 0; g < c5.group->order(); ++g)
    CHECK(inv.apply(g) == c5.group->inv(g));
  CHECK(inv.fixed_subgroup().is_trivial());
  CHECK(AutomorphismMap::identity(c5.group).order() == 1);

  auto sq = AutomorphismMap::make(c5.group, {power(c5.group->generators()[0], 2)}, "square");
  CHECK(sq.order() == 4);
  CHECK(sq.as_element_permutation().order() == 4);

  auto s3 = builtin("symmetric(3)");
  const auto &t = s3.automorphism("transposition");
  REQUIRE(t.conjugator().has_value());
  CHECK(t.fixed_subgroup().order() == 2);
  CHECK(t.order() == 2);
}

TEST_CASE("automorphism validation") {
  auto c5 = builtin("cyclic(5)").group;
  CHECK_THROWS_AS(AutomorphismMap::make(c5, {}), ValidationError);
  CHECK_THROWS_AS(AutomorphismMap::make(c5, {Permutation::identity(5)}), ValidationError);
  CHECK_THROWS_AS(AutomorphismMap::make(c5, {parse_cycles("(1 2)", 5)}), ValidationError);
  auto s3 = builtin("symmetric(3)").group;
  REQUIRE(s3->generators().size() == 2);
  // Swapping a transposition and a 3-cycle is not a homomorphism.
  CHECK_THROWS_AS(AutomorphismMap::make(s3, {s3->generators()[1], s3->generators()[0]}), ValidationError);
  // Conjugation by a permutation outside the normalizer.
  auto c3 = Group::close({parse_cycles("(1 2 3)", 4)});
  CHECK_THROWS_AS(AutomorphismMap::inner(c3, parse_cycles("(3 4)", 4)), ValidationError);
}

TEST_CASE("repeated commutators with the inversion") {
  // On an abelian group [g, a] = g^-2, so [g,_j a] = [g, a]^((-2)^(j-1)).
  auto e = builtin("cyclic(12)");
  const auto &alpha = e.automorphism("inversion");
  for (const auto &g : e.group->elements()) {
    Permutation first = commutator_with_actor(g, alpha);
    CHECK(first == power(g, -2));
    Permutation iter = first;
    long long exponent = 1;
    for (int j = 2; j <= 5; ++j) {
      iter = commutator_with_actor(iter, alpha);
      exponent *= -2;
      CHECK(iter == power(first, exponent));
    }
  }
}

TEST_CASE("Engel chains in S_3") {
  auto g = builtin("symmetric(3)").group;
  auto chain_t = engel_chain(AutomorphismMap::inner(g, parse_cycles("(1 2)", 3)));
  REQUIRE(chain_t.sets.size() >= 2);
  CHECK(chain_t.sets[0].count() == 6);
  CHECK(chain_t.sets[1].count() == 3);
  CHECK(chain_t.cycle_start == 1);
  CHECK(chain_t.cycle_length == 1);
  CHECK_FALSE(chain_t.first_trivial().has_value());
  CHECK(chain_t.stable_K.order() == 3);
  CHECK(chain_t.stabilization_index() == 1);

  // [t, x] = x^2 for every transposition t, so E_1 = {1, x^2} and E_2 = {1}.
  auto chain_c = engel_chain(AutomorphismMap::inner(g, parse_cycles("(1 2 3)", 3)));
  CHECK(chain_c.sets[1].count() == 2);
  REQUIRE(chain_c.first_trivial().has_value());
  CHECK(*chain_c.first_trivial() == 2);
  CHECK(chain_c.stable_K.is_trivial());
}

TEST_CASE("Engel chain invariants on the corpus") {
  for (const char *spec : {"symmetric(4)", "sl2(3)", "dihedral(6)", "alternating(5)"}) {
    CAPTURE(spec);
    auto g = builtin(spec).group;
    for (Index x = 0; x < g->order(); x += 3) {
      auto chain = engel_chain(AutomorphismMap::inner(g, g->element(x)));
      auto [sets, start] = engel_sets(AutomorphismMap::inner(g, g->element(x)));
      CHECK(sets == chain.sets);
      CHECK(start == chain.cycle_start);
      CHECK(chain.cycle_start >= 1);
      CHECK(chain.cycle_start + chain.cycle_length == chain.sets.size());
      CHECK(chain.sets.size() == chain.generated.size());
      for (std::size_t k = 1; k < chain.sets.size(); ++k)
        CHECK(chain.sets[k].test(Group::identity()));
      CHECK(chain.descent_H.stable().contains(chain.stable_K));
    }
  }
}

TEST_CASE("Engel elements are exactly the Fitting subgroup") {
  for (const char *spec : {"symmetric(3)", "symmetric(4)", "dihedral(6)", "sl2(3)", "sl2(5)",
                           "direct_product(symmetric(3),cyclic(5))"}) {
    CAPTURE(spec);
    auto g = builtin(spec).group;
    Subgroup f = fitting_subgroup(Subgroup::whole(g));
    for (Index x = 0; x < g->order(); ++x)
      CHECK(baer_membership(g, x) == f.contains(x));
  }
  auto s4 = builtin("symmetric(4)").group;
  CHECK(baer_membership(s4, idx(s4, "(1 2)(3 4)")));
  CHECK_FALSE(baer_membership(s4, idx(s4, "(1 2 3)")));
}

TEST_CASE("the set J of an involutory automorphism") {
  auto a5 = builtin("alternating(5)");
  auto rep = j_set(a5.automorphism("transposition"));
  CHECK(rep.j_set.count() == 7);
  CHECK(rep.two_part == 2);
  CHECK(rep.generated_j.is_whole());
  CHECK(rep.fixed_points.order() == 6);
  CHECK(rep.j_set.test(Group::identity()));

  auto c5 = builtin("cyclic(5)");
  auto rep5 = j_set(c5.automorphism("inversion"));
  CHECK(rep5.j_set.count() == 5);
  CHECK(rep5.generated_j.is_whole());
}

TEST_CASE("centralizer intersection") {
  auto a5 = builtin("alternating(5)");
  auto res = centralizer_intersection_check(a5.automorphism("transposition"));
  CHECK(res.holds);
  CHECK(res.intersection == res.central_fixed);
  CHECK(res.intersection.is_trivial());

  auto s3 = builtin("symmetric(3)");
  CHECK_THROWS_AS(centralizer_intersection_check(s3.automorphism("transposition")), PreconditionError);

  auto sl25 = builtin("sl2(5)").group;
  Index z = static_cast<Index>(involution_index(sl25));
  REQUIRE(z != 0);
  // The central involution induces the identity, which is not involutory.
  CHECK_THROWS_AS(centralizer_intersection_check(AutomorphismMap::inner(sl25, sl25->element(z))),
                  PreconditionError);
}

TEST_CASE("holomorph extensions") {
  CHECK(holomorph_extension(builtin("cyclic(3)").automorphism("inversion"))->order() == 6);
  CHECK(holomorph_extension(builtin("cyclic(5)").automorphism("inversion"))->order() == 10);

  // A_4 extended by conjugation with (1 2 3), against a naive closure of the
  // right translations and the automorphism on the element set.
  auto a4 = builtin("alternating(4)").group;
  auto alpha = AutomorphismMap::inner(a4, parse_cycles("(1 2 3)", 4));
  auto ext = holomorph_extension(alpha);
  std::vector<Permutation> gens;
  for (Index g : a4->generator_indices()) {
    std::vector<Point> images(a4->order());
    for (Index x = 0; x < a4->order(); ++x)
      images[x] = a4->mul(x, g);
    gens.emplace_back(std::move(images));
  }
  gens.push_back(alpha.as_element_permutation());
  auto expect = oracle::closure(gens, a4->order());
  CHECK(expect.size() == 36);
  CHECK(ext->order() == 36);
  CHECK(oracle::PermSet(ext->elements().begin(), ext->elements().end()) == expect);

  CHECK_THROWS_AS(holomorph_extension(alpha, 10), ResourceError);
}
