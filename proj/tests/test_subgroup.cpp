#include <doctest.h>

#include "gfit/corpus.hpp"
#include "gfit/errors.hpp"
#include "gfit/series.hpp"
#include "gfit/subgroup.hpp"
#include "oracles.hpp"

using namespace gfit;

namespace {

Subgroup gen(const GroupPtr &g, std::initializer_list<const char *> cycles) {
  std::vector<Permutation> ps;
  for (const char *c : cycles)
    ps.push_back(parse_cycles(c, g->degree()));
  return Subgroup::generated(g, std::span<const Permutation>(ps));
}

oracle::PermSet as_set(const Subgroup &s) {
  oracle::PermSet out;
  for (Index i : s.elements())
    out.insert(s.ambient().element(i));
  return out;
}

GroupPtr s4() { return builtin("symmetric(4)").group; }

} // namespace

TEST_CASE("normal closures and joins") {
  auto s3 = builtin("symmetric(3)").group;
  Subgroup whole = Subgroup::whole(s3);
  Subgroup t = gen(s3, {"(1 2)"});
  Subgroup c = gen(s3, {"(1 2 3)"});
  CHECK(normal_closure(t, whole) == whole);
  CHECK(normal_closure(c, whole) == c);
  CHECK(join(c, c) == c);
  CHECK(join(t, c) == whole);

  // Against the closure of all conjugates.
  auto g = s4();
  for (Index x = 0; x < g->order(); ++x) {
    Subgroup a = Subgroup::generated(g, std::vector<Index>{x});
    std::vector<Permutation> conjugates;
    for (const auto &t2 : g->elements())
      conjugates.push_back(conjugate(g->element(x), t2));
    CHECK(as_set(normal_closure(a, Subgroup::whole(g))) == oracle::closure(conjugates, 4));
  }
}

TEST_CASE("normal closure is normal, contains A, and equals A iff A is normal") {
  auto g = builtin("sl2(3)").group;
  Subgroup whole = Subgroup::whole(g);
  for (auto &h : oracle::two_generated_subgroups(oracle::PermSet(g->elements().begin(), g->elements().end()))) {
    std::vector<Permutation> gens(h.begin(), h.end());
    Subgroup a = Subgroup::generated(g, std::span<const Permutation>(gens));
    Subgroup n = normal_closure(a, whole);
    CHECK(is_normal(n, whole));
    CHECK(n.contains(a));
    CHECK((n == a) == oracle::is_normal(h, as_set(whole)));
  }
}

TEST_CASE("centralizers, centres and cores") {
  auto d4 = builtin("dihedral(4)").group;
  CHECK(center(Subgroup::whole(d4)).order() == 2);
  auto g = s4();
  Subgroup whole = Subgroup::whole(g);
  CHECK(center(whole).is_trivial());
  Subgroup d8 = gen(g, {"(1 2 3 4)", "(1 3)"});
  REQUIRE(d8.order() == 8);
  Subgroup v4 = gen(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(normal_core(whole, d8) == v4);
  Subgroup c = centralizer(whole, gen(g, {"(1 2)"}));
  CHECK(c.order() == 4);
  CHECK(c == gen(g, {"(1 2)", "(3 4)"}));
}

TEST_CASE("derived series and solubility") {
  auto g = s4();
  auto ds = derived_series(Subgroup::whole(g));
  std::vector<std::size_t> orders;
  for (const auto &t : ds.terms)
    orders.push_back(t.order());
  CHECK(orders == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(ds.length == 3);
  CHECK(is_soluble(Subgroup::whole(g)));
  CHECK(is_perfect(Subgroup::whole(builtin("alternating(5)").group)));
  CHECK_FALSE(is_soluble(Subgroup::whole(builtin("symmetric(5)").group)));
  CHECK_FALSE(is_nilpotent(Subgroup::whole(builtin("symmetric(3)").group)));
  CHECK(is_nilpotent(Subgroup::whole(builtin("cyclic(12)").group)));
  CHECK(is_nilpotent(Subgroup::whole(builtin("dihedral(4)").group)));
  auto lcs = lower_central_series(Subgroup::whole(builtin("dihedral(4)").group));
  CHECK(lcs.stable().is_trivial());
  // The stable derived term is perfect.
  auto s5 = derived_series(Subgroup::whole(builtin("symmetric(5)").group));
  CHECK(is_perfect(s5.stable()));
}

TEST_CASE("commutator subgroups against the set oracle") {
  auto g = s4();
  Subgroup a4 = gen(g, {"(1 2 3)", "(2 3 4)"});
  Subgroup d8 = gen(g, {"(1 2 3 4)", "(1 3)"});
  CHECK(as_set(commutator_subgroup(a4, d8)) == oracle::commutator_set_closure(as_set(a4), as_set(d8)));
  CHECK(as_set(commutator_subgroup(d8, d8)) == oracle::commutator_set_closure(as_set(d8), as_set(d8)));
}

TEST_CASE("subnormality by normal closure descent") {
  auto g = s4();
  Subgroup whole = Subgroup::whole(g);
  Subgroup a = gen(g, {"(1 2)(3 4)"});
  auto w = is_subnormal(a, whole);
  CHECK(w.subnormal);
  REQUIRE(w.chain.size() == 3);
  CHECK(w.chain[0] == whole);
  CHECK(w.chain[1] == gen(g, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  CHECK(w.chain[2] == a);
  CHECK_FALSE(is_subnormal(gen(g, {"(1 2)"}), whole).subnormal);
  auto self = is_subnormal(whole, whole);
  CHECK(self.subnormal);
  CHECK(self.chain.size() == 1);
}

TEST_CASE("quotients act on right cosets") {
  auto g = s4();
  Subgroup whole = Subgroup::whole(g);
  Subgroup v4 = gen(g, {"(1 2)(3 4)", "(1 3)(2 4)"});
  QuotientMap q = quotient(whole, v4);
  CHECK(q.image()->order() == 6);
  CHECK_FALSE(q.image()->is_abelian());
  CHECK(q.index() == 6);
  for (Index a = 0; a < g->order(); ++a) {
    CHECK((q.image_index(a) == Group::identity()) == v4.contains(a));
    for (Index b = 0; b < g->order(); b += 5)
      CHECK(q.image_index(g->mul(a, b)) == q.image()->mul(q.image_index(a), q.image_index(b)));
  }
  CHECK(q.preimage_of(Subgroup::whole(q.image())) == whole);
  QuotientMap trivial = quotient(whole, Subgroup::trivial(g));
  CHECK(trivial.image()->order() == 24);
  CHECK(trivial.image()->degree() == 24);
  CHECK_THROWS_AS(quotient(whole, gen(g, {"(1 2)"})), PreconditionError);
}

TEST_CASE("quotient orders multiply out and preimages round-trip") {
  for (const char *spec : {"symmetric(4)", "sl2(3)", "dihedral(6)", "direct_product(symmetric(3),cyclic(5))"}) {
    auto g = builtin(spec).group;
    Subgroup whole = Subgroup::whole(g);
    for (const auto &n : normal_subgroups(whole).members) {
      QuotientMap q = quotient(whole, n);
      CHECK(q.image()->order() * n.order() == g->order());
      for (const auto &s : normal_subgroups(Subgroup::whole(q.image())).members) {
        Subgroup pre = q.preimage_of(s);
        CHECK(pre.contains(n));
        CHECK(q.image_of(pre) == s);
      }
    }
  }
}

TEST_CASE("normal subgroup lattice") {
  auto g = s4();
  Subgroup whole = Subgroup::whole(g);
  auto nl = normal_subgroups(whole);
  std::vector<std::size_t> orders;
  for (const auto &m : nl.members)
    orders.push_back(m.order());
  CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(socle(whole) == gen(g, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  CHECK(minimal_normals(whole).size() == 1);
  CHECK(is_quasisimple(Subgroup::whole(builtin("sl2(5)").group)));
  CHECK_FALSE(is_simple(Subgroup::whole(builtin("sl2(5)").group)));
  CHECK(is_simple(Subgroup::whole(builtin("alternating(5)").group)));
  CHECK(is_simple(Subgroup::whole(builtin("cyclic(5)").group)));
  CHECK_FALSE(is_simple(Subgroup::whole(builtin("cyclic(1)").group)));
  CHECK_FALSE(is_quasisimple(Subgroup::whole(builtin("symmetric(5)").group)));
  CHECK_THROWS_AS(normal_subgroups(Subgroup::whole(builtin("cyclic(12)").group), 3), ResourceError);
}

TEST_CASE("normal lattice matches the brute-force oracle and is join closed") {
  for (const char *spec : {"symmetric(4)", "alternating(4)", "dihedral(4)", "dihedral(6)", "sl2(3)", "cyclic(12)",
                           "direct_product(symmetric(3),cyclic(5))", "alternating(5)"}) {
    CAPTURE(spec);
    auto g = builtin(spec).group;
    Subgroup whole = Subgroup::whole(g);
    auto nl = normal_subgroups(whole);
    auto expect = oracle::normal_subgroups(oracle::PermSet(g->elements().begin(), g->elements().end()));
    CHECK(nl.members.size() == expect.size());
    for (const auto &m : nl.members) {
      CHECK(is_normal(m, whole));
      CHECK(std::find(expect.begin(), expect.end(), as_set(m)) != expect.end());
      for (const auto &k : nl.members) {
        Subgroup j = join(m, k);
        CHECK(std::find(nl.members.begin(), nl.members.end(), j) != nl.members.end());
      }
    }
  }
}

TEST_CASE("parent mismatch is rejected") {
  auto a = s4();
  auto b = s4();
  CHECK_THROWS_AS(join(Subgroup::whole(a), Subgroup::whole(b)), ValidationError);
}
