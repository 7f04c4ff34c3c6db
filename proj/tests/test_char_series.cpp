#include <doctest.h>

#include "gfit/char_series.hpp"
#include "gfit/corpus.hpp"
#include "gfit/errors.hpp"
#include "oracles.hpp"

using namespace gfit;

namespace {

Subgroup whole(const char *spec) { return Subgroup::whole(builtin(spec).group); }

Subgroup gen(const Subgroup &w, std::initializer_list<const char *> cycles) {
  std::vector<Permutation> ps;
  for (const char *c : cycles)
    ps.push_back(parse_cycles(c, w.ambient().degree()));
  return Subgroup::generated(w.parent(), std::span<const Permutation>(ps));
}

std::vector<std::size_t> orders(const SeriesRecord &s) {
  std::vector<std::size_t> out;
  for (const auto &t : s.terms)
    out.push_back(t.order());
  return out;
}

oracle::PermSet as_set(const Subgroup &s) {
  oracle::PermSet out;
  for (Index i : s.elements())
    out.insert(s.ambient().element(i));
  return out;
}

} // namespace

TEST_CASE("Fitting subgroup and p-cores") {
  Subgroup s4 = whole("symmetric(4)");
  Subgroup v4 = gen(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(fitting_subgroup(s4) == v4);
  CHECK(o_p_core(s4, 2) == v4);
  CHECK(o_p_core(s4, 3).is_trivial());
  CHECK(odd_core(s4).is_trivial());
  CHECK(soluble_radical(s4) == s4);
  CHECK(fitting_subgroup(whole("symmetric(5)")).is_trivial());
  CHECK(fitting_subgroup(whole("cyclic(12)")).is_whole());
  CHECK(fitting_subgroup(whole("sl2(5)")).order() == 2);
  CHECK(soluble_radical(whole("sl2(5)")).order() == 2);

  Subgroup s3c5 = whole("direct_product(symmetric(3),cyclic(5))");
  CHECK(odd_core(s3c5).order() == 15);
  CHECK(o_p_core(s3c5, 3).order() == 3);
  CHECK(fitting_subgroup(s3c5).order() == 15);
  CHECK(fitting_subgroup(whole("dihedral(6)")).order() == 6);
}

TEST_CASE("Fitting subgroup against the brute-force oracle") {
  for (const char *spec : {"symmetric(4)", "alternating(4)", "dihedral(4)", "dihedral(5)", "dihedral(6)", "sl2(3)",
                           "cyclic(12)", "direct_product(symmetric(3),cyclic(5))", "alternating(5)"}) {
    CAPTURE(spec);
    Subgroup g = whole(spec);
    CHECK(as_set(fitting_subgroup(g)) == oracle::fitting(as_set(g)));
    CHECK(is_soluble(g) == oracle::is_soluble(as_set(g)));
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(as_set(g)));
  }
}

TEST_CASE("layer and generalized Fitting subgroup") {
  Subgroup s5 = whole("symmetric(5)");
  Subgroup a5 = gen(s5, {"(1 2 3)", "(3 4 5)"});
  CHECK(layer(s5) == a5);
  CHECK(generalized_fitting(s5, true) == a5);
  CHECK(generalized_fitting_via_socle(s5) == a5);
  Subgroup s4 = whole("symmetric(4)");
  CHECK(layer(s4).is_trivial());
  CHECK(generalized_fitting(s4, true) == fitting_subgroup(s4));
  Subgroup sl25 = whole("sl2(5)");
  CHECK(layer(sl25).is_whole());
  CHECK(generalized_fitting(sl25, true).is_whole());
  CHECK(layer(whole("direct_product(alternating(5),alternating(5))")).is_whole());
  CHECK(layer(whole("cyclic(1)")).is_trivial());
}

TEST_CASE("F* contains its own centralizer") {
  for (const char *spec : {"symmetric(4)", "symmetric(5)", "sl2(5)", "sl2(3)", "dihedral(6)",
                           "holomorph_ext(alternating(5),transposition)", "holomorph_ext(cyclic(7),inversion)"}) {
    CAPTURE(spec);
    Subgroup g = whole(spec);
    Subgroup fs = generalized_fitting(g, true);
    CHECK(fs.contains(centralizer(g, fs)));
    CHECK(fs == generalized_fitting_via_socle(g));
  }
}

TEST_CASE("generalized Fitting series and height") {
  Subgroup s4 = whole("symmetric(4)");
  auto s = gen_fitting_series(s4, true);
  CHECK(orders(s) == std::vector<std::size_t>{4, 12, 24});
  CHECK(s.length == 3);
  CHECK(gen_fitting_height(s4) == 3);
  CHECK(fitting_height(s4) == 3);
  CHECK(orders(fitting_series(s4)) == std::vector<std::size_t>{4, 12, 24});

  CHECK(orders(gen_fitting_series(whole("symmetric(5)"))) == std::vector<std::size_t>{60, 120});
  CHECK(gen_fitting_height(whole("symmetric(5)")) == 2);
  CHECK(gen_fitting_height(whole("alternating(5)")) == 1);
  CHECK(gen_fitting_height(whole("cyclic(12)")) == 1);
  CHECK(gen_fitting_height(whole("symmetric(3)")) == 2);

  Subgroup one = whole("cyclic(1)");
  CHECK(gen_fitting_series(one).terms.empty());
  CHECK(gen_fitting_height(one) == 0);
  CHECK(fitting_height(one) == 0);

  CHECK_THROWS_AS(fitting_series(whole("alternating(5)")), PreconditionError);
}

TEST_CASE("insoluble length and the upper insoluble series") {
  CHECK(insoluble_length(whole("symmetric(4)")) == 0);
  CHECK(insoluble_length(whole("cyclic(1)")) == 0);
  CHECK(insoluble_length(whole("symmetric(5)")) == 1);
  CHECK(insoluble_length(whole("alternating(5)")) == 1);
  CHECK(insoluble_length(whole("sl2(5)")) == 1);
  CHECK(insoluble_length(whole("direct_product(alternating(5),alternating(5))")) == 1);

  Subgroup s5 = whole("symmetric(5)");
  CHECK(insoluble_radical(s5, 0).is_trivial());
  CHECK(insoluble_radical(s5, 1) == s5);
  auto up = upper_insoluble_series(s5, 4);
  CHECK(orders(up) == std::vector<std::size_t>{1, 120});
  CHECK(up.length == 1);

  Subgroup sl25 = whole("sl2(5)");
  CHECK(insoluble_radical(sl25, 0).order() == 2);
  CHECK(insoluble_radical(sl25, 1).is_whole());
}

TEST_CASE("characteristic profile is internally consistent") {
  for (const auto &e : small_std_corpus()) {
    if (e.group->order() > 400)
      continue;
    CAPTURE(e.name);
    Subgroup g = Subgroup::whole(e.group);
    auto p = characteristic_profile(g, true);
    CHECK(p.gen_fitting.contains(p.fitting));
    CHECK(p.gen_fitting.contains(p.layer));
    CHECK(p.gen_fitting == join(p.fitting, p.layer));
    CHECK(p.soluble_radical.contains(p.fitting));
    CHECK(is_normal(p.odd_core, g));
    CHECK(p.odd_core.order() % 2 == 1);
    CHECK(p.fitting_height.has_value() == is_soluble(g));
    if (p.fitting_height) {
      CHECK(*p.fitting_height == p.gen_fitting_height);
      CHECK(p.insoluble_length == 0);
    } else {
      CHECK(p.insoluble_length >= 1);
    }
    CHECK((p.gen_fitting_height == 0) == g.is_trivial());
  }
}
