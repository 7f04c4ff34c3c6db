#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "gfit/errors.hpp"
#include "gfit/perm.hpp"
#include "oracles.hpp"

using namespace gfit;

namespace {

std::vector<Point> one_based(const Permutation &p) {
  std::vector<Point> out;
  for (Point i : p.images())
    out.push_back(i + 1);
  return out;
}

std::string parse_error_text(std::string_view text, std::size_t degree) {
  try {
    parse_cycles(text, degree);
  } catch (const ParseError &e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("cycle notation parses into image arrays") {
  CHECK(one_based(parse_cycles("(1 2 3)(4 5)", 5)) == std::vector<Point>{2, 3, 1, 5, 4});
  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(parse_cycles("  ( 1  2 ) ", 3) == parse_cycles("(1 2)", 3));
  CHECK(parse_cycles("(1)(2 3)", 3) == parse_cycles("(2 3)", 3));
}

TEST_CASE("malformed cycle notation names the offending token") {
  CHECK(parse_error_text("(1 2 2)", 3).find("repeated point 2") != std::string::npos);
  CHECK(parse_error_text("(1 6)", 5).find("6") != std::string::npos);
  CHECK(parse_error_text("(1 2", 3) != "");
  CHECK(parse_error_text("1 2)", 3) != "");
  CHECK(parse_error_text("(1 x)", 3).find("x") != std::string::npos);
  CHECK(parse_error_text("(0 1)", 3) != "");
  CHECK(parse_error_text("(1 2)(2 3)", 3).find("repeated point 2") != std::string::npos);
}

TEST_CASE("composition acts on the right") {
  Permutation a = parse_cycles("(1 2)", 3);
  Permutation b = parse_cycles("(2 3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)(0) == 2);
  CHECK(a * a == Permutation::identity(3));
  CHECK_THROWS_AS(a * Permutation::identity(4), ValidationError);
}

TEST_CASE("commutator of (1 2 3) and (1 2) is a 3-cycle") {
  Permutation g = parse_cycles("(1 2 3)", 3);
  Permutation h = parse_cycles("(1 2)", 3);
  // Direct evaluation of g^-1 h^-1 g h pointwise.
  std::vector<Point> expect(3);
  for (Point i = 0; i < 3; ++i)
    expect[i] = h(g(h.inverse()(g.inverse()(i))));
  Permutation c = commutator(g, h);
  CHECK(c == Permutation(expect));
  CHECK(c.order() == 3);
  CHECK(format_cycles(c) == "(1 2 3)");
}

TEST_CASE("conjugation and left-normed commutators") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation g = oracle::random_permutation(6, rng);
    Permutation h = oracle::random_permutation(6, rng);
    Permutation k = oracle::random_permutation(6, rng);
    CHECK(conjugate(g, g) == g);
    CHECK(conjugate(g, h) == h.inverse() * g * h);
    CHECK(commutator(g, h) == g.inverse() * conjugate(g, h));
    std::vector<Permutation> xs{g, h, k};
    CHECK(commutator(xs) == commutator(commutator(g, h), k));
  }
}

TEST_CASE("element order and p-parts") {
  Permutation p = parse_cycles("(1 2)(3 4 5)", 5);
  CHECK(p.order() == 6);
  CHECK(p_part(p, 2) == 2);
  CHECK(p_part(p, 3) == 3);
  CHECK(Permutation::identity(3).order() == 1);
  CHECK(p_part(Permutation::identity(3), 2) == 1);
  Permutation q = parse_cycles("(1 2 3 4)", 4);
  CHECK(q.order() == 4);
  CHECK(p_part(q, 2) == 4);
  CHECK(power(q, 4).is_identity());
  CHECK(power(q, -1) == q.inverse());
}

TEST_CASE("format and parse are mutually inverse") {
  for (const char *text : {"()", "(1 2)", "(1 3 2)", "(1 2 3)(4 5)", "(2 7)(3 6)(4 5)", "(1 7 6 5 4 3 2)"}) {
    Permutation p = parse_cycles(text, 7);
    CHECK(format_cycles(p) == text);
    CHECK(parse_cycles(format_cycles(p), 7) == p);
  }
  CHECK(format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 2 3)");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = oracle::random_permutation(1 + trial % 12, rng);
    CHECK(parse_cycles(format_cycles(p), p.degree()) == p);
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation a = oracle::random_permutation(8, rng);
    Permutation b = oracle::random_permutation(8, rng);
    Permutation c = oracle::random_permutation(8, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("bijection is enforced") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), ValidationError);
}

TEST_CASE("extension and shifting") {
  Permutation p = parse_cycles("(1 2)", 2);
  CHECK(format_cycles(p.extended(4)) == "(1 2)");
  CHECK(p.extended(4).degree() == 4);
  CHECK(format_cycles(p.shifted(3)) == "(4 5)");
  CHECK(p.shifted(3).degree() == 5);
  CHECK(parse_cycles("(2 3)", 4).first_moved() == 1);
  CHECK(Permutation::identity(4).first_moved() == 4);
}
