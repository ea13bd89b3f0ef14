#include "doctest.h"

#include "jordanlab/albert.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/identities.hpp"
#include "jordanlab/parser.hpp"
#include "jordanlab/tideal.hpp"

using namespace jordanlab;

TEST_SUITE_BEGIN("tideal");

TEST_CASE("multilinearize small examples") {
  // x*x -> 2 x1*x2 over the slot alphabet.
  MultilinearForm m = multilinearize(parse_jordan("x*x"));
  REQUIRE(m.slots.size() == 1);
  REQUIRE(m.slots[0].size() == 2);
  JTerm expect = JTerm::node(JTerm::leaf(m.slots[0][0]),
                             JTerm::leaf(m.slots[0][1]));
  CHECK(m.form == JPoly::term(expect, Rat(2)));

  MultilinearForm m2 = multilinearize(parse_jordan("(x*x)*y"));
  REQUIRE(m2.slots.size() == 2);
  JTerm inner = JTerm::node(JTerm::leaf(m2.slots[0][0]),
                            JTerm::leaf(m2.slots[0][1]));
  JTerm full = JTerm::node(inner, JTerm::leaf(m2.slots[1][0]));
  CHECK(m2.form == JPoly::term(full, Rat(2)));

  CHECK_THROWS_AS(multilinearize(parse_jordan("x + x*y")), Error);
  CHECK_THROWS_AS(multilinearize(JPoly()), Error);
}

TEST_CASE("restitution law") {
  for (const char* text : {"(x*x)*y", "x*y", "(x*y)*(x*z)", "x^3"}) {
    JPoly f = parse_jordan(text);
    MultiDegree d = f.multidegree();
    mpz_class factor = 1;
    for (int g = 0; g < d.width(); ++g)
      for (int i = 2; i <= d.count(g); ++i) factor *= i;
    CHECK(restitute(multilinearize(f)) == f.scaled(Rat(factor)));
  }
}

TEST_CASE("restitution of the multilinearized sh is 72 sh") {
  JPoly s = sh();
  CHECK(restitute(multilinearize(s)) == s.scaled(Rat(72)));
}

TEST_CASE("t_component against a hand oracle at (2,1,0)") {
  ComponentContext ctx{ComponentOptions{}};
  MultiDegree d({2, 1});
  TComponent tc = t_component(ctx, {parse_jordan("x*y")}, d);
  // Instances: substitutions of x*y landing at x^2 y, i.e. span of
  // (x*x)*y and x*(x*y); that is the full 2-dimensional quotient.
  CHECK(tc.cert.ambient_dim == 2);
  CHECK(tc.cert.dim == 2);
  CHECK(!tc.instances.empty());

  // Identity substitution keeps the generator's class inside its component.
  TComponent self = t_component(ctx, {parse_jordan("x*y")}, MultiDegree({1, 1}));
  CHECK(self.cert.dim == 1);
  TMembership self_mem =
      t_membership(ctx, parse_jordan("x*y"), {parse_jordan("x*y")});
  CHECK(self_mem.member);
  CHECK(self_mem.verified);
}

TEST_CASE("t_membership produces verifiable certificates") {
  ComponentContext ctx{ComponentOptions{}};
  TMembership m = t_membership(ctx, parse_jordan("x*(x*y)"),
                               {parse_jordan("x*y")});
  CHECK(m.member);
  CHECK(m.verified);
  CHECK(!m.coefficients.empty());

  // gamma(x*y) != 0 while T(sh) lies in ker gamma; membership must fail.
  TMembership no = t_membership(ctx, parse_jordan("x*y"), {sh()});
  CHECK(!no.member);
}

TEST_CASE("t_component is monotone in the generator set") {
  ComponentContext ctx{ComponentOptions{}};
  MultiDegree d({2, 1});
  TComponent small = t_component(ctx, {parse_jordan("x^2")}, d);
  TComponent big =
      t_component(ctx, {parse_jordan("x^2"), parse_jordan("x*y")}, d);
  CHECK(small.cert.dim <= big.cert.dim);
  // Context multiplication reaches (2,1) from the (2,0) generator.
  CHECK(small.cert.dim >= 1);
}

TEST_CASE("every t-instance of a gamma-zero generator is gamma-zero") {
  ComponentContext ctx{ComponentOptions{}};
  // Cheap gamma-zero generator: the s-error of (x*x)*(x*x).
  JPoly g = s_error(parse_jordan("(x*x)*(x*x)"));
  REQUIRE(gamma(g).is_zero());
  TComponent tc = t_component(ctx, {g}, MultiDegree({4, 1}));
  for (const JPoly& inst : tc.instances) CHECK(gamma(inst).is_zero());
}

TEST_SUITE_END();
