#include "doctest.h"

#include "jordanlab/albert.hpp"
#include "jordanlab/magma.hpp"
#include "jordanlab/parser.hpp"

using namespace jordanlab;

namespace {

JTerm random_tree(SplitMix64& rng, int depth) {
  if (depth == 0 || rng.next() % 3 == 0)
    return JTerm::leaf(static_cast<Gen>(rng.next() % 3));
  JTerm l = random_tree(rng, depth - 1);
  JTerm r = random_tree(rng, depth - 1);
  return JTerm::node(l, r);
}

JPoly random_jpoly(SplitMix64& rng, int depth, int terms) {
  JPoly p;
  for (int i = 0; i < terms; ++i) {
    int c = rng.small_int();
    if (c == 0) c = 1;
    p.add_term(random_tree(rng, depth), Rat(c));
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("magma");

TEST_CASE("canonical form is commutative and stable") {
  JTerm x = JTerm::leaf(0), y = JTerm::leaf(1);
  CHECK(JTerm::node(x, y) == JTerm::node(y, x));
  SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    JTerm a = random_tree(rng, 4);
    JTerm b = random_tree(rng, 4);
    CHECK(JTerm::node(a, b) == JTerm::node(b, a));
    CHECK(JTerm::node(a, b).str() == JTerm::node(b, a).str());
  }
}

TEST_CASE("jmul and jpow") {
  JPoly x = JPoly::gen(0), y = JPoly::gen(1);
  CHECK(jmul(x, y) == jmul(y, x));
  CHECK(jmul(x, y) == parse_jordan("x*y"));
  CHECK(jpow(x, 1) == x);
  CHECK(jpow(x, 3) ==
        JPoly::term(JTerm::node(JTerm::node(JTerm::leaf(0), JTerm::leaf(0)),
                                JTerm::leaf(0))));
  SplitMix64 rng(23);
  for (int i = 0; i < 20; ++i) {
    JPoly f = JPoly::term(random_tree(rng, 3));
    JPoly g = JPoly::term(random_tree(rng, 3));
    CHECK(jmul(f, g).multidegree() ==
          f.multidegree().plus(g.multidegree()));
  }
}

TEST_CASE("operator calculus") {
  JPoly x = JPoly::gen(0), y = JPoly::gen(1), z = JPoly::gen(2);
  CHECK(apply_R(x, y) == jmul(x, y));
  CHECK(apply_R(JPoly(), y).is_zero());
  CHECK(apply_U(y, x, z) == apply_U(y, z, x));
  CHECK(apply_D(x, y, y).is_zero());
  CHECK(apply_D(x, y, z) == parse_jordan("(x*y)*z - (x*z)*y"));
  // U with equal arguments: f U_{a,a} = 2(f*a)*a - f*a^2.
  SplitMix64 rng(29);
  for (int i = 0; i < 20; ++i) {
    JPoly f = random_jpoly(rng, 2, 2);
    JPoly a = random_jpoly(rng, 2, 2);
    JPoly b = random_jpoly(rng, 2, 2);
    CHECK(apply_U(f, a, a) ==
          jmul(jmul(f, a), a).scaled(Rat(2)) - jmul(f, jmul(a, a)));
    CHECK(apply_D(f, a, b) == -apply_D(f, b, a));
    CHECK(apply_R(f + b, a) == apply_R(f, a) + apply_R(b, a));
  }
}

TEST_CASE("gamma is the circle homomorphism") {
  JPoly x = JPoly::gen(0), y = JPoly::gen(1), z = JPoly::gen(2);
  CHECK(gamma(jmul(x, y)) == parse_assoc("1/2 xy + 1/2 yx"));
  CHECK(gamma(apply_U(y, x, z)) == parse_assoc("1/2 xyz + 1/2 zyx"));
  SplitMix64 rng(31);
  for (int i = 0; i < 15; ++i) {
    JPoly f = random_jpoly(rng, 2, 3);
    JPoly g = random_jpoly(rng, 2, 3);
    CHECK(gamma(jmul(f, g)) == circle(gamma(f), gamma(g)));
  }
  // gamma(f U_{a,b}) = ((ga)(gf)(gb) + (gb)(gf)(ga)) / 2, exact.
  for (int i = 0; i < 10; ++i) {
    JPoly f = random_jpoly(rng, 1, 2);
    JPoly a = random_jpoly(rng, 1, 2);
    JPoly b = random_jpoly(rng, 1, 2);
    AssocPoly gf = gamma(f), ga = gamma(a), gb = gamma(b);
    CHECK(gamma(apply_U(f, a, b)) ==
          (ga * gf * gb + gb * gf * ga).scaled(Rat(1, 2)));
  }
}

TEST_CASE("gamma image of derivation at degree 3") {
  JPoly x = JPoly::gen(0), y = JPoly::gen(1), z = JPoly::gen(2);
  AssocPoly gx = gamma(x), gy = gamma(y), gz = gamma(z);
  // fD_{a,b} maps under gamma to ((fa)b + b(af) - (fb)a - a(bf)) / 4
  AssocPoly expected = (circle(circle(gx, gy), gz) -
                        circle(circle(gx, gz), gy));
  CHECK(gamma(apply_D(x, y, z)) == expected);
  CHECK(!expected.is_zero());
}

TEST_SUITE_END();
