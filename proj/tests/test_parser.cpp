#include "doctest.h"

#include <string>

#include "jordanlab/albert.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/identities.hpp"
#include "jordanlab/parser.hpp"

using namespace jordanlab;

namespace {

JPoly random_jp(SplitMix64& rng) {
  JPoly p;
  int terms = 1 + static_cast<int>(rng.next() % 4);
  for (int t = 0; t < terms; ++t) {
    JPoly w = JPoly::gen(static_cast<Gen>(rng.next() % 3));
    int len = static_cast<int>(rng.next() % 4);
    for (int i = 0; i < len; ++i) {
      JPoly g = JPoly::gen(static_cast<Gen>(rng.next() % 3));
      w = rng.next() % 2 ? jmul(w, g) : jmul(g, w);
    }
    int num = rng.small_int();
    if (num == 0) num = 2;
    int den = 1 + static_cast<int>(rng.next() % 3);
    p = p + w.scaled(make_rat(num, den));
  }
  return p;
}

AssocPoly random_ap(SplitMix64& rng) {
  AssocPoly p;
  int terms = 1 + static_cast<int>(rng.next() % 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<Gen> letters;
    int len = 1 + static_cast<int>(rng.next() % 5);
    for (int i = 0; i < len; ++i)
      letters.push_back(static_cast<Gen>(rng.next() % 3));
    int num = rng.small_int();
    if (num == 0) num = 2;
    int den = 1 + static_cast<int>(rng.next() % 3);
    p.add_term(Word(letters), make_rat(num, den));
  }
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("parser");

TEST_CASE("jordan expressions") {
  CHECK(parse_jordan("x*y - y*x").is_zero());
  CHECK(parse_jordan("U(y; x, z)") ==
        apply_U(JPoly::gen(1), JPoly::gen(0), JPoly::gen(2)));
  CHECK(parse_jordan("R(x; y)") == jmul(JPoly::gen(0), JPoly::gen(1)));
  CHECK(parse_jordan("D(x; y, z)") ==
        apply_D(JPoly::gen(0), JPoly::gen(1), JPoly::gen(2)));
  CHECK(parse_jordan("2*x") == JPoly::gen(0).scaled(Rat(2)));
  CHECK(parse_jordan("x*2") == JPoly::gen(0).scaled(Rat(2)));
  CHECK(parse_jordan("1/2*x^2") == jpow(JPoly::gen(0), 2).scaled(Rat(1, 2)));
  CHECK(parse_jordan("x*y*z") == jmul(jmul(JPoly::gen(0), JPoly::gen(1)),
                                      JPoly::gen(2)));
  CHECK(parse_jordan("0").is_zero());
  CHECK(parse_jordan("catalog:f1") == catalog_value("f1"));
  CHECK(parse_jordan("g5*g4") == jmul(JPoly::gen(5), JPoly::gen(4)));
  CHECK_THROWS_AS(parse_jordan("2"), Error);
}

TEST_CASE("associative expressions") {
  CHECK(parse_assoc("[x,y]") ==
        commutator(AssocPoly::gen(0), AssocPoly::gen(1)));
  CHECK(parse_assoc("[xy]") == bracket_skew(AssocPoly::word(parse_word("xy"))));
  CHECK(parse_assoc("{xy}") == symmetrize(parse_word("xy")));
  CHECK(parse_assoc("~(xy)") == AssocPoly::word(parse_word("yx")));
  CHECK(parse_assoc("x^2y") == AssocPoly::word(parse_word("xxy")));
  CHECK(parse_assoc("3/2 xy") ==
        AssocPoly::word(parse_word("xy"), Rat(3, 2)));
  CHECK(parse_assoc("(x+y)(x-y)") ==
        parse_assoc("x^2 - xy + yx - y^2"));
  CHECK(parse_assoc("[z^2, xy - yx]") ==
        commutator(parse_assoc("z^2"), parse_assoc("xy - yx")));
  CHECK(parse_assoc("1").term_count() == 1);
}

TEST_CASE("error positions and totality") {
  bool threw = false;
  try {
    parse_jordan("x*(y*");
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column 6") != std::string::npos);
  }
  CHECK(threw);

  for (const char* bad :
       {"", "((", "x**y", "2/", "]x[", "catalog:nope", "x^", "x^0", "U(x)",
        "q", "x+", "1/0", "x )", "~"}) {
    CHECK_THROWS_AS(parse_jordan(bad), Error);
  }
  for (const char* bad : {"", "((", "2/", "]x[", "x^", "~", "x q"}) {
    CHECK_THROWS_AS(parse_assoc(bad), Error);
  }
}

TEST_CASE("print/parse round trip") {
  SplitMix64 rng(271);
  for (int i = 0; i < 40; ++i) {
    JPoly p = random_jp(rng);
    CHECK(parse_jordan(p.str()) == p);
  }
  for (int i = 0; i < 40; ++i) {
    AssocPoly p = random_ap(rng);
    CHECK(parse_assoc(p.str()) == p);
  }
  CHECK(parse_jordan(JPoly().str()).is_zero());
  CHECK(parse_jordan(sh().str()) == sh());
}

TEST_CASE("words and multidegrees") {
  CHECK(parse_word("xyx^2").length() == 4);
  CHECK(parse_word("g7^2").multidegree().count(7) == 2);
  CHECK_THROWS_AS(parse_word(""), Error);
  CHECK_THROWS_AS(parse_word("x+y"), Error);
  CHECK(parse_multidegree("3,3,2") == MultiDegree({3, 3, 2}));
  CHECK(parse_multidegree("(3,3,2)") == MultiDegree({3, 3, 2}));
  CHECK_THROWS_AS(parse_multidegree("a,b"), Error);
  CHECK_THROWS_AS(parse_multidegree(""), Error);
}

TEST_SUITE_END();
