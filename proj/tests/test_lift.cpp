#include "doctest.h"

#include "jordanlab/albert.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/lift.hpp"
#include "jordanlab/linalg.hpp"
#include "jordanlab/parser.hpp"

using namespace jordanlab;

namespace {

std::vector<Word> all_words(int min_len, int max_len) {
  std::vector<Word> out;
  for (int len = min_len; len <= max_len; ++len) {
    std::vector<Gen> cur(static_cast<size_t>(len), 0);
    while (true) {
      out.push_back(Word(cur));
      int i = len - 1;
      while (i >= 0 && cur[i] == 2) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("lift");

TEST_CASE("anchor rules") {
  LiftTable table;
  CHECK(table.lift(parse_word("x")) == parse_jordan("2*x"));
  CHECK(table.lift(parse_word("x^3")) == parse_jordan("2*x^3"));
  CHECK(table.lift(parse_word("x^2y")) == parse_jordan("2*x^2*y"));
  CHECK(table.lift(parse_word("xyz")) == parse_jordan("2*U(y; x, z)"));
  CHECK(gamma(table.lift(parse_word("xyz"))) == parse_assoc("xyz + zyx"));
  CHECK(gamma(table.lift(parse_word("xyx^2"))) ==
        parse_assoc("xyx^2 + x^2yx"));
  auto trace = table.rule_trace(parse_word("xyx^2"));
  REQUIRE(!trace.empty());
  CHECK(trace.front().rule == 3);
}

TEST_CASE("exhaustive contract on words of length <= 6") {
  LiftTable table;
  size_t count = 0;
  for (const Word& u : all_words(1, 6)) {
    const JPoly& lifted = table.lift(u);
    CHECK(gamma(lifted) == symmetrize(u));
    CHECK(table.lift(u.reversed()) == lifted);
    ++count;
  }
  CHECK(count == 1092);
}

TEST_CASE("gamma self-check option") {
  LiftTable table({64, true});
  for (const Word& u : all_words(5, 5))
    CHECK_NOTHROW(table.lift(u));
}

TEST_CASE("lift_poly is a section of gamma") {
  LiftTable table;
  CHECK(table.lift_poly(symmetrize(parse_word("xy"))) ==
        parse_jordan("2*x*y"));
  CHECK(table.lift_poly(AssocPoly()).is_zero());
  AssocPoly p = commutator(AssocPoly::gen(2),
                           commutator(AssocPoly::gen(0), AssocPoly::gen(1)));
  REQUIRE(p.is_symmetric());
  CHECK(gamma(table.lift_poly(p)) == p);
  CHECK_THROWS_AS(table.lift_poly(parse_assoc("xy")), Error);
}

TEST_CASE("s_error") {
  LiftTable table;
  CHECK(table.s_error(parse_jordan("x*y")).is_zero());
  CHECK(table.s_error(table.lift(parse_word("xyzx"))).is_zero());

  JPoly f = parse_jordan("(x*x)*(x*x)");
  JPoly delta = table.s_error(f);
  CHECK(delta == f - parse_jordan("x^4"));
  CHECK(!delta.is_zero());
  CHECK(gamma(delta).is_zero());

  SplitMix64 rng(41);
  for (int i = 0; i < 20; ++i) {
    JPoly g;
    for (int t = 0; t < 3; ++t) {
      std::vector<Gen> letters;
      int len = 1 + static_cast<int>(rng.next() % 8);
      for (int j = 0; j < len; ++j)
        letters.push_back(static_cast<Gen>(rng.next() % 3));
      JPoly w = JPoly::gen(letters[0]);
      for (size_t j = 1; j < letters.size(); ++j)
        w = jmul(w, JPoly::gen(letters[j]));
      int c = rng.small_int();
      g = g + w.scaled(Rat(c == 0 ? 1 : c));
    }
    JPoly d = table.s_error(g);
    CHECK(gamma(d).is_zero());
    CHECK(table.s_error(d) == d);
  }
}

TEST_CASE("gamma images of equal-multidegree lifts are independent") {
  LiftTable table;
  // All canonical SJ representatives at multidegree (2,2,1).
  std::vector<Word> reps;
  for (const Word& u : all_words(5, 5)) {
    if (u.multidegree() != MultiDegree({2, 2, 1})) continue;
    if (sj_representative(u) == u) reps.push_back(u);
  }
  REQUIRE(reps.size() > 1);
  // Index associative words of the component.
  std::map<Word, int> index;
  for (const Word& u : all_words(5, 5))
    if (u.multidegree() == MultiDegree({2, 2, 1}))
      index.emplace(u, static_cast<int>(index.size()));
  ExactRref rref(static_cast<int>(index.size()));
  size_t rank = 0;
  for (const Word& r : reps) {
    SparseVecQ row;
    AssocPoly g = gamma(table.lift(r));
    for (const auto& [w, c] : g.terms()) row.emplace_back(index.at(w), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (rref.add_row(row)) ++rank;
  }
  CHECK(rank == reps.size());
}

TEST_CASE("four-letter tetrad patterns are rejected loudly") {
  LiftTable table;
  CHECK_THROWS_AS(table.lift(parse_word("xyzw")), Error);
  CHECK_THROWS_AS(table.lift(parse_word("xzwzy")), Error);
  // Four-letter words whose run pattern merges still lift.
  CHECK(gamma(table.lift(parse_word("xyxw"))) ==
        symmetrize(parse_word("xyxw")));
  CHECK(gamma(table.lift(parse_word("xywyx"))) ==
        symmetrize(parse_word("xywyx")));
}

TEST_CASE("depth cap fails loudly") {
  LiftTable table({2, false});
  bool threw = false;
  try {
    table.lift(parse_word("xyzxyzxy"));
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::RecursionCapExceeded);
  }
  CHECK(threw);
}

TEST_SUITE_END();
