#include "doctest.h"

#include <set>

#include "jordanlab/albert.hpp"
#include "jordanlab/component.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/parser.hpp"

using namespace jordanlab;

namespace {

// Independent oracle: enumerate every bracketing of every arrangement of the
// leaf multiset, canonicalize, and deduplicate. Exponential, fine at small
// degree.
void brute_trees(const std::vector<Gen>& letters, std::set<JTerm>& out);

void brute_split(const std::vector<Gen>& letters, std::set<JTerm>& out) {
  if (letters.size() == 1) {
    out.insert(JTerm::leaf(letters[0]));
    return;
  }
  for (size_t cut = 1; cut < letters.size(); ++cut) {
    std::vector<Gen> left(letters.begin(), letters.begin() + cut);
    std::vector<Gen> right(letters.begin() + cut, letters.end());
    std::set<JTerm> ls, rs;
    brute_split(left, ls);
    brute_split(right, rs);
    for (JTerm a : ls)
      for (JTerm b : rs) out.insert(JTerm::node(a, b));
  }
}

void brute_trees(const std::vector<Gen>& letters, std::set<JTerm>& out) {
  std::vector<Gen> perm = letters;
  std::sort(perm.begin(), perm.end());
  do {
    brute_split(perm, out);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

ComponentContext make_ctx() {
  ComponentOptions opts;
  opts.cache_dir.clear();
  return ComponentContext(opts);
}

}  // namespace

TEST_SUITE_BEGIN("component");

TEST_CASE("enumerate_jterms matches the brute-force oracle") {
  CHECK(enumerate_jterms(MultiDegree({1, 1})).size() == 1);
  CHECK(enumerate_jterms(MultiDegree({1, 1, 1})).size() == 3);
  CHECK(enumerate_jterms(MultiDegree({3})).size() == 1);
  CHECK(enumerate_jterms(MultiDegree({4})).size() == 2);

  auto check_against_brute = [](const MultiDegree& d) {
    std::vector<Gen> letters;
    for (int g = 0; g < d.width(); ++g)
      for (int i = 0; i < d.count(g); ++i) letters.push_back(g);
    std::set<JTerm> expected;
    brute_trees(letters, expected);
    const auto& got = enumerate_jterms(d);
    REQUIRE(got.size() == expected.size());
    CHECK(std::set<JTerm>(got.begin(), got.end()) == expected);
    CHECK(std::is_sorted(got.begin(), got.end()));
  };
  check_against_brute(MultiDegree({2, 1}));
  check_against_brute(MultiDegree({2, 2}));
  check_against_brute(MultiDegree({3, 1, 1}));
  check_against_brute(MultiDegree({2, 2, 1}));
}

TEST_CASE("relations vanish below degree 4 and force power associativity") {
  ComponentContext ctx = make_ctx();
  CHECK(ctx.jordan_relations(MultiDegree({1, 1, 1})).empty());
  CHECK(ctx.jordan_relations(MultiDegree({2, 1})).empty());

  const ComponentSpace& sp = ctx.space(MultiDegree({4}));
  CHECK(sp.basis_size() == 2);
  CHECK(sp.rank() == 1);
  CHECK(sp.quotient_dim() == 1);
  CHECK(ctx.is_zero_in_J(parse_jordan("(x*x)*(x*x) - x^4")));
}

TEST_CASE("the (3,1,0) relations contain L(x,x,x,y)") {
  ComponentContext ctx = make_ctx();
  auto rows = ctx.jordan_relations(MultiDegree({3, 1}));
  REQUIRE(!rows.empty());
  JTerm x = JTerm::leaf(0), y = JTerm::leaf(1);
  JPoly L = jordan_linearization(x, x, x, y);
  SparseVecQ target = normalize_row(ctx.space(MultiDegree({3, 1})).coords(L));
  bool found = false;
  for (const auto& r : rows)
    if (r == target) found = true;
  CHECK(found);
  // Two generators: the quotient is the special two-variable component.
  CHECK(ctx.space(MultiDegree({3, 1})).quotient_dim() == 2);
}

TEST_CASE("known small quotients and kernels") {
  ComponentContext ctx = make_ctx();
  const ComponentSpace& sp = ctx.space(MultiDegree({2, 1}));
  CHECK(sp.quotient_dim() == 2);
  CHECK(ctx.s_space(MultiDegree({2, 1})).dim == 0);
  CHECK(ctx.s_space(MultiDegree({1, 1, 1})).dim == 0);
  CHECK(ctx.s_space(MultiDegree({4})).dim == 0);
}

TEST_CASE("relation rows are annihilated by gamma") {
  ComponentContext ctx = make_ctx();
  for (const MultiDegree& d :
       {MultiDegree({4}), MultiDegree({3, 1}), MultiDegree({2, 2}),
        MultiDegree({2, 1, 1}), MultiDegree({2, 2, 1})}) {
    const ComponentSpace& sp = ctx.space(d);
    for (const auto& row : sp.rref().rows())
      CHECK(gamma(sp.from_coords(row)).is_zero());
  }
}

TEST_CASE("zero tests and witnesses") {
  ComponentContext ctx = make_ctx();
  CHECK(ctx.is_zero_in_J(parse_jordan("x*y - y*x")));
  JPoly witness;
  CHECK(!ctx.is_zero_in_J(parse_jordan("x*y"), &witness));
  CHECK(!witness.is_zero());
  // Jordan identity instances at random monomials.
  SplitMix64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto mono = [&](int depth) {
      JPoly p = JPoly::gen(static_cast<Gen>(rng.next() % 3));
      for (int j = 0; j < depth; ++j)
        p = jmul(p, JPoly::gen(static_cast<Gen>(rng.next() % 3)));
      return p;
    };
    JPoly a = mono(1 + static_cast<int>(rng.next() % 2));
    JPoly b = mono(static_cast<int>(rng.next() % 2));
    JPoly inst = jmul(jmul(jmul(a, a), b), a) - jmul(jmul(a, a), jmul(b, a));
    CHECK(ctx.is_zero_in_J(inst));
  }
  // x^2 * x^2 differs from x^4 as a tree but not in J.
  JPoly diff = parse_jordan("(x*x)*(x*x) - x^4");
  CHECK(!diff.is_zero());
  CHECK(ctx.is_zero_in_J(diff));
}

TEST_CASE("determinism across contexts and the resource caps") {
  ComponentContext a = make_ctx(), b = make_ctx();
  const MultiDegree d({2, 2, 1});
  CHECK(a.space(d).rref().rows() == b.space(d).rref().rows());

  ComponentOptions tight;
  tight.max_cols = 1;
  ComponentContext small_ctx(tight);
  CHECK_THROWS_AS(small_ctx.space(MultiDegree({2, 2, 1})), Error);
}

TEST_CASE("s_space dimension consistency") {
  ComponentContext ctx = make_ctx();
  for (const MultiDegree& d :
       {MultiDegree({2, 2}), MultiDegree({2, 1, 1}), MultiDegree({3, 2})}) {
    SubspaceCert cert = ctx.s_space(d);
    const ComponentSpace& sp = ctx.space(d);
    CHECK(cert.ambient_dim == sp.quotient_dim());
    CHECK(cert.dim == 0);  // all of these sit below degree 8
  }
}

TEST_SUITE_END();
