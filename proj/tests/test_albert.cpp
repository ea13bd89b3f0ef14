#include "doctest.h"

#include "jordanlab/albert.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/identities.hpp"
#include "jordanlab/parser.hpp"

using namespace jordanlab;

TEST_SUITE_BEGIN("albert");

TEST_CASE("octonion table against the doubling formula") {
  Octonion one = Octonion::basis(0);
  for (int i = 0; i < 8; ++i) {
    Octonion e = Octonion::basis(i);
    CHECK(one * e == e);
    CHECK(e * one == e);
    if (i >= 1) CHECK(e * e == one.scaled(Rat(-1)));
  }
  // Table-driven product vs the recursion, all basis pairs and random pairs.
  SplitMix64 rng(13);
  auto formula_mult = [](const Octonion& a, const Octonion& b) {
    std::array<Rat, 8> av, bv, out;
    for (int i = 0; i < 8; ++i) av[i] = a[i], bv[i] = b[i];
    Octonion::cd_mult(av.data(), bv.data(), out.data(), 8);
    Octonion r;
    for (int i = 0; i < 8; ++i) r[i] = out[i];
    return r;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(Octonion::basis(i) * Octonion::basis(j) ==
            formula_mult(Octonion::basis(i), Octonion::basis(j)));
  for (int t = 0; t < 20; ++t) {
    Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK(a * b == formula_mult(a, b));
  }
}

TEST_CASE("alternative laws and the composition norm") {
  SplitMix64 rng(kDefaultSeed);
  for (int t = 0; t < 100; ++t) {
    Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK((a * a) * b == a * (a * b));
    CHECK((a * b) * b == a * (b * b));
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK((a * b).conj() == b.conj() * a.conj());
  }
  // Nonassociativity witness.
  Octonion e1 = Octonion::basis(1), e2 = Octonion::basis(2),
           e4 = Octonion::basis(4);
  CHECK(!((e1 * e2) * e4 == e1 * (e2 * e4)));
}

TEST_CASE("H3(O) and H_k(Q) are Jordan algebras at seeded points") {
  SplitMix64 rng(kDefaultSeed);
  for (int t = 0; t < 10; ++t) {
    AlbertElement a = random_albert(rng), b = random_albert(rng);
    CHECK(a.jordan(b) == b.jordan(a));
    AlbertElement a2 = a.jordan(a);
    CHECK(a2.jordan(b).jordan(a) == a2.jordan(b.jordan(a)));
  }
  for (int t = 0; t < 10; ++t) {
    SymMatrix a = random_sym(rng, 4), b = random_sym(rng, 4);
    CHECK(a.jordan(b) == b.jordan(a));
    SymMatrix a2 = a.jordan(a);
    CHECK(a2.jordan(b).jordan(a) == a2.jordan(b.jordan(a)));
  }
}

TEST_CASE("evaluate") {
  SplitMix64 rng(kDefaultSeed);
  std::vector<AlbertElement> pt{random_albert(rng), random_albert(rng),
                                random_albert(rng)};
  JPoly jordan_inst = parse_jordan("((x*x)*y)*x - (x*x)*(y*x)");
  CHECK(evaluate(jordan_inst, pt, AlbertElement()).is_zero());

  CHECK_THROWS_AS(
      evaluate(parse_jordan("z*z"), std::vector<AlbertElement>{pt[0]},
               AlbertElement()),
      Error);

  // gamma-zero polynomials vanish in the special oracle.
  std::vector<SymMatrix> spt{random_sym(rng, 4), random_sym(rng, 4),
                             random_sym(rng, 4)};
  CHECK(evaluate(sh(), spt, SymMatrix(4)).is_zero());
  CHECK(evaluate(catalog_value("f2"), spt, SymMatrix(4)).is_zero());

  // ... but sh survives in the exceptional one: the Glennie-style witness.
  SplitMix64 seed_rng(kDefaultSeed);
  std::vector<AlbertElement> seed_pt{random_albert(seed_rng),
                                     random_albert(seed_rng),
                                     random_albert(seed_rng)};
  CHECK(!evaluate(sh(), seed_pt, AlbertElement()).is_zero());
}

TEST_SUITE_END();
