#include "jordanlab/identities.hpp"

#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {
constexpr Gen kZ = 2;
}

JPoly commutator_identity(const AssocPoly& s) {
  if (!s.is_skew())
    throw Error(ErrorCode::NotSkew, "commutator identity needs s* = -s");
  for (const auto& [w, c] : s.terms())
    if (w.multidegree().count(kZ) != 0)
      throw Error(ErrorCode::MalformedWord,
                  "commutator identity needs a z-free s");
  if (s.is_zero()) return JPoly();
  AssocPoly z = AssocPoly::gen(kZ);
  AssocPoly z2 = AssocPoly::word(Word::single(kZ, 2));
  JPoly head = sc_lift_poly(commutator(z2, s));
  JPoly tail = sc_lift_poly(commutator(z, s));
  return head - jmul(tail, JPoly::gen(kZ)).scaled(Rat(2));
}

JPoly sh() {
  static JPoly value = [] {
    AssocPoly c = commutator(AssocPoly::gen(0), AssocPoly::gen(1));
    return commutator_identity(c * c * c);
  }();
  return value;
}

JPoly k_identity(int n, const std::vector<std::pair<Gen, int>>& assignment) {
  if (n < 1 || assignment.size() != static_cast<size_t>(2 * n))
    throw Error(ErrorCode::MalformedWord,
                "k_identity needs 2n generator powers");
  Word w;
  for (size_t i = 0; i < assignment.size(); ++i) {
    auto [g, e] = assignment[i];
    if (g < 0 || e < 1)
      throw Error(ErrorCode::MalformedWord, "bad generator power");
    if (i > 0 && assignment[i - 1].first == g)
      throw Error(ErrorCode::MalformedWord,
                  "adjacent entries of the inner word must alternate");
    w = w.concat(Word::single(g, e));
  }
  if (assignment.front().first == kZ || assignment.back().first == kZ)
    throw Error(ErrorCode::MalformedWord,
                "the inner word must not start or end with z");
  Word z = Word::single(kZ);
  Word z2 = Word::single(kZ, 2);
  JPoly zw = sc_lift(z.concat(w));
  JPoly z2w = sc_lift(z2.concat(w));
  JPoly zwz = sc_lift(z.concat(w).concat(z));
  return jmul(zw, JPoly::gen(kZ)).scaled(Rat(2)) - z2w - zwz;
}

}  // namespace jordanlab
