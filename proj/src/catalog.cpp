#include "jordanlab/identities.hpp"

#include "jordanlab/error.hpp"

namespace jordanlab {

const std::vector<CatalogEntry>& builtin_catalog() {
  static std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"sh", "Shestakov form of the degree-8 s-identity, g_{[x,y]^3}",
                 sh(), true, std::nullopt});
    v.push_back({"f1", "k-identity, n=1, inner word zxy",
                 k_identity(1, {{0, 1}, {1, 1}}), true, true});
    v.push_back({"f2", "k-identity, n=2, inner word z x^2 y^2 x y",
                 k_identity(2, {{0, 2}, {1, 2}, {0, 1}, {1, 1}}), true,
                 std::nullopt});
    v.push_back({"f3", "k-identity, n=3, inner word z (xy)^3",
                 k_identity(3, {{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}}),
                 true, std::nullopt});
    for (const auto& e : v)
      if (e.expect_gamma_zero && !gamma(e.value).is_zero())
        throw Error(ErrorCode::MalformedWord,
                    "catalog entry " + e.name + " is not gamma-zero");
    return v;
  }();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

JPoly catalog_value(const std::string& name) {
  if (const CatalogEntry* e = catalog_find(name)) return e->value;
  if (name.rfind("g:", 0) == 0) {
    std::string word = name.substr(2);
    if (word.empty())
      throw Error(ErrorCode::ParseError, "g: needs a word over x,y");
    std::vector<Gen> letters;
    for (char ch : word) {
      if (ch == 'x')
        letters.push_back(0);
      else if (ch == 'y')
        letters.push_back(1);
      else
        throw Error(ErrorCode::ParseError,
                    std::string("g: words use only x and y, got '") + ch +
                        "'");
    }
    return commutator_identity(
        bracket_skew(AssocPoly::word(Word(std::move(letters)))));
  }
  throw Error(ErrorCode::ParseError, "unknown catalog entry: " + name);
}

}  // namespace jordanlab
