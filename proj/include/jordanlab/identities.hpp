#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanlab/lift.hpp"

namespace jordanlab {

// Shestakov's form of the degree-8 s-identity: the commutator identity with
// s = [x,y]^3. Multidegree (3,3,2); gamma-zero by construction.
JPoly sh();

// g_s = <[z^2, s]> - 2 <[z, s]> * z for a skew, z-free associative s.
// Throws NotSkew when s* != -s and MalformedWord when s involves z.
JPoly commutator_identity(const AssocPoly& s);

// f_n = 2 <z w> * z - <z^2 w> - <z w z> for the alternating word
// w = a_1 b_1 ... a_n b_n given as generator powers. Adjacent entries must
// differ and the outer entries must avoid z; throws MalformedWord otherwise.
JPoly k_identity(int n, const std::vector<std::pair<Gen, int>>& assignment);

struct CatalogEntry {
  std::string name;
  std::string description;
  JPoly value;
  bool expect_gamma_zero = false;
  std::optional<bool> known_zero_in_J;  // asserted value, if the family fixes it
};

// Built-in entries: sh, f1, f2, f3. Entries flagged gamma-zero are checked
// on first use.
const std::vector<CatalogEntry>& builtin_catalog();

// Resolves "sh", "f1".."f3", or "g:<word over x,y>".
JPoly catalog_value(const std::string& name);
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace jordanlab
