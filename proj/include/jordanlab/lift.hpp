#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jordanlab/magma.hpp"

namespace jordanlab {

struct LiftOptions {
  int depth_cap = 64;       // loud failure on runaway recursion
  bool check_gamma = false; // verify gamma(<u>) = u + u* on every insertion
};

/* Shirshov-Cohn lifting: for a nonempty word u, a Jordan polynomial <u> with
 * gamma(<u>) = u + u* and <u> = <u*>. Built by recursion on the run structure
 * of u; memoized per reversal class (cache key min(u, u*)). rule numbering:
 *
 *   1  single run               <x^s> = 2 x^s
 *   2  two runs                 <x^s y^t> = 2 x^s * y^t
 *   3  three runs, distinct     <x^s y^t z^r> = 2 (y^t) U_{x^s, z^r}
 *      three runs, x..x         <x^s y^t x^r> = <x^s y^t>*x^r + <y^t x^r>*x^s
 *                                              - <y^t x^{s+r}>
 *   4  equal outer letters      <x^s w x^r> = <x^s w>*x^r + <w x^r>*x^s
 *                                            - <w>*x^{s+r}
 *   5  reversal                 <u> = <u*> (memoization on min(u, u*))
 *   6  interior starts with the trailing letter or ends with the leading one:
 *                               <a^s w b^t> = 2 <w> U_{a^s,b^t} - <b^t w a^s>
 *                               (the flipped word merges runs)
 *   7  third run = first letter <a^s v> = 2 <v>*a^s - <v a^s>
 *   8  mirror of 7              <v b^t> = 2 <v>*b^t - <b^t v>
 *   9  remaining hard pattern   the rule-6 identity; its flipped word falls
 *                               under 7 or 8
 *   10 dispatch: lowest applicable rule
 *
 * For words over at most three distinct letters the recursion always grounds
 * out (every aux word reaches rule 6 and merges runs). Words whose run
 * pattern defeats all rules -- possible only with four or more distinct
 * letters, where u + u* can lie outside the special Jordan algebra
 * (tetrad-type obstruction) -- raise NotLiftable.
 */
class LiftTable {
 public:
  explicit LiftTable(LiftOptions opts = {});

  // sc_lift; pre: u nonempty.
  const JPoly& lift(const Word& u);

  // Linear extension over a symmetric polynomial: gamma(result) = p.
  JPoly lift_poly(const AssocPoly& p);

  // s-error delta(f) = f - lift_poly(gamma(f)); always in ker gamma.
  JPoly s_error(const JPoly& f);

  struct TraceEntry {
    Word rep;
    int rule = 0;
    std::vector<Word> children;  // canonical sub-words the rule consumed
  };

  // Dispatch records for u's recursion closure, in first-use order.
  std::vector<TraceEntry> rule_trace(const Word& u) const;

  size_t cache_size() const { return memo_.size(); }

 private:
  struct Entry {
    std::optional<JPoly> value;  // nullopt while computing (cycle guard)
    int rule = 0;
    std::vector<Word> children;
  };

  const JPoly& lift_at(const Word& u, int depth);
  JPoly build(const Word& rep, Entry& e, int depth);

  LiftOptions opts_;
  std::map<Word, Entry> memo_;
};

// Process-wide table used by the identity catalog and the CLI.
LiftTable& default_lift_table();

JPoly sc_lift(const Word& u);
JPoly sc_lift_poly(const AssocPoly& p);
JPoly s_error(const JPoly& f);

}  // namespace jordanlab
