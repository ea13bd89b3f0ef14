#include "jordanlab/lift.hpp"

#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {

JPoly pow_poly(Gen g, int s) { return jpow(JPoly::gen(g), s); }

Word run_span(const std::vector<std::pair<Gen, int>>& runs, size_t first,
              size_t last_excl) {
  std::vector<Gen> letters;
  for (size_t i = first; i < last_excl; ++i)
    letters.insert(letters.end(), static_cast<size_t>(runs[i].second),
                   runs[i].first);
  return Word(std::move(letters));
}

}  // namespace

LiftTable::LiftTable(LiftOptions opts) : opts_(opts) {}

const JPoly& LiftTable::lift(const Word& u) {
  if (u.empty())
    throw Error(ErrorCode::MalformedWord, "cannot lift the empty word");
  return lift_at(u, 0);
}

const JPoly& LiftTable::lift_at(const Word& u, int depth) {
  if (depth > opts_.depth_cap)
    throw Error(ErrorCode::RecursionCapExceeded,
                "lift recursion exceeded depth " +
                    std::to_string(opts_.depth_cap) + " at word " + u.str());
  Word rep = sj_representative(u);
  auto [it, fresh] = memo_.try_emplace(rep);
  Entry& e = it->second;
  if (!fresh) {
    if (!e.value)
      throw Error(ErrorCode::RecursionCapExceeded,
                  "cyclic lift recursion at word " + rep.str());
    return *e.value;
  }
  try {
    JPoly v = build(rep, e, depth);
    if (opts_.check_gamma && gamma(v) != symmetrize(rep))
      throw Error(ErrorCode::NotLiftable,
                  "gamma check failed for lift of " + rep.str());
    e.value = std::move(v);
  } catch (...) {
    memo_.erase(rep);
    throw;
  }
  return *memo_.at(rep).value;
}

JPoly LiftTable::build(const Word& rep, Entry& e, int depth) {
  auto runs = rep.runs();
  size_t k = runs.size();
  auto sub = [&](const Word& w) -> const JPoly& {
    e.children.push_back(sj_representative(w));
    return lift_at(w, depth + 1);
  };

  if (k == 1) {
    e.rule = 1;
    return pow_poly(runs[0].first, runs[0].second).scaled(Rat(2));
  }
  if (k == 2) {
    e.rule = 2;
    return jmul(pow_poly(runs[0].first, runs[0].second),
                pow_poly(runs[1].first, runs[1].second))
        .scaled(Rat(2));
  }

  Gen l1 = runs[0].first, lk = runs[k - 1].first;
  int s1 = runs[0].second, sk = runs[k - 1].second;

  if (k == 3) {
    e.rule = 3;
    if (l1 != lk) {
      return apply_U(pow_poly(runs[1].first, runs[1].second), pow_poly(l1, s1),
                     pow_poly(lk, sk))
          .scaled(Rat(2));
    }
    Word xs = Word::single(l1, s1);
    Word yt = Word::single(runs[1].first, runs[1].second);
    Word xr = Word::single(lk, sk);
    const JPoly& a = sub(xs.concat(yt));
    const JPoly& b = sub(yt.concat(xr));
    const JPoly& c = sub(yt.concat(Word::single(l1, s1 + sk)));
    return jmul(a, pow_poly(lk, sk)) + jmul(b, pow_poly(l1, s1)) - c;
  }

  Word front = Word::single(l1, s1);
  Word back = Word::single(lk, sk);
  Word interior = run_span(runs, 1, k - 1);

  if (l1 == lk) {
    e.rule = 4;
    const JPoly& a = sub(front.concat(interior));
    const JPoly& b = sub(interior.concat(back));
    const JPoly& c = sub(interior);
    return jmul(a, pow_poly(lk, sk)) + jmul(b, pow_poly(l1, s1)) -
           jmul(c, pow_poly(l1, s1 + sk));
  }

  Gen l2 = runs[1].first;
  Gen l3 = runs[2].first;
  Gen lk1 = runs[k - 2].first;  // letters flanking the outer runs
  Gen lk2 = runs[k - 3].first;

  if (l2 == lk || lk1 == l1) {
    e.rule = 6;  // the flipped word merges runs
    const JPoly& w = sub(interior);
    JPoly u2 = apply_U(w, pow_poly(l1, s1), pow_poly(lk, sk)).scaled(Rat(2));
    const JPoly& flip = sub(back.concat(interior).concat(front));
    return u2 - flip;
  }
  if (l3 == l1) {
    e.rule = 7;  // the rotated word falls under rule 6
    Word v = run_span(runs, 1, k);
    const JPoly& lv = sub(v);
    JPoly head = jmul(lv, pow_poly(l1, s1)).scaled(Rat(2));
    const JPoly& aux = sub(v.concat(front));
    return head - aux;
  }
  if (lk2 == lk) {
    e.rule = 8;  // mirror of rule 7
    Word v = run_span(runs, 0, k - 1);
    const JPoly& lv = sub(v);
    JPoly head = jmul(lv, pow_poly(lk, sk)).scaled(Rat(2));
    const JPoly& aux = sub(back.concat(v));
    return head - aux;
  }
  if (l3 == lk || lk2 == l1) {
    e.rule = 9;  // the flipped word falls under rule 7 or 8
    const JPoly& w = sub(interior);
    JPoly u2 = apply_U(w, pow_poly(l1, s1), pow_poly(lk, sk)).scaled(Rat(2));
    const JPoly& flip = sub(back.concat(interior).concat(front));
    return u2 - flip;
  }
  // Only reachable with >= 4 distinct run letters; u + u* then need not lie
  // in the special Jordan algebra at all.
  throw Error(ErrorCode::NotLiftable,
              "no lifting rule applies to " + rep.str() +
                  " (tetrad-type pattern over 4+ letters)");
}

JPoly LiftTable::lift_poly(const AssocPoly& p) {
  auto parts = sj_decompose(p);  // throws NotSymmetric
  JPoly r;
  for (const auto& [w, a] : parts) {
    if (w.empty())
      throw Error(ErrorCode::MalformedWord,
                  "cannot lift a polynomial with a constant term");
    r = r + lift(w).scaled(a);
  }
  return r;
}

JPoly LiftTable::s_error(const JPoly& f) { return f - lift_poly(gamma(f)); }

std::vector<LiftTable::TraceEntry> LiftTable::rule_trace(const Word& u) const {
  std::vector<TraceEntry> out;
  std::map<Word, bool> seen;
  std::vector<Word> stack{sj_representative(u)};
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    if (seen.count(w)) continue;
    seen[w] = true;
    auto it = memo_.find(w);
    if (it == memo_.end()) continue;
    out.push_back(TraceEntry{w, it->second.rule, it->second.children});
    for (auto c = it->second.children.rbegin();
         c != it->second.children.rend(); ++c)
      stack.push_back(*c);
  }
  return out;
}

LiftTable& default_lift_table() {
  static LiftTable table;
  return table;
}

JPoly sc_lift(const Word& u) { return default_lift_table().lift(u); }
JPoly sc_lift_poly(const AssocPoly& p) {
  return default_lift_table().lift_poly(p);
}
JPoly s_error(const JPoly& f) { return default_lift_table().s_error(f); }

}  // namespace jordanlab
