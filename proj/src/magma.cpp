#include "jordanlab/magma.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "jordanlab/error.hpp"

namespace jordanlab {

namespace {

struct TermRec {
  int32_t left;   // -1 for a leaf
  int32_t right;  // generator index for a leaf, child id otherwise
  int degree;
  MultiDegree mdeg;
  std::unique_ptr<AssocPoly> gamma;  // lazily filled
};

}  // namespace

class TermArena {
 public:
  static TermArena& instance() {
    static TermArena a;
    return a;
  }

  uint32_t leaf(Gen g) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = pack(-1, g);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    TermRec rec;
    rec.left = -1;
    rec.right = g;
    rec.degree = 1;
    rec.mdeg = Word::single(g).multidegree();
    return insert(key, std::move(rec));
  }

  uint32_t node(uint32_t a, uint32_t b) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = pack(static_cast<int64_t>(a), static_cast<int64_t>(b));
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    TermRec rec;
    rec.left = static_cast<int32_t>(a);
    rec.right = static_cast<int32_t>(b);
    rec.degree = recs_[a].degree + recs_[b].degree;
    rec.mdeg = recs_[a].mdeg.plus(recs_[b].mdeg);
    return insert(key, std::move(rec));
  }

  const TermRec& at(uint32_t id) const { return recs_[id]; }

  const AssocPoly& gamma_of(uint32_t id) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (recs_[id].gamma) return *recs_[id].gamma;
    }
    AssocPoly g;
    const TermRec& r = recs_[id];
    if (r.left < 0) {
      g = AssocPoly::gen(r.right);
    } else {
      g = circle(gamma_of(static_cast<uint32_t>(r.left)),
                 gamma_of(static_cast<uint32_t>(r.right)));
    }
    std::lock_guard<std::mutex> lock(mu_);
    if (!recs_[id].gamma)
      recs_[id].gamma = std::make_unique<AssocPoly>(std::move(g));
    return *recs_[id].gamma;
  }

 private:
  static uint64_t pack(int64_t a, int64_t b) {
    return (static_cast<uint64_t>(a + 1) << 32) | static_cast<uint32_t>(b);
  }

  uint32_t insert(uint64_t key, TermRec rec) {
    uint32_t id = static_cast<uint32_t>(recs_.size());
    recs_.push_back(std::move(rec));
    index_.emplace(key, id);
    return id;
  }

  std::mutex mu_;
  std::deque<TermRec> recs_;
  std::unordered_map<uint64_t, uint32_t> index_;
};

JTerm JTerm::leaf(Gen g) {
  if (g < 0)
    throw Error(ErrorCode::MalformedWord, "negative generator index");
  return JTerm(TermArena::instance().leaf(g));
}

JTerm JTerm::node(JTerm a, JTerm b) {
  if (compare(b, a) < 0) std::swap(a, b);
  return JTerm(TermArena::instance().node(a.id_, b.id_));
}

bool JTerm::is_leaf() const { return TermArena::instance().at(id_).left < 0; }

Gen JTerm::gen() const { return TermArena::instance().at(id_).right; }

JTerm JTerm::left() const {
  return JTerm(static_cast<uint32_t>(TermArena::instance().at(id_).left));
}

JTerm JTerm::right() const {
  return JTerm(static_cast<uint32_t>(TermArena::instance().at(id_).right));
}

int JTerm::degree() const { return TermArena::instance().at(id_).degree; }

const MultiDegree& JTerm::multidegree() const {
  return TermArena::instance().at(id_).mdeg;
}

const AssocPoly& JTerm::gamma() const {
  return TermArena::instance().gamma_of(id_);
}

int JTerm::compare(JTerm a, JTerm b) {
  if (a.id_ == b.id_) return 0;
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (a.is_leaf()) return a.gen() < b.gen() ? -1 : 1;  // equal degree: both kind
  int c = compare(a.left(), b.left());
  if (c) return c;
  return compare(a.right(), b.right());
}

std::string JTerm::str() const {
  if (is_leaf()) return gen_name(gen());
  // Left-normed chains print without parentheses; right operands that are
  // nodes need them.
  std::string l = left().str();
  std::string r = right().is_leaf() ? right().str() : "(" + right().str() + ")";
  return l + "*" + r;
}

JPoly JPoly::term(JTerm t, const Rat& c) {
  JPoly p;
  p.add_term(t, c);
  return p;
}

Rat JPoly::coeff(JTerm t) const {
  auto it = t_.find(t);
  return it == t_.end() ? Rat(0) : it->second;
}

void JPoly::add_term(JTerm t, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, fresh] = t_.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (rat_is_zero(it->second)) t_.erase(it);
  }
}

JPoly JPoly::operator+(const JPoly& o) const {
  JPoly r = *this;
  for (const auto& [t, c] : o.t_) r.add_term(t, c);
  return r;
}

JPoly JPoly::operator-(const JPoly& o) const {
  JPoly r = *this;
  for (const auto& [t, c] : o.t_) r.add_term(t, -c);
  return r;
}

JPoly JPoly::operator-() const {
  JPoly r;
  for (const auto& [t, c] : t_) r.t_.emplace(t, -c);
  return r;
}

JPoly JPoly::scaled(const Rat& c) const {
  JPoly r;
  if (rat_is_zero(c)) return r;
  for (const auto& [t, k] : t_) r.t_.emplace(t, k * c);
  return r;
}

bool JPoly::homogeneous() const {
  if (t_.empty()) return true;
  const MultiDegree& d = t_.begin()->first.multidegree();
  for (const auto& [t, c] : t_)
    if (t.multidegree() != d) return false;
  return true;
}

MultiDegree JPoly::multidegree() const {
  if (t_.empty() || !homogeneous())
    throw Error(ErrorCode::NotHomogeneous,
                "multidegree of a non-homogeneous polynomial");
  return t_.begin()->first.multidegree();
}

std::map<MultiDegree, JPoly> JPoly::slices() const {
  std::map<MultiDegree, JPoly> r;
  for (const auto& [t, c] : t_) r[t.multidegree()].add_term(t, c);
  return r;
}

std::string JPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : t_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) s += rat_str(a) + "*";
    s += t.str();
  }
  return s;
}

JPoly jmul(const JPoly& f, const JPoly& g) {
  JPoly r;
  for (const auto& [t1, c1] : f.terms())
    for (const auto& [t2, c2] : g.terms())
      r.add_term(JTerm::node(t1, t2), c1 * c2);
  return r;
}

JPoly jpow(const JPoly& a, int s) {
  if (s < 1)
    throw Error(ErrorCode::MalformedWord, "jpow exponent must be >= 1");
  JPoly r = a;
  for (int i = 1; i < s; ++i) r = jmul(r, a);
  return r;
}

JPoly apply_R(const JPoly& f, const JPoly& a) { return jmul(f, a); }

JPoly apply_U(const JPoly& f, const JPoly& a, const JPoly& b) {
  return jmul(jmul(f, a), b) + jmul(jmul(f, b), a) - jmul(f, jmul(a, b));
}

JPoly apply_D(const JPoly& f, const JPoly& a, const JPoly& b) {
  return jmul(jmul(f, a), b) - jmul(jmul(f, b), a);
}

AssocPoly gamma(const JPoly& f) {
  AssocPoly r;
  for (const auto& [t, c] : f.terms()) r = r + t.gamma().scaled(c);
  return r;
}

}  // namespace jordanlab
