#include "jordanlab/assoc.hpp"

#include <algorithm>
#include <cctype>

#include "jordanlab/error.hpp"

namespace jordanlab {

bool rat_parse(const std::string& text, Rat& out) {
  if (text.empty()) return false;
  size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return false;
      out = Rat(mpz_class(text));
    } else {
      std::string num = text.substr(0, slash);
      std::string den = text.substr(slash + 1);
      if (!is_int(num) || !is_int(den)) return false;
      mpz_class d(den);
      if (d == 0) return false;
      out = Rat(mpz_class(num), d);
      out.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ResourceCap: return "ResourceCap";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::RecursionCapExceeded: return "RecursionCapExceeded";
    case ErrorCode::NotLiftable: return "NotLiftable";
  }
  return "Error";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::MalformedWord:
      return 2;
    case ErrorCode::ResourceCap:
      return 3;
    default:
      return 1;
  }
}

std::string gen_name(Gen g) {
  switch (g) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    case 3: return "w";
    default: return "g" + std::to_string(g);
  }
}

MultiDegree::MultiDegree(std::vector<int> counts) : c_(std::move(counts)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int MultiDegree::total() const {
  int t = 0;
  for (int v : c_) t += v;
  return t;
}

int MultiDegree::count(Gen g) const {
  if (g < 0 || g >= static_cast<int>(c_.size())) return 0;
  return c_[g];
}

bool MultiDegree::leq(const MultiDegree& other) const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > other.count(static_cast<Gen>(i))) return false;
  return true;
}

MultiDegree MultiDegree::plus(const MultiDegree& other) const {
  std::vector<int> r(std::max(c_.size(), other.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = count(static_cast<Gen>(i)) + other.count(static_cast<Gen>(i));
  return MultiDegree(std::move(r));
}

MultiDegree MultiDegree::minus(const MultiDegree& other) const {
  if (!other.leq(*this))
    throw Error(ErrorCode::MalformedWord,
                "multidegree subtraction requires componentwise <=");
  std::vector<int> r(c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = c_[i] - other.count(static_cast<Gen>(i));
  return MultiDegree(std::move(r));
}

std::string MultiDegree::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  if (c_.empty()) s += "0";
  s += ")";
  return s;
}

Word Word::single(Gen g, int power) {
  return Word(std::vector<Gen>(static_cast<size_t>(power), g));
}

Word Word::reversed() const {
  std::vector<Gen> r(l_.rbegin(), l_.rend());
  return Word(std::move(r));
}

Word Word::concat(const Word& other) const {
  std::vector<Gen> r = l_;
  r.insert(r.end(), other.l_.begin(), other.l_.end());
  return Word(std::move(r));
}

int Word::height() const {
  if (l_.empty()) return 0;
  int h = 1;
  for (size_t i = 1; i < l_.size(); ++i)
    if (l_[i] != l_[i - 1]) ++h;
  return h;
}

std::vector<std::pair<Gen, int>> Word::runs() const {
  std::vector<std::pair<Gen, int>> r;
  for (Gen g : l_) {
    if (!r.empty() && r.back().first == g)
      ++r.back().second;
    else
      r.emplace_back(g, 1);
  }
  return r;
}

MultiDegree Word::multidegree() const {
  int w = 0;
  for (Gen g : l_) w = std::max(w, g + 1);
  std::vector<int> c(static_cast<size_t>(w), 0);
  for (Gen g : l_) ++c[g];
  return MultiDegree(std::move(c));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (l_.size() != other.l_.size())
    return l_.size() <=> other.l_.size();
  for (size_t i = 0; i < l_.size(); ++i)
    if (l_[i] != other.l_[i]) return l_[i] <=> other.l_[i];
  return std::strong_ordering::equal;
}

std::string Word::str() const {
  if (l_.empty()) return "1";
  std::string s;
  for (auto [g, e] : runs()) {
    s += gen_name(g);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Word sj_representative(const Word& u) {
  Word r = u.reversed();
  return r < u ? r : u;
}

AssocPoly AssocPoly::word(const Word& w, const Rat& c) {
  AssocPoly p;
  p.add_term(w, c);
  return p;
}

AssocPoly AssocPoly::gen(Gen g) { return word(Word::single(g)); }

Rat AssocPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Rat(0) : it->second;
}

void AssocPoly::add_term(const Word& w, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (rat_is_zero(it->second)) t_.erase(it);
  }
}

AssocPoly AssocPoly::operator+(const AssocPoly& o) const {
  AssocPoly r = *this;
  for (const auto& [w, c] : o.t_) r.add_term(w, c);
  return r;
}

AssocPoly AssocPoly::operator-(const AssocPoly& o) const {
  AssocPoly r = *this;
  for (const auto& [w, c] : o.t_) r.add_term(w, -c);
  return r;
}

AssocPoly AssocPoly::operator-() const {
  AssocPoly r;
  for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

AssocPoly AssocPoly::operator*(const AssocPoly& o) const {
  AssocPoly r;
  for (const auto& [w1, c1] : t_)
    for (const auto& [w2, c2] : o.t_) r.add_term(w1.concat(w2), c1 * c2);
  return r;
}

AssocPoly AssocPoly::scaled(const Rat& c) const {
  AssocPoly r;
  if (rat_is_zero(c)) return r;
  for (const auto& [w, k] : t_) r.t_.emplace(w, k * c);
  return r;
}

AssocPoly AssocPoly::pow(int n) const {
  AssocPoly r = unit();
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

AssocPoly AssocPoly::involute() const {
  AssocPoly r;
  for (const auto& [w, c] : t_) r.t_.emplace(w.reversed(), c);
  return r;
}

bool AssocPoly::is_symmetric() const { return *this == involute(); }

bool AssocPoly::is_skew() const { return involute() == -*this; }

bool AssocPoly::homogeneous() const {
  if (t_.empty()) return true;
  MultiDegree d = t_.begin()->first.multidegree();
  for (const auto& [w, c] : t_)
    if (w.multidegree() != d) return false;
  return true;
}

MultiDegree AssocPoly::multidegree() const {
  if (t_.empty() || !homogeneous())
    throw Error(ErrorCode::NotHomogeneous,
                "multidegree of a non-homogeneous polynomial");
  return t_.begin()->first.multidegree();
}

std::map<MultiDegree, AssocPoly> AssocPoly::slices() const {
  std::map<MultiDegree, AssocPoly> r;
  for (const auto& [w, c] : t_) r[w.multidegree()].add_term(w, c);
  return r;
}

std::string AssocPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : t_) {
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
    if (w.empty()) {
      s += rat_str(a);
    } else {
      if (a != 1) s += rat_str(a) + " ";
      s += w.str();
    }
  }
  return s;
}

AssocPoly symmetrize(const Word& u) {
  AssocPoly p = AssocPoly::word(u);
  p.add_term(u.reversed(), Rat(1));
  return p;
}

AssocPoly circle(const AssocPoly& a, const AssocPoly& b) {
  return (a * b + b * a).scaled(Rat(1, 2));
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
  return a * b - b * a;
}

AssocPoly bracket_skew(const AssocPoly& p) { return p - p.involute(); }

std::vector<std::pair<Word, Rat>> sj_decompose(const AssocPoly& p) {
  if (!p.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "sj_decompose needs p = p*");
  std::vector<std::pair<Word, Rat>> out;
  for (const auto& [w, c] : p.terms()) {
    Word r = w.reversed();
    if (w == r)
      out.emplace_back(w, c / 2);
    else if (w < r)
      out.emplace_back(w, c);
  }
  return out;
}

}  // namespace jordanlab
