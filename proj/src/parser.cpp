#include "jordanlab/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "jordanlab/error.hpp"
#include "jordanlab/identities.hpp"

namespace jordanlab {

namespace {

enum class Tok {
  End, Number, Gen, U, R, D, Catalog,
  Plus, Minus, Star, Caret, LParen, RParen, LBrack, RBrack,
  LBrace, RBrace, Comma, Semi, Tilde,
};

struct Token {
  Tok kind;
  int line = 1, col = 1;
  Rat number;
  Gen gen = -1;
  std::string text;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number";
    case Tok::Gen: return "generator";
    case Tok::U: return "U";
    case Tok::R: return "R";
    case Tok::D: return "D";
    case Tok::Catalog: return "catalog reference";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Tilde: return "'~'";
  }
  return "token";
}

[[noreturn]] void fail(const Token& at, const std::string& expected) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(at.line) + " column " +
                  std::to_string(at.col) + ": expected " + expected +
                  ", got " + tok_name(at.kind));
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto emit = [&](Tok k) {
      Token t;
      t.kind = k;
      t.line = line;
      t.col = col;
      return t;
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col;
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t = emit(Tok::Number);
        size_t j = i;
        while (j < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[j])))
          ++j;
        std::string num = text.substr(i, j - i);
        if (j + 1 < text.size() && text[j] == '/' &&
            std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
          size_t k = j + 1;
          while (k < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[k])))
            ++k;
          num += text.substr(j, k - j);
          j = k;
        }
        if (!rat_parse(num, t.number))
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line) + " column " +
                          std::to_string(col) + ": bad number " + num);
        col += static_cast<int>(j - i);
        i = j;
        tokens_.push_back(std::move(t));
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        if (text.compare(i, 8, "catalog:") == 0) {
          Token t = emit(Tok::Catalog);
          size_t j = i + 8;
          while (j < text.size() &&
                 (std::isalnum(static_cast<unsigned char>(text[j])) ||
                  text[j] == '_' || text[j] == ':'))
            ++j;
          t.text = text.substr(i + 8, j - i - 8);
          col += static_cast<int>(j - i);
          i = j;
          tokens_.push_back(std::move(t));
          continue;
        }
        if (c == 'g' && i + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
          Token t = emit(Tok::Gen);
          size_t j = i + 1;
          while (j < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
          t.gen = std::stoi(text.substr(i + 1, j - i - 1));
          col += static_cast<int>(j - i);
          i = j;
          tokens_.push_back(std::move(t));
          continue;
        }
        Token t = emit(Tok::Gen);
        switch (c) {
          case 'x': t.gen = 0; break;
          case 'y': t.gen = 1; break;
          case 'z': t.gen = 2; break;
          case 'w': t.gen = 3; break;
          case 'U': t.kind = Tok::U; break;
          case 'R': t.kind = Tok::R; break;
          case 'D': t.kind = Tok::D; break;
          default:
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line) + " column " +
                            std::to_string(col) + ": unexpected letter '" +
                            c + "'");
        }
        ++col;
        ++i;
        tokens_.push_back(std::move(t));
        continue;
      }
      Token t = emit(Tok::End);
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBrack; break;
        case ']': t.kind = Tok::RBrack; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case '~': t.kind = Tok::Tilde; break;
        default:
          throw Error(ErrorCode::ParseError,
                      "line " + std::to_string(line) + " column " +
                          std::to_string(col) + ": unexpected character '" +
                          c + "'");
      }
      ++col;
      ++i;
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    tokens_.push_back(std::move(end));
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), what);
    return tokens_[pos_++];
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

int expect_small_exponent(Lexer& lx) {
  const Token& t = lx.expect(Tok::Number, "integer exponent");
  if (t.number.get_den() != 1 || t.number < 1 || t.number > 64)
    fail(t, "integer exponent between 1 and 64");
  return static_cast<int>(t.number.get_num().get_si());
}

// ---- associative grammar ----

AssocPoly parse_aexpr(Lexer& lx);

AssocPoly parse_aatom(Lexer& lx) {
  const Token& t = lx.peek();
  switch (t.kind) {
    case Tok::Gen:
      lx.next();
      return AssocPoly::gen(t.gen);
    case Tok::LParen: {
      lx.next();
      AssocPoly inner = parse_aexpr(lx);
      lx.expect(Tok::RParen, "')'");
      return inner;
    }
    case Tok::LBrack: {
      lx.next();
      AssocPoly first = parse_aexpr(lx);
      if (lx.accept(Tok::Comma)) {
        AssocPoly second = parse_aexpr(lx);
        lx.expect(Tok::RBrack, "']'");
        return commutator(first, second);
      }
      lx.expect(Tok::RBrack, "']'");
      return bracket_skew(first);
    }
    case Tok::LBrace: {
      lx.next();
      AssocPoly inner = parse_aexpr(lx);
      lx.expect(Tok::RBrace, "'}'");
      return inner + inner.involute();
    }
    case Tok::Tilde: {
      lx.next();
      AssocPoly inner = parse_aatom(lx);
      return inner.involute();
    }
    default:
      fail(t, "generator, '(', '[', '{', or '~'");
  }
}

AssocPoly parse_afactor(Lexer& lx) {
  AssocPoly atom = parse_aatom(lx);
  while (lx.peek().kind == Tok::Caret) {
    lx.next();
    atom = atom.pow(expect_small_exponent(lx));
  }
  return atom;
}

bool starts_aatom(Tok k) {
  return k == Tok::Gen || k == Tok::LParen || k == Tok::LBrack ||
         k == Tok::LBrace || k == Tok::Tilde;
}

AssocPoly parse_aterm(Lexer& lx) {
  Rat coeff(1);
  bool have = false;
  AssocPoly prod = AssocPoly::unit();
  if (lx.peek().kind == Tok::Number) {
    coeff = lx.next().number;
    have = true;
  }
  while (starts_aatom(lx.peek().kind)) {
    prod = prod * parse_afactor(lx);
    have = true;
  }
  if (!have) fail(lx.peek(), "a term");
  return prod.scaled(coeff);
}

AssocPoly parse_aexpr(Lexer& lx) {
  bool neg = lx.accept(Tok::Minus);
  AssocPoly acc = parse_aterm(lx);
  if (neg) acc = -acc;
  while (true) {
    if (lx.accept(Tok::Plus))
      acc = acc + parse_aterm(lx);
    else if (lx.accept(Tok::Minus))
      acc = acc - parse_aterm(lx);
    else
      return acc;
  }
}

// ---- Jordan grammar ----

// A parsed factor is either a scalar or a polynomial; Jordan expressions
// have no unit, so scalars only ever act as coefficients.
struct JValue {
  bool scalar = true;
  Rat r{1};
  JPoly p;
};

JValue parse_jexpr_value(Lexer& lx);

JValue parse_jatom(Lexer& lx) {
  const Token& t = lx.peek();
  switch (t.kind) {
    case Tok::Gen:
      lx.next();
      return JValue{false, Rat(1), JPoly::gen(t.gen)};
    case Tok::Number:
      lx.next();
      return JValue{true, t.number, {}};
    case Tok::Catalog: {
      lx.next();
      try {
        return JValue{false, Rat(1), catalog_value(t.text)};
      } catch (const Error& e) {
        fail(t, "a known catalog entry (" + std::string(e.what()) + ")");
      }
    }
    case Tok::LParen: {
      lx.next();
      JValue inner = parse_jexpr_value(lx);
      lx.expect(Tok::RParen, "')'");
      return inner;
    }
    case Tok::U:
    case Tok::R:
    case Tok::D: {
      Tok op = lx.next().kind;
      lx.expect(Tok::LParen, "'('");
      JValue f = parse_jexpr_value(lx);
      lx.expect(Tok::Semi, "';'");
      JValue a = parse_jexpr_value(lx);
      JValue b;
      if (op != Tok::R) {
        lx.expect(Tok::Comma, "','");
        b = parse_jexpr_value(lx);
      }
      lx.expect(Tok::RParen, "')'");
      if (f.scalar || a.scalar || (op != Tok::R && b.scalar))
        fail(t, "polynomial operands for U/R/D");
      if (op == Tok::U) return JValue{false, Rat(1), apply_U(f.p, a.p, b.p)};
      if (op == Tok::R) return JValue{false, Rat(1), apply_R(f.p, a.p)};
      return JValue{false, Rat(1), apply_D(f.p, a.p, b.p)};
    }
    default:
      fail(t, "generator, number, '(', U, R, D, or catalog:");
  }
}

JValue parse_jfactor(Lexer& lx) {
  JValue v = parse_jatom(lx);
  while (lx.peek().kind == Tok::Caret) {
    const Token& caret = lx.next();
    int e = expect_small_exponent(lx);
    if (v.scalar) {
      Rat r = 1;
      for (int i = 0; i < e; ++i) r *= v.r;
      v.r = r;
    } else {
      if (v.p.is_zero() && e < 1) fail(caret, "positive exponent");
      v.p = v.p.is_zero() ? v.p : jpow(v.p, e);
    }
  }
  return v;
}

JValue parse_jterm(Lexer& lx) {
  JValue acc = parse_jfactor(lx);
  while (lx.accept(Tok::Star)) {
    JValue rhs = parse_jfactor(lx);
    if (acc.scalar && rhs.scalar) {
      acc.r *= rhs.r;
    } else if (acc.scalar) {
      rhs.p = rhs.p.scaled(acc.r);
      acc = std::move(rhs);
    } else if (rhs.scalar) {
      acc.p = acc.p.scaled(rhs.r);
    } else {
      acc.p = jmul(acc.p, rhs.p);
    }
  }
  return acc;
}

JValue parse_jexpr_value(Lexer& lx) {
  bool neg = lx.accept(Tok::Minus);
  JValue acc = parse_jterm(lx);
  auto negate = [](JValue& v) {
    if (v.scalar)
      v.r = -v.r;
    else
      v.p = -v.p;
  };
  if (neg) negate(acc);
  auto to_poly = [&lx](const JValue& v) -> JPoly {
    if (!v.scalar) return v.p;
    if (rat_is_zero(v.r)) return JPoly();
    fail(lx.peek(), "a polynomial (Jordan expressions have no unit element)");
  };
  bool poly_mode = !acc.scalar;
  JPoly sum;
  if (poly_mode) sum = acc.p;
  while (true) {
    bool plus = false;
    if (lx.accept(Tok::Plus))
      plus = true;
    else if (!lx.accept(Tok::Minus))
      break;
    JValue rhs = parse_jterm(lx);
    if (!plus) negate(rhs);
    if (!poly_mode) {
      sum = to_poly(acc);
      poly_mode = true;
    }
    sum = sum + to_poly(rhs);
  }
  if (!poly_mode) return acc;
  return JValue{false, Rat(1), std::move(sum)};
}

}  // namespace

AssocPoly parse_assoc(const std::string& text) {
  Lexer lx(text);
  AssocPoly p = parse_aexpr(lx);
  if (lx.peek().kind != Tok::End) fail(lx.peek(), "end of input");
  return p;
}

JPoly parse_jordan(const std::string& text) {
  Lexer lx(text);
  JValue v = parse_jexpr_value(lx);
  if (lx.peek().kind != Tok::End) fail(lx.peek(), "end of input");
  if (v.scalar) {
    if (rat_is_zero(v.r)) return JPoly();
    fail(lx.peek(), "a polynomial (Jordan expressions have no unit element)");
  }
  return v.p;
}

Word parse_word(const std::string& text) {
  Lexer lx(text);
  std::vector<Gen> letters;
  while (lx.peek().kind == Tok::Gen) {
    Gen g = lx.next().gen;
    int e = 1;
    if (lx.accept(Tok::Caret)) e = expect_small_exponent(lx);
    for (int i = 0; i < e; ++i) letters.push_back(g);
  }
  if (lx.peek().kind != Tok::End) fail(lx.peek(), "a word of generators");
  if (letters.empty()) fail(lx.peek(), "a nonempty word");
  return Word(std::move(letters));
}

MultiDegree parse_multidegree(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') s.erase(s.begin());
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<int> counts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string part =
        s.substr(pos, comma == std::string::npos ? std::string::npos
                                                 : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") !=
                            std::string::npos)
      throw Error(ErrorCode::ParseError,
                  "bad multidegree '" + text + "' (want e.g. 3,3,2)");
    counts.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MultiDegree(std::move(counts));
}

}  // namespace jordanlab
