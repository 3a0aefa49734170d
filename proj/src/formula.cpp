#include "abmod/formula.hpp"

#include <cctype>
#include <optional>

#include "abmod/errors.hpp"

namespace abmod {

Formula Formula::conj(std::vector<Formula> kids) {
  if (kids.size() == 1) return std::move(kids[0]);
  Formula f;
  f.kind = Kind::And;
  f.kids = std::move(kids);
  return f;
}

Formula Formula::disj(std::vector<Formula> kids) {
  if (kids.size() == 1) return std::move(kids[0]);
  Formula f;
  f.kind = Kind::Or;
  f.kids = std::move(kids);
  return f;
}

namespace {

enum class Tok {
  Ident, Number, Plus, Minus, Star, Caret, LParen, RParen,
  Eq, Neq, Amp, Pipe, Colon, Comma, Exists, End
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("syntax error at " + std::to_string(line) + ":" +
                     std::to_string(col) + ": " + msg);
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      int l = line, co = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string id;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                src[pos] == '_')) {
          id += src[pos];
          advance();
        }
        tokens.push_back({id == "exists" ? Tok::Exists : Tok::Ident, id, l, co});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[pos]))) {
          num += src[pos];
          advance();
        }
        tokens.push_back({Tok::Number, num, l, co});
        continue;
      }
      switch (c) {
        case '+': tokens.push_back({Tok::Plus, "+", l, co}); advance(); break;
        case '-': tokens.push_back({Tok::Minus, "-", l, co}); advance(); break;
        case '*': tokens.push_back({Tok::Star, "*", l, co}); advance(); break;
        case '^': tokens.push_back({Tok::Caret, "^", l, co}); advance(); break;
        case '(': tokens.push_back({Tok::LParen, "(", l, co}); advance(); break;
        case ')': tokens.push_back({Tok::RParen, ")", l, co}); advance(); break;
        case '=': tokens.push_back({Tok::Eq, "=", l, co}); advance(); break;
        case '&': tokens.push_back({Tok::Amp, "&", l, co}); advance(); break;
        case '|': tokens.push_back({Tok::Pipe, "|", l, co}); advance(); break;
        case ':': tokens.push_back({Tok::Colon, ":", l, co}); advance(); break;
        case ',': tokens.push_back({Tok::Comma, ",", l, co}); advance(); break;
        case '!':
          advance();
          if (pos < src.size() && src[pos] == '=') {
            advance();
            tokens.push_back({Tok::Neq, "!=", l, co});
          } else {
            line = l; col = co;
            fail("expected '=' after '!'");
          }
          break;
        default:
          fail(std::string("unexpected character '") + c + "'");
      }
    }
    tokens.push_back({Tok::End, "", line, col});
  }
};

// Recoverable failure used only to back out of "( formula )" attempts.
struct Backtrack {};

struct Parser {
  const std::vector<Token>& ts;
  std::size_t pos = 0;
  std::vector<std::string> vars;

  explicit Parser(const std::vector<Token>& tokens) : ts(tokens) {}

  const Token& peek() const { return ts[pos]; }
  const Token& get() { return ts[pos++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    std::string where = t.kind == Tok::End
                            ? "end of input"
                            : std::to_string(t.line) + ":" + std::to_string(t.col);
    throw InputError("syntax error at " + where + ": " + msg);
  }

  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail(peek(), "expected " + what);
  }

  unsigned var_index(const Token& t) {
    for (unsigned i = 0; i < vars.size(); ++i)
      if (vars[i] == t.text) return i;
    fail(t, "undeclared variable '" + t.text + "'");
  }

  unsigned nvars() const { return static_cast<unsigned>(vars.size()); }

  Sentence parse() {
    expect(Tok::Exists, "'exists'");
    if (peek().kind != Tok::Ident) fail(peek(), "expected variable name");
    while (peek().kind == Tok::Ident) {
      for (const auto& v : vars)
        if (v == peek().text) fail(peek(), "duplicate variable '" + peek().text + "'");
      vars.push_back(get().text);
      if (!accept(Tok::Comma)) {
        if (peek().kind != Tok::Ident) break;
      }
    }
    expect(Tok::Colon, "':'");
    Formula m = parse_disj();
    if (peek().kind != Tok::End) fail(peek(), "trailing input");
    Sentence s;
    s.vars = vars;
    s.matrix = std::move(m);
    return s;
  }

  Formula parse_disj() {
    std::vector<Formula> kids;
    kids.push_back(parse_conj());
    while (accept(Tok::Pipe)) kids.push_back(parse_conj());
    return Formula::disj(std::move(kids));
  }

  Formula parse_conj() {
    std::vector<Formula> kids;
    kids.push_back(parse_atom());
    while (accept(Tok::Amp)) kids.push_back(parse_atom());
    return Formula::conj(std::move(kids));
  }

  Formula parse_atom() {
    if (peek().kind == Tok::LParen) {
      // could be "(formula)" or a parenthesized polynomial; try the formula
      // reading first and back out if the inside is not a formula
      std::size_t save = pos;
      ++pos;
      try {
        Formula inner = parse_disj_bt();
        if (peek().kind != Tok::RParen) throw Backtrack{};
        ++pos;
        return inner;
      } catch (const Backtrack&) {
        pos = save;
      }
    }
    ZPoly lhs = parse_poly();
    Rel rel;
    if (accept(Tok::Eq)) {
      rel = Rel::Eq;
    } else if (accept(Tok::Neq)) {
      rel = Rel::Neq;
    } else {
      fail(peek(), "expected '=' or '!='");
    }
    ZPoly rhs = parse_poly();
    return Formula::literal({lhs - rhs, rel});
  }

  // variant of parse_disj that signals Backtrack instead of a hard error
  Formula parse_disj_bt() {
    try {
      return parse_disj();
    } catch (const InputError&) {
      throw Backtrack{};
    }
  }

  ZPoly parse_poly() {
    ZPoly acc = parse_term();
    while (true) {
      if (accept(Tok::Plus)) {
        acc = acc + parse_term();
      } else if (accept(Tok::Minus)) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_primary() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::Number || k == Tok::LParen;
  }

  ZPoly parse_term() {
    ZPoly acc = parse_factor();
    while (true) {
      if (accept(Tok::Star)) {
        acc = acc * parse_factor();
      } else if (starts_primary()) {
        acc = acc * parse_factor();  // juxtaposition: 2x, 3(x+1), x(y+1)
      } else {
        break;
      }
    }
    return acc;
  }

  ZPoly parse_factor() {
    bool neg = false;
    while (accept(Tok::Minus)) neg = !neg;
    ZPoly base = parse_primary();
    if (accept(Tok::Caret)) {
      if (peek().kind != Tok::Number) fail(peek(), "expected integer exponent");
      const std::string& digits = get().text;
      if (digits.size() > 6) fail(ts[pos - 1], "exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      base = base.pow(e, Int(1));
    }
    return neg ? -base : base;
  }

  ZPoly parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        get();
        return ZPoly::constant(nvars(), Int(t.text));
      }
      case Tok::Ident: {
        unsigned idx = var_index(t);
        get();
        return ZPoly::variable(nvars(), idx, Int(1));
      }
      case Tok::LParen: {
        get();
        ZPoly inner = parse_poly();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail(t, "expected polynomial");
    }
  }
};

bool same_literal(const Literal& a, const Literal& b) {
  return a.rel == b.rel && a.poly == b.poly;
}

void collect_literals(const std::vector<std::vector<Literal>>& in,
                      std::vector<Conjunct>& out, unsigned nvars) {
  for (const auto& lits : in) {
    Conjunct c;
    c.nvars = nvars;
    std::vector<Literal> seen;
    for (const auto& l : lits) {
      bool dup = false;
      for (const auto& s : seen) dup = dup || same_literal(s, l);
      if (dup) continue;
      seen.push_back(l);
      if (l.rel == Rel::Eq) {
        c.eqs.push_back(l.poly);
      } else {
        c.neqs.push_back(l.poly);
      }
    }
    out.push_back(std::move(c));
  }
}

std::vector<std::vector<Literal>> dnf_rec(const Formula& f,
                                          std::size_t cap) {
  switch (f.kind) {
    case Formula::Kind::Lit:
      return {{f.lit}};
    case Formula::Kind::Or: {
      std::vector<std::vector<Literal>> out;
      for (const auto& k : f.kids) {
        auto sub = dnf_rec(k, cap);
        for (auto& s : sub) out.push_back(std::move(s));
        if (out.size() > cap)
          throw ResourceError("DNF conjunct budget exceeded");
      }
      return out;
    }
    case Formula::Kind::And: {
      std::vector<std::vector<Literal>> out = {{}};
      for (const auto& k : f.kids) {
        auto sub = dnf_rec(k, cap);
        std::vector<std::vector<Literal>> next;
        for (const auto& a : out) {
          for (const auto& b : sub) {
            std::vector<Literal> merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
            if (next.size() > cap)
              throw ResourceError("DNF conjunct budget exceeded");
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

unsigned formula_nvars(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Lit:
      return f.lit.poly.nvars();
    default:
      for (const auto& k : f.kids) {
        unsigned n = formula_nvars(k);
        if (n > 0) return n;
      }
      return 0;
  }
}

}  // namespace

Sentence parse_sentence(const std::string& text) {
  Lexer lex(text);
  Parser p(lex.tokens);
  return p.parse();
}

std::vector<Conjunct> to_dnf(const Formula& f, std::size_t conjunct_cap) {
  auto lits = dnf_rec(f, conjunct_cap);
  std::vector<Conjunct> out;
  collect_literals(lits, out, formula_nvars(f));
  return out;
}

std::string formula_to_string(const Formula& f,
                              const std::vector<std::string>& names) {
  switch (f.kind) {
    case Formula::Kind::Lit: {
      std::string rel = f.lit.rel == Rel::Eq ? " = 0" : " != 0";
      return zpoly_to_string(f.lit.poly, names) + rel;
    }
    case Formula::Kind::And: {
      std::string out;
      for (const auto& k : f.kids) {
        if (!out.empty()) out += " & ";
        if (k.kind == Formula::Kind::Or) {
          out += "(" + formula_to_string(k, names) + ")";
        } else {
          out += formula_to_string(k, names);
        }
      }
      return out;
    }
    case Formula::Kind::Or: {
      std::string out;
      for (const auto& k : f.kids) {
        if (!out.empty()) out += " | ";
        out += formula_to_string(k, names);
      }
      return out;
    }
  }
  return "";
}

std::string to_string(const Sentence& s) {
  std::string out = "exists ";
  for (std::size_t i = 0; i < s.vars.size(); ++i) {
    if (i) out += ", ";
    out += s.vars[i];
  }
  out += ": ";
  out += formula_to_string(s.matrix, s.vars);
  return out;
}

std::string conjunct_to_string(const Conjunct& c,
                               const std::vector<std::string>& names) {
  std::string out;
  for (const auto& f : c.eqs) {
    if (!out.empty()) out += " & ";
    out += zpoly_to_string(f, names) + " = 0";
  }
  for (const auto& g : c.neqs) {
    if (!out.empty()) out += " & ";
    out += zpoly_to_string(g, names) + " != 0";
  }
  return out.empty() ? "0 = 0" : out;
}

}  // namespace abmod
