#include <cctype>

#include "uakit/formula.hpp"

namespace uakit {

namespace {

enum class Tok { Top, Atom, Modal, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Op modal_op = Op::L;
  int agent = 0;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '(') {
      out.push_back({Tok::LParen, start, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, start, ")"});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::Not, start, "~"});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, start, "&"});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, start, "|"});
      ++i;
    } else if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, start, "->"});
      i += 2;
    } else if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, start, "<->"});
      i += 3;
    } else if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Atom, start, std::string(s.substr(start, i - start))});
    } else if (c == 'T' && (i + 1 >= s.size() || !ident_char(s[i + 1]))) {
      out.push_back({Tok::Top, start, "T"});
      ++i;
    } else if (c == 'L' || c == 'A' || c == 'K') {
      ++i;
      std::size_t digits = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == digits) throw ParseError(start, std::string("modal operator '") + c + "' needs an agent number");
      if (i < s.size() && ident_char(s[i])) throw ParseError(start, "malformed agent index");
      std::string num(s.substr(digits, i - digits));
      if (num.size() > 6 || num[0] == '0') throw ParseError(start, "malformed agent index '" + num + "'");
      Token t{Tok::Modal, start, std::string(s.substr(start, i - start))};
      t.modal_op = c == 'L' ? Op::L : (c == 'A' ? Op::A : Op::K);
      t.agent = std::stoi(num) - 1;
      out.push_back(t);
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Vocabulary& vocab, AtomSet allowed)
      : toks_(std::move(toks)), vocab_(vocab), allowed_(allowed) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::RParen) throw ParseError(peek().pos, "unbalanced ')'");
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Formula iff() {
    Formula f = implies();
    while (peek().kind == Tok::Iff) {
      next();
      f = Formula::iff(f, implies());
    }
    return f;
  }

  Formula implies() {
    Formula f = disj();
    if (peek().kind == Tok::Implies) {
      next();
      return Formula::implies(f, implies());
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Not:
        return Formula::neg(unary());
      case Tok::Modal:
        return Formula::modal(t.modal_op, t.agent, unary());
      case Tok::Top:
        return Formula::top();
      case Tok::Atom: {
        auto id = vocab_.find(t.text);
        if (!id || !allowed_.contains(*id)) throw ParseError(t.pos, "unknown atom '" + t.text + "'");
        return Formula::atom(*id);
      }
      case Tok::LParen: {
        Formula f = iff();
        if (peek().kind != Tok::RParen) throw ParseError(peek().pos, "unbalanced '(': expected ')'");
        next();
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Vocabulary& vocab_;
  AtomSet allowed_;
};

void print_into(const Formula& f, const Vocabulary& vocab, std::string& out) {
  switch (f.op()) {
    case Op::Top:
      out += 'T';
      return;
    case Op::Atom:
      out += vocab.name(f.index());
      return;
    case Op::Not:
      out += '~';
      print_into(f.sub(), vocab, out);
      return;
    case Op::And:
      out += '(';
      print_into(f.lhs(), vocab, out);
      out += " & ";
      print_into(f.rhs(), vocab, out);
      out += ')';
      return;
    case Op::L:
    case Op::A:
    case Op::K:
      out += f.op() == Op::L ? 'L' : (f.op() == Op::A ? 'A' : 'K');
      out += std::to_string(f.index() + 1);
      out += ' ';
      print_into(f.sub(), vocab, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab, AtomSet allowed) {
  Parser p(lex(text), vocab, allowed);
  return p.run();
}

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return parse_formula(text, vocab, vocab.all());
}

std::vector<std::string> scan_atom_names(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : lex(text)) {
    if (t.kind != Tok::Atom) continue;
    bool seen = false;
    for (const auto& s : out) seen = seen || s == t.text;
    if (!seen) out.push_back(t.text);
  }
  return out;
}

std::string print_formula(const Formula& f, const Vocabulary& vocab) {
  std::string out;
  print_into(f, vocab, out);
  return out;
}

}  // namespace uakit
