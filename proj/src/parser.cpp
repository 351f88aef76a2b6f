#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plaus/formula.hpp"

namespace plaus {

namespace {

enum class Tok {
  Ident,    // predicate or variable name
  KwForall,
  KwExists,
  KwUbiq,   // "U"
  LParen,
  RParen,
  Comma,
  Equals,
  Tilde,
  Amp,
  Pipe,
  Arrow,    // ->
  DArrow,   // <->
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwForall: return "'forall'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwUbiq: return "'U'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int line = line_, column = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, column});
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          word += text_[pos_];
          advance();
        }
        Tok kind = Tok::Ident;
        if (word == "forall") kind = Tok::KwForall;
        else if (word == "exists") kind = Tok::KwExists;
        else if (word == "U") kind = Tok::KwUbiq;
        out.push_back({kind, std::move(word), line, column});
        continue;
      }
      switch (c) {
        case '(': advance(); out.push_back({Tok::LParen, "(", line, column}); continue;
        case ')': advance(); out.push_back({Tok::RParen, ")", line, column}); continue;
        case ',': advance(); out.push_back({Tok::Comma, ",", line, column}); continue;
        case '=': advance(); out.push_back({Tok::Equals, "=", line, column}); continue;
        case '~': advance(); out.push_back({Tok::Tilde, "~", line, column}); continue;
        case '&': advance(); out.push_back({Tok::Amp, "&", line, column}); continue;
        case '|': advance(); out.push_back({Tok::Pipe, "|", line, column}); continue;
        case '-':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '>') {
            advance();
            out.push_back({Tok::Arrow, "->", line, column});
            continue;
          }
          throw ParseError("syntax error at " + pos(line, column) +
                               ": expected '->' after '-'",
                           line, column);
        case '<':
          advance();
          if (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
              text_[pos_ + 1] == '>') {
            advance();
            advance();
            out.push_back({Tok::DArrow, "<->", line, column});
            continue;
          }
          throw ParseError("syntax error at " + pos(line, column) +
                               ": expected '<->' after '<'",
                           line, column);
        default:
          throw ParseError("syntax error at " + pos(line, column) +
                               ": unexpected character '" + std::string(1, c) +
                               "'",
                           line, column);
      }
    }
  }

 private:
  static std::string pos(int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    if (peek().kind != Tok::End) {
      fail({Tok::Amp, Tok::Pipe, Tok::Arrow, Tok::DArrow, Tok::End});
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    const Token& t = peek();
    std::string msg = "syntax error at " + std::to_string(t.line) + ":" +
                      std::to_string(t.column) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += token_name(expected[i]);
    }
    msg += ", got ";
    msg += t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg, t.line, t.column);
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail({kind});
    return take();
  }

  std::string expect_variable() {
    if (peek().kind != Tok::Ident) fail({Tok::Ident});
    return take().text;
  }

  void note_arity(const Token& name, int arity) {
    auto [it, inserted] = arity_.emplace(name.text, arity);
    if (!inserted && it->second != arity) {
      throw ParseError("arity conflict at " + std::to_string(name.line) + ":" +
                           std::to_string(name.column) + ": predicate '" +
                           name.text + "' used with arity " +
                           std::to_string(arity) + " but previously with " +
                           std::to_string(it->second),
                       name.line, name.column);
    }
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    if (peek().kind == Tok::DArrow) {
      take();
      return Formula::iff(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (peek().kind == Tok::Arrow) {
      take();
      return Formula::implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek().kind == Tok::Pipe) {
      take();
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek().kind == Tok::Amp) {
      take();
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        take();
        return Formula::negation(parse_unary());
      case Tok::KwForall: {
        take();
        std::string var = expect_variable();
        return Formula::forall(std::move(var), parse_unary());
      }
      case Tok::KwExists: {
        take();
        std::string var = expect_variable();
        return Formula::exists(std::move(var), parse_unary());
      }
      case Tok::KwUbiq: {
        take();
        std::string var = expect_variable();
        return Formula::ubiquity(std::move(var), parse_unary());
      }
      default:
        return parse_primary();
    }
  }

  FormulaPtr parse_primary() {
    if (peek().kind == Tok::LParen) {
      take();
      FormulaPtr f = parse_iff();
      expect(Tok::RParen);
      return f;
    }
    if (peek().kind != Tok::Ident) {
      fail({Tok::Tilde, Tok::LParen, Tok::KwForall, Tok::KwExists, Tok::KwUbiq,
            Tok::Ident});
    }
    Token name = take();
    if (peek().kind == Tok::LParen) {
      take();
      std::vector<std::string> args;
      args.push_back(expect_variable());
      while (peek().kind == Tok::Comma) {
        take();
        args.push_back(expect_variable());
      }
      expect(Tok::RParen);
      note_arity(name, static_cast<int>(args.size()));
      return Formula::pred(name.text, std::move(args));
    }
    if (peek().kind == Tok::Equals) {
      take();
      std::string rhs = expect_variable();
      return Formula::equal(name.text, std::move(rhs));
    }
    fail({Tok::LParen, Tok::Equals});
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::map<std::string, int> arity_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  Parser parser(Lexer(text).run());
  return parser.run();
}

}  // namespace plaus
