#include "alcor/parser.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcor/errors.hpp"

namespace alcor {

namespace {

enum class Tok {
  Ident,
  Integer,
  KwTop,
  KwBot,
  KwExists,
  KwForall,
  KwInf,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semicolon,
  Colon,
  Dot,
  Amp,
  Pipe,
  Bang,
  Subsumes,  // <=
  DSub,      // ~<
  DSubAll,   // ~<all
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::uint64_t number = 0;
  int line = 1;
  int column = 1;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Integer: return "integer";
    case Tok::KwTop: return "'top'";
    case Tok::KwBot: return "'bot'";
    case Tok::KwExists: return "'exists'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwInf: return "'inf'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Subsumes: return "'<='";
    case Tok::DSub: return "'~<'";
    case Tok::DSubAll: return "'~<all'";
    case Tok::Minus: return "'-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool is_reserved(std::string_view word) {
  static constexpr std::array<std::string_view, 12> kReserved = {
      "vocab", "concepts", "roles", "individuals", "tbox", "dbox",
      "abox",  "top",      "bot",   "exists",      "forall", "inf"};
  for (auto r : kReserved)
    if (r == word) return true;
  return false;
}

// Weights above this are rejected so that cost sums stay well inside 64 bits.
constexpr std::uint64_t kMaxWeight = 1'000'000'000'000ULL;

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
          advance();
        t.text = std::string(text_.substr(start, pos_ - start));
        if (t.text == "top")
          t.kind = Tok::KwTop;
        else if (t.text == "bot")
          t.kind = Tok::KwBot;
        else if (t.text == "exists")
          t.kind = Tok::KwExists;
        else if (t.text == "forall")
          t.kind = Tok::KwForall;
        else if (t.text == "inf")
          t.kind = Tok::KwInf;
        else
          t.kind = Tok::Ident;
        out.push_back(std::move(t));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::uint64_t value = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
          if (value > kMaxWeight) throw ParseError("integer literal too large", t.line, t.column);
          advance();
        }
        t.kind = Tok::Integer;
        t.number = value;
        t.text = std::string(text_.substr(start, pos_ - start));
        out.push_back(std::move(t));
        continue;
      }
      switch (c) {
        case '{': single(t, Tok::LBrace, out); continue;
        case '}': single(t, Tok::RBrace, out); continue;
        case '(': single(t, Tok::LParen, out); continue;
        case ')': single(t, Tok::RParen, out); continue;
        case '[': single(t, Tok::LBracket, out); continue;
        case ']': single(t, Tok::RBracket, out); continue;
        case ',': single(t, Tok::Comma, out); continue;
        case ';': single(t, Tok::Semicolon, out); continue;
        case ':': single(t, Tok::Colon, out); continue;
        case '.': single(t, Tok::Dot, out); continue;
        case '&': single(t, Tok::Amp, out); continue;
        case '|': single(t, Tok::Pipe, out); continue;
        case '!': single(t, Tok::Bang, out); continue;
        case '-': single(t, Tok::Minus, out); continue;
        case '<':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '=') {
            advance();
            t.kind = Tok::Subsumes;
            out.push_back(t);
            continue;
          }
          throw ParseError("expected '<=' after '<'", t.line, t.column);
        case '~': {
          advance();
          if (pos_ >= text_.size() || text_[pos_] != '<')
            throw ParseError("expected '~<' after '~'", t.line, t.column);
          advance();
          // "~<all" only when "all" is a whole word; "~<allergy" must lex as
          // "~<" followed by the identifier.
          if (text_.substr(pos_, 3) == "all" &&
              (pos_ + 3 >= text_.size() ||
               (!std::isalnum(static_cast<unsigned char>(text_[pos_ + 3])) && text_[pos_ + 3] != '_'))) {
            advance();
            advance();
            advance();
            t.kind = Tok::DSubAll;
          } else {
            t.kind = Tok::DSub;
          }
          out.push_back(t);
          continue;
        }
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
      }
    }
  }

 private:
  void single(Token& t, Tok kind, std::vector<Token>& out) {
    advance();
    t.kind = kind;
    out.push_back(t);
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

  void skip_space_and_comments() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  ParsedKb document() {
    Vocabulary vocab = vocab_block();

    std::vector<WeightedGci> tbox;
    if (at_word("tbox")) tbox = tbox_block(vocab);

    bool has_dbox = at_word("dbox");
    std::vector<DboxEntry> dbox;
    if (has_dbox) dbox = dbox_block(vocab);

    std::vector<WeightedAssertion> abox;
    if (at_word("abox")) abox = abox_block(vocab);

    expect(Tok::End);

    if (has_dbox) {
      if (first_finite_weight_)
        fail("finite weights are not allowed on tbox/abox statements of a defeasible knowledge base",
             *first_finite_weight_);
      DefeasibleKb kb{std::move(vocab), {}, std::move(dbox), {}};
      for (auto& t : tbox) kb.tbox.push_back(std::move(t.gci));
      for (auto& a : abox) kb.abox.push_back(std::move(a.assertion));
      kb.validate();
      return kb;
    }
    WeightedKb kb{std::move(vocab), std::move(tbox), std::move(abox)};
    kb.validate();
    return kb;
  }

  ConceptExpr bare_concept(const Vocabulary& vocab) {
    vocab_ = &vocab;
    ConceptExpr c = concept_expr();
    expect(Tok::End);
    return c;
  }

  Statement bare_statement(const Vocabulary& vocab) {
    vocab_ = &vocab;
    Statement s = statement();
    expect(Tok::End);
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      fail(std::string("expected ") + token_name(kind) + ", found " + token_name(t.kind), t);
    return next();
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }

  bool at_word(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  void expect_word(std::string_view word) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != word)
      fail("expected '" + std::string(word) + "', found " + token_name(t.kind), t);
    next();
  }

  // --- vocabulary ---------------------------------------------------------

  std::vector<std::string> name_list() {
    std::vector<std::string> names;
    if (peek().kind != Tok::Ident) return names;  // empty list
    for (;;) {
      const Token& t = expect(Tok::Ident);
      if (is_reserved(t.text)) fail("'" + t.text + "' is a reserved word", t);
      names.push_back(t.text);
      if (!accept(Tok::Comma)) return names;
    }
  }

  Vocabulary vocab_block() {
    const Token& head = peek();
    expect_word("vocab");
    expect(Tok::LBrace);
    expect_word("concepts");
    expect(Tok::Colon);
    auto concepts = name_list();
    expect(Tok::Semicolon);
    expect_word("roles");
    expect(Tok::Colon);
    auto roles = name_list();
    expect(Tok::Semicolon);
    expect_word("individuals");
    expect(Tok::Colon);
    auto individuals = name_list();
    expect(Tok::Semicolon);
    expect(Tok::RBrace);
    try {
      return Vocabulary(std::move(concepts), std::move(roles), std::move(individuals));
    } catch (const ValidationError& e) {
      fail(e.what(), head);
    }
  }

  // --- weights -------------------------------------------------------------

  std::optional<ExtendedNat> weight_annotation() {
    if (!accept(Tok::LBracket)) return std::nullopt;
    const Token& t = peek();
    ExtendedNat w = 0;
    if (t.kind == Tok::KwInf) {
      next();
      w = ExtendedNat::infinity();
    } else if (t.kind == Tok::Integer) {
      next();
      w = ExtendedNat(t.number);
    } else if (t.kind == Tok::Minus) {
      fail("negative weights are not allowed", t);
    } else {
      fail(std::string("expected integer or 'inf', found ") + token_name(t.kind), t);
    }
    expect(Tok::RBracket);
    return w;
  }

  // --- statement blocks ----------------------------------------------------

  std::vector<WeightedGci> tbox_block(const Vocabulary& vocab) {
    vocab_ = &vocab;
    expect_word("tbox");
    expect(Tok::LBrace);
    std::vector<WeightedGci> out;
    while (!accept(Tok::RBrace)) {
      ConceptExpr lhs = concept_expr();
      expect(Tok::Subsumes);
      ConceptExpr rhs = concept_expr();
      const Token& wt = peek();
      auto w = weight_annotation();
      expect(Tok::Semicolon);
      if (w && w->is_finite() && !first_finite_weight_) first_finite_weight_ = wt;
      out.push_back({Gci{std::move(lhs), std::move(rhs)}, w.value_or(ExtendedNat::infinity())});
    }
    return out;
  }

  std::vector<DboxEntry> dbox_block(const Vocabulary& vocab) {
    vocab_ = &vocab;
    expect_word("dbox");
    expect(Tok::LBrace);
    std::vector<DboxEntry> out;
    while (!accept(Tok::RBrace)) {
      ConceptExpr lhs = concept_expr();
      const Token& op = peek();
      bool quantified = false;
      if (accept(Tok::DSub)) {
        quantified = false;
      } else if (accept(Tok::DSubAll)) {
        quantified = true;
      } else {
        fail(std::string("expected '~<' or '~<all', found ") + token_name(op.kind), op);
      }
      ConceptExpr rhs = concept_expr();
      std::optional<std::uint64_t> impact;
      if (peek().kind == Tok::LBracket) {
        const Token& wt = peek(1);
        auto w = weight_annotation();
        if (w->is_infinite()) fail("impact factors must be finite", wt);
        if (w->value() == 0) fail("impact factors must be positive", wt);
        impact = w->value();
      }
      expect(Tok::Semicolon);
      DboxEntry entry{std::move(lhs), std::move(rhs), quantified, impact};
      for (const auto& e : out)
        if (e.same_statement(entry))
          fail("duplicate defeasible statement '" + to_string(entry) + "'", op);
      out.push_back(std::move(entry));
    }
    return out;
  }

  std::vector<WeightedAssertion> abox_block(const Vocabulary& vocab) {
    vocab_ = &vocab;
    expect_word("abox");
    expect(Tok::LBrace);
    std::vector<WeightedAssertion> out;
    while (!accept(Tok::RBrace)) {
      Assertion a = assertion();
      const Token& wt = peek();
      auto w = weight_annotation();
      expect(Tok::Semicolon);
      if (w && w->is_finite() && !first_finite_weight_) first_finite_weight_ = wt;
      out.push_back({std::move(a), w.value_or(ExtendedNat::infinity())});
    }
    return out;
  }

  Assertion assertion() {
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma) {
      expect(Tok::LParen);
      std::string subject = individual_name();
      expect(Tok::Comma);
      std::string object = individual_name();
      expect(Tok::RParen);
      expect(Tok::Colon);
      std::string role = role_name();
      return RoleAssertion{std::move(subject), std::move(object), std::move(role)};
    }
    std::string individual = individual_name();
    expect(Tok::Colon);
    ConceptExpr c = concept_expr();
    return ConceptAssertion{std::move(individual), std::move(c)};
  }

  Statement statement() {
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma)
      return std::get<RoleAssertion>(assertion());
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Colon &&
        vocab_->individual_index(peek().text))
      return std::get<ConceptAssertion>(assertion());
    ConceptExpr lhs = concept_expr();
    const Token& op = peek();
    if (accept(Tok::Subsumes)) return Gci{std::move(lhs), concept_expr()};
    if (accept(Tok::DSub)) return Dci{std::move(lhs), concept_expr()};
    if (accept(Tok::DSubAll)) return Qdci{std::move(lhs), concept_expr()};
    fail(std::string("expected '<=', '~<', '~<all', or ':', found ") + token_name(op.kind), op);
  }

  // --- names with kind checks ---------------------------------------------

  std::string individual_name() {
    const Token& t = expect(Tok::Ident);
    if (!vocab_->individual_index(t.text))
      fail("undeclared individual name '" + t.text + "'", t);
    return t.text;
  }

  std::string role_name() {
    const Token& t = expect(Tok::Ident);
    if (!vocab_->role_index(t.text)) fail("undeclared role name '" + t.text + "'", t);
    return t.text;
  }

  // --- concepts -------------------------------------------------------------

  static constexpr int kMaxDepth = 400;

  ConceptExpr concept_expr() {
    DepthGuard guard(this);
    ConceptExpr c = conj_expr();
    while (accept(Tok::Pipe)) c = ConceptExpr::disjunction(std::move(c), conj_expr());
    return c;
  }

  ConceptExpr conj_expr() {
    DepthGuard guard(this);
    ConceptExpr c = unary_expr();
    while (accept(Tok::Amp)) c = ConceptExpr::conjunction(std::move(c), unary_expr());
    return c;
  }

  ConceptExpr unary_expr() {
    DepthGuard guard(this);
    if (accept(Tok::Bang)) return ConceptExpr::negation(unary_expr());
    if (accept(Tok::KwExists)) {
      std::string role = role_name();
      expect(Tok::Dot);
      return ConceptExpr::exists(std::move(role), unary_expr());
    }
    if (accept(Tok::KwForall)) {
      std::string role = role_name();
      expect(Tok::Dot);
      return ConceptExpr::forall(std::move(role), unary_expr());
    }
    return atom_expr();
  }

  ConceptExpr atom_expr() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwTop:
        next();
        return ConceptExpr::top();
      case Tok::KwBot:
        next();
        return ConceptExpr::bot();
      case Tok::Ident: {
        next();
        if (!vocab_->concept_index(t.text)) fail("undeclared concept name '" + t.text + "'", t);
        return ConceptExpr::atom(t.text);
      }
      case Tok::LBrace: {
        next();
        std::string individual = individual_name();
        expect(Tok::RBrace);
        return ConceptExpr::nominal(std::move(individual));
      }
      case Tok::LParen: {
        next();
        ConceptExpr c = concept_expr();
        expect(Tok::RParen);
        return c;
      }
      default:
        fail(std::string("expected a concept, found ") + token_name(t.kind), t);
    }
  }

  struct DepthGuard {
    explicit DepthGuard(Parser* p) : parser(p) {
      if (++parser->depth_ > kMaxDepth)
        parser->fail("concept nesting too deep", parser->peek());
    }
    ~DepthGuard() { --parser->depth_; }
    Parser* parser;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  const Vocabulary* vocab_ = nullptr;
  std::optional<Token> first_finite_weight_;
};

}  // namespace

ParsedKb parse_document(std::string_view text) { return Parser(text).document(); }

ConceptExpr parse_concept(std::string_view text, const Vocabulary& vocab) {
  return Parser(text).bare_concept(vocab);
}

Statement parse_statement(std::string_view text, const Vocabulary& vocab) {
  return Parser(text).bare_statement(vocab);
}

}  // namespace alcor
