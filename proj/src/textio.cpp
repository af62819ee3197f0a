#include "mcal/textio.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mcal {

std::string render_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

std::string render_elem(const MElem& x) {
  if (x.is_zero()) return "0";
  return "((" + render_word(x.a()) + "," + render_word(x.b()) + "),(" +
         render_word(x.c()) + "," + render_word(x.d()) + "))";
}

namespace {

enum class Tok { lparen, rparen, comma, dot, epsilon, number, end };

struct Token {
  Tok kind;
  std::uint32_t value = 0;  // for number
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind)
      throw SyntaxError("expected " + std::string(what) + " at position " +
                            std::to_string(cur_.pos),
                        cur_.pos);
    return take();
  }

private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char ch = text_[i_];
    switch (ch) {
      case '(': cur_.kind = Tok::lparen; ++i_; return;
      case ')': cur_.kind = Tok::rparen; ++i_; return;
      case ',': cur_.kind = Tok::comma; ++i_; return;
      case '.': cur_.kind = Tok::dot; ++i_; return;
      case 'e': cur_.kind = Tok::epsilon; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::uint64_t v = 0;
      while (i_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
        if (v > std::numeric_limits<std::uint32_t>::max())
          throw LetterOutOfRange("letter at position " + std::to_string(cur_.pos) +
                                 " is too large");
        ++i_;
      }
      cur_.kind = Tok::number;
      cur_.value = static_cast<std::uint32_t>(v);
      return;
    }
    throw SyntaxError("unexpected character '" + std::string(1, ch) +
                          "' at position " + std::to_string(i_),
                      i_);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token cur_;
};

std::uint32_t checked_letter(const Token& tok, const Alphabet& alphabet) {
  if (!alphabet.contains(tok.value))
    throw LetterOutOfRange("letter " + std::to_string(tok.value) +
                           " at position " + std::to_string(tok.pos) +
                           " is outside the alphabet");
  return tok.value;
}

Word read_word(Lexer& lex, const Alphabet& alphabet) {
  if (lex.peek().kind == Tok::epsilon) {
    lex.take();
    return Word{};
  }
  Word w;
  w.letters.push_back(checked_letter(lex.expect(Tok::number, "a letter or 'e'"),
                                     alphabet));
  while (lex.peek().kind == Tok::dot) {
    lex.take();
    w.letters.push_back(checked_letter(lex.expect(Tok::number, "a letter"),
                                       alphabet));
  }
  return w;
}

void expect_end(Lexer& lex) {
  if (lex.peek().kind != Tok::end)
    throw SyntaxError("trailing input at position " +
                          std::to_string(lex.peek().pos),
                      lex.peek().pos);
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Lexer lex(text);
  Word w = read_word(lex, alphabet);
  expect_end(lex);
  return w;
}

MElem parse_elem(std::string_view text, const Alphabet& alphabet) {
  Lexer lex(text);
  if (lex.peek().kind == Tok::number && lex.peek().value == 0) {
    lex.take();
    expect_end(lex);
    return MElem::zero();
  }
  lex.expect(Tok::lparen, "'('");
  lex.expect(Tok::lparen, "'('");
  Word a = read_word(lex, alphabet);
  lex.expect(Tok::comma, "','");
  Word b = read_word(lex, alphabet);
  lex.expect(Tok::rparen, "')'");
  lex.expect(Tok::comma, "','");
  lex.expect(Tok::lparen, "'('");
  Word c = read_word(lex, alphabet);
  lex.expect(Tok::comma, "','");
  Word d = read_word(lex, alphabet);
  lex.expect(Tok::rparen, "')'");
  lex.expect(Tok::rparen, "')'");
  expect_end(lex);
  return m_make(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace mcal
