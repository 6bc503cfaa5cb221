#ifndef CODELANG_TOKEN_HPP
#define CODELANG_TOKEN_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace codelang {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Token kinds. Alpha and Punct carry text; the sentinels never do, so no
/// file content can collide with them. The two identifier kinds only occur
/// in lexicalized streams and grammar patterns.
enum class TokenKind : std::uint8_t {
  Alpha = 0,
  Punct = 1,
  Number = 2,
  Newline = 3,
  Bof = 4,
  Eof = 5,
  AlphaIdentifier = 6,
  PunctIdentifier = 7,
};

inline constexpr bool carries_text(TokenKind k) noexcept {
  return k == TokenKind::Alpha || k == TokenKind::Punct;
}

inline constexpr bool is_sentinel(TokenKind k) noexcept {
  return k == TokenKind::Number || k == TokenKind::Newline ||
         k == TokenKind::Bof || k == TokenKind::Eof;
}

struct Token {
  TokenKind kind = TokenKind::Alpha;
  std::string text;

  static Token alpha(std::string t) { return {TokenKind::Alpha, std::move(t)}; }
  static Token punct(std::string t) { return {TokenKind::Punct, std::move(t)}; }
  static Token of(TokenKind k) { return {k, {}}; }

  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token& a, const Token& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.text.compare(b.text) <=> 0;
  }
};

using TokenStream = std::vector<Token>;
using TokenView = std::span<const Token>;

/// Reserved spelling of a non-literal kind, e.g. `__d__` for Number.
inline std::string_view reserved_spelling(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Number: return "__d__";
    case TokenKind::Newline: return "__NL__";
    case TokenKind::Bof: return "__BOF__";
    case TokenKind::Eof: return "__EOF__";
    case TokenKind::AlphaIdentifier: return "__a__";
    case TokenKind::PunctIdentifier: return "__s__";
    default: return {};
  }
}

inline std::string_view kind_name(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Alpha: return "alpha";
    case TokenKind::Punct: return "punct";
    case TokenKind::Number: return "number";
    case TokenKind::Newline: return "newline";
    case TokenKind::Bof: return "bof";
    case TokenKind::Eof: return "eof";
    case TokenKind::AlphaIdentifier: return "alpha_id";
    case TokenKind::PunctIdentifier: return "punct_id";
  }
  return {};
}

inline TokenKind kind_from_name(std::string_view name) {
  for (std::uint8_t i = 0; i <= static_cast<std::uint8_t>(TokenKind::PunctIdentifier); ++i) {
    auto k = static_cast<TokenKind>(i);
    if (kind_name(k) == name) return k;
  }
  throw Error("unknown token kind: " + std::string(name));
}

/// Debug spelling of a single token. Literal text that could be mistaken for
/// a reserved spelling (or starts with the escape character) gets a leading
/// backslash.
inline std::string spell(const Token& t) {
  if (!carries_text(t.kind)) return std::string(reserved_spelling(t.kind));
  bool needs_escape = !t.text.empty() && t.text.front() == '\\';
  for (std::uint8_t i = 2; i <= 7 && !needs_escape; ++i)
    needs_escape = t.text == reserved_spelling(static_cast<TokenKind>(i));
  return needs_escape ? "\\" + t.text : t.text;
}

/// Tokens joined by single spaces using `spell`.
inline std::string spell(TokenView tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += spell(t);
  }
  return out;
}

}  // namespace codelang

#endif  // CODELANG_TOKEN_HPP
