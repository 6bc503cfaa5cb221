#ifndef CODELANG_PREPROCESS_HPP
#define CODELANG_PREPROCESS_HPP

#include <string>
#include <string_view>

#include "codelang/token.hpp"
#include "codelang/unicode.hpp"

namespace codelang {

/// Turns raw source bytes into the normalized token stream:
/// lowercase, split into alpha / digit / punctuation runs, every digit run
/// becomes a Number sentinel, every run of newlines (possibly interleaved
/// with other whitespace) becomes one Newline sentinel, and the whole thing
/// is wrapped in Bof/Eof.
inline TokenStream preprocess_text(std::string_view raw) {
  using unicode::CharClass;
  const auto cps = unicode::decode_utf8(raw);

  TokenStream out;
  out.reserve(cps.size() / 3 + 2);
  out.push_back(Token::of(TokenKind::Bof));

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    const CharClass cls = unicode::classify(cps[i]);
    std::size_t j = i + 1;
    while (j < n && unicode::classify(cps[j]) == cls) ++j;

    switch (cls) {
      case CharClass::Space:
        break;
      case CharClass::Newline:
        if (out.back().kind != TokenKind::Newline) out.push_back(Token::of(TokenKind::Newline));
        break;
      case CharClass::Digit:
        out.push_back(Token::of(TokenKind::Number));
        break;
      case CharClass::Letter:
      case CharClass::Punct: {
        std::string text;
        text.reserve(j - i);
        for (std::size_t k = i; k < j; ++k) unicode::append_utf8(text, unicode::to_lower(cps[k]));
        out.push_back({cls == CharClass::Letter ? TokenKind::Alpha : TokenKind::Punct, std::move(text)});
        break;
      }
    }
    i = j;
  }

  out.push_back(Token::of(TokenKind::Eof));
  return out;
}

/// Renders a preprocessed stream back to source text that preprocesses to the
/// same stream: numbers print as `0`, newlines as a line break, Bof/Eof are
/// dropped. Only meaningful for streams produced by `preprocess_text`.
inline std::string render_source(TokenView stream) {
  std::string out;
  for (const auto& t : stream) {
    switch (t.kind) {
      case TokenKind::Bof:
      case TokenKind::Eof:
        continue;
      case TokenKind::Number: out += '0'; break;
      case TokenKind::Newline: out += '\n'; break;
      default: out += t.text; break;
    }
    out += ' ';
  }
  return out;
}

}  // namespace codelang

#endif  // CODELANG_PREPROCESS_HPP
