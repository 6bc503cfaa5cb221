#ifndef CODELANG_VOCABULARY_HPP
#define CODELANG_VOCABULARY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codelang/comment_syntax.hpp"
#include "codelang/preprocess.hpp"
#include "codelang/token.hpp"

namespace codelang {

/// Per-language document frequencies of Alpha and Punct words.
struct WordFrequencyTable {
  std::string language;
  std::uint32_t total_files = 0;
  std::map<Token, std::uint32_t> doc_count;

  double frequency(const Token& word) const {
    auto it = doc_count.find(word);
    if (it == doc_count.end() || total_files == 0) return 0.0;
    return static_cast<double>(it->second) / total_files;
  }

  /// Adds one file's comment-free token stream.
  void add_file(TokenView stream) {
    std::vector<const Token*> words;
    for (const auto& t : stream)
      if (carries_text(t.kind)) words.push_back(&t);
    auto less = [](const Token* a, const Token* b) { return *a < *b; };
    auto same = [](const Token* a, const Token* b) { return *a == *b; };
    std::sort(words.begin(), words.end(), less);
    words.erase(std::unique(words.begin(), words.end(), same), words.end());
    for (const Token* t : words) ++doc_count[*t];
    ++total_files;
  }

  /// Order-independent merge of counts gathered on disjoint file subsets.
  void merge(const WordFrequencyTable& other) {
    for (const auto& [w, c] : other.doc_count) doc_count[w] += c;
    total_files += other.total_files;
  }
};

struct KeywordTable {
  std::string language;
  std::set<Token, std::less<>> keywords;
  double threshold = 0.01;
  /// Document counts of the keywords, kept for inspection dumps.
  std::map<Token, std::uint32_t> doc_count;
  std::uint32_t total_files = 0;

  bool contains(const Token& t) const { return keywords.count(t) != 0; }
};

/// Comment-strips and preprocesses every file of one language, counting in
/// how many files each word occurs.
template <typename Files>
WordFrequencyTable count_frequencies(const Files& files, const std::string& language,
                                     const CommentSyntax& syntax) {
  const CommentRules& rules = syntax.at(language);
  WordFrequencyTable table;
  table.language = language;
  for (const auto& raw : files) {
    const std::string_view bytes(raw);
    table.add_file(preprocess_text(strip_comments(bytes, rules)));
  }
  if (table.total_files == 0)
    throw Error("language '" + language + "' has no training files");
  return table;
}

inline KeywordTable build_keyword_table(const WordFrequencyTable& freqs, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw Error("keyword threshold must be in (0, 1], got " + std::to_string(threshold));
  KeywordTable table;
  table.language = freqs.language;
  table.threshold = threshold;
  table.total_files = freqs.total_files;
  for (const auto& [word, count] : freqs.doc_count) {
    if (freqs.total_files > 0 && static_cast<double>(count) / freqs.total_files >= threshold) {
      table.keywords.insert(word);
      table.doc_count.emplace(word, count);
    }
  }
  return table;
}

/// Keeps keywords literal and generalizes every other word to its class
/// identifier. Sentinels pass through; length and positions are preserved.
inline TokenStream lexicalize(TokenView stream, const KeywordTable& table) {
  TokenStream out;
  out.reserve(stream.size());
  for (const auto& t : stream) {
    if (!carries_text(t.kind) || table.contains(t)) {
      out.push_back(t);
    } else {
      out.push_back(Token::of(t.kind == TokenKind::Alpha ? TokenKind::AlphaIdentifier
                                                          : TokenKind::PunctIdentifier));
    }
  }
  return out;
}

/// Debug dump: `word TAB doc_count TAB frequency`, sorted by word.
inline void dump_keywords(std::ostream& os, const KeywordTable& table) {
  for (const auto& [word, count] : table.doc_count) {
    const double freq = table.total_files ? static_cast<double>(count) / table.total_files : 0.0;
    os << spell(word) << '\t' << count << '\t' << freq << '\n';
  }
}

}  // namespace codelang

#endif  // CODELANG_VOCABULARY_HPP
