#ifndef CODELANG_GRAMMAR_HPP
#define CODELANG_GRAMMAR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codelang/token.hpp"

namespace codelang {

inline constexpr std::size_t kMaxNgram = 3;

/// A sequence of 1..3 pattern tokens. Alpha/Punct entries are literals; the
/// identifier kinds are class wildcards.
using Pattern = std::vector<Token>;

/// Sorted, duplicate-free production ids.
using FeatureSet = std::vector<std::uint32_t>;

struct Production {
  Pattern pattern;
  double mi_score = 0.0;

  friend bool operator==(const Production&, const Production&) = default;
};

namespace pattern_key {

// Token text is always valid UTF-8, so 0xFF can terminate each element.
inline constexpr char kSep = '\xff';

inline void append(std::string& key, TokenKind kind, std::string_view text) {
  key.push_back(static_cast<char>(kind));
  key.append(text);
  key.push_back(kSep);
}

inline std::string encode(std::span<const Token> tokens) {
  std::string key;
  for (const auto& t : tokens) append(key, t.kind, t.text);
  return key;
}

inline Pattern decode(std::string_view key) {
  Pattern p;
  std::size_t i = 0;
  while (i < key.size()) {
    auto kind = static_cast<TokenKind>(static_cast<unsigned char>(key[i]));
    auto end = key.find(kSep, i + 1);
    p.push_back({kind, std::string(key.substr(i + 1, end - i - 1))});
    i = end + 1;
  }
  return p;
}

}  // namespace pattern_key

/// Set of all contiguous windows of length 1..n_max, as encoded keys.
inline std::unordered_set<std::string> extract_candidate_keys(TokenView stream,
                                                              std::size_t n_max = kMaxNgram) {
  std::unordered_set<std::string> out;
  for (std::size_t x = 0; x < stream.size(); ++x) {
    std::string key;
    for (std::size_t n = 1; n <= n_max && x + n <= stream.size(); ++n) {
      const Token& t = stream[x + n - 1];
      pattern_key::append(key, t.kind, t.text);
      out.insert(key);
    }
  }
  return out;
}

/// Set of all contiguous windows of length 1..n_max over a lexicalized stream.
inline std::set<Pattern> extract_candidates(TokenView stream, std::size_t n_max = kMaxNgram) {
  std::set<Pattern> out;
  for (const auto& key : extract_candidate_keys(stream, n_max)) out.insert(pattern_key::decode(key));
  return out;
}

/// Presence counts of candidate patterns per language: the presence/absence
/// by language contingency table behind the mutual information score.
class ProductionStats {
 public:
  explicit ProductionStats(std::size_t num_languages) : file_count_(num_languages, 0) {}

  std::size_t num_languages() const { return file_count_.size(); }
  std::span<const std::uint32_t> file_count() const { return file_count_; }
  std::uint64_t total_files() const {
    std::uint64_t n = 0;
    for (auto c : file_count_) n += c;
    return n;
  }

  template <typename Keys>
  void add_file(const Keys& candidate_keys, std::size_t label) {
    if (label >= file_count_.size()) throw Error("label index out of range");
    ++file_count_[label];
    for (const auto& key : candidate_keys) {
      auto [it, inserted] = present_.try_emplace(key);
      if (inserted) it->second.assign(file_count_.size(), 0);
      ++it->second[label];
    }
  }

  void merge(const ProductionStats& other) {
    if (other.num_languages() != num_languages()) throw Error("language count mismatch in merge");
    for (std::size_t j = 0; j < file_count_.size(); ++j) file_count_[j] += other.file_count_[j];
    for (const auto& [key, counts] : other.present_) {
      auto [it, inserted] = present_.try_emplace(key);
      if (inserted) it->second.assign(file_count_.size(), 0);
      for (std::size_t j = 0; j < counts.size(); ++j) it->second[j] += counts[j];
    }
  }

  const std::unordered_map<std::string, std::vector<std::uint32_t>>& present() const { return present_; }

  std::span<const std::uint32_t> present_count(const Pattern& p) const {
    auto it = present_.find(pattern_key::encode(p));
    if (it == present_.end()) return {};
    return it->second;
  }

  bool empty() const { return present_.empty(); }

 private:
  std::vector<std::uint32_t> file_count_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> present_;
};

/// Mutual information (nats) between a binary presence feature and the
/// language label, from per-language presence counts and file counts.
/// Empty cells contribute zero.
inline double mutual_information(std::span<const std::uint32_t> present,
                                 std::span<const std::uint32_t> file_count) {
  if (present.size() != file_count.size()) throw Error("contingency table shape mismatch");
  double total = 0.0, present_total = 0.0;
  for (std::size_t j = 0; j < file_count.size(); ++j) {
    total += file_count[j];
    present_total += present[j];
  }
  if (total <= 0.0) throw Error("mutual information over an empty training set");

  const double p_present = present_total / total;
  const double p_absent = (total - present_total) / total;
  double mi = 0.0;
  for (std::size_t j = 0; j < file_count.size(); ++j) {
    if (file_count[j] == 0) continue;
    const double p_lang = file_count[j] / total;
    const double joint_present = present[j] / total;
    const double joint_absent = (file_count[j] - present[j]) / total;
    if (joint_present > 0.0) mi += joint_present * std::log(joint_present / (p_present * p_lang));
    if (joint_absent > 0.0) mi += joint_absent * std::log(joint_absent / (p_absent * p_lang));
  }
  // Rounding can leave a tiny negative value for independent features.
  return std::max(mi, 0.0);
}

/// The selected set of productions plus a hash index from encoded pattern to
/// production id. Ids follow the stored order.
class Grammar {
 public:
  Grammar() = default;

  explicit Grammar(std::vector<Production> productions) : productions_(std::move(productions)) {
    index_.reserve(productions_.size());
    for (std::size_t id = 0; id < productions_.size(); ++id) {
      const auto& p = productions_[id].pattern;
      if (p.empty() || p.size() > kMaxNgram) throw Error("production length must be 1..3");
      if (productions_[id].mi_score < 0.0) throw Error("negative mutual information score");
      max_length_ = std::max(max_length_, p.size());
      if (!index_.emplace(pattern_key::encode(p), static_cast<std::uint32_t>(id)).second)
        throw Error("duplicate production " + spell(p));
    }
  }

  std::size_t size() const { return productions_.size(); }
  bool empty() const { return productions_.empty(); }
  std::size_t max_length() const { return max_length_; }
  const std::vector<Production>& productions() const { return productions_; }
  const Production& operator[](std::size_t id) const { return productions_.at(id); }

  std::optional<std::uint32_t> find(const Pattern& p) const { return find_key(pattern_key::encode(p)); }

  std::optional<std::uint32_t> find_key(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Number of productions of each length 1..3 (index 0 unused).
  std::array<std::size_t, kMaxNgram + 1> count_by_length() const {
    std::array<std::size_t, kMaxNgram + 1> counts{};
    for (const auto& p : productions_) ++counts[p.pattern.size()];
    return counts;
  }

 private:
  std::vector<Production> productions_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::size_t max_length_ = 0;
};

/// Keeps every candidate whose MI strictly exceeds the threshold, ordered by
/// descending MI and then by pattern.
inline Grammar select_grammar(const ProductionStats& stats, double mi_threshold) {
  if (!(mi_threshold >= 0.0)) throw Error("MI threshold must be nonnegative");
  std::vector<Production> selected;
  for (const auto& [key, present] : stats.present()) {
    const double mi = mutual_information(present, stats.file_count());
    if (mi > mi_threshold) selected.push_back({pattern_key::decode(key), mi});
  }
  std::sort(selected.begin(), selected.end(), [](const Production& a, const Production& b) {
    if (a.mi_score != b.mi_score) return a.mi_score > b.mi_score;
    return a.pattern < b.pattern;
  });
  return Grammar(std::move(selected));
}

inline bool token_matches(const Token& pattern, const Token& token) {
  switch (pattern.kind) {
    case TokenKind::AlphaIdentifier: return token.kind == TokenKind::Alpha;
    case TokenKind::PunctIdentifier: return token.kind == TokenKind::Punct;
    case TokenKind::Alpha:
    case TokenKind::Punct: return token.kind == pattern.kind && token.text == pattern.text;
    default: return token.kind == pattern.kind;
  }
}

/// True when every pattern token matches the stream token at its offset.
inline bool production_matches_at(const Pattern& pattern, TokenView stream, std::size_t position) {
  if (position + pattern.size() > stream.size()) throw Error("pattern extends past end of stream");
  for (std::size_t k = 0; k < pattern.size(); ++k)
    if (!token_matches(pattern[k], stream[position + k])) return false;
  return true;
}

/// Ids of all grammar productions occurring anywhere in a preprocessed
/// stream. Each window is expanded into its generalizations (every Alpha or
/// Punct token either literal or as its class wildcard) and probed against
/// the grammar index.
inline FeatureSet extract_features(TokenView stream, const Grammar& grammar) {
  FeatureSet out;
  if (grammar.empty()) return out;
  const std::size_t n_max = grammar.max_length();
  std::string key;
  for (std::size_t x = 0; x < stream.size(); ++x) {
    for (std::size_t n = 1; n <= n_max && x + n <= stream.size(); ++n) {
      unsigned generalizable = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (carries_text(stream[x + k].kind)) generalizable |= 1u << k;
      // Enumerate submasks of the generalizable positions.
      unsigned mask = generalizable;
      while (true) {
        key.clear();
        for (std::size_t k = 0; k < n; ++k) {
          const Token& t = stream[x + k];
          if (mask & (1u << k)) {
            pattern_key::append(key, t.kind == TokenKind::Alpha ? TokenKind::AlphaIdentifier
                                                                : TokenKind::PunctIdentifier, {});
          } else {
            pattern_key::append(key, t.kind, t.text);
          }
        }
        if (auto id = grammar.find_key(key)) out.push_back(*id);
        if (mask == 0) break;
        mask = (mask - 1) & generalizable;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Debug dump: `mi_score TAB pattern`, in grammar order.
inline void dump_grammar(std::ostream& os, const Grammar& grammar) {
  for (const auto& p : grammar.productions()) os << p.mi_score << '\t' << spell(p.pattern) << '\n';
}

}  // namespace codelang

#endif  // CODELANG_GRAMMAR_HPP
