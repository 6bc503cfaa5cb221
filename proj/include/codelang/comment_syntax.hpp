#ifndef CODELANG_COMMENT_SYNTAX_HPP
#define CODELANG_COMMENT_SYNTAX_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "codelang/token.hpp"

namespace codelang {

struct CommentRules {
  std::vector<std::string> line_markers;
  std::vector<std::pair<std::string, std::string>> block_pairs;

  friend bool operator==(const CommentRules&, const CommentRules&) = default;
};

/// Per-language comment markers. The only language-specific syntax the
/// toolkit knows about; it is used solely when counting keyword frequencies.
class CommentSyntax {
 public:
  CommentSyntax() = default;

  void set(const std::string& language, CommentRules rules) {
    for (const auto& m : rules.line_markers)
      if (m.empty()) throw Error("empty line comment marker for " + language);
    for (const auto& [open, close] : rules.block_pairs)
      if (open.empty() || close.empty()) throw Error("empty block comment marker for " + language);
    entries_[language] = std::move(rules);
  }

  bool contains(const std::string& language) const { return entries_.count(language) != 0; }

  const CommentRules& at(const std::string& language) const {
    auto it = entries_.find(language);
    if (it == entries_.end()) throw Error("no comment syntax entry for language '" + language + "'");
    return it->second;
  }

  const std::map<std::string, CommentRules>& entries() const { return entries_; }

  /// Entries of `other` override or extend this table.
  void merge(const CommentSyntax& other) {
    for (const auto& [lang, rules] : other.entries_) entries_[lang] = rules;
  }

  friend bool operator==(const CommentSyntax&, const CommentSyntax&) = default;

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [lang, rules] : entries_) {
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& [open, close] : rules.block_pairs) blocks.push_back({open, close});
      j[lang] = {{"line", rules.line_markers}, {"block", blocks}};
    }
    return j;
  }

  static CommentSyntax from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("comment syntax must be a JSON object keyed by language");
    CommentSyntax table;
    for (const auto& [lang, entry] : j.items()) {
      CommentRules rules;
      if (entry.contains("line")) rules.line_markers = entry.at("line").get<std::vector<std::string>>();
      if (entry.contains("block")) {
        for (const auto& pair : entry.at("block")) {
          if (!pair.is_array() || pair.size() != 2)
            throw Error("block comment pair for " + lang + " must be [open, close]");
          rules.block_pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
      }
      table.set(lang, std::move(rules));
    }
    return table;
  }

  static CommentSyntax load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open comment syntax file " + path);
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error("malformed comment syntax file " + path + ": " + e.what());
    }
  }

 private:
  std::map<std::string, CommentRules> entries_;
};

/// Comment markers for the 29 languages the toolkit ships defaults for.
inline CommentSyntax default_comment_syntax() {
  using P = std::pair<std::string, std::string>;
  const P c_block{"/*", "*/"};
  CommentSyntax s;
  s.set("Ada", {{"--"}, {}});
  s.set("BatchFile", {{"REM ", "rem ", "Rem ", "@REM ", "@rem ", "::"}, {}});
  s.set("BourneShellScript", {{"#"}, {}});
  s.set("Cpp", {{"//"}, {c_block}});
  s.set("CSharp", {{"//"}, {c_block}});
  s.set("COBOL", {{"*>"}, {}});
  s.set("CascadingStyleSheets", {{}, {c_block}});
  s.set("FORTRAN", {{"!"}, {}});
  s.set("Go", {{"//"}, {c_block}});
  s.set("HTML", {{}, {P{"<!--", "-->"}}});
  s.set("Haskell", {{"--"}, {P{"{-", "-}"}}});
  s.set("Java", {{"//"}, {c_block}});
  s.set("JavaScript", {{"//"}, {c_block}});
  s.set("LISP", {{";"}, {P{"#|", "|#"}}});
  s.set("LaTeX", {{"%"}, {}});
  s.set("MATLABScriptFile", {{"%"}, {P{"%{", "%}"}}});
  s.set("ObjectiveC", {{"//"}, {c_block}});
  s.set("PHP", {{"//", "#"}, {c_block}});
  s.set("Pascal", {{"//"}, {P{"{", "}"}, P{"(*", "*)"}}});
  s.set("Perl", {{"#"}, {P{"\n=pod", "\n=cut"}, P{"\n=head", "\n=cut"}}});
  s.set("Prolog", {{"%"}, {c_block}});
  s.set("Python", {{"#"}, {}});
  s.set("R", {{"#"}, {}});
  s.set("Ruby", {{"#"}, {P{"\n=begin", "\n=end"}}});
  s.set("SQL", {{"--"}, {c_block}});
  s.set("Scala", {{"//"}, {c_block}});
  s.set("Swift", {{"//"}, {c_block}});
  s.set("Tcl", {{"#"}, {}});
  s.set("VisualBasic", {{"'", "REM ", "Rem "}, {}});
  return s;
}

/// Replaces every comment span with a single newline. Line comments run up
/// to and including the line terminator; block comments run to the first
/// following close marker, or to end of input. At any position the longest
/// matching marker wins; line markers win length ties.
inline std::string strip_comments(std::string_view raw, const CommentRules& rules) {
  if (rules.line_markers.empty() && rules.block_pairs.empty()) return std::string(raw);

  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t best_len = 0;
    const std::string* close = nullptr;
    bool is_line = false;
    const std::string_view rest = raw.substr(i);
    for (const auto& m : rules.line_markers) {
      if (m.size() > best_len && rest.starts_with(m)) {
        best_len = m.size();
        is_line = true;
        close = nullptr;
      }
    }
    for (const auto& [open, cl] : rules.block_pairs) {
      if (open.size() > best_len && rest.starts_with(open)) {
        best_len = open.size();
        is_line = false;
        close = &cl;
      }
    }
    if (best_len == 0) {
      out.push_back(raw[i++]);
      continue;
    }

    std::size_t end;
    if (is_line) {
      end = raw.find_first_of("\r\n", i + best_len);
      if (end == std::string_view::npos) {
        end = raw.size();
      } else if (raw[end] == '\r' && end + 1 < raw.size() && raw[end + 1] == '\n') {
        end += 2;
      } else {
        end += 1;
      }
    } else {
      auto pos = raw.find(*close, i + best_len);
      end = pos == std::string_view::npos ? raw.size() : pos + close->size();
    }
    out.push_back('\n');
    i = end;
  }
  return out;
}

inline std::string strip_comments(std::string_view raw, const std::string& language,
                                  const CommentSyntax& syntax) {
  return strip_comments(raw, syntax.at(language));
}

}  // namespace codelang

#endif  // CODELANG_COMMENT_SYNTAX_HPP
