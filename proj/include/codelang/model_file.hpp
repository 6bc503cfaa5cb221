#ifndef CODELANG_MODEL_FILE_HPP
#define CODELANG_MODEL_FILE_HPP

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "codelang/corpus.hpp"
#include "codelang/pipeline.hpp"

namespace codelang {

inline constexpr int kModelFormatVersion = 1;
inline constexpr std::string_view kModelFormatName = "codelang-model";

/// Describes the tokenizer behaviour a model was trained with; a model is
/// only valid with an identical tokenizer.
inline std::string preprocess_config_digest() {
  return sha256_hex(
      "tokenizer=v1;lowercase=simple-latin-greek-cyrillic;classes=letters+underscore|ascii-digits|"
      "newline-runs|punct;sentinels=number,newline,bof,eof");
}

namespace detail {

inline nlohmann::json token_to_json(const Token& t) {
  if (carries_text(t.kind)) return {kind_name(t.kind), t.text};
  return {kind_name(t.kind)};
}

inline Token token_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2) throw Error("malformed token in model file");
  Token t{kind_from_name(j[0].get<std::string>()), {}};
  if (carries_text(t.kind)) {
    if (j.size() != 2) throw Error("literal token without text in model file");
    t.text = j[1].get<std::string>();
  }
  return t;
}

}  // namespace detail

inline nlohmann::json model_to_json(const Model& m) {
  using nlohmann::json;
  json keywords = json::object();
  for (const auto& [lang, table] : m.keywords) {
    json words = json::array();
    for (const auto& [w, c] : table.doc_count) words.push_back({detail::token_to_json(w), c});
    keywords[lang] = {{"total_files", table.total_files}, {"threshold", table.threshold}, {"words", words}};
  }
  json grammar = json::array();
  for (const auto& p : m.grammar.productions()) {
    json pat = json::array();
    for (const auto& t : p.pattern) pat.push_back(detail::token_to_json(t));
    grammar.push_back({{"pattern", pat}, {"mi", p.mi_score}});
  }
  json weights = json::array();
  const std::size_t L = m.maxent.num_languages();
  for (std::size_t i = 0; i < m.maxent.num_features; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < L; ++j) row.push_back(m.maxent.weight(i, j));
    weights.push_back(std::move(row));
  }
  const auto& c = m.meta.config;
  json training = {{"keyword_threshold", c.keyword_threshold},
                   {"mi_threshold", c.mi_threshold},
                   {"n_max", c.n_max},
                   {"sigma", c.maxent.sigma},
                   {"tol", c.maxent.tol},
                   {"max_iters", c.maxent.max_iters},
                   {"history", c.maxent.history},
                   {"train_fraction", c.train_fraction},
                   {"seed", c.seed},
                   {"min_bytes", c.ingest.min_bytes},
                   {"max_bytes", c.ingest.max_bytes},
                   {"corpus_digest", m.meta.corpus_digest},
                   {"train_files", m.meta.train_files},
                   {"iterations", m.meta.iterations},
                   {"converged", m.meta.converged},
                   {"final_penalized_ll", m.meta.final_penalized_ll},
                   {"final_grad_max_norm", m.meta.final_grad_max_norm}};
  return {{"format", kModelFormatName},
          {"version", kModelFormatVersion},
          {"preprocess_digest", preprocess_config_digest()},
          {"comment_syntax", m.comment_syntax.to_json()},
          {"languages", m.languages},
          {"keywords", keywords},
          {"grammar", grammar},
          {"sigma", m.maxent.sigma},
          {"weights", weights},
          {"training", training}};
}

inline Model model_from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != kModelFormatName) throw Error("not a codelang model file");
    const int version = j.at("version").get<int>();
    if (version != kModelFormatVersion)
      throw Error("unsupported model format version " + std::to_string(version));
    if (j.at("preprocess_digest").get<std::string>() != preprocess_config_digest())
      throw Error("model was built with a different tokenizer");

    Model m;
    m.languages = j.at("languages").get<std::vector<std::string>>();
    m.comment_syntax = CommentSyntax::from_json(j.at("comment_syntax"));
    for (const auto& [lang, kt] : j.at("keywords").items()) {
      KeywordTable table;
      table.language = lang;
      table.total_files = kt.at("total_files").get<std::uint32_t>();
      table.threshold = kt.at("threshold").get<double>();
      for (const auto& w : kt.at("words")) {
        Token t = detail::token_from_json(w.at(0));
        table.doc_count.emplace(t, w.at(1).get<std::uint32_t>());
        table.keywords.insert(std::move(t));
      }
      m.keywords.emplace(lang, std::move(table));
    }

    std::vector<Production> prods;
    for (const auto& p : j.at("grammar")) {
      Production prod;
      for (const auto& t : p.at("pattern")) prod.pattern.push_back(detail::token_from_json(t));
      prod.mi_score = p.at("mi").get<double>();
      prods.push_back(std::move(prod));
    }
    m.grammar = Grammar(std::move(prods));

    m.maxent.languages = m.languages;
    m.maxent.sigma = j.at("sigma").get<double>();
    m.maxent.num_features = m.grammar.size();
    const auto& w = j.at("weights");
    if (w.size() != m.grammar.size()) throw Error("weight rows do not match grammar size");
    m.maxent.weights.reserve(m.grammar.size() * m.languages.size());
    for (const auto& row : w) {
      if (row.size() != m.languages.size()) throw Error("weight row does not match language count");
      for (const auto& v : row) m.maxent.weights.push_back(v.get<double>());
    }
    m.maxent.validate();

    const auto& t = j.at("training");
    auto& c = m.meta.config;
    c.keyword_threshold = t.at("keyword_threshold").get<double>();
    c.mi_threshold = t.at("mi_threshold").get<double>();
    c.n_max = t.at("n_max").get<std::size_t>();
    c.maxent.sigma = t.at("sigma").get<double>();
    c.maxent.tol = t.at("tol").get<double>();
    c.maxent.max_iters = t.at("max_iters").get<std::size_t>();
    c.maxent.history = t.at("history").get<std::size_t>();
    c.train_fraction = t.at("train_fraction").get<double>();
    c.seed = t.at("seed").get<std::uint64_t>();
    c.ingest.min_bytes = t.at("min_bytes").get<std::uint64_t>();
    c.ingest.max_bytes = t.at("max_bytes").get<std::uint64_t>();
    m.meta.corpus_digest = t.at("corpus_digest").get<std::string>();
    m.meta.train_files = t.at("train_files").get<std::size_t>();
    m.meta.iterations = t.at("iterations").get<std::size_t>();
    m.meta.converged = t.at("converged").get<bool>();
    m.meta.final_penalized_ll = t.at("final_penalized_ll").get<double>();
    m.meta.final_grad_max_norm = t.at("final_grad_max_norm").get<double>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("corrupt model file: ") + e.what());
  }
}

inline void save_model(const Model& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write model file " + path.string());
  out << model_to_json(m).dump() << '\n';
  if (!out) throw Error("error while writing model file " + path.string());
}

inline Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("corrupt model file " + path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

}  // namespace codelang

#endif  // CODELANG_MODEL_FILE_HPP
