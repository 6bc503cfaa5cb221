#ifndef CODELANG_PIPELINE_HPP
#define CODELANG_PIPELINE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "codelang/comment_syntax.hpp"
#include "codelang/corpus.hpp"
#include "codelang/eval.hpp"
#include "codelang/grammar.hpp"
#include "codelang/maxent.hpp"
#include "codelang/preprocess.hpp"
#include "codelang/vocabulary.hpp"

namespace codelang {

struct PipelineConfig {
  double keyword_threshold = 0.01;
  double mi_threshold = 0.05;
  std::size_t n_max = kMaxNgram;
  TrainConfig maxent;
  double train_fraction = 0.5;
  std::uint64_t seed = 1;
  IngestOptions ingest;

  void validate() const {
    if (!(keyword_threshold > 0.0 && keyword_threshold <= 1.0))
      throw Error("keyword threshold must be in (0, 1]");
    if (!(mi_threshold >= 0.0)) throw Error("MI threshold must be nonnegative");
    if (n_max < 1 || n_max > kMaxNgram) throw Error("n-gram order must be 1, 2 or 3");
    if (!(maxent.sigma > 0.0)) throw Error("sigma must be positive");
    if (!(maxent.tol > 0.0)) throw Error("tolerance must be positive");
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw Error("train fraction must be in (0, 1)");
  }
};

struct TrainingMetadata {
  PipelineConfig config;
  std::string corpus_digest;
  std::size_t train_files = 0;
  std::size_t iterations = 0;
  bool converged = false;
  double final_penalized_ll = 0.0;
  double final_grad_max_norm = 0.0;
};

/// Everything needed to classify: comment syntax and keyword tables (kept
/// for provenance and inspection), the grammar and the weights.
struct Model {
  std::vector<std::string> languages;
  CommentSyntax comment_syntax;
  std::map<std::string, KeywordTable> keywords;
  Grammar grammar;
  MaxentModel maxent;
  TrainingMetadata meta;
};

struct TrainOutcome {
  Model model;
  std::vector<TrainTraceEntry> trace;
  std::vector<std::string> warnings;
  std::array<std::size_t, kMaxNgram + 1> grammar_by_length{};
};

/// Grammar construction followed by maxent training over the training side
/// of a corpus. Files are read from disk.
inline TrainOutcome train_model(const CorpusManifest& train_side, const CommentSyntax& syntax,
                                const PipelineConfig& config,
                                const std::function<void(const TrainTraceEntry&)>& on_iterate = {}) {
  config.validate();
  if (train_side.records.empty()) throw Error("training corpus is empty");

  TrainOutcome out;
  Model& model = out.model;
  model.languages = train_side.languages();
  std::map<std::string, std::size_t> label_of;
  for (std::size_t j = 0; j < model.languages.size(); ++j) {
    label_of[model.languages[j]] = j;
    model.comment_syntax.set(model.languages[j], syntax.at(model.languages[j]));
  }

  std::vector<std::string> contents;
  std::vector<std::size_t> labels;
  contents.reserve(train_side.records.size());
  for (const auto& r : train_side.records) {
    contents.push_back(read_file(r.path));
    labels.push_back(label_of.at(r.language));
  }

  // Keyword induction per language on comment-free text.
  std::vector<WordFrequencyTable> freqs(model.languages.size());
  for (std::size_t j = 0; j < model.languages.size(); ++j) freqs[j].language = model.languages[j];
  for (std::size_t k = 0; k < contents.size(); ++k) {
    const auto& rules = model.comment_syntax.at(model.languages[labels[k]]);
    freqs[labels[k]].add_file(preprocess_text(strip_comments(contents[k], rules)));
  }
  for (std::size_t j = 0; j < model.languages.size(); ++j) {
    if (freqs[j].total_files == 0) throw Error("language '" + model.languages[j] + "' has no training files");
    model.keywords.emplace(model.languages[j], build_keyword_table(freqs[j], config.keyword_threshold));
  }

  // Candidate n-grams over lexicalized full streams, pooled into one table.
  std::vector<TokenStream> streams;
  streams.reserve(contents.size());
  ProductionStats stats(model.languages.size());
  for (std::size_t k = 0; k < contents.size(); ++k) {
    streams.push_back(preprocess_text(contents[k]));
    const auto& table = model.keywords.at(model.languages[labels[k]]);
    stats.add_file(extract_candidate_keys(lexicalize(streams.back(), table), config.n_max), labels[k]);
  }
  contents.clear();

  model.grammar = select_grammar(stats, config.mi_threshold);
  if (model.grammar.empty())
    throw Error("no n-gram exceeds the MI threshold; lower --mi-threshold or add training data");
  out.grammar_by_length = model.grammar.count_by_length();

  TrainingSet data;
  data.languages = model.languages;
  data.samples.reserve(streams.size());
  for (std::size_t k = 0; k < streams.size(); ++k)
    data.samples.push_back({extract_features(streams[k], model.grammar), labels[k]});
  streams.clear();

  auto trained = train(data, model.grammar.size(), config.maxent, [&](const TrainTraceEntry& e) {
    out.trace.push_back(e);
    if (on_iterate) on_iterate(e);
  });
  if (!trained.warning.empty()) out.warnings.push_back(trained.warning);
  model.maxent = std::move(trained.model);

  model.meta.config = config;
  model.meta.corpus_digest = train_side.digest();
  model.meta.train_files = data.samples.size();
  model.meta.converged = trained.converged;
  if (!out.trace.empty()) {
    model.meta.iterations = out.trace.back().iteration;
    model.meta.final_penalized_ll = out.trace.back().penalized_ll;
    model.meta.final_grad_max_norm = out.trace.back().grad_max_norm;
  }
  return out;
}

struct ClassifyResult {
  std::vector<std::pair<std::string, double>> ranked;  // descending probability
  std::size_t matched_productions = 0;
  std::size_t best = 0;  // index into model languages

  bool no_evidence() const { return matched_productions == 0; }
};

inline ClassifyResult classify(const Model& model, std::string_view text) {
  const FeatureSet features = extract_features(preprocess_text(text), model.grammar);
  const Prediction p = predict(features, model.maxent);
  ClassifyResult r;
  r.matched_productions = features.size();
  r.best = p.best;
  std::vector<std::size_t> order(p.probabilities.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.probabilities[a] > p.probabilities[b]; });
  for (auto j : order) r.ranked.emplace_back(model.languages[j], p.probabilities[j]);
  return r;
}

inline nlohmann::json classify_result_to_json(const ClassifyResult& r, std::size_t top = 0) {
  nlohmann::json langs = nlohmann::json::array();
  const std::size_t n = top ? std::min(top, r.ranked.size()) : r.ranked.size();
  for (std::size_t k = 0; k < n; ++k)
    langs.push_back({{"language", r.ranked[k].first}, {"probability", r.ranked[k].second}});
  return {{"languages", langs}, {"matched_productions", r.matched_productions}, {"no_evidence", r.no_evidence()}};
}

struct LabeledText {
  std::string text;
  std::size_t label;
  std::string path;
};

/// Reads a test manifest, checking every label against the model.
inline std::vector<LabeledText> load_labeled(const Model& model, const CorpusManifest& test) {
  std::map<std::string, std::size_t> label_of;
  for (std::size_t j = 0; j < model.languages.size(); ++j) label_of[model.languages[j]] = j;
  std::set<std::string> unknown;
  for (const auto& r : test.records)
    if (!label_of.count(r.language)) unknown.insert(r.language);
  if (!unknown.empty()) {
    std::string msg = "test labels not in the model:";
    for (const auto& u : unknown) msg += " " + u;
    throw Error(msg);
  }
  std::vector<LabeledText> out;
  out.reserve(test.records.size());
  for (const auto& r : test.records) out.push_back({read_file(r.path), label_of.at(r.language), r.path});
  return out;
}

inline EvalReport evaluate_model(const Model& model, const std::vector<LabeledText>& samples) {
  return evaluate(model.languages, samples, [&](const LabeledText& s) {
    return predict(extract_features(preprocess_text(s.text), model.grammar), model.maxent).best;
  });
}

}  // namespace codelang

#endif  // CODELANG_PIPELINE_HPP
