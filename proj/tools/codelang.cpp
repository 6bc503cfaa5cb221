// codelang: train, evaluate and run source-code language classifiers.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codelang/comment_syntax.hpp"
#include "codelang/corpus.hpp"
#include "codelang/eval.hpp"
#include "codelang/model_file.hpp"
#include "codelang/pipeline.hpp"
#include "codelang/preprocess.hpp"
#include "codelang/service.hpp"

namespace {

using namespace codelang;

constexpr int kExitError = 1;
constexpr int kExitGate = 3;
constexpr const char* kModelEnv = "CODELANG_MODEL";

struct CorpusArgs {
  std::string corpus_dir;
  std::vector<std::string> roots;  // LANG=DIR
  std::string manifest;
  IngestOptions ingest;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_dir, "Directory with one subdirectory per language");
    cmd->add_option("--root", roots, "LANG=DIR corpus root (repeatable)");
    cmd->add_option("--manifest", manifest, "Manifest file: repo_id TAB language TAB path");
    cmd->add_option("--min-bytes", ingest.min_bytes, "Skip files smaller than this")->capture_default_str();
    cmd->add_option("--max-bytes", ingest.max_bytes, "Skip files larger than this")->capture_default_str();
  }

  CorpusManifest load() const {
    const int sources = !corpus_dir.empty() + !roots.empty() + !manifest.empty();
    if (sources != 1) throw Error("give exactly one of --corpus, --root or --manifest");
    if (!manifest.empty()) return ingest_manifest(manifest, ingest);
    std::vector<CorpusRoot> list;
    if (!corpus_dir.empty()) {
      list = roots_from_directory(corpus_dir);
    } else {
      for (const auto& spec : roots) {
        auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
          throw Error("--root expects LANG=DIR, got '" + spec + "'");
        list.push_back({spec.substr(eq + 1), spec.substr(0, eq)});
      }
    }
    return codelang::ingest(list, ingest);
  }
};

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

std::string resolve_model_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kModelEnv); env && *env) return env;
  throw Error(std::string("no model given; pass --model or set ") + kModelEnv);
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

ReportFormat parse_format(const std::string& f) { return f == "json" ? ReportFormat::Json : ReportFormat::Text; }

// ---------------------------------------------------------------- train

struct TrainArgs {
  CorpusArgs corpus;
  PipelineConfig config;
  std::string comment_syntax;
  std::string out;
  std::string write_split;
  bool trace = false;
};

int run_train(const TrainArgs& a) {
  PipelineConfig config = a.config;
  config.ingest = a.corpus.ingest;
  config.validate();

  CommentSyntax syntax = default_comment_syntax();
  if (!a.comment_syntax.empty()) syntax.merge(CommentSyntax::load(a.comment_syntax));

  CorpusManifest corpus = a.corpus.load();
  print_warnings(corpus.warnings);
  for (const auto& lang : corpus.languages())
    if (!syntax.contains(lang))
      throw Error("no comment syntax for language '" + lang + "'; add it with --comment-syntax");

  SplitResult parts = split(corpus, config.train_fraction, config.seed);
  print_warnings(parts.warnings);
  if (!a.write_split.empty()) {
    fs::create_directories(a.write_split);
    std::ofstream tr(fs::path(a.write_split) / "train.tsv"), te(fs::path(a.write_split) / "test.tsv");
    write_manifest(tr, parts.train);
    write_manifest(te, parts.test);
  }
  std::cerr << "corpus: " << corpus.records.size() << " files, " << parts.train.records.size() << " train, "
            << parts.test.records.size() << " test\n";

  auto outcome = train_model(parts.train, syntax, config, [&](const TrainTraceEntry& e) {
    if (a.trace) std::cerr << e.iteration << '\t' << e.penalized_ll << '\t' << e.grad_max_norm << '\n';
  });
  print_warnings(outcome.warnings);
  const auto& g = outcome.grammar_by_length;
  std::cout << "grammar: " << outcome.model.grammar.size() << " productions (" << g[1] << " unigrams, " << g[2]
            << " bigrams, " << g[3] << " trigrams)\n";
  std::cout << "training: " << outcome.model.meta.iterations << " iterations, penalized log-likelihood "
            << outcome.model.meta.final_penalized_ll << ", gradient max-norm "
            << outcome.model.meta.final_grad_max_norm << (outcome.model.meta.converged ? "" : " (not converged)")
            << '\n';
  save_model(outcome.model, a.out);
  std::cout << "model written to " << a.out << '\n';
  return 0;
}

// ---------------------------------------------------------------- classify

int run_classify(const std::string& model_flag, const std::string& input, std::size_t top,
                 const std::string& format) {
  const Model model = load_model(resolve_model_path(model_flag));
  const std::string text = read_input(input);
  const ClassifyResult r = classify(model, text);
  if (format == "json") {
    std::cout << classify_result_to_json(r, top).dump() << '\n';
    return 0;
  }
  const std::size_t n = top ? std::min(top, r.ranked.size()) : r.ranked.size();
  for (std::size_t k = 0; k < n; ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.ranked[k].second);
    std::cout << r.ranked[k].first << '\t' << buf << '\n';
  }
  if (r.no_evidence()) std::cout << "(no evidence: no grammar production matched)\n";
  return 0;
}

// ---------------------------------------------------------------- evaluate

struct EvalArgs {
  std::string model;
  CorpusArgs corpus;
  std::string side = "test";
  std::string format = "text";
  double min_f = -1.0;
  std::string misclassified;
  std::optional<std::uint64_t> seed;
  std::optional<double> train_fraction;
};

int run_evaluate(const EvalArgs& a) {
  const Model model = load_model(resolve_model_path(a.model));
  CorpusManifest corpus = a.corpus.load();
  print_warnings(corpus.warnings);

  CorpusManifest test;
  if (a.side == "all") {
    test = corpus;
  } else {
    SplitResult parts = split(corpus, a.train_fraction.value_or(model.meta.config.train_fraction),
                              a.seed.value_or(model.meta.config.seed));
    test = a.side == "train" ? parts.train : parts.test;
  }
  if (test.records.empty()) throw Error("test set is empty");

  const auto samples = load_labeled(model, test);
  std::vector<std::size_t> predicted;
  predicted.reserve(samples.size());
  const EvalReport report = evaluate(model.languages, samples, [&](const LabeledText& s) {
    predicted.push_back(classify(model, s.text).best);
    return predicted.back();
  });
  if (!a.misclassified.empty()) {
    std::ofstream out(a.misclassified);
    for (std::size_t k = 0; k < samples.size(); ++k)
      if (predicted[k] != samples[k].label)
        out << samples[k].path << '\t' << model.languages[samples[k].label] << '\t'
            << model.languages[predicted[k]] << '\n';
  }
  std::cout << render_report(report, parse_format(a.format));
  if (a.min_f >= 0.0 && report.macro_f < a.min_f) {
    std::cerr << "macro F " << report.macro_f << " is below the gate " << a.min_f << '\n';
    return kExitGate;
  }
  return 0;
}

// ---------------------------------------------------------------- serve

int run_serve(const std::string& model_flag, const std::string& bind) {
  const Model model = load_model(resolve_model_path(model_flag));
  auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw Error("--bind expects HOST:PORT");
  const std::string host = bind.substr(0, colon);
  const int port = std::stoi(bind.substr(colon + 1));
  auto server = make_server(model);
  std::cerr << "serving " << model.languages.size() << " languages on " << host << ':' << port << '\n';
  if (!server->listen(host, port)) throw Error("cannot listen on " + bind);
  return 0;
}

// ---------------------------------------------------------------- inspect

int run_inspect(const std::string& model_flag, const std::string& what, const std::string& language) {
  const Model model = load_model(resolve_model_path(model_flag));
  if (what == "keywords") {
    for (const auto& [lang, table] : model.keywords) {
      if (!language.empty() && lang != language) continue;
      if (language.empty()) std::cout << "# " << lang << " (" << table.total_files << " files)\n";
      dump_keywords(std::cout, table);
    }
  } else if (what == "grammar") {
    dump_grammar(std::cout, model.grammar);
  } else {
    const auto& m = model.maxent;
    std::cout << "# " << m.num_features << " x " << m.num_languages() << " (productions x languages), sigma "
              << m.sigma << '\n';
    std::cout << "production";
    for (const auto& l : m.languages) std::cout << '\t' << l;
    std::cout << '\n';
    for (std::size_t i = 0; i < m.num_features; ++i) {
      std::cout << spell(model.grammar[i].pattern);
      for (std::size_t j = 0; j < m.num_languages(); ++j) std::cout << '\t' << m.weight(i, j);
      std::cout << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------- preprocess

int run_preprocess(const std::string& input, const std::string& strip_lang, const std::string& syntax_file) {
  std::string text = read_input(input);
  if (!strip_lang.empty()) {
    CommentSyntax syntax = default_comment_syntax();
    if (!syntax_file.empty()) syntax.merge(CommentSyntax::load(syntax_file));
    text = strip_comments(text, strip_lang, syntax);
  }
  std::cout << spell(preprocess_text(text)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Source-code programming language identification"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Build a grammar and train a classifier");
  train.corpus.add_to(train_cmd);
  train_cmd->add_option("--keyword-threshold", train.config.keyword_threshold, "Keyword document frequency")
      ->capture_default_str();
  train_cmd->add_option("--mi-threshold", train.config.mi_threshold, "Minimum mutual information (nats)")
      ->capture_default_str();
  train_cmd->add_option("--ngram", train.config.n_max, "Longest n-gram (1-3)")->capture_default_str();
  train_cmd->add_option("--sigma", train.config.maxent.sigma, "Gaussian prior scale")->capture_default_str();
  train_cmd->add_option("--tol", train.config.maxent.tol, "Gradient max-norm tolerance")->capture_default_str();
  train_cmd->add_option("--max-iters", train.config.maxent.max_iters, "Optimizer iteration cap")
      ->capture_default_str();
  train_cmd->add_option("--train-fraction", train.config.train_fraction, "Fraction of files used for training")
      ->capture_default_str();
  train_cmd->add_option("--seed", train.config.seed, "Split seed")->capture_default_str();
  train_cmd->add_option("--comment-syntax", train.comment_syntax, "JSON file extending the comment syntax table");
  train_cmd->add_option("--write-split", train.write_split, "Write train.tsv/test.tsv manifests here");
  train_cmd->add_flag("--trace", train.trace, "Print iteration, penalized LL, gradient norm to stderr");
  train_cmd->add_option("-o,--out", train.out, "Model file to write")->required();

  std::string model_path, input, format = "text";
  std::size_t top = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a file or standard input");
  classify_cmd->add_option("-m,--model", model_path, "Model file (default $CODELANG_MODEL)");
  classify_cmd->add_option("input", input, "Source file; '-' or omitted reads standard input");
  classify_cmd->add_option("--top", top, "Show only the N most probable languages");
  classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a model on a labeled corpus");
  eval_cmd->add_option("-m,--model", ev.model, "Model file (default $CODELANG_MODEL)");
  ev.corpus.add_to(eval_cmd);
  eval_cmd->add_option("--side", ev.side, "Which split side to score: test, train or all")
      ->check(CLI::IsMember({"test", "train", "all"}))
      ->capture_default_str();
  eval_cmd->add_option("--seed", ev.seed, "Split seed (default: the model's)");
  eval_cmd->add_option("--train-fraction", ev.train_fraction, "Split fraction (default: the model's)");
  eval_cmd->add_option("--format", ev.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eval_cmd->add_option("--min-f", ev.min_f, "Exit with status 3 when macro F is below this");
  eval_cmd->add_option("--misclassified", ev.misclassified, "Write misclassified files here");

  std::string bind = "127.0.0.1:8080";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP classification service");
  serve_cmd->add_option("-m,--model", model_path, "Model file (default $CODELANG_MODEL)");
  serve_cmd->add_option("--bind", bind, "HOST:PORT")->capture_default_str();

  std::string what, language;
  auto* inspect_cmd = app.add_subcommand("inspect", "Dump keywords, grammar or weights");
  inspect_cmd->add_option("-m,--model", model_path, "Model file (default $CODELANG_MODEL)");
  inspect_cmd->add_option("what", what, "keywords, grammar or weights")
      ->required()
      ->check(CLI::IsMember({"keywords", "grammar", "weights"}));
  inspect_cmd->add_option("--language", language, "Restrict the keyword dump to one language");

  std::string strip_lang, syntax_file;
  auto* pre_cmd = app.add_subcommand("preprocess", "Print the normalized token stream of a file");
  pre_cmd->add_option("input", input, "Source file; '-' or omitted reads standard input");
  pre_cmd->add_option("--strip-comments", strip_lang, "Strip comments of this language first");
  pre_cmd->add_option("--comment-syntax", syntax_file, "JSON file extending the comment syntax table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train_cmd) return run_train(train);
    if (*classify_cmd) return run_classify(model_path, input, top, format);
    if (*eval_cmd) return run_evaluate(ev);
    if (*serve_cmd) return run_serve(model_path, bind);
    if (*inspect_cmd) return run_inspect(model_path, what, language);
    if (*pre_cmd) return run_preprocess(input, strip_lang, syntax_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
