// Train on a directory of per-language subdirectories and score the held-out
// repositories, all in process.
//   train_and_score CORPUS_DIR

#include <iostream>

#include "codelang/comment_syntax.hpp"
#include "codelang/corpus.hpp"
#include "codelang/eval.hpp"
#include "codelang/pipeline.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " CORPUS_DIR\n";
    return 2;
  }
  try {
    codelang::PipelineConfig config;
    const auto corpus = codelang::ingest(codelang::roots_from_directory(argv[1]), config.ingest);
    const auto parts = codelang::split(corpus, config.train_fraction, config.seed);
    for (const auto& w : parts.warnings) std::cerr << "warning: " << w << '\n';

    const auto outcome = codelang::train_model(parts.train, codelang::default_comment_syntax(), config);
    std::cout << outcome.model.grammar.size() << " productions, " << outcome.trace.size() - 1
              << " optimizer iterations\n\n";

    const auto test = codelang::load_labeled(outcome.model, parts.test);
    std::cout << codelang::render_report(codelang::evaluate_model(outcome.model, test),
                                         codelang::ReportFormat::Text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
