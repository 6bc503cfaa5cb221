#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "codelang/eval.hpp"

namespace codelang {
namespace {

struct Labeled {
  std::size_t label;
  std::size_t guess;
};

EvalReport run(const std::vector<std::string>& langs, const std::vector<Labeled>& samples) {
  return evaluate(langs, samples, [](const Labeled& s) { return s.guess; });
}

TEST(Evaluate, PerfectClassifier) {
  auto r = run({"A", "B", "C"}, {{0, 0}, {1, 1}, {2, 2}, {2, 2}});
  for (const auto& m : r.languages) {
    EXPECT_EQ(m.precision, 1.0);
    EXPECT_EQ(m.recall, 1.0);
    EXPECT_EQ(m.f, 1.0);
  }
  EXPECT_EQ(r.macro_f, 1.0);
  EXPECT_EQ(r.accuracy(), 1.0);
}

TEST(Evaluate, TwoLanguageWorkedExample) {
  // A: 2 labeled, both right. B: 3 labeled, one predicted as A.
  auto r = run({"A", "B"}, {{0, 0}, {0, 0}, {1, 1}, {1, 1}, {1, 0}});
  const auto& a = r.languages[0];
  const auto& b = r.languages[1];
  EXPECT_DOUBLE_EQ(a.precision, 1.0);
  EXPECT_DOUBLE_EQ(a.recall, 2.0 / 3);
  EXPECT_DOUBLE_EQ(a.f, 0.8);
  EXPECT_DOUBLE_EQ(b.precision, 2.0 / 3);
  EXPECT_DOUBLE_EQ(b.recall, 1.0);
  EXPECT_DOUBLE_EQ(b.f, 0.8);
  EXPECT_EQ(r.confusion.at(1, 0), 1u);
}

TEST(Evaluate, OneOfFourMisclassified) {
  auto r = run({"A", "B"}, {{0, 0}, {0, 1}, {1, 1}, {1, 1}});
  EXPECT_DOUBLE_EQ(r.languages[0].precision, 0.5);
  EXPECT_DOUBLE_EQ(r.languages[0].recall, 1.0);
  EXPECT_DOUBLE_EQ(r.languages[0].f, 2.0 / 3);
  EXPECT_DOUBLE_EQ(r.languages[1].precision, 1.0);
  EXPECT_DOUBLE_EQ(r.languages[1].recall, 2.0 / 3);
  EXPECT_DOUBLE_EQ(r.languages[1].f, 0.8);
}

TEST(Evaluate, RatiosFollowCorrectOverLabeledAndCorrectOverPredicted) {
  // A: 1 labeled and correct; B: 2 labeled, both predicted A.
  auto r = run({"A", "B"}, {{0, 0}, {1, 0}, {1, 0}});
  EXPECT_DOUBLE_EQ(r.languages[0].precision, 1.0);
  EXPECT_DOUBLE_EQ(r.languages[0].recall, 1.0 / 3);
  EXPECT_DOUBLE_EQ(r.languages[0].f, 0.5);
  EXPECT_EQ(r.languages[1].precision, 0.0);
  EXPECT_TRUE(r.languages[1].recall_undefined);
  EXPECT_EQ(r.languages[1].f, 0.0);
}

TEST(Evaluate, EverythingPredictedAsOneLanguage) {
  auto r = run({"A", "B"}, {{0, 0}, {1, 0}});
  EXPECT_DOUBLE_EQ(r.languages[0].precision, 1.0);
  EXPECT_DOUBLE_EQ(r.languages[0].recall, 0.5);
  EXPECT_DOUBLE_EQ(r.languages[0].f, 2.0 / 3);
  EXPECT_EQ(r.languages[1].f, 0.0);
  EXPECT_DOUBLE_EQ(r.macro_f, 1.0 / 3);
}

TEST(Evaluate, LanguagesWithoutTestSamplesAreExcludedFromAverage) {
  auto r = run({"A", "B", "C"}, {{0, 0}, {1, 1}});
  EXPECT_TRUE(r.languages[2].precision_undefined);
  EXPECT_EQ(r.macro_f, 1.0);
}

TEST(Evaluate, EmptyTestSetIsAnError) { EXPECT_THROW(run({"A"}, {}), Error); }

TEST(EvaluateProperty, IdentitiesHoldOnRandomMatrices) {
  std::mt19937 rng(4);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t L = 1 + rng() % 6;
    std::vector<std::string> langs;
    for (std::size_t j = 0; j < L; ++j) langs.push_back("L" + std::to_string(j));
    std::vector<Labeled> samples(1 + rng() % 60);
    std::vector<std::uint64_t> per_label(L, 0);
    for (auto& s : samples) {
      s.label = rng() % L;
      s.guess = rng() % 3 ? s.label : rng() % L;
      ++per_label[s.label];
    }
    auto r = run(langs, samples);
    EXPECT_EQ(r.total(), samples.size());
    for (std::size_t j = 0; j < L; ++j) {
      const auto& m = r.languages[j];
      EXPECT_EQ(r.confusion.row_sum(j), per_label[j]);
      EXPECT_EQ(m.f, f_measure(m.recall, m.precision));
      EXPECT_GE(m.f, 0.0);
      EXPECT_LE(m.f, 1.0);
    }
  }
}

TEST(FMeasure, ZeroWhenBothRatiosZero) {
  EXPECT_EQ(f_measure(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(f_measure(1, 0.5), 2.0 / 3);
}

TEST(RenderReport, TableShapeAndAverageRow) {
  ConfusionMatrix cm(2);
  for (int k = 0; k < 99; ++k) cm.add(0, 0);
  cm.add(0, 1);
  auto r = build_report({"Python", "Go"}, cm);
  const auto text = render_report(r, ReportFormat::Text);
  EXPECT_EQ(text.rfind("Language", 0), 0u);
  EXPECT_NE(text.find("Precision"), std::string::npos);
  EXPECT_NE(text.find("Recall"), std::string::npos);
  EXPECT_NE(text.find("Python"), std::string::npos);
  EXPECT_NE(text.find("Average"), std::string::npos);
  EXPECT_NE(text.find("0.990"), std::string::npos);
  EXPECT_NE(text.find("[0] Python"), std::string::npos);
  EXPECT_NE(text.find("accuracy 0.990"), std::string::npos);
}

TEST(RenderReport, SingleLanguageAverageEqualsRow) {
  ConfusionMatrix cm(1);
  cm.add(0, 0);
  const auto text = render_report(build_report({"Go"}, cm), ReportFormat::Text);
  std::istringstream in(text);
  std::string header, row, avg;
  std::getline(in, header);
  std::getline(in, row);
  std::getline(in, avg);
  EXPECT_EQ(row.substr(0, 2), "Go");
  EXPECT_EQ(avg.substr(0, 7), "Average");
  EXPECT_EQ(row.substr(row.size() - 30), avg.substr(avg.size() - 30));
}

TEST(RenderReport, UndefinedRatiosAreMarked) {
  ConfusionMatrix cm(2);
  cm.add(0, 1);
  cm.add(1, 1);
  auto text = render_report(build_report({"A", "B"}, cm), ReportFormat::Text);
  EXPECT_NE(text.find("0.000*"), std::string::npos);
  EXPECT_NE(text.find("undefined"), std::string::npos);
}

TEST(RenderReport, JsonRoundTrip) {
  ConfusionMatrix cm(3);
  cm.add(0, 0);
  cm.add(1, 2);
  cm.add(2, 2);
  const auto r = build_report({"A", "B", "C"}, cm);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(render_report(r, ReportFormat::Json))), r);
  EXPECT_THROW(report_from_json(nlohmann::json::parse("{}")), Error);
}

TEST(ConfusionMatrix, MergeAndBounds) {
  ConfusionMatrix a(2), b(2);
  a.add(0, 1);
  b.add(0, 1);
  b.add(1, 1);
  a.merge(b);
  EXPECT_EQ(a.at(0, 1), 2u);
  EXPECT_EQ(a.total(), 3u);
  EXPECT_THROW(a.add(2, 0), Error);
  EXPECT_THROW(a.merge(ConfusionMatrix(3)), Error);
}

}  // namespace
}  // namespace codelang
