#ifndef CODELANG_EVAL_HPP
#define CODELANG_EVAL_HPP

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "codelang/token.hpp"

namespace codelang {

/// counts[actual][predicted].
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(std::size_t n) : n_(n), counts_(n * n, 0) {}

  std::size_t size() const { return n_; }
  void add(std::size_t actual, std::size_t predicted) {
    if (actual >= n_ || predicted >= n_) throw Error("confusion index out of range");
    ++counts_[actual * n_ + predicted];
  }
  std::uint64_t at(std::size_t actual, std::size_t predicted) const { return counts_[actual * n_ + predicted]; }
  std::uint64_t& at(std::size_t actual, std::size_t predicted) { return counts_[actual * n_ + predicted]; }

  std::uint64_t row_sum(std::size_t actual) const {
    std::uint64_t s = 0;
    for (std::size_t p = 0; p < n_; ++p) s += at(actual, p);
    return s;
  }
  std::uint64_t column_sum(std::size_t predicted) const {
    std::uint64_t s = 0;
    for (std::size_t a = 0; a < n_; ++a) s += at(a, predicted);
    return s;
  }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts_) s += c;
    return s;
  }
  std::uint64_t diagonal() const {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += at(j, j);
    return s;
  }

  void merge(const ConfusionMatrix& other) {
    if (other.n_ != n_) throw Error("confusion matrix shape mismatch");
    for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> counts_;
};

// Precision here is correct / labeled and recall is correct / predicted,
// the reverse of the usual naming. F is unaffected by the swap.
struct LanguageMetrics {
  std::string language;
  std::uint64_t labeled = 0;
  std::uint64_t predicted = 0;
  std::uint64_t correct = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  bool precision_undefined = false;
  bool recall_undefined = false;

  friend bool operator==(const LanguageMetrics&, const LanguageMetrics&) = default;
};

struct EvalReport {
  std::vector<LanguageMetrics> languages;  // model order, all model languages
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f = 0.0;
  ConfusionMatrix confusion;

  std::uint64_t total() const { return confusion.total(); }
  double accuracy() const {
    return total() ? static_cast<double>(confusion.diagonal()) / static_cast<double>(total()) : 0.0;
  }

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

inline double f_measure(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

/// Derives per-language and macro metrics from a confusion matrix. Macro
/// averages cover languages with at least one test sample.
inline EvalReport build_report(const std::vector<std::string>& languages, const ConfusionMatrix& confusion) {
  if (languages.size() != confusion.size()) throw Error("language list does not match confusion matrix");
  EvalReport r;
  r.confusion = confusion;
  std::size_t present = 0;
  for (std::size_t j = 0; j < languages.size(); ++j) {
    LanguageMetrics m;
    m.language = languages[j];
    m.labeled = confusion.row_sum(j);
    m.predicted = confusion.column_sum(j);
    m.correct = confusion.at(j, j);
    m.precision_undefined = m.labeled == 0;
    m.recall_undefined = m.predicted == 0;
    m.precision = m.labeled ? static_cast<double>(m.correct) / m.labeled : 0.0;
    m.recall = m.predicted ? static_cast<double>(m.correct) / m.predicted : 0.0;
    m.f = f_measure(m.precision, m.recall);
    if (m.labeled > 0) {
      ++present;
      r.macro_precision += m.precision;
      r.macro_recall += m.recall;
      r.macro_f += m.f;
    }
    r.languages.push_back(std::move(m));
  }
  if (present) {
    r.macro_precision /= present;
    r.macro_recall /= present;
    r.macro_f /= present;
  }
  return r;
}

/// Runs `predict(sample)` (returning a language index) over every labeled
/// sample and tallies the results.
template <typename Samples, typename Predict>
EvalReport evaluate(const std::vector<std::string>& languages, const Samples& samples, Predict&& predict) {
  ConfusionMatrix cm(languages.size());
  std::size_t n = 0;
  for (const auto& s : samples) {
    cm.add(s.label, predict(s));
    ++n;
  }
  if (n == 0) throw Error("test set is empty");
  return build_report(languages, cm);
}

enum class ReportFormat { Text, Json };

namespace detail {

inline std::string fixed3(double v, bool undefined) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f%s", v, undefined ? "*" : "");
  return buf;
}

}  // namespace detail

inline nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json langs = nlohmann::json::array();
  for (const auto& m : r.languages) {
    langs.push_back({{"language", m.language},
                     {"labeled", m.labeled},
                     {"predicted", m.predicted},
                     {"correct", m.correct},
                     {"precision", m.precision},
                     {"recall", m.recall},
                     {"f", m.f},
                     {"precision_undefined", m.precision_undefined},
                     {"recall_undefined", m.recall_undefined}});
  }
  nlohmann::json grid = nlohmann::json::array();
  for (std::size_t a = 0; a < r.confusion.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t p = 0; p < r.confusion.size(); ++p) row.push_back(r.confusion.at(a, p));
    grid.push_back(row);
  }
  return {{"languages", langs},
          {"average", {{"precision", r.macro_precision}, {"recall", r.macro_recall}, {"f", r.macro_f}}},
          {"confusion", grid},
          {"total", r.total()},
          {"accuracy", r.accuracy()}};
}

inline EvalReport report_from_json(const nlohmann::json& j) {
  try {
    EvalReport r;
    for (const auto& m : j.at("languages")) {
      LanguageMetrics lm;
      lm.language = m.at("language").get<std::string>();
      lm.labeled = m.at("labeled").get<std::uint64_t>();
      lm.predicted = m.at("predicted").get<std::uint64_t>();
      lm.correct = m.at("correct").get<std::uint64_t>();
      lm.precision = m.at("precision").get<double>();
      lm.recall = m.at("recall").get<double>();
      lm.f = m.at("f").get<double>();
      lm.precision_undefined = m.at("precision_undefined").get<bool>();
      lm.recall_undefined = m.at("recall_undefined").get<bool>();
      r.languages.push_back(std::move(lm));
    }
    const auto& avg = j.at("average");
    r.macro_precision = avg.at("precision").get<double>();
    r.macro_recall = avg.at("recall").get<double>();
    r.macro_f = avg.at("f").get<double>();
    const auto& grid = j.at("confusion");
    r.confusion = ConfusionMatrix(grid.size());
    for (std::size_t a = 0; a < grid.size(); ++a) {
      if (grid[a].size() != grid.size()) throw Error("confusion grid is not square");
      for (std::size_t p = 0; p < grid.size(); ++p) r.confusion.at(a, p) = grid[a][p].get<std::uint64_t>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed evaluation report: ") + e.what());
  }
}

/// Aligned text table (Language / Precision / Recall / F plus an Average
/// row) followed by the confusion grid.
inline std::string render_report_text(const EvalReport& r) {
  std::size_t width = 8;
  for (const auto& m : r.languages) width = std::max(width, m.language.size());
  std::ostringstream os;
  auto row = [&](const std::string& name, const std::string& p, const std::string& rc, const std::string& f) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << name << std::right << std::setw(10) << p
       << std::setw(10) << rc << std::setw(10) << f << '\n';
  };
  row("Language", "Precision", "Recall", "F");
  bool any_undefined = false;
  for (const auto& m : r.languages) {
    if (m.labeled == 0) continue;
    any_undefined |= m.recall_undefined;
    row(m.language, detail::fixed3(m.precision, m.precision_undefined),
        detail::fixed3(m.recall, m.recall_undefined), detail::fixed3(m.f, m.recall_undefined));
  }
  row("Average", detail::fixed3(r.macro_precision, false), detail::fixed3(r.macro_recall, false),
      detail::fixed3(r.macro_f, false));
  os << "\nPrecision = correct / labeled, Recall = correct / predicted "
        "(reversed from the conventional naming; F is unchanged).\n";
  if (any_undefined) os << "* undefined ratio (0/0), reported as 0.\n";

  os << "\nConfusion (rows: actual, columns: predicted)\n";
  std::size_t cell = 6;
  std::size_t label = width + 2;
  for (std::size_t a = 0; a < r.languages.size(); ++a)
    label = std::max(label, std::to_string(a).size() + 4 + r.languages[a].language.size());
  for (std::size_t a = 0; a < r.confusion.size(); ++a)
    for (std::size_t p = 0; p < r.confusion.size(); ++p)
      cell = std::max(cell, std::to_string(r.confusion.at(a, p)).size() + 1);
  os << std::left << std::setw(static_cast<int>(label)) << "";
  for (std::size_t p = 0; p < r.languages.size(); ++p)
    os << std::right << std::setw(static_cast<int>(cell)) << ("[" + std::to_string(p) + "]");
  os << '\n';
  for (std::size_t a = 0; a < r.confusion.size(); ++a) {
    os << std::left << std::setw(static_cast<int>(label))
       << ("[" + std::to_string(a) + "] " + r.languages[a].language);
    for (std::size_t p = 0; p < r.confusion.size(); ++p)
      os << std::right << std::setw(static_cast<int>(cell)) << r.confusion.at(a, p);
    os << '\n';
  }
  os << "\nTotal " << r.total() << ", accuracy " << detail::fixed3(r.accuracy(), false) << '\n';
  return os.str();
}

inline std::string render_report(const EvalReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_to_json(r).dump(2) + "\n";
  return render_report_text(r);
}

}  // namespace codelang

#endif  // CODELANG_EVAL_HPP
