#ifndef CODELANG_MAXENT_HPP
#define CODELANG_MAXENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "codelang/grammar.hpp"
#include "codelang/lbfgs.hpp"
#include "codelang/token.hpp"

namespace codelang {

/// Conditional maximum-entropy model: one weight per (production, language).
/// Weights are stored dense, row-major by production.
struct MaxentModel {
  std::vector<std::string> languages;
  std::size_t num_features = 0;
  std::vector<double> weights;
  double sigma = 10.0;

  MaxentModel() = default;
  MaxentModel(std::vector<std::string> langs, std::size_t features, double sigma_)
      : languages(std::move(langs)), num_features(features),
        weights(num_features * languages.size(), 0.0), sigma(sigma_) {
    validate();
  }

  std::size_t num_languages() const { return languages.size(); }
  double& weight(std::size_t feature, std::size_t lang) { return weights[feature * languages.size() + lang]; }
  double weight(std::size_t feature, std::size_t lang) const {
    return weights[feature * languages.size() + lang];
  }

  void validate() const {
    if (languages.empty()) throw Error("model has no languages");
    for (std::size_t a = 0; a < languages.size(); ++a)
      for (std::size_t b = a + 1; b < languages.size(); ++b)
        if (languages[a] == languages[b]) throw Error("duplicate language '" + languages[a] + "'");
    if (!(sigma > 0.0)) throw Error("sigma must be positive");
    if (weights.size() != num_features * languages.size()) throw Error("weight matrix has wrong shape");
  }
};

struct TrainingSample {
  FeatureSet features;
  std::size_t label = 0;
};

/// Samples with the uniform empirical distribution: each file counts once.
struct TrainingSet {
  std::vector<std::string> languages;
  std::vector<TrainingSample> samples;
};

struct Prediction {
  std::vector<double> probabilities;
  std::size_t best = 0;
};

namespace detail {

inline void check_features(const FeatureSet& features, std::size_t num_features) {
  for (auto id : features)
    if (id >= num_features)
      throw Error("feature id " + std::to_string(id) + " is not in the model grammar");
}

inline void accumulate_scores(const FeatureSet& features, std::span<const double> weights,
                              std::size_t num_languages, std::span<double> scores) {
  std::fill(scores.begin(), scores.end(), 0.0);
  for (auto id : features) {
    const double* row = weights.data() + static_cast<std::size_t>(id) * num_languages;
    for (std::size_t j = 0; j < num_languages; ++j) scores[j] += row[j];
  }
}

/// Turns scores into probabilities in place; returns log of the normalizer.
inline double softmax_in_place(std::span<double> scores) {
  const double top = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (double& s : scores) {
    s = std::exp(s - top);
    sum += s;
  }
  for (double& s : scores) s /= sum;
  return top + std::log(sum);
}

}  // namespace detail

inline Prediction predict(const FeatureSet& features, const MaxentModel& model) {
  detail::check_features(features, model.num_features);
  Prediction p;
  p.probabilities.resize(model.num_languages());
  detail::accumulate_scores(features, model.weights, model.num_languages(), p.probabilities);
  detail::softmax_in_place(p.probabilities);
  // First maximum in model order wins ties.
  p.best = static_cast<std::size_t>(
      std::max_element(p.probabilities.begin(), p.probabilities.end()) - p.probabilities.begin());
  return p;
}

/// Penalized log-likelihood and, when `grad` is non-empty, its gradient with
/// respect to the weights.
inline double penalized_log_likelihood(const TrainingSet& data, std::span<const double> weights,
                                       std::size_t num_features, double sigma,
                                       std::span<double> grad = {}) {
  const std::size_t L = data.languages.size();
  const double inv_var = 1.0 / (sigma * sigma);
  const bool want_grad = !grad.empty();
  if (want_grad) std::fill(grad.begin(), grad.end(), 0.0);

  std::vector<double> probs(L);
  double ll = 0.0;
  for (const auto& s : data.samples) {
    detail::accumulate_scores(s.features, weights, L, probs);
    const double label_score = probs[s.label];
    const double log_z = detail::softmax_in_place(probs);
    ll += label_score - log_z;
    if (want_grad) {
      for (auto id : s.features) {
        double* row = grad.data() + static_cast<std::size_t>(id) * L;
        for (std::size_t j = 0; j < L; ++j) row[j] -= probs[j];
        row[s.label] += 1.0;
      }
    }
  }

  double penalty = 0.0;
  for (std::size_t k = 0; k < num_features * L; ++k) {
    penalty += weights[k] * weights[k];
    if (want_grad) grad[k] -= weights[k] * inv_var;
  }
  return ll - 0.5 * penalty * inv_var;
}

inline double penalized_log_likelihood(const TrainingSet& data, const MaxentModel& model) {
  return penalized_log_likelihood(data, model.weights, model.num_features, model.sigma);
}

inline std::vector<double> gradient(const TrainingSet& data, const MaxentModel& model) {
  std::vector<double> g(model.weights.size());
  penalized_log_likelihood(data, model.weights, model.num_features, model.sigma, g);
  return g;
}

struct TrainConfig {
  double sigma = 10.0;
  double tol = 1e-4;
  std::size_t max_iters = 500;
  std::size_t history = 10;
};

struct TrainTraceEntry {
  std::size_t iteration;
  double penalized_ll;
  double grad_max_norm;
};

struct TrainResult {
  MaxentModel model;
  std::vector<TrainTraceEntry> trace;
  bool converged = false;
  std::string warning;
};

/// Maximizes the penalized log-likelihood from all-zero weights.
inline TrainResult train(const TrainingSet& data, std::size_t num_features, const TrainConfig& config,
                         const std::function<void(const TrainTraceEntry&)>& on_iterate = {}) {
  if (data.samples.empty()) throw Error("training set is empty");
  if (data.languages.empty()) throw Error("training set declares no languages");
  for (const auto& s : data.samples) {
    if (s.label >= data.languages.size()) throw Error("training label out of range");
    detail::check_features(s.features, num_features);
  }

  TrainResult out;
  out.model = MaxentModel(data.languages, num_features, config.sigma);

  auto objective = [&](std::span<const double> w, std::span<double> g) {
    const double v = penalized_log_likelihood(data, w, num_features, config.sigma, g);
    for (double& e : g) e = -e;
    return -v;
  };
  lbfgs::Options opt;
  opt.grad_tol = config.tol;
  opt.max_iters = config.max_iters;
  opt.history = config.history;
  auto res = lbfgs::minimize(objective, std::move(out.model.weights), opt, [&](const lbfgs::Iterate& it) {
    TrainTraceEntry e{it.iteration, -it.value, it.grad_max_norm};
    out.trace.push_back(e);
    if (on_iterate) on_iterate(e);
  });

  out.model.weights = std::move(res.x);
  out.converged = res.status == lbfgs::Status::Converged;
  if (res.status == lbfgs::Status::MaxIterations)
    out.warning = "gradient tolerance not reached within " + std::to_string(config.max_iters) + " iterations";
  else if (res.status == lbfgs::Status::LineSearchFailed)
    out.warning = "line search made no further progress; returning best iterate";
  return out;
}

}  // namespace codelang

#endif  // CODELANG_MAXENT_HPP
