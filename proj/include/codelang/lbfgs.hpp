#ifndef CODELANG_LBFGS_HPP
#define CODELANG_LBFGS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "codelang/token.hpp"

namespace codelang::lbfgs {

struct Options {
  std::size_t history = 10;
  double grad_tol = 1e-4;     // stop when max |g_i| falls below this
  std::size_t max_iters = 500;
  double armijo = 1e-4;       // sufficient decrease constant
  double backtrack = 0.5;
  std::size_t max_backtracks = 60;
};

enum class Status { Converged, MaxIterations, LineSearchFailed };

struct Iterate {
  std::size_t iteration;
  double value;
  double grad_max_norm;
};

struct Result {
  std::vector<double> x;
  double value = 0.0;
  double grad_max_norm = 0.0;
  std::size_t iterations = 0;
  Status status = Status::MaxIterations;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

/// Limited-memory BFGS minimization with a backtracking Armijo line search.
/// Every accepted step strictly decreases the objective. `objective(x, g)`
/// returns f(x) and writes the gradient into g.
template <typename Objective>
Result minimize(Objective&& objective, std::vector<double> x0, const Options& opt,
                const std::function<void(const Iterate&)>& on_iterate = {}) {
  const std::size_t n = x0.size();
  Result res;
  res.x = std::move(x0);
  std::vector<double> g(n), x_trial(n), g_trial(n), dir(n);

  double f = objective(std::span<const double>(res.x), std::span<double>(g));
  if (!std::isfinite(f)) throw Error("objective is not finite at the starting point");
  for (double e : g)
    if (!std::isfinite(e)) throw Error("gradient is not finite at the starting point");

  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> mem;
  std::vector<double> alpha(opt.history);

  double gnorm = max_abs(g);
  if (on_iterate) on_iterate({0, f, gnorm});

  std::size_t iter = 0;
  res.status = Status::MaxIterations;
  while (true) {
    if (gnorm < opt.grad_tol) {
      res.status = Status::Converged;
      break;
    }
    if (iter >= opt.max_iters) break;

    // Two-loop recursion: dir = -H g.
    for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
    for (std::size_t k = mem.size(); k-- > 0;) {
      alpha[k] = mem[k].rho * dot(mem[k].s, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha[k] * mem[k].y[i];
    }
    if (!mem.empty()) {
      const auto& last = mem.back();
      const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
      for (double& d : dir) d *= gamma;
    } else {
      const double scale = 1.0 / std::max(1.0, std::sqrt(dot(g, g)));
      for (double& d : dir) d *= scale;
    }
    for (std::size_t k = 0; k < mem.size(); ++k) {
      const double beta = mem[k].rho * dot(mem[k].y, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha[k] - beta) * mem[k].s[i];
    }

    double slope = dot(g, dir);
    if (!(slope < 0.0)) {
      // Lost descent; restart from steepest descent.
      mem.clear();
      const double scale = 1.0 / std::max(1.0, std::sqrt(dot(g, g)));
      for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i] * scale;
      slope = dot(g, dir);
    }

    double step = 1.0;
    double f_trial = f;
    bool accepted = false;
    for (std::size_t bt = 0; bt < opt.max_backtracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) x_trial[i] = res.x[i] + step * dir[i];
      f_trial = objective(std::span<const double>(x_trial), std::span<double>(g_trial));
      if (std::isfinite(f_trial) && f_trial <= f + opt.armijo * step * slope && f_trial < f) {
        accepted = true;
        break;
      }
      step *= opt.backtrack;
    }
    if (!accepted) {
      if (!mem.empty()) {
        mem.clear();
        continue;
      }
      res.status = Status::LineSearchFailed;
      break;
    }

    Pair pr{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      pr.s[i] = x_trial[i] - res.x[i];
      pr.y[i] = g_trial[i] - g[i];
    }
    const double sy = dot(pr.s, pr.y);
    if (sy > 1e-12 * std::sqrt(dot(pr.s, pr.s) * dot(pr.y, pr.y))) {
      pr.rho = 1.0 / sy;
      mem.push_back(std::move(pr));
      if (mem.size() > opt.history) mem.pop_front();
    }

    res.x.swap(x_trial);
    g.swap(g_trial);
    f = f_trial;
    for (double e : g)
      if (!std::isfinite(e)) throw Error("gradient became non-finite during optimization");
    gnorm = max_abs(g);
    ++iter;
    if (on_iterate) on_iterate({iter, f, gnorm});
  }

  res.value = f;
  res.grad_max_norm = gnorm;
  res.iterations = iter;
  return res;
}

}  // namespace codelang::lbfgs

#endif  // CODELANG_LBFGS_HPP
