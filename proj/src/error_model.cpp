#include "aumls/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aumls/errors.hpp"

namespace aumls {

namespace {
constexpr double kTotalTol = 1e-9;   // accumulated float error over B additions
constexpr double kPrefixTol = 1e-9;
}  // namespace

ErrorModel ErrorModel::from_breakpoints(std::vector<Breakpoint> breakpoints, int n_examples) {
  if (n_examples < 1) throw ValidationError("error model needs at least one example");
  if (breakpoints.empty()) throw ValidationError("no breakpoints");

  ErrorModel m;
  double total_fp = 0.0, total_fn = 0.0;
  std::vector<char> seen(static_cast<size_t>(n_examples) + 1, 0);
  for (const Breakpoint& b : breakpoints) {
    if (!std::isfinite(b.value)) throw ValidationError("breakpoint value not finite");
    if (!std::isfinite(b.delta_fp) || !std::isfinite(b.delta_fn))
      throw ValidationError("breakpoint delta not finite");
    if (b.delta_fp == 0.0 && b.delta_fn == 0.0)
      throw ValidationError("breakpoint with zero deltas");
    if (b.example < 1 || b.example > n_examples)
      throw ValidationError("breakpoint example index out of range 1.." +
                            std::to_string(n_examples));
    seen[b.example] = 1;
    total_fp += b.delta_fp;
    total_fn += b.delta_fn;
  }
  for (int i = 1; i <= n_examples; ++i)
    if (!seen[i])
      throw ValidationError("example " + std::to_string(i) + " has no breakpoints");
  if (std::fabs(total_fp - 1.0) > kTotalTol)
    throw ValidationError("total delta_fp must be 1, got " + std::to_string(total_fp));
  if (std::fabs(total_fn + 1.0) > kTotalTol)
    throw ValidationError("total delta_fn must be -1, got " + std::to_string(total_fn));

  // Per-example running sums, in threshold order. FP runs up from 0, FN
  // runs from its level at -inf (minus the example's net change) to 0.
  std::vector<int> order(breakpoints.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
    if (breakpoints[a].example != breakpoints[c].example)
      return breakpoints[a].example < breakpoints[c].example;
    return breakpoints[a].value < breakpoints[c].value;
  });
  bool monotone = true;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    const int ex = breakpoints[order[i]].example;
    double net_fn = 0.0;
    while (j < order.size() && breakpoints[order[j]].example == ex) {
      net_fn += breakpoints[order[j]].delta_fn;
      ++j;
    }
    const double fn_start = -net_fn;  // FN level at -inf; FN ends at zero
    if (fn_start < -kPrefixTol || fn_start > 1.0 + kPrefixTol)
      throw ValidationError("example " + std::to_string(ex) + " initial FN outside [0,1]");
    double prefix_fp = 0.0, prefix_fn = 0.0;
    for (size_t k = i; k < j; ++k) {
      const Breakpoint& b = breakpoints[order[k]];
      if (b.delta_fp < 0.0 || b.delta_fn > 0.0) monotone = false;
      prefix_fp += b.delta_fp;
      prefix_fn += b.delta_fn;
      if (prefix_fp < -kPrefixTol || prefix_fp > 1.0 + kPrefixTol)
        throw ValidationError("example " + std::to_string(ex) + " cumulative FP outside [0,1]");
      if (prefix_fn < -1.0 - kPrefixTol || prefix_fn > kPrefixTol)
        throw ValidationError("example " + std::to_string(ex) +
                              " running delta_fn sum outside [-1,0]");
      const double fn = fn_start + prefix_fn;
      if (fn < -kPrefixTol || fn > 1.0 + kPrefixTol)
        throw ValidationError("example " + std::to_string(ex) + " FN value outside [0,1]");
    }
    i = j;
  }

  m.breakpoints_ = std::move(breakpoints);
  m.n_examples_ = n_examples;
  m.total_fp_ = total_fp;
  m.total_fn_ = total_fn;
  m.monotone_ = monotone;
  return m;
}

ErrorModel binary_breakpoints(std::span<const int> labels) {
  int n_pos = 0, n_neg = 0;
  for (int y : labels) {
    if (y == 1)
      ++n_pos;
    else if (y == -1)
      ++n_neg;
    else
      throw ValidationError("labels must be -1 or 1");
  }
  if (n_pos == 0 || n_neg == 0) throw ValidationError("degenerate labels");

  std::vector<Breakpoint> bps;
  bps.reserve(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1)
      bps.push_back({0.0, 0.0, -1.0 / n_pos, static_cast<int>(i) + 1});
    else
      bps.push_back({0.0, 1.0 / n_neg, 0.0, static_cast<int>(i) + 1});
  }
  return ErrorModel::from_breakpoints(std::move(bps), static_cast<int>(labels.size()));
}

std::vector<Breakpoint> normalize(std::vector<Breakpoint> breakpoints) {
  double total_fp = 0.0, total_fn = 0.0;
  for (const Breakpoint& b : breakpoints) {
    total_fp += b.delta_fp;
    total_fn += b.delta_fn;
  }
  if (!(total_fp > 0.0)) throw ValidationError("cannot normalize: total delta_fp not positive");
  if (!(total_fn < 0.0)) throw ValidationError("cannot normalize: total delta_fn not negative");
  for (Breakpoint& b : breakpoints) {
    b.delta_fp /= total_fp;
    b.delta_fn /= -total_fn;
  }
  return breakpoints;
}

}  // namespace aumls
