#pragma once

#include <span>
#include <vector>

namespace aumls {

// One discontinuity of an example's piecewise-constant error functions:
// at predicted value `value`, the false positive rate contributed by
// `example` jumps by delta_fp and the false negative rate by delta_fn.
// Deltas are in rate units (they sum to 1 / -1 over the whole model).
struct Breakpoint {
  double value = 0.0;
  double delta_fp = 0.0;
  double delta_fn = 0.0;
  int example = 0;  // 1-based
};

// Validated collection of breakpoints describing the label error
// functions of n examples. Immutable after construction; safe to share
// across threads.
class ErrorModel {
 public:
  // Validates every model invariant and throws ValidationError with the
  // name of the violated one:
  //  - values finite, deltas finite and not both zero,
  //  - example indices cover {1..n},
  //  - total delta_fp = 1 and total delta_fn = -1 (within 1e-9),
  //  - per example, cumulative FP stays in [0,1] and cumulative FN
  //    (starting from its level at -inf) stays in [0,1].
  static ErrorModel from_breakpoints(std::vector<Breakpoint> breakpoints, int n_examples);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  int n_examples() const { return n_examples_; }
  int size() const { return static_cast<int>(breakpoints_.size()); }  // B
  double total_fp() const { return total_fp_; }
  double total_fn() const { return total_fn_; }

  // True if every example's error functions are monotone (FP
  // non-decreasing, FN non-increasing), as in binary classification.
  bool monotone() const { return monotone_; }

 private:
  ErrorModel() = default;
  std::vector<Breakpoint> breakpoints_;
  int n_examples_ = 0;
  double total_fp_ = 0.0;
  double total_fn_ = 0.0;
  bool monotone_ = true;
};

// Builds the error model of a binary classification problem: each
// positive example contributes (0, 0, -1/n+), each negative (0, 1/n-, 0).
// Labels must contain both classes.
ErrorModel binary_breakpoints(std::span<const int> labels);

// Rescales raw-count deltas so totals become exactly 1 and -1. Throws if
// the FP total is not positive or the FN total is not negative.
std::vector<Breakpoint> normalize(std::vector<Breakpoint> breakpoints);

}  // namespace aumls
