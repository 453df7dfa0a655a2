#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "aumls/error_model.hpp"
#include "aumls/matrix.hpp"

namespace aumls {

// Position of one breakpoint in constant space as a linear function of
// the step size s along the descent direction:
//   T(s) = intercept + slope * s,
// with intercept = value - w^T x and slope = -d^T x of the breakpoint's
// example.
struct ThresholdLine {
  double intercept = 0.0;
  double slope = 0.0;
  int breakpoint = 0;  // 0-based index into the error model
};

std::vector<ThresholdLine> build_lines(std::span<const double> w, std::span<const double> d,
                                       const FeatureMatrix& X, const ErrorModel& model);

// Sweep stopping rules. first_min stops at the first step size after
// which the AUM would increase; linear stops after B events; quadratic
// and max_auc drain the whole queue (the latter differs only in which
// step is chosen afterwards).
enum class Variant { first_min, linear, quadratic, max_auc };

enum class StepObjective { min_aum, max_auc };

struct PathSegment {
  double step_lo = 0.0;
  double step_hi = 0.0;  // +inf on the open final segment
  double aum_at_lo = 0.0;
  double aum_slope = 0.0;
  double auc_at_lo_event = 0.0;  // AUC exactly at step_lo
  double auc_on_interval = 0.0;  // AUC on the open interval (step_lo, step_hi)
};

// Complete piecewise representation of AUM (linear) and AUC (constant)
// over the explored step sizes. Immutable and shareable.
class StepPath {
 public:
  const std::vector<PathSegment>& segments() const { return segments_; }
  bool final_open() const { return final_open_; }
  bool truncated() const { return truncated_; }  // stopped by the event budget
  long events_explored() const { return events_; }

  // AUM and AUC at step size s; at a segment boundary the AUC is the
  // event value (the curve with the crossing thresholds merged).
  // Throws ValidationError outside the explored range.
  std::pair<double, double> query(double s) const;

  // min_aum: the first kink where the slope turns >= 0. max_auc: the
  // event step if an exact-at value wins, else a representative interior
  // point of the winning interval. Ties break toward smaller steps.
  double choose_step(StepObjective objective) const;

  // Global minimum of AUM over the explored range -> (step, value).
  std::pair<double, double> min_aum_over_path() const;

  void write_csv(std::ostream& out) const;

 private:
  friend class PathState;
  std::vector<PathSegment> segments_;
  bool final_open_ = false;
  bool truncated_ = false;
  long events_ = 0;
};

// A group of threshold lines meeting at one (step, threshold) point.
// Members are 1-based sorted-order positions and must be contiguous.
struct IntersectionEvent {
  double step = 0.0;
  double threshold = 0.0;
  std::vector<int> members;
};

// Mutable sweep state: the sorted permutation of threshold lines, the
// error-rate vectors before each threshold, the current AUM line and AUC,
// and the queue of upcoming intersections. Single-owner; distinct
// searches run concurrently without coordination.
class PathState {
 public:
  // O(B log B) initialization at step size 0: sorts the lines (ties by
  // slope, then breakpoint index), computes the rate vectors by
  // cumulative sums, the AUM and its slope, the AUC, and seeds the queue
  // with the intersections of adjacent pairs. Throws ValidationError if
  // fewer than two lines.
  PathState(std::vector<ThresholdLine> lines, const ErrorModel& model);

  struct AucDelta {
    double removed = 0.0;   // trapezoid area dropped with the vanishing points
    double diagonal = 0.0;  // area of the direct connection at the event
    double added = 0.0;     // area of the replacement points after the event
  };

  // Advances to the event and applies it: block reversal of the member
  // window, O(1) rate/min updates (O(m) for m-line groups), constant-time
  // slope and AUC updates, and insertion of up to two new candidate
  // intersections. Throws InternalError if the members are not a
  // contiguous adjacent window or do not meet at the event point.
  AucDelta apply_event(const IntersectionEvent& event);

  struct ColumnInfo {
    double step = 0.0;
    double auc_at = 0.0;  // AUC exactly at the step (all groups merged)
    std::vector<IntersectionEvent> groups;
  };
  using Observer = std::function<void(const PathState&, const ColumnInfo&)>;

  // Runs the sweep under the given stopping rule and returns the path.
  // max_events < 0 selects the default cap B(B-1)/2 + B. The observer,
  // when given, is invoked after each applied event column. Consumes the
  // state; a second call throws.
  StepPath run(Variant variant, long max_events = -1, const Observer& observer = {});

  int size() const { return B_; }
  const std::vector<ThresholdLine>& lines() const { return lines_; }
  const std::vector<int>& perm() const { return perm_; }  // rank -> line, 0-based
  double current_step() const { return current_step_; }
  double aum() const { return aum_; }
  double slope() const { return slope_; }
  double auc_after() const { return auc_after_; }
  long events_explored() const { return events_explored_; }
  size_t queue_columns() const { return queue_.size(); }

  // Rates on the interval below the line at 1-based rank i, for
  // i in [1, B+1]; entries 1 and B+1 are the pinned terminal points.
  double fp(int i) const { return fp_[i]; }
  double fn(int i) const { return fn_[i]; }
  double min_value(int i) const { return min_[i]; }

 private:
  struct PendingGroup {
    std::vector<std::pair<int, int>> pairs;  // (lower line, upper line)
  };
  using Column = std::map<double, PendingGroup>;

  void insert_candidate(int lo_line, int up_line);
  double trapezoid(int i, int j) const;

  int B_ = 0;
  std::vector<ThresholdLine> lines_;
  std::vector<double> dfp_, dfn_;  // per line, cached from the model
  std::vector<int> perm_;          // rank (0-based) -> line
  std::vector<int> pos_;           // line -> rank (0-based)
  std::vector<double> fp_, fn_, min_;  // 1-based, size B+2, pinned ends
  double current_step_ = 0.0;
  double aum_ = 0.0;
  double slope_ = 0.0;
  double auc_after_ = 0.0;
  std::map<double, Column> queue_;
  long events_explored_ = 0;
  bool consumed_ = false;
};

}  // namespace aumls
