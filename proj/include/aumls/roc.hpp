#pragma once

#include <span>
#include <vector>

#include "aumls/error_model.hpp"
#include "aumls/matrix.hpp"

namespace aumls {

// ROC curve at fixed predictions, traced by adding a constant to every
// predicted value and sweeping it from -inf to +inf. Breakpoints whose
// crossing constants coincide (within a relative tolerance) merge into a
// single step, so the curve is well defined at exact ties.
//
// With G distinct thresholds there are G+1 points; point g holds the
// rates on the constant interval (thresholds[g-1], thresholds[g]). The
// first point is pinned at FPR=TPR=0 and the last at FPR=TPR=1.
struct RocCurve {
  std::vector<double> thresholds;  // ascending, size G
  std::vector<double> fpr;         // size G+1
  std::vector<double> tpr;         // size G+1
  std::vector<double> fnr;         // size G+1 (tpr = 1 - fnr)
  std::vector<double> min_vec;     // min(fpr, fnr) per point, size G+1
};

// Relative tolerance for merging near-equal crossing constants; matches
// the event grouping scale of the path sweep so both agree at events.
inline constexpr double kRocTieTol = 1e-12;

RocCurve roc(std::span<const double> predictions, const ErrorModel& model);

// Trapezoidal area under the curve. Outside [0,1] only when some error
// function is non-monotone (the curve then has loops).
double auc(const RocCurve& curve);

// Area under min(FPR, FNR) as a function of the added constant; always
// >= 0, and 0 exactly when some constant classifies perfectly.
double aum(const RocCurve& curve);
double aum(std::span<const double> predictions, const ErrorModel& model);

struct GridPoint {
  double step = 0.0;
  double aum = 0.0;
  double auc = 0.0;
};

// Evaluates AUM/AUC at predictions (w + s d)^T x_i for each step s.
// Steps are independent; the loop is parallelized when OpenMP is
// available and the output does not depend on the thread count.
std::vector<GridPoint> grid_evaluate(std::span<const double> w, std::span<const double> d,
                                     const FeatureMatrix& X, const ErrorModel& model,
                                     std::span<const double> steps);

}  // namespace aumls
