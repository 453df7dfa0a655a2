#include "aumls/roc.hpp"

#include <algorithm>
#include <cmath>

#include "aumls/errors.hpp"

namespace aumls {

RocCurve roc(std::span<const double> predictions, const ErrorModel& model) {
  if (static_cast<int>(predictions.size()) != model.n_examples())
    throw ValidationError("prediction vector length does not match example count");
  for (double y : predictions)
    if (!std::isfinite(y)) throw ValidationError("prediction not finite");

  const auto& bps = model.breakpoints();
  const int B = model.size();
  std::vector<double> t(B);
  for (int b = 0; b < B; ++b) t[b] = bps[b].value - predictions[bps[b].example - 1];
  std::vector<int> order(B);
  for (int b = 0; b < B; ++b) order[b] = b;
  std::sort(order.begin(), order.end(), [&](int a, int c) { return t[a] < t[c]; });

  RocCurve curve;
  curve.fpr.push_back(0.0);
  curve.fnr.push_back(1.0);
  double fp = 0.0, fn = 1.0;
  int g = 0;
  while (g < B) {
    const double rep = t[order[g]];
    int h = g;
    while (h < B && t[order[h]] - rep <= kRocTieTol * std::max(1.0, std::fabs(rep))) {
      fp += bps[order[h]].delta_fp;
      fn += bps[order[h]].delta_fn;
      ++h;
    }
    curve.thresholds.push_back(rep);
    curve.fpr.push_back(fp);
    curve.fnr.push_back(fn);
    g = h;
  }
  // Terminal rates are exactly (1, 0): the cumulative sums land there up
  // to the validated total tolerance.
  curve.fpr.back() = 1.0;
  curve.fnr.back() = 0.0;

  curve.tpr.resize(curve.fnr.size());
  curve.min_vec.resize(curve.fnr.size());
  for (size_t i = 0; i < curve.fnr.size(); ++i) {
    curve.tpr[i] = 1.0 - curve.fnr[i];
    curve.min_vec[i] = std::min(curve.fpr[i], curve.fnr[i]);
  }
  return curve;
}

double auc(const RocCurve& curve) {
  double area = 0.0;
  for (size_t i = 0; i + 1 < curve.fpr.size(); ++i)
    area += (curve.fpr[i + 1] - curve.fpr[i]) * (curve.tpr[i + 1] + curve.tpr[i]) / 2.0;
  return area;
}

double aum(const RocCurve& curve) {
  double area = 0.0;
  // Interior intervals only; the min is zero below the first threshold
  // and above the last one.
  for (size_t g = 1; g < curve.thresholds.size(); ++g)
    area += (curve.thresholds[g] - curve.thresholds[g - 1]) * curve.min_vec[g];
  return area;
}

double aum(std::span<const double> predictions, const ErrorModel& model) {
  return aum(roc(predictions, model));
}

std::vector<GridPoint> grid_evaluate(std::span<const double> w, std::span<const double> d,
                                     const FeatureMatrix& X, const ErrorModel& model,
                                     std::span<const double> steps) {
  if (X.rows != model.n_examples())
    throw ValidationError("feature matrix rows do not match example count");
  for (double s : steps)
    if (!(s >= 0.0)) throw ValidationError("grid steps must be >= 0");

  const std::vector<double> base = X.multiply(w);
  const std::vector<double> move = X.multiply(d);
  std::vector<GridPoint> out(steps.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(steps.size()); ++k) {
    std::vector<double> yhat(base.size());
    for (size_t i = 0; i < base.size(); ++i) yhat[i] = base[i] + steps[k] * move[i];
    const RocCurve curve = roc(yhat, model);
    out[k] = {steps[k], aum(curve), auc(curve)};
  }
  return out;
}

}  // namespace aumls
