#pragma once

#include <span>
#include <vector>

#include "aumls/errors.hpp"

namespace aumls {

// Dense row-major feature matrix, one row per example.
struct FeatureMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  FeatureMatrix() = default;
  FeatureMatrix(int n, int p) : rows(n), cols(p), data(static_cast<size_t>(n) * p, 0.0) {}

  double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  std::span<const double> row(int i) const {
    return {data.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)};
  }

  // y = X w, one dot product per row.
  std::vector<double> multiply(std::span<const double> w) const {
    if (static_cast<int>(w.size()) != cols)
      throw ValidationError("matrix-vector dimension mismatch");
    std::vector<double> y(rows, 0.0);
    for (int i = 0; i < rows; ++i) {
      double acc = 0.0;
      const double* r = data.data() + static_cast<size_t>(i) * cols;
      for (int j = 0; j < cols; ++j) acc += r[j] * w[j];
      y[i] = acc;
    }
    return y;
  }

  // d = X^T g.
  std::vector<double> multiply_transposed(std::span<const double> g) const {
    if (static_cast<int>(g.size()) != rows)
      throw ValidationError("matrix-vector dimension mismatch");
    std::vector<double> d(cols, 0.0);
    for (int i = 0; i < rows; ++i) {
      const double* r = data.data() + static_cast<size_t>(i) * cols;
      for (int j = 0; j < cols; ++j) d[j] += r[j] * g[i];
    }
    return d;
  }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace aumls
