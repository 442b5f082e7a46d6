#include "mbqct/util/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace mbqct {

double determinant(std::vector<double> a, int n) {
  if (n == 0) return 1.0;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[col * n + col]);
    for (int row = col + 1; row < n; ++row) {
      const double v = std::abs(a[row * n + col]);
      if (v > best) {
        best = v;
        pivot = row;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int k = col; k < n; ++k)
        std::swap(a[pivot * n + k], a[col * n + k]);
      det = -det;
    }
    const double d = a[col * n + col];
    det *= d;
    for (int row = col + 1; row < n; ++row) {
      const double f = a[row * n + col] / d;
      if (f == 0.0) continue;
      for (int k = col + 1; k < n; ++k) a[row * n + k] -= f * a[col * n + k];
    }
  }
  return det;
}

}  // namespace mbqct
