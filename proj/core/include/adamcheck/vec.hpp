#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace adamcheck {

using Vec = std::vector<double>;

inline double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm_sq(const Vec& x) { return dot(x, x); }

inline double norm(const Vec& x) { return std::sqrt(norm_sq(x)); }

inline bool all_finite(const Vec& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace adamcheck
