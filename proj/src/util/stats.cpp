#include "mbqct/util/stats.hpp"

#include <algorithm>
#include <cmath>

namespace mbqct::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(n - 1);
}

BinningResult binning_analysis(std::span<const double> xs, int min_bins) {
  BinningResult r;
  r.mean = mean(xs);
  if (xs.size() < 2) return r;

  std::vector<double> level(xs.begin(), xs.end());
  const double var0 = variance(level);
  r.stderr_naive = std::sqrt(var0 / static_cast<double>(level.size()));
  r.stderr_plateau = r.stderr_naive;

  while (static_cast<int>(level.size()) / 2 >= min_bins) {
    std::vector<double> next(level.size() / 2);
    for (std::size_t i = 0; i < next.size(); ++i)
      next[i] = 0.5 * (level[2 * i] + level[2 * i + 1]);
    level.swap(next);
    ++r.levels;
    const double err =
        std::sqrt(variance(level) / static_cast<double>(level.size()));
    r.stderr_plateau = std::max(r.stderr_plateau, err);
  }

  if (r.stderr_naive > 0.0) {
    const double ratio = r.stderr_plateau / r.stderr_naive;
    r.tau_int = 0.5 * ratio * ratio;
  }
  return r;
}

std::vector<double> rebin(std::span<const double> xs, int bins) {
  std::vector<double> out;
  if (bins <= 0 || xs.empty()) return out;
  const std::size_t per = std::max<std::size_t>(1, xs.size() / bins);
  out.reserve(xs.size() / per);
  for (std::size_t start = 0; start + per <= xs.size(); start += per) {
    double s = 0.0;
    for (std::size_t i = start; i < start + per; ++i) s += xs[i];
    out.push_back(s / static_cast<double>(per));
  }
  return out;
}

double percentile(std::vector<double> xs, double p) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const double pos = p * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

double binomial_stderr(double p, std::int64_t n) {
  if (n <= 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace mbqct::stats
