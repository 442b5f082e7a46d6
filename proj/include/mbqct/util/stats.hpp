#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mbqct::stats {

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased, 0 if n < 2

// Logarithmic binning analysis of a correlated time series.
// stderr_plateau is the largest standard error over all binning levels that
// still have >= min_bins bins; tau_int is the integrated autocorrelation
// time implied by the ratio to the naive (level-0) error, in units of the
// series spacing.
struct BinningResult {
  double mean = 0.0;
  double stderr_naive = 0.0;
  double stderr_plateau = 0.0;
  double tau_int = 0.5;
  int levels = 0;
};
BinningResult binning_analysis(std::span<const double> xs, int min_bins = 32);

// Collapse a series into `bins` contiguous bin means (for bootstrap use).
std::vector<double> rebin(std::span<const double> xs, int bins);

// Percentile via linear interpolation on a copy (p in [0,1]).
double percentile(std::vector<double> xs, double p);

struct EstimateWithError {
  double value = 0.0;
  double error = 0.0;
  double tau_int = 0.5;
  std::vector<std::string> warnings;
};

// Standard error of a binomial fraction p over n trials.
double binomial_stderr(double p, std::int64_t n);

}  // namespace mbqct::stats
