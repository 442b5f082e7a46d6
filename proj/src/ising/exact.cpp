#include "mbqct/ising/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbqct/util/errors.hpp"
#include "mbqct/util/linalg.hpp"

namespace mbqct::ising {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_critical(const IsingParams& p) {
  return std::abs(std::sinh(2.0 * p.beta * p.j) - 1.0) < 1e-3;
}

// Index set U = union_n {j_{2n-1}+1, ..., j_{2n}}.
std::vector<int> column_set(const RowCorrelatorSpec& spec) {
  std::vector<int> u;
  for (std::size_t n = 0; n + 1 < spec.positions.size(); n += 2)
    for (int v = spec.positions[n] + 1; v <= spec.positions[n + 1]; ++v)
      u.push_back(v);
  return u;
}

int permutation_sign(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j]);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

double IsingParams::z() const { return std::tanh(beta * j); }

void IsingParams::validate() const {
  if (!(beta >= 0.0)) throw std::invalid_argument("IsingParams: beta must be >= 0");
  if (!(j > 0.0)) throw std::invalid_argument("IsingParams: J must be > 0");
}

double critical_temperature_2d() {
  return 2.0 / std::log(1.0 + std::sqrt(2.0));
}

std::complex<double> symbol_c(double theta, const IsingParams& p) {
  p.validate();
  const double z = p.z();
  const double z2 = z * z;
  const std::complex<double> eip = std::polar(1.0, theta);
  const std::complex<double> eim = std::conj(eip);
  const std::complex<double> numerator =
      2.0 * z * (1.0 + z2) - z2 * (1.0 - z2) * eip - (1.0 - z2) * eim;
  const double a = (1.0 + z2) * (1.0 + z2) - 2.0 * z * (1.0 - z2) * std::cos(theta);
  const double radicand = a * a - 4.0 * z2 * (1.0 - z2) * (1.0 - z2);
  if (radicand <= 0.0)
    throw std::domain_error("symbol_c: non-positive radicand (critical endpoint)");
  return numerator / std::sqrt(radicand);
}

FourierTable FourierTable::compute(const IsingParams& p, int r_min, int r_max,
                                   const QuadratureOptions& opts) {
  p.validate();
  if (r_min > r_max) throw std::invalid_argument("FourierTable: empty range");
  if (opts.initial_points < 256 ||
      (opts.initial_points & (opts.initial_points - 1)) != 0)
    throw std::invalid_argument(
        "FourierTable: quadrature points must be a power of two >= 256");

  int m = opts.initial_points;
  if (near_critical(p)) m = std::max(m, 1 << 16);

  const int count = r_max - r_min + 1;
  std::vector<double> prev;
  double max_imag = 0.0;

  for (; m <= opts.max_points; m *= 2) {
    // Uniform periodic grid, offset by half a step so the critical
    // singularity at theta = 0 is never sampled.
    const double h = 2.0 * kPi / m;
    std::vector<std::complex<double>> samples(m);
    for (int k = 0; k < m; ++k)
      samples[k] = symbol_c(-kPi + (k + 0.5) * h, p);

    std::vector<double> cur(count);
    max_imag = 0.0;
    for (int r = r_min; r <= r_max; ++r) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < m; ++k) {
        const double theta = -kPi + (k + 0.5) * h;
        acc += std::polar(1.0, -r * theta) * samples[k];
      }
      acc /= static_cast<double>(m);
      cur[r - r_min] = acc.real();
      max_imag = std::max(max_imag, std::abs(acc.imag()));
    }

    if (!prev.empty()) {
      double diff = 0.0;
      for (int i = 0; i < count; ++i)
        diff = std::max(diff, std::abs(cur[i] - prev[i]));
      if (diff <= opts.tolerance && max_imag <= opts.tolerance) {
        FourierTable t;
        t.r_min_ = r_min;
        t.r_max_ = r_max;
        t.values_ = std::move(cur);
        return t;
      }
    }
    prev = std::move(cur);
  }
  throw NonConvergenceError(
      "FourierTable: quadrature did not settle to tolerance before max_points");
}

double FourierTable::at(int r) const {
  if (r < r_min_ || r > r_max_)
    throw std::invalid_argument("FourierTable: index outside computed range");
  return values_[r - r_min_];
}

double fourier_coeff(int r, const IsingParams& p, int quadrature_points) {
  QuadratureOptions opts;
  opts.initial_points = quadrature_points;
  return FourierTable::compute(p, r, r, opts).at(r);
}

void RowCorrelatorSpec::validate() const {
  if (positions.size() < 2 || positions.size() % 2 != 0)
    throw std::invalid_argument(
        "RowCorrelatorSpec: need an even number (>= 2) of positions");
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (positions[i] <= positions[i - 1])
      throw std::invalid_argument(
          "RowCorrelatorSpec: positions must be strictly increasing");
}

double even_row_correlation(const RowCorrelatorSpec& spec,
                            const IsingParams& p,
                            const QuadratureOptions& opts) {
  spec.validate();
  const std::vector<int> u = column_set(spec);
  const int m = static_cast<int>(u.size());
  const int span = u.back() - u.front();
  const FourierTable table = FourierTable::compute(p, -span, span, opts);

  // Rows l run over U - 1 blockwise, so the entry C_{col - row - 1} is
  // C_{u[b] - u[a]}.
  std::vector<double> mat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mat[a * m + b] = table.at(u[b] - u[a]);
  return determinant(std::move(mat), m);
}

double even_row_correlation_bruteforce(const RowCorrelatorSpec& spec,
                                       const IsingParams& p,
                                       const QuadratureOptions& opts) {
  spec.validate();
  const std::vector<int> u = column_set(spec);
  const int m = static_cast<int>(u.size());
  if (m > 8)
    throw std::invalid_argument(
        "even_row_correlation_bruteforce: permutation sum limited to m <= 8");
  const int span = u.back() - u.front();
  const FourierTable table = FourierTable::compute(p, -span, span, opts);

  // sum over sigma in Perm(U) of sign(sigma) prod_l C_{sigma(l+1) - l - 1},
  // l running over [j_{2n-1}, j_{2n} - 1] per block; l + 1 enumerates U.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  double total = 0.0;
  do {
    double term = static_cast<double>(permutation_sign(perm));
    for (int i = 0; i < m; ++i) {
      const int l = u[i] - 1;
      const int sigma_of_l_plus_1 = u[perm[i]];
      term *= table.at(sigma_of_l_plus_1 - l - 1);
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

double spontaneous_magnetization(const IsingParams& p) {
  p.validate();
  const double s = std::sinh(2.0 * p.beta * p.j);
  if (s <= 1.0) return 0.0;
  return std::pow(1.0 - 1.0 / (s * s * s * s), 0.125);
}

double fch_hadamard_fidelity(int l, const IsingParams& p) {
  if (l < 1) throw std::invalid_argument("fch_hadamard_fidelity: l must be >= 1");
  p.validate();
  const double t = std::pow(std::tanh(p.beta * p.j), l);
  return (1.0 + t) * (1.0 + t) / 4.0;
}

double fch_error_probability(const IsingParams& p) {
  p.validate();
  const double w = std::exp(-2.0 * p.beta * p.j);
  return w / (1.0 + w);
}

}  // namespace mbqct::ising
