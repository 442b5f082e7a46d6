#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mbqct::ising {

// Ferromagnetic 2D square-lattice Ising parameters, J = 1 by convention.
struct IsingParams {
  double beta = 0.0;
  double j = 1.0;

  double z() const;  // tanh(beta * j)
  void validate() const;
};

inline IsingParams params_from_temperature(double t) {
  return IsingParams{1.0 / t, 1.0};
}

// 2 / ln(1 + sqrt(2))
double critical_temperature_2d();

// Transfer-matrix symbol; a unimodular phase factor of the row-correlator
// kernel.  Throws std::domain_error when the radicand is non-positive
// (happens only at the critical endpoints theta = 0, z = sqrt(2)-1).
std::complex<double> symbol_c(double theta, const IsingParams& p);

struct QuadratureOptions {
  int initial_points = 1 << 10;  // power of two, >= 256
  int max_points = 1 << 22;
  double tolerance = 1e-10;
};

// Fourier coefficients C_r of the symbol for r in [r_min, r_max], by uniform
// periodic quadrature with grid doubling until successive grids agree to the
// tolerance.  Near criticality (|sinh 2bJ - 1| < 1e-3) at least 2^16 points
// are used.  Throws NonConvergenceError if the doubling never settles or the
// imaginary residue stays above tolerance.
class FourierTable {
 public:
  static FourierTable compute(const IsingParams& p, int r_min, int r_max,
                              const QuadratureOptions& opts = {});

  double at(int r) const;
  int r_min() const { return r_min_; }
  int r_max() const { return r_max_; }

 private:
  int r_min_ = 0;
  int r_max_ = 0;
  std::vector<double> values_;
};

double fourier_coeff(int r, const IsingParams& p, int quadrature_points);

// Ordered even-cardinality 1-based positions on one row.
struct RowCorrelatorSpec {
  std::vector<int> positions;

  void validate() const;  // strictly increasing, even cardinality >= 2
};

// <prod_n X_{(1, j_n)}> in the thermodynamic limit: determinant of the
// m x m matrix with entry C_{col - row} over the index set
// U = union_n {j_{2n-1}+1 .. j_{2n}}.
double even_row_correlation(const RowCorrelatorSpec& spec,
                            const IsingParams& p,
                            const QuadratureOptions& opts = {});

// Literal signed permutation sum over Perm(U); oracle for the determinant
// identification, m <= 8.
double even_row_correlation_bruteforce(const RowCorrelatorSpec& spec,
                                       const IsingParams& p,
                                       const QuadratureOptions& opts = {});

// Yang's spontaneous magnetization: (1 - sinh^-4(2bJ))^{1/8} below Tc, else 0.
// Oracle for symmetry-broken one-body correlators.
double spontaneous_magnetization(const IsingParams& p);

// (1 + tanh^l bJ)^2 / 4
double fch_hadamard_fidelity(int l, const IsingParams& p);

// Independent single-qubit thermal flip probability e^-2bJ / (1 + e^-2bJ).
double fch_error_probability(const IsingParams& p);

}  // namespace mbqct::ising
