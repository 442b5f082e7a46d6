#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mbqct/lattice/graph.hpp"
#include "mbqct/util/rng.hpp"
#include "mbqct/util/stats.hpp"

namespace mbqct::ising {

struct McSchedule {
  std::int64_t equilibration_sweeps = 1000;
  std::int64_t measurement_sweeps = 10000;
  std::int64_t thinning = 1;
  std::uint64_t seed = 1;
  enum class Init { AllUp, Random } init = Init::AllUp;

  std::int64_t samples() const { return measurement_sweeps / thinning; }
  void validate() const;
};

// +-1 spins over the sites of an attached graph, with cached bond sum
// (energy = -J * bond_sum) and magnetization.
struct SpinConfig {
  const Graph* graph = nullptr;
  std::vector<std::int8_t> spins;
  std::int64_t bond_sum = 0;
  std::int64_t magnetization = 0;

  static SpinConfig all_up(const Graph& g);
  static SpinConfig random(const Graph& g, rng::Engine& engine);

  void recompute_caches();
  double energy(double j = 1.0) const { return -j * static_cast<double>(bond_sum); }
};

// Metropolis acceptance probability for an energy change delta_e (units J).
double metropolis_acceptance(double beta, double delta_e);

// One attempted flip per site in fixed scan order.
void metropolis_sweep(SpinConfig& config, double beta, rng::Engine& engine);

// Product of spins over `sites`, sampled in the symmetry-broken ensemble
// when init == AllUp (all-up start, global flip when the instantaneous
// magnetization is negative at measurement time) and in the symmetric
// ensemble when init == Random.  Error bar from logarithmic binning.
stats::EstimateWithError sample_correlator(const Graph& g,
                                           std::span<const std::int32_t> sites,
                                           double beta,
                                           const McSchedule& schedule);

struct PtTemperatureResult {
  double t = 0.0;
  double energy_per_site = 0.0;
  double energy_err = 0.0;
  double abs_m = 0.0;
  double abs_m_err = 0.0;
  double binder = 0.0;
  double binder_err = 0.0;
  // Raw measurement series (per measurement), for reuse/bootstrap.
  std::vector<double> e_series, m2_series, m4_series;
};

struct PtResult {
  std::vector<PtTemperatureResult> temperatures;
  std::vector<double> swap_acceptance;  // between ladder slots k and k+1
  std::vector<std::string> warnings;
};

// Replica exchange over a strictly increasing temperature ladder; swaps are
// attempted every sweep on alternating adjacent pairs with acceptance
// min(1, exp((beta_a - beta_b)(E_a - E_b))).
PtResult exchange_mc(const Graph& g, std::span<const double> temperatures,
                     const McSchedule& schedule);

struct BinderPoint {
  double t, u, err;
};

struct TcEstimate {
  double tc = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::vector<int> sizes;
  std::vector<std::vector<BinderPoint>> binder_curves;  // per size
  std::vector<std::string> warnings;
};

// Binder-cumulant crossing over a graph family.  Throws NonConvergenceError
// when no crossing lies inside the grid.
TcEstimate estimate_tc(const std::function<Graph(int)>& family,
                       std::span<const int> sizes,
                       std::span<const double> temperatures,
                       const McSchedule& schedule, int workers = 0);

}  // namespace mbqct::ising
