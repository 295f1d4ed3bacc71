#pragma once

// Variance of characteristic-polynomial coefficients over the wavenumber k:
// the diagonal approximation, the exact value for rationally independent
// edge lengths, a Monte-Carlo estimate, and random-matrix references.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qnary/quantum.hpp"

namespace qnary::stats {

using quantum::Complex;
using quantum::SpectralInstance;

/// Str_q(n) q^{-n}; (q-1)/q for n >= 2, 1 for n in {0, 1}.
double diagonal_variance(unsigned q, std::size_t n);

/// sum over primitive pseudo orbits of length n of |A_po|^2.
double diagonal_variance_from_orbits(const SpectralInstance& inst, std::size_t n);

struct GroupedVariance {
  double value = 0.0;
  std::size_t pseudo_orbit_count = 0;
  std::size_t group_count = 0;

  /// Every pseudo orbit has its own edge-multiplicity vector.
  bool all_singletons() const noexcept { return group_count == pseudo_orbit_count; }
};

/// Groups pseudo orbits of length n by edge-multiplicity vector and sums
/// |sum_group (-1)^{m_po} A_po|^2. Equal to the k-average of |a_n|^2 when the
/// edge lengths are rationally independent.
GroupedVariance grouped_variance(const SpectralInstance& inst, std::size_t n);
double exact_grouped_variance(const SpectralInstance& inst, std::size_t n);

struct MonteCarloEstimate {
  double estimate = 0.0;     // mean of |a_n(k)|^2
  double std_error = 0.0;
  Complex mean{0.0};         // mean of a_n(k)
  double mean_std_error = 0.0;
  std::size_t samples = 0;
  double k_max = 0.0;
  std::uint64_t seed = 0;
};

/// Draws k uniformly on [0, k_max] from std::mt19937_64 (seed xor a fixed
/// stream tag, so it never replays the edge-length stream) and averages
/// over the determinant route. Throws std::invalid_argument for samples < 2
/// or k_max <= 0.
MonteCarloEstimate monte_carlo_variance(const SpectralInstance& inst, std::size_t n, std::size_t samples,
                                        double k_max, std::uint64_t seed);

enum class Ensemble { COE, CUE };

/// CUE: 1. COE: 1 + n(E-n)/(E+1). Throws std::invalid_argument for n > E.
double rmt_reference(Ensemble ensemble, std::size_t n, std::size_t dimension);

struct VarianceReport {
  unsigned q = 0;
  unsigned m = 0;
  std::size_t n = 0;
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  double diag = 0.0;
  double diag_from_orbits = 0.0;
  double exact_grouped = 0.0;
  std::size_t degeneracy_groups = 0;
  double cue_ref = 1.0;
  double coe_ref = 1.0;
  std::uint64_t pseudo_orbit_count = 0;
  std::optional<MonteCarloEstimate> mc;

  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

/// samples == 0 skips the Monte-Carlo estimate.
VarianceReport variance_report(unsigned q, unsigned m, std::size_t n, std::uint64_t seed, std::size_t samples,
                               double k_max = 1e4);

}  // namespace qnary::stats
