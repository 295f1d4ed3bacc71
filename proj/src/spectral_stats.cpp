#include "qnary/spectral_stats.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qnary/kernels.hpp"

namespace qnary::stats {

namespace {

constexpr std::uint64_t kWavenumberStream = 0x9e3779b97f4a7c15ULL;

std::string shortest(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

}  // namespace

double diagonal_variance(unsigned q, std::size_t n) {
  const auto count = static_cast<double>(words::str_count(q, n));
  return count * std::pow(static_cast<double>(q), -static_cast<double>(n));
}

double diagonal_variance_from_orbits(const SpectralInstance& inst, std::size_t n) {
  if (n > inst.graph.edge_count()) throw std::invalid_argument("coefficient index exceeds dimension");
  double sum = 0.0;
  for (const auto& po : debruijn::enumerate_primitive_pseudo_orbits(inst.graph.alphabet_size(), n))
    sum += std::norm(quantum::pseudo_orbit_amplitude(po, inst.sigma));
  return sum;
}

GroupedVariance grouped_variance(const SpectralInstance& inst, std::size_t n) {
  const quantum::PseudoOrbitExpansion expansion(inst, n);
  std::map<std::vector<std::uint32_t>, Complex> groups;
  for (std::size_t i = 0; i < expansion.pseudo_orbits().size(); ++i)
    groups[debruijn::edge_multiplicities(expansion.pseudo_orbits()[i], inst.graph)] += expansion.terms()[i].weight;
  GroupedVariance out;
  out.pseudo_orbit_count = expansion.pseudo_orbits().size();
  out.group_count = groups.size();
  for (const auto& [key, amplitude] : groups) out.value += std::norm(amplitude);
  return out;
}

double exact_grouped_variance(const SpectralInstance& inst, std::size_t n) { return grouped_variance(inst, n).value; }

MonteCarloEstimate monte_carlo_variance(const SpectralInstance& inst, std::size_t n, std::size_t samples,
                                        double k_max, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("monte_carlo_variance: need at least 2 samples");
  if (!(k_max > 0.0) || !std::isfinite(k_max)) throw std::invalid_argument("monte_carlo_variance: k_max must be positive");
  if (n > inst.graph.edge_count()) throw std::invalid_argument("coefficient index exceeds dimension");

  // Tagged so the k stream differs from the edge-length stream of the same seed.
  std::mt19937_64 rng(seed ^ kWavenumberStream);
  std::vector<double> ks(samples);
  for (double& k : ks) k = k_max * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  std::vector<Complex> values(samples);
  kernels::sample_coefficient(inst, n, ks, values);

  const auto count = static_cast<double>(samples);
  MonteCarloEstimate out;
  out.samples = samples;
  out.k_max = k_max;
  out.seed = seed;
  for (const Complex& a : values) {
    out.estimate += std::norm(a);
    out.mean += a;
  }
  out.estimate /= count;
  out.mean /= count;
  double spread = 0.0;
  double spread_mean = 0.0;
  for (const Complex& a : values) {
    const double d = std::norm(a) - out.estimate;
    spread += d * d;
    spread_mean += std::norm(a - out.mean);
  }
  out.std_error = std::sqrt(spread / (count - 1.0) / count);
  out.mean_std_error = std::sqrt(spread_mean / (count - 1.0) / count);
  return out;
}

double rmt_reference(Ensemble ensemble, std::size_t n, std::size_t dimension) {
  if (n > dimension) throw std::invalid_argument("rmt_reference: n exceeds dimension");
  if (ensemble == Ensemble::CUE) return 1.0;
  const auto nn = static_cast<double>(n);
  const auto e = static_cast<double>(dimension);
  return 1.0 + nn * (e - nn) / (e + 1.0);
}

nlohmann::ordered_json VarianceReport::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = q;
  j["m"] = m;
  j["n"] = n;
  j["dimension"] = dimension;
  j["seed"] = seed;
  j["pseudo_orbit_count"] = pseudo_orbit_count;
  j["diag"] = diag;
  j["diag_from_orbits"] = diag_from_orbits;
  j["exact_grouped"] = exact_grouped;
  j["degeneracy_groups"] = degeneracy_groups;
  j["cue_ref"] = cue_ref;
  j["coe_ref"] = coe_ref;
  if (mc) {
    j["samples"] = mc->samples;
    j["k_max"] = mc->k_max;
    j["mc_estimate"] = mc->estimate;
    j["std_error"] = mc->std_error;
    j["mc_mean_re"] = mc->mean.real();
    j["mc_mean_im"] = mc->mean.imag();
    j["mc_mean_std_error"] = mc->mean_std_error;
  }
  return j;
}

std::string VarianceReport::csv_header() {
  return "q,m,n,dimension,seed,pseudo_orbit_count,diag,diag_from_orbits,exact_grouped,degeneracy_groups,cue_ref,"
         "coe_ref,samples,k_max,mc_estimate,std_error,mc_mean_re,mc_mean_im,mc_mean_std_error";
}

std::string VarianceReport::csv_row() const {
  std::ostringstream out;
  out << q << ',' << m << ',' << n << ',' << dimension << ',' << seed << ',' << pseudo_orbit_count << ','
      << shortest(diag) << ',' << shortest(diag_from_orbits) << ',' << shortest(exact_grouped) << ','
      << degeneracy_groups << ',' << shortest(cue_ref) << ',' << shortest(coe_ref) << ',';
  if (mc)
    out << mc->samples << ',' << shortest(mc->k_max) << ',' << shortest(mc->estimate) << ','
        << shortest(mc->std_error) << ',' << shortest(mc->mean.real()) << ',' << shortest(mc->mean.imag()) << ','
        << shortest(mc->mean_std_error);
  else
    out << ",,,,,,";
  return out.str();
}

VarianceReport variance_report(unsigned q, unsigned m, std::size_t n, std::uint64_t seed, std::size_t samples,
                               double k_max) {
  const SpectralInstance inst = quantum::make_instance(q, m, seed);
  const std::size_t dimension = inst.graph.edge_count();
  if (n > dimension) throw std::invalid_argument("coefficient index exceeds dimension");

  VarianceReport r;
  r.q = q;
  r.m = m;
  r.n = n;
  r.dimension = dimension;
  r.seed = seed;
  r.diag = diagonal_variance(q, n);
  r.diag_from_orbits = diagonal_variance_from_orbits(inst, n);
  const GroupedVariance grouped = grouped_variance(inst, n);
  r.exact_grouped = grouped.value;
  r.degeneracy_groups = grouped.group_count;
  r.pseudo_orbit_count = grouped.pseudo_orbit_count;
  r.cue_ref = rmt_reference(Ensemble::CUE, n, dimension);
  r.coe_ref = rmt_reference(Ensemble::COE, n, dimension);
  if (samples > 0) r.mc = monte_carlo_variance(inst, n, samples, k_max, seed);
  return r;
}

}  // namespace qnary::stats
