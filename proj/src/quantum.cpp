#include "qnary/quantum.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qnary::quantum {

Matrix dft_matrix(unsigned q) {
  if (q == 0) throw std::invalid_argument("dft_matrix: q must be at least 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  Matrix out(q, q);
  for (unsigned j = 0; j < q; ++j)
    for (unsigned k = 0; k < q; ++k) {
      // Reduce the exponent first so large q keeps full phase accuracy.
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % q) / q;
      out(j, k) = std::polar(scale, phase);
    }
  return out;
}

ScatteringMatrix assemble_sigma(const QNaryGraph& g) {
  const unsigned q = g.alphabet_size();
  const auto edges = static_cast<Eigen::Index>(g.edge_count());
  const Matrix vertex = dft_matrix(q);
  ScatteringMatrix sigma{q, g.order(), Matrix::Zero(edges, edges)};
  for (debruijn::Index v = 0; v < g.vertex_count(); ++v)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        const auto to = static_cast<Eigen::Index>(g.out_edge(v, c));
        const auto from = static_cast<Eigen::Index>(g.in_edge(v, b));
        sigma.entries(to, from) = vertex(b, c);
      }
  return sigma;
}

EdgeLengths sample_edge_lengths(const QNaryGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeLengths out{std::vector<double>(g.edge_count()), seed};
  for (double& l : out.lengths) l = 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return out;
}

SpectralInstance make_instance(QNaryGraph graph, EdgeLengths lengths) {
  if (lengths.lengths.size() != graph.edge_count())
    throw std::invalid_argument("edge length vector does not match the graph");
  for (double l : lengths.lengths)
    if (!(l > 0.0) || !std::isfinite(l)) throw std::invalid_argument("edge lengths must be positive and finite");
  ScatteringMatrix sigma = assemble_sigma(graph);
  return SpectralInstance{std::move(graph), std::move(sigma), std::move(lengths)};
}

SpectralInstance make_instance(unsigned q, unsigned m, std::uint64_t seed) {
  QNaryGraph g(q, m);
  EdgeLengths lengths = sample_edge_lengths(g, seed);
  return make_instance(std::move(g), std::move(lengths));
}

Matrix evolution_operator(const SpectralInstance& inst, double k) {
  if (!std::isfinite(k)) throw std::invalid_argument("evolution_operator: k must be finite");
  Matrix u = inst.sigma.entries;
  for (Eigen::Index e = 0; e < u.rows(); ++e)
    u.row(e) *= std::polar(1.0, k * inst.lengths.lengths[static_cast<std::size_t>(e)]);
  return u;
}

CharPolyCoefficients char_poly_direct(const Matrix& u, CharPolyOptions options) {
  if (u.rows() != u.cols()) throw std::invalid_argument("char_poly_direct: matrix must be square");
  const auto n = static_cast<std::size_t>(u.rows());
  if (n > options.max_dimension)
    throw std::range_error("char_poly_direct: dimension " + std::to_string(n) + " exceeds cap " +
                           std::to_string(options.max_dimension));
  if (!(options.radius > 0.0)) throw std::invalid_argument("char_poly_direct: radius must be positive");

  const std::size_t points = n + 1;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(points);
  std::vector<Complex> values(points);
  const Matrix identity = Matrix::Identity(u.rows(), u.cols());
  for (std::size_t j = 0; j < points; ++j) {
    const Complex xi = std::polar(options.radius, step * static_cast<double>(j));
    values[j] = n == 0 ? Complex{1.0} : Matrix(xi * identity - u).partialPivLu().determinant();
  }

  // p(xi) = sum_d c_d xi^d with c_d = a[N-d]; the samples are a DFT of c_d R^d.
  CharPolyCoefficients out{std::vector<Complex>(points)};
  for (std::size_t d = 0; d < points; ++d) {
    Complex sum{0.0};
    for (std::size_t j = 0; j < points; ++j)
      sum += values[j] * std::polar(1.0, -step * static_cast<double>((j * d) % points));
    const double scale = std::pow(options.radius, static_cast<double>(d)) * static_cast<double>(points);
    out.a[n - d] = sum / scale;
  }
  out.a[0] = Complex{1.0};  // monic
  return out;
}

double unitarity_residual(const Matrix& m) {
  const Matrix gram = m.adjoint() * m - Matrix::Identity(m.cols(), m.cols());
  return gram.cwiseAbs().maxCoeff();
}

double self_inversive_residual(const CharPolyCoefficients& c) {
  const std::size_t n = c.dimension();
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) worst = std::max(worst, std::abs(c.a[n - i] - c.a[n] * std::conj(c.a[i])));
  return worst;
}

Complex orbit_amplitude(const PeriodicOrbit& orbit, const ScatteringMatrix& sigma, const QNaryGraph& g) {
  const auto edges = orbit.edge_sequence(g);
  Complex product{1.0};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto from = edges[i];
    const auto to = edges[(i + 1) % edges.size()];
    product *= sigma(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from));
  }
  return product;
}

Complex orbit_amplitude(const PeriodicOrbit& orbit, const ScatteringMatrix& sigma) {
  return orbit_amplitude(orbit, sigma, QNaryGraph(sigma.q, sigma.m));
}

Complex pseudo_orbit_amplitude(const PseudoOrbit& po, const ScatteringMatrix& sigma) {
  if (po.orbits.empty()) return Complex{1.0};
  const QNaryGraph g(sigma.q, sigma.m);
  Complex product{1.0};
  for (const auto& orbit : po.orbits) product *= orbit_amplitude(orbit, sigma, g);
  return product;
}

double pseudo_orbit_length(const PseudoOrbit& po, const EdgeLengths& lengths, const QNaryGraph& g) {
  double total = 0.0;
  for (const auto& orbit : po.orbits)
    for (debruijn::Index e : orbit.edge_sequence(g)) total += lengths.lengths.at(e);
  return total;
}

PseudoOrbitExpansion::PseudoOrbitExpansion(const SpectralInstance& inst, std::size_t n) : n_(n) {
  if (n > inst.graph.edge_count())
    throw std::invalid_argument("coefficient index " + std::to_string(n) + " exceeds dimension " +
                                std::to_string(inst.graph.edge_count()));
  orbits_ = debruijn::enumerate_primitive_pseudo_orbits(inst.graph.alphabet_size(), n);
  terms_.reserve(orbits_.size());
  for (const auto& po : orbits_) {
    const double sign = po.orbit_count() % 2 == 0 ? 1.0 : -1.0;
    terms_.push_back({sign * pseudo_orbit_amplitude(po, inst.sigma), pseudo_orbit_length(po, inst.lengths, inst.graph)});
  }
}

Complex PseudoOrbitExpansion::evaluate(double k) const {
  Complex sum{0.0};
  for (const auto& t : terms_) sum += t.weight * std::polar(1.0, k * t.length);
  return sum;
}

Complex coeff_from_pseudo_orbits(std::size_t n, const SpectralInstance& inst, double k) {
  if (!std::isfinite(k)) throw std::invalid_argument("k must be finite");
  return PseudoOrbitExpansion(inst, n).evaluate(k);
}

std::vector<Complex> coeffs_from_pseudo_orbits(const SpectralInstance& inst, double k) {
  std::vector<Complex> out;
  for (std::size_t n = 0; n <= inst.graph.edge_count(); ++n) out.push_back(coeff_from_pseudo_orbits(n, inst, k));
  return out;
}

}  // namespace qnary::quantum
