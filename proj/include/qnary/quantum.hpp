#pragma once

// Quantized q-nary graphs: DFT vertex scattering, the global scattering
// matrix Sigma, the evolution operator U(k) = exp(ikL) Sigma and the
// coefficients of its characteristic polynomial, both from determinants and
// from the primitive pseudo-orbit expansion.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qnary/debruijn.hpp"

namespace qnary::quantum {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using debruijn::PeriodicOrbit;
using debruijn::PseudoOrbit;
using debruijn::QNaryGraph;

/// Entry (j, k) is omega^{jk} / sqrt(q), omega = exp(2 pi i / q).
Matrix dft_matrix(unsigned q);

/// E x E matrix with Sigma(e, e') nonzero only when t(e') == o(e).
struct ScatteringMatrix {
  unsigned q;
  unsigned m;
  Matrix entries;

  Complex operator()(debruijn::Index to, debruijn::Index from) const { return entries(to, from); }
};

/// At vertex w the incoming edge b.w and outgoing edge w.c are coupled with
/// amplitude omega^{bc} / sqrt(q).
ScatteringMatrix assemble_sigma(const QNaryGraph& g);

struct EdgeLengths {
  std::vector<double> lengths;
  std::uint64_t seed;
};

/// i.i.d. uniform lengths on [1, 2) drawn from std::mt19937_64. The top 53
/// bits of each draw are mapped to the mantissa directly, so the sequence is
/// identical on every platform.
EdgeLengths sample_edge_lengths(const QNaryGraph& g, std::uint64_t seed);

struct SpectralInstance {
  QNaryGraph graph;
  ScatteringMatrix sigma;
  EdgeLengths lengths;
};

/// Throws std::invalid_argument when the lengths do not match the graph.
SpectralInstance make_instance(QNaryGraph graph, EdgeLengths lengths);
SpectralInstance make_instance(unsigned q, unsigned m, std::uint64_t seed);

/// diag(exp(i k l_e)) * Sigma. Throws std::invalid_argument for non-finite k.
Matrix evolution_operator(const SpectralInstance& inst, double k);

/// Coefficients of det(xi I - U) = sum_n a[n] xi^{N-n}.
struct CharPolyCoefficients {
  std::vector<Complex> a;

  std::size_t dimension() const noexcept { return a.empty() ? 0 : a.size() - 1; }
};

struct CharPolyOptions {
  std::size_t max_dimension = 64;
  double radius = 1.0;
};

/// Samples det(xi_j I - U) on the circle |xi| = radius at N+1 equally spaced
/// points and recovers the coefficients by an inverse DFT. For unitary U the
/// unit circle keeps every coefficient's error near eps * max|det|; larger
/// radii amplify the error of a[n] by radius^{n} (2^27 at E = 27). Throws
/// std::range_error above max_dimension and std::invalid_argument for a
/// non-square input.
CharPolyCoefficients char_poly_direct(const Matrix& u, CharPolyOptions options = {});

/// max |(M^H M - I)_{ij}|
double unitarity_residual(const Matrix& m);

/// max_n |a[N-n] - a[N] conj(a[n])|
double self_inversive_residual(const CharPolyCoefficients& c);

/// Cyclic product Sigma(e_2, e_1) Sigma(e_3, e_2) ... Sigma(e_1, e_l).
Complex orbit_amplitude(const PeriodicOrbit& orbit, const ScatteringMatrix& sigma);
Complex orbit_amplitude(const PeriodicOrbit& orbit, const ScatteringMatrix& sigma, const QNaryGraph& g);

/// Product of the member amplitudes; 1 for the empty pseudo orbit.
Complex pseudo_orbit_amplitude(const PseudoOrbit& po, const ScatteringMatrix& sigma);

/// Sum of traversed edge lengths, counted with multiplicity.
double pseudo_orbit_length(const PseudoOrbit& po, const EdgeLengths& lengths, const QNaryGraph& g);

/// One summand of the pseudo-orbit expansion: (-1)^{m_po} A_po and l_po.
struct ExpansionTerm {
  Complex weight;
  double length;
};

/// The k-independent data of a_n: one term per primitive pseudo orbit of
/// topological length n.
class PseudoOrbitExpansion {
 public:
  PseudoOrbitExpansion(const SpectralInstance& inst, std::size_t n);

  std::size_t index() const noexcept { return n_; }
  const std::vector<PseudoOrbit>& pseudo_orbits() const noexcept { return orbits_; }
  const std::vector<ExpansionTerm>& terms() const noexcept { return terms_; }

  /// a_n(k) = sum (-1)^{m_po} A_po exp(i k l_po)
  Complex evaluate(double k) const;

 private:
  std::size_t n_;
  std::vector<PseudoOrbit> orbits_;
  std::vector<ExpansionTerm> terms_;
};

/// a_n(k) from the primitive pseudo orbits of length n. Throws
/// std::invalid_argument for n > E.
Complex coeff_from_pseudo_orbits(std::size_t n, const SpectralInstance& inst, double k);

/// a_0 ... a_E from the expansion.
std::vector<Complex> coeffs_from_pseudo_orbits(const SpectralInstance& inst, double k);

}  // namespace qnary::quantum
