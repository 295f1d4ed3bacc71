#pragma once

// Data-parallel kernels. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp` that must return
// identical results; the unqualified entry points dispatch to the OpenMP
// version when the library is built with OpenMP.
//
// Floating-point kernels write one result per input slot and never reduce
// across threads, so their output does not depend on scheduling.

#include <complex>
#include <cstdint>
#include <span>

#include "qnary/quantum.hpp"

namespace qnary::kernels {

bool openmp_enabled() noexcept;
int max_threads() noexcept;

namespace serial {

/// Number of words of length n >= 1 over q letters with a strictly
/// decreasing Lyndon factorization.
std::uint64_t count_strict_words(unsigned q, std::size_t n);

/// out[i] = a_n(ks[i]) from det(xi I - U(ks[i])).
void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out);

/// out[i] = sum_t terms[t].weight * exp(i ks[i] terms[t].length)
void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out);

}  // namespace serial

namespace omp {

std::uint64_t count_strict_words(unsigned q, std::size_t n);
void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out);
void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out);

}  // namespace omp

std::uint64_t count_strict_words(unsigned q, std::size_t n);
void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out);
void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out);

}  // namespace qnary::kernels
