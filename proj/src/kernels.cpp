#include "qnary/kernels.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qnary::kernels {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t word_space(unsigned q, std::size_t n) {
  if (q == 0 || n == 0) throw std::invalid_argument("count_strict_words: need q >= 1 and n >= 1");
  return to_u64(checked_pow(q, static_cast<unsigned>(n)));
}

// Counts strict words with base-q index in [begin, end).
std::uint64_t count_range(unsigned q, std::size_t n, std::uint64_t begin, std::uint64_t end) {
  std::vector<words::Letter> letters(n);
  std::uint64_t value = begin;
  for (std::size_t i = n; i-- > 0;) {
    letters[i] = static_cast<words::Letter>(value % q);
    value /= q;
  }
  std::vector<std::size_t> scratch;
  scratch.reserve(n);
  std::uint64_t count = 0;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (words::has_strict_factorization(letters, scratch)) ++count;
    for (std::size_t i = n; i-- > 0;) {
      if (++letters[i] < q) break;
      letters[i] = 0;
    }
  }
  return count;
}

void check_sizes(std::size_t in, std::size_t out) {
  if (in != out) throw std::invalid_argument("kernel output span has the wrong size");
}

quantum::Complex coefficient_at(const quantum::SpectralInstance& inst, std::size_t n, double k) {
  return quantum::char_poly_direct(quantum::evolution_operator(inst, k)).a.at(n);
}

quantum::Complex expansion_at(std::span<const quantum::ExpansionTerm> terms, double k) {
  quantum::Complex sum{0.0};
  for (const auto& t : terms) sum += t.weight * std::polar(1.0, k * t.length);
  return sum;
}

}  // namespace

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::uint64_t count_strict_words(unsigned q, std::size_t n) {
  return count_range(q, n, 0, word_space(q, n));
}

void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  check_sizes(ks.size(), out.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = coefficient_at(inst, n, ks[i]);
}

void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  check_sizes(ks.size(), out.size());
  for (std::size_t i = 0; i < ks.size(); ++i) out[i] = expansion_at(terms, ks[i]);
}

}  // namespace serial

namespace omp {

std::uint64_t count_strict_words(unsigned q, std::size_t n) {
  const std::uint64_t total = word_space(q, n);
  const auto chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : count)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    count += count_range(q, n, begin, std::min(total, begin + kChunk));
  }
  return count;
}

void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  check_sizes(ks.size(), out.size());
  if (n > inst.graph.edge_count()) throw std::out_of_range("coefficient index exceeds dimension");
  const auto count = static_cast<std::int64_t>(ks.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = coefficient_at(inst, n, ks[i]);
}

void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  check_sizes(ks.size(), out.size());
  const auto count = static_cast<std::int64_t>(ks.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = expansion_at(terms, ks[i]);
}

}  // namespace omp

std::uint64_t count_strict_words(unsigned q, std::size_t n) {
  return openmp_enabled() ? omp::count_strict_words(q, n) : serial::count_strict_words(q, n);
}

void sample_coefficient(const quantum::SpectralInstance& inst, std::size_t n, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  if (openmp_enabled())
    omp::sample_coefficient(inst, n, ks, out);
  else
    serial::sample_coefficient(inst, n, ks, out);
}

void evaluate_expansion(std::span<const quantum::ExpansionTerm> terms, std::span<const double> ks,
                        std::span<quantum::Complex> out) {
  if (openmp_enabled())
    omp::evaluate_expansion(terms, ks, out);
  else
    serial::evaluate_expansion(terms, ks, out);
}

}  // namespace qnary::kernels
