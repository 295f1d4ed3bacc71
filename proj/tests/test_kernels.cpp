#include <doctest.h>

#include <random>

#include "qnary/kernels.hpp"

using namespace qnary;
using namespace qnary::kernels;

TEST_CASE("strict-word counting: OpenMP equals serial") {
  for (unsigned q : {1U, 2U, 3U, 4U})
    for (std::size_t n = 1; n <= (q == 2 ? 16U : 8U); ++n)
      CHECK(omp::count_strict_words(q, n) == serial::count_strict_words(q, n));
  // Ranges that straddle several chunks with a partial tail.
  CHECK(omp::count_strict_words(3, 10) == serial::count_strict_words(3, 10));
  CHECK(serial::count_strict_words(3, 10) == 2 * 19683);
  CHECK_THROWS_AS(serial::count_strict_words(2, 0), std::invalid_argument);
}

TEST_CASE("coefficient sampling: OpenMP equals serial bit for bit") {
  const auto inst = quantum::make_instance(2, 2, 17);
  std::mt19937_64 rng(1);
  std::vector<double> ks(257);
  for (auto& k : ks) k = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 1e3;
  std::vector<quantum::Complex> a(ks.size()), b(ks.size());
  serial::sample_coefficient(inst, 4, ks, a);
  omp::sample_coefficient(inst, 4, ks, b);
  CHECK(a == b);
  std::vector<quantum::Complex> wrong(3);
  CHECK_THROWS_AS(serial::sample_coefficient(inst, 4, ks, wrong), std::invalid_argument);
  CHECK_THROWS_AS(omp::sample_coefficient(inst, 9, ks, b), std::out_of_range);
}

TEST_CASE("expansion evaluation: OpenMP equals serial and the expansion object") {
  const auto inst = quantum::make_instance(3, 1, 4);
  const quantum::PseudoOrbitExpansion expansion(inst, 5);
  std::vector<double> ks{0.0, 1.5, 22.25, 901.0};
  std::vector<quantum::Complex> a(ks.size()), b(ks.size()), c(ks.size());
  serial::evaluate_expansion(expansion.terms(), ks, a);
  omp::evaluate_expansion(expansion.terms(), ks, b);
  evaluate_expansion(expansion.terms(), ks, c);
  CHECK(a == b);
  CHECK(a == c);
  for (std::size_t i = 0; i < ks.size(); ++i) CHECK(std::abs(a[i] - expansion.evaluate(ks[i])) < 1e-13);
}

TEST_CASE("thread reporting") {
  CHECK(max_threads() >= 1);
  if (!openmp_enabled()) CHECK(max_threads() == 1);
}
