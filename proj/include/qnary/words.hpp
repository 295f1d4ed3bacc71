#pragma once

// Words over the ordered alphabet {0, ..., q-1}, Lyndon words and the
// Chen-Fox-Lyndon factorization, plus counts of strictly decreasing
// factorizations.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnary/integer.hpp"

namespace qnary::words {

using Letter = std::uint32_t;

/// A finite word over an alphabet of `q` letters. Letters are stored as
/// integers; lexicographic order on letters is integer order.
class Word {
 public:
  Word(std::vector<Letter> letters, unsigned q);

  /// Parses "0110" (q <= 10) or "3,11,0" (any q). Throws std::invalid_argument.
  static Word parse(std::string_view text, unsigned q);

  std::span<const Letter> letters() const noexcept { return letters_; }
  unsigned alphabet_size() const noexcept { return q_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Digit string for q <= 10, comma-separated integers above.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  unsigned q_;
};

/// Order on raw letter sequences. A proper prefix is smaller.
std::strong_ordering compare_letters(std::span<const Letter> a, std::span<const Letter> b) noexcept;

/// Throws std::invalid_argument if the alphabets differ.
std::strong_ordering lex_compare(const Word& a, const Word& b);

bool is_lyndon(std::span<const Letter> letters) noexcept;
/// Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);

/// The standard decomposition w = v_1 v_2 ... v_k with v_j >= v_{j+1}.
struct LyndonFactorization {
  std::vector<Word> factors;

  Word concatenate() const;
  std::string to_string() const;  // "(1)(01)"
};

/// End offsets (exclusive) of the Lyndon factors of `letters`, via Duval's
/// algorithm. Linear time; `ends` is cleared first.
void duval_factor_ends(std::span<const Letter> letters, std::vector<std::size_t>& ends);

/// Throws std::invalid_argument on the empty word.
LyndonFactorization duval_factorize(const Word& w);

bool is_strictly_decreasing(const LyndonFactorization& f);

/// True iff the Lyndon factorization of `letters` has no repeated factor.
/// Allocation-free apart from `scratch`; used by the enumeration kernels.
bool has_strict_factorization(std::span<const Letter> letters, std::vector<std::size_t>& scratch);

/// All Lyndon words of length exactly `length` in lexicographic order.
std::vector<Word> lyndon_words(unsigned q, std::size_t length);

/// L_q(l) by Möbius inversion. Throws std::range_error on overflow.
Count count_lyndon(unsigned q, std::size_t length);

/// Checks sum_{l | m} l L_q(l) == q^m exactly.
bool verify_lemma1(unsigned q, std::size_t m);

struct EnumerationBudget {
  std::uint64_t max_items = 100'000'000;
};

/// Counts words of length n whose factorization is strictly decreasing by
/// factorizing all q^n of them. Throws std::range_error when q^n exceeds the
/// budget.
Count count_strictly_decreasing_bruteforce(unsigned q, std::size_t n, EnumerationBudget budget = {});

/// Str_q(n): 1 for n = 0, q for n = 1, (q-1) q^(n-1) otherwise.
Count str_count(unsigned q, std::size_t n);

struct SeriesTruncation {
  unsigned q;
  std::size_t order;
  std::vector<Count> coeffs;  // degrees 0..order
};

/// prod_{l=1}^{N} (1 + x^l)^{L_q(l)} truncated at degree N.
SeriesTruncation series_truncation(unsigned q, std::size_t order);

}  // namespace qnary::words
