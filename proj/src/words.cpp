#include "qnary/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "qnary/kernels.hpp"

namespace qnary::words {

Word::Word(std::vector<Letter> letters, unsigned q) : letters_(std::move(letters)), q_(q) {
  if (q_ == 0) throw std::invalid_argument("alphabet size must be at least 1");
  for (Letter a : letters_)
    if (a >= q_)
      throw std::invalid_argument("letter " + std::to_string(a) + " out of range for q=" + std::to_string(q_));
}

Word Word::parse(std::string_view text, unsigned q) {
  std::vector<Letter> letters;
  const bool separated = text.find(',') != std::string_view::npos || q > 10;
  if (!separated) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument(std::string("invalid letter '") + c + "'");
      letters.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(letters), q);
  }
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("invalid letter '" + std::string(token) + "'");
    letters.push_back(static_cast<Letter>(std::stoul(std::string(token))));
    pos = comma + 1;
  }
  return Word(std::move(letters), q);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (q_ <= 10) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

std::strong_ordering compare_letters(std::span<const Letter> a, std::span<const Letter> b) noexcept {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering lex_compare(const Word& a, const Word& b) {
  if (a.alphabet_size() != b.alphabet_size()) throw std::invalid_argument("lex_compare: alphabet sizes differ");
  return compare_letters(a.letters(), b.letters());
}

bool is_lyndon(std::span<const Letter> w) noexcept {
  const std::size_t n = w.size();
  if (n == 0) return false;
  // Compare w against each rotation w[r..] w[..r] without materializing it.
  for (std::size_t r = 1; r < n; ++r) {
    std::size_t i = 0;
    while (i < n && w[i] == w[(r + i) % n]) ++i;
    if (i == n || w[i] > w[(r + i) % n]) return false;
  }
  return true;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  return is_lyndon(w.letters());
}

Word LyndonFactorization::concatenate() const {
  if (factors.empty()) throw std::invalid_argument("empty factorization");
  std::vector<Letter> out;
  for (const Word& f : factors) out.insert(out.end(), f.letters().begin(), f.letters().end());
  return Word(std::move(out), factors.front().alphabet_size());
}

std::string LyndonFactorization::to_string() const {
  std::string out;
  for (const Word& f : factors) out += "(" + f.to_string() + ")";
  return out;
}

void duval_factor_ends(std::span<const Letter> s, std::vector<std::size_t>& ends) {
  ends.clear();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && s[k] <= s[j]) {
      k = (s[k] < s[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      i += j - k;
      ends.push_back(i);
    }
  }
}

LyndonFactorization duval_factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("duval_factorize: empty word");
  std::vector<std::size_t> ends;
  duval_factor_ends(w.letters(), ends);
  LyndonFactorization f;
  f.factors.reserve(ends.size());
  std::size_t begin = 0;
  for (std::size_t end : ends) {
    auto part = w.letters().subspan(begin, end - begin);
    f.factors.emplace_back(std::vector<Letter>(part.begin(), part.end()), w.alphabet_size());
    begin = end;
  }
  return f;
}

bool is_strictly_decreasing(const LyndonFactorization& f) {
  for (std::size_t j = 1; j < f.factors.size(); ++j)
    if (lex_compare(f.factors[j - 1], f.factors[j]) != std::strong_ordering::greater) return false;
  return true;
}

bool has_strict_factorization(std::span<const Letter> letters, std::vector<std::size_t>& ends) {
  duval_factor_ends(letters, ends);
  std::size_t prev_begin = 0;
  for (std::size_t j = 1; j < ends.size(); ++j) {
    const std::size_t begin = ends[j - 1];
    const auto previous = letters.subspan(prev_begin, begin - prev_begin);
    const auto current = letters.subspan(begin, ends[j] - begin);
    if (compare_letters(previous, current) != std::strong_ordering::greater) return false;
    prev_begin = begin;
  }
  return true;
}

std::vector<Word> lyndon_words(unsigned q, std::size_t length) {
  if (q == 0) throw std::invalid_argument("lyndon_words: q must be at least 1");
  if (length == 0) throw std::invalid_argument("lyndon_words: length must be at least 1");
  // Duval's successor walk visits every Lyndon word of length <= `length`
  // in increasing order; keep the ones of full length.
  std::vector<Word> out;
  std::vector<Letter> w{0};
  while (!w.empty()) {
    if (w.size() == length) out.emplace_back(w, q);
    const std::size_t period = w.size();
    while (w.size() < length) w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == q - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

Count count_lyndon(unsigned q, std::size_t length) {
  if (q == 0) throw std::invalid_argument("count_lyndon: q must be at least 1");
  if (length == 0) throw std::invalid_argument("count_lyndon: length must be at least 1");
  Count sum = 0;
  for (std::size_t d = 1; d <= length; ++d) {
    if (length % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    const Count term = checked_pow(q, static_cast<unsigned>(length / d));
    sum = mu > 0 ? checked_add(sum, term) : checked_sub(sum, term);
  }
  return sum / static_cast<Count>(length);
}

bool verify_lemma1(unsigned q, std::size_t m) {
  Count lhs = 0;
  for (std::size_t l = 1; l <= m; ++l)
    if (m % l == 0) lhs = checked_add(lhs, checked_mul(static_cast<Count>(l), count_lyndon(q, l)));
  return lhs == checked_pow(q, static_cast<unsigned>(m));
}

Count count_strictly_decreasing_bruteforce(unsigned q, std::size_t n, EnumerationBudget budget) {
  if (q == 0) throw std::invalid_argument("alphabet size must be at least 1");
  Count total;
  try {
    total = checked_pow(q, static_cast<unsigned>(n));
  } catch (const std::range_error&) {
    throw std::range_error("enumeration budget exceeded: q^n overflows");
  }
  if (total > static_cast<Count>(budget.max_items))
    throw std::range_error("enumeration budget exceeded: q^n = " + to_string(total) + " > " +
                           std::to_string(budget.max_items));
  // The empty word has the empty (vacuously strict) factorization.
  if (n == 0) return 1;
  return static_cast<Count>(kernels::count_strict_words(q, n));
}

Count str_count(unsigned q, std::size_t n) {
  if (q == 0) throw std::invalid_argument("alphabet size must be at least 1");
  if (n == 0) return 1;
  if (n == 1) return q;
  return checked_mul(static_cast<Count>(q - 1), checked_pow(q, static_cast<unsigned>(n - 1)));
}

SeriesTruncation series_truncation(unsigned q, std::size_t order) {
  if (q == 0) throw std::invalid_argument("alphabet size must be at least 1");
  std::vector<Count> coeffs(order + 1, 0);
  coeffs[0] = 1;
  for (std::size_t l = 1; l <= order; ++l) {
    const Count lyndon = count_lyndon(q, l);
    if (lyndon == 0) continue;
    // (1 + x^l)^L = sum_j C(L, j) x^{lj}, only j <= order / l matters.
    std::vector<Count> binom{1};
    for (std::size_t j = 1; j * l <= order && static_cast<Count>(j) <= lyndon; ++j)
      binom.push_back(checked_mul(binom.back(), lyndon - static_cast<Count>(j) + 1) / static_cast<Count>(j));
    std::vector<Count> next(order + 1, 0);
    for (std::size_t d = 0; d <= order; ++d) {
      if (coeffs[d] == 0) continue;
      for (std::size_t j = 0; j < binom.size() && d + j * l <= order; ++j)
        next[d + j * l] = checked_add(next[d + j * l], checked_mul(coeffs[d], binom[j]));
    }
    coeffs = std::move(next);
  }
  return SeriesTruncation{q, order, std::move(coeffs)};
}

}  // namespace qnary::words
