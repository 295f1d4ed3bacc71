#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qnary/words.hpp"

using namespace qnary;
using namespace qnary::words;

namespace {

Word w2(const char* s) { return Word::parse(s, 2); }

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

// Latin capitals as letters 0..25.
Word latin(std::string_view s) {
  std::vector<Letter> letters;
  for (char c : s) letters.push_back(static_cast<Letter>(c - 'A'));
  return Word(letters, 26);
}

}  // namespace

TEST_CASE("word construction and rendering") {
  CHECK(w2("0110").to_string() == "0110");
  CHECK(Word::parse("3,11,0", 12).to_string() == "3,11,0");
  CHECK(Word::parse("12", 20).size() == 1);
  CHECK_THROWS_AS(Word::parse("2", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0a", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,,2", 5), std::invalid_argument);
  CHECK_THROWS_AS(Word({0}, 0), std::invalid_argument);
}

TEST_CASE("lex_compare follows the prefix convention") {
  CHECK(lex_compare(w2("0"), w2("001")) == std::strong_ordering::less);
  CHECK(lex_compare(w2("01"), w2("01")) == std::strong_ordering::equal);
  CHECK(lex_compare(w2("011"), w2("01")) == std::strong_ordering::greater);
  // 0 < 0001 < 001 < 0011 < 01 < 011 < 0111 < 1
  const char* chain[] = {"0", "0001", "001", "0011", "01", "011", "0111", "1"};
  for (std::size_t i = 1; i < std::size(chain); ++i)
    CHECK(lex_compare(w2(chain[i - 1]), w2(chain[i])) == std::strong_ordering::less);
  CHECK_THROWS_AS(lex_compare(Word({0}, 2), Word({0}, 3)), std::invalid_argument);
}

TEST_CASE("lex_compare is a total order on random triples") {
  std::mt19937_64 rng(11);
  auto random_word = [&] {
    std::vector<Letter> l(rng() % 6);
    for (auto& a : l) a = static_cast<Letter>(rng() % 3);
    return Word(l, 3);
  };
  for (int trial = 0; trial < 5000; ++trial) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const auto ab = lex_compare(a, b);
    CHECK(lex_compare(b, a) == (ab == std::strong_ordering::less      ? std::strong_ordering::greater
                                : ab == std::strong_ordering::greater ? std::strong_ordering::less
                                                                      : std::strong_ordering::equal));
    if (ab == std::strong_ordering::equal) CHECK(a == b);
    if (ab != std::strong_ordering::greater && lex_compare(b, c) != std::strong_ordering::greater)
      CHECK(lex_compare(a, c) != std::strong_ordering::greater);
  }
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(w2("001")));
  CHECK_FALSE(is_lyndon(w2("10")));
  CHECK_FALSE(is_lyndon(w2("0101")));
  CHECK(is_lyndon(w2("1")));
  CHECK_THROWS_AS(is_lyndon(Word({}, 2)), std::invalid_argument);
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& w : oracle::all_words(3, n)) CHECK(is_lyndon(w) == oracle::lyndon_by_rotation(w));
}

TEST_CASE("duval_factorize examples") {
  CHECK(duval_factorize(w2("101")).to_string() == "(1)(01)");
  CHECK(duval_factorize(w2("110")).to_string() == "(1)(1)(0)");
  const auto f = duval_factorize(latin("LYNDON"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == latin("LYN"));
  CHECK(f.factors[1] == latin("DON"));
  CHECK_THROWS_AS(duval_factorize(Word({}, 2)), std::invalid_argument);
}

TEST_CASE("binary words of length 4: decompositions and strictness") {
  // Bold entries of the length-4 table.
  const std::set<std::string> strict{"(0001)", "(001)(0)", "(0011)", "(011)(0)",
                                     "(0111)", "(1)(001)", "(1)(01)(0)", "(1)(011)"};
  std::size_t strict_seen = 0;
  for (const auto& letters : oracle::all_words(2, 4)) {
    const auto f = duval_factorize(Word(letters, 2));
    const bool is_strict = is_strictly_decreasing(f);
    CHECK(is_strict == (strict.count(f.to_string()) == 1));
    strict_seen += is_strict ? 1 : 0;
  }
  CHECK(strict_seen == 8);
  CHECK(duval_factorize(w2("0101")).to_string() == "(01)(01)");
  CHECK(duval_factorize(w2("1110")).to_string() == "(1)(1)(1)(0)");
}

TEST_CASE("is_strictly_decreasing") {
  CHECK(is_strictly_decreasing(duval_factorize(w2("101"))));
  CHECK_FALSE(is_strictly_decreasing(duval_factorize(w2("110"))));
  CHECK(is_strictly_decreasing(duval_factorize(w2("0011"))));
}

TEST_CASE("factorization round trip, exhaustive and long random") {
  auto check_word = [](const Word& w) {
    const auto f = duval_factorize(w);
    CHECK(f.concatenate() == w);
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      CHECK(is_lyndon(f.factors[j]));
      if (j > 0) CHECK(lex_compare(f.factors[j - 1], f.factors[j]) != std::strong_ordering::less);
    }
  };
  for (std::size_t n = 1; n <= 14; ++n)
    for (const auto& l : oracle::all_words(2, n)) check_word(Word(l, 2));
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& l : oracle::all_words(3, n)) check_word(Word(l, 3));

  std::mt19937_64 rng(3);
  for (unsigned q : {2U, 3U, 26U}) {
    std::vector<Letter> l(100000);
    for (auto& a : l) a = static_cast<Letter>(rng() % q);
    const Word w(l, q);
    const auto f = duval_factorize(w);
    CHECK(f.concatenate() == w);
    bool ordered = true;
    for (std::size_t j = 1; j < f.factors.size(); ++j)
      ordered = ordered && lex_compare(f.factors[j - 1], f.factors[j]) != std::strong_ordering::less;
    CHECK(ordered);
    // Spot-check Lyndon-ness on the short factors.
    for (const auto& v : f.factors)
      if (v.size() < 200) CHECK(is_lyndon(v));
  }
}

TEST_CASE("standard decomposition is unique") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& l : oracle::all_words(2, n)) {
      const auto cuts = oracle::all_lyndon_cuts(l);
      REQUIRE(cuts.size() == 1);
      const auto f = duval_factorize(Word(l, 2));
      REQUIRE(f.factors.size() == cuts[0].size());
      for (std::size_t j = 0; j < cuts[0].size(); ++j)
        CHECK(std::vector<Letter>(f.factors[j].letters().begin(), f.factors[j].letters().end()) == cuts[0][j]);
    }
}

TEST_CASE("lyndon_words") {
  CHECK(strings(lyndon_words(2, 4)) == std::vector<std::string>{"0001", "0011", "0111"});
  CHECK(strings(lyndon_words(2, 1)) == std::vector<std::string>{"0", "1"});
  CHECK(strings(lyndon_words(3, 2)) == std::vector<std::string>{"01", "02", "12"});
  CHECK(strings(lyndon_words(1, 1)) == std::vector<std::string>{"0"});
  CHECK(lyndon_words(1, 3).empty());
  CHECK_THROWS_AS(lyndon_words(2, 0), std::invalid_argument);

  for (unsigned q : {2U, 3U}) {
    for (std::size_t l = 1; l <= 8; ++l) {
      std::vector<std::string> expected;
      for (const auto& w : oracle::all_words(q, l))
        if (oracle::lyndon_by_rotation(w)) expected.push_back(Word(w, q).to_string());
      CHECK(strings(lyndon_words(q, l)) == expected);
    }
  }
}

TEST_CASE("count_lyndon") {
  CHECK(count_lyndon(2, 4) == 3);
  CHECK(count_lyndon(2, 1) == 2);
  CHECK(count_lyndon(2, 12) == 335);
  CHECK(oracle::count_lyndon_by_filter(2, 12) == 335);
  CHECK(count_lyndon(1, 1) == 1);
  CHECK(count_lyndon(1, 7) == 0);
  for (unsigned q : {2U, 3U, 4U})
    for (std::size_t l = 1; l <= 12; ++l) CHECK(count_lyndon(q, l) == static_cast<Count>(lyndon_words(q, l).size()));
  CHECK_THROWS_AS(count_lyndon(2, 200), std::range_error);
  CHECK_THROWS_AS(count_lyndon(2, 0), std::invalid_argument);
}

TEST_CASE("verify_lemma1") {
  // 1*2 + 2*1 + 4*3 = 16
  CHECK(count_lyndon(2, 1) + 2 * count_lyndon(2, 2) + 4 * count_lyndon(2, 4) == 16);
  CHECK(verify_lemma1(2, 4));
  CHECK(verify_lemma1(1, 5));
  CHECK(verify_lemma1(3, 6));
  for (unsigned q : {2U, 3U, 4U, 5U})
    for (std::size_t m = 1; m <= 12; ++m) CHECK(verify_lemma1(q, m));
}

TEST_CASE("count_strictly_decreasing_bruteforce") {
  CHECK(count_strictly_decreasing_bruteforce(2, 3) == 4);
  CHECK(count_strictly_decreasing_bruteforce(2, 4) == 8);
  CHECK(count_strictly_decreasing_bruteforce(3, 2) == 6);
  CHECK(count_strictly_decreasing_bruteforce(3, 5) == 162);
  CHECK(oracle::strict_count_by_cuts(3, 5) == 162);
  CHECK(oracle::strict_count_by_cuts(2, 3) == 4);
  CHECK(count_strictly_decreasing_bruteforce(2, 0) == 1);
  CHECK(count_strictly_decreasing_bruteforce(1, 3) == 0);
  CHECK_THROWS_AS(count_strictly_decreasing_bruteforce(2, 40), std::range_error);
  CHECK_THROWS_AS(count_strictly_decreasing_bruteforce(2, 10, {1000}), std::range_error);
  CHECK(count_strictly_decreasing_bruteforce(2, 10, {1024}) == 512);
}

TEST_CASE("str_count matches brute force") {
  CHECK(str_count(2, 4) == 8);
  CHECK(str_count(5, 1) == 5);
  CHECK(str_count(3, 5) == 162);
  CHECK(str_count(7, 0) == 1);
  for (std::size_t n = 2; n <= 14; ++n) CHECK(count_strictly_decreasing_bruteforce(2, n) == str_count(2, n));
  for (std::size_t n = 2; n <= 9; ++n) CHECK(count_strictly_decreasing_bruteforce(3, n) == str_count(3, n));
  CHECK_THROWS_AS(str_count(2, 200), std::range_error);
}

TEST_CASE("series_truncation") {
  CHECK(series_truncation(2, 4).coeffs == std::vector<Count>{1, 2, 2, 4, 8});
  CHECK(series_truncation(1, 3).coeffs == std::vector<Count>{1, 1, 0, 0});
  CHECK(series_truncation(3, 3).coeffs == std::vector<Count>{1, 3, 6, 18});
  CHECK(series_truncation(2, 0).coeffs == std::vector<Count>{1});
  for (unsigned q : {2U, 3U}) {
    const auto s = series_truncation(q, 12);
    CHECK(s.q == q);
    CHECK(s.order == 12);
    for (std::size_t n = 0; n <= 12; ++n) CHECK(s.coeffs[n] == str_count(q, n));
  }
  // The generating function agrees with (q x^2 - 1)/(q x - 1) at higher order too.
  const auto big = series_truncation(4, 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(big.coeffs[n] == str_count(4, n));
}
