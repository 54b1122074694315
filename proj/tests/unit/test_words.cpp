#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "kneading/errors.hpp"
#include "kneading/words.hpp"
#include "support/oracles.hpp"

using namespace kneading;

namespace {

// Every word of length 1..max_len whose first symbols are L/R and whose last
// symbol is C.
std::vector<Word> terminal_words(int max_len) {
  std::vector<Word> out;
  for (int n = 1; n <= max_len; ++n) {
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      std::string s;
      for (int i = 0; i + 1 < n; ++i) s.push_back((bits >> i) & 1u ? 'R' : 'L');
      s.push_back('C');
      out.push_back(parse_word(s));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("parse_word transliterates and round-trips") {
  const Word w = parse_word("RLC");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Symbol::R);
  CHECK(w[1] == Symbol::L);
  CHECK(w[2] == Symbol::C);
  CHECK(format_word(w) == "RLC");
  CHECK(parse_word("C").size() == 1);
  CHECK(parse_word("RLLR").str() == "RLLR");
}

TEST_CASE("parse_word rejects bad input") {
  CHECK_THROWS_AS(parse_word("RCL"), InvariantError);
  CHECK_THROWS_AS(parse_word("CC"), InvariantError);
  CHECK_THROWS_AS(parse_word("RXC"), ParseError);
  CHECK_THROWS_AS(parse_word("rlc"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("R C"), ParseError);
}

TEST_CASE("compare_parity_lex examples") {
  CHECK(compare_parity_lex(parse_word("L"), parse_word("R")) == Ordering::Less);
  CHECK(compare_parity_lex(parse_word("RC"), parse_word("RLC")) == Ordering::Less);
  CHECK(compare_parity_lex(parse_word("RLRC"), parse_word("RLLC")) == Ordering::Less);
  CHECK(compare_parity_lex(parse_word("RLC"), parse_word("RLC")) == Ordering::Equal);
  CHECK(compare_parity_lex(parse_word("RLLC"), parse_word("RLRC")) == Ordering::Greater);
  CHECK(compare_parity_lex(parse_word("C"), parse_word("RC")) == Ordering::Less);
}

TEST_CASE("compare_parity_lex on truncated prefixes") {
  CHECK_THROWS_AS(compare_parity_lex(parse_word("RL"), parse_word("RLL")), PrefixIncomparable);
  CHECK(compare_on_overlap(parse_word("RL"), parse_word("RLL")) == Ordering::Equal);
  CHECK(compare_on_overlap(parse_word("RLR"), parse_word("RLLRR")) == Ordering::Less);
}

TEST_CASE("shift") {
  const Word w = parse_word("RLLC");
  CHECK(shift(w, 0).str() == "RLLC");
  CHECK(shift(w, 1).str() == "LLC");
  CHECK(shift(w, 3).str() == "C");
  CHECK_THROWS_AS(shift(w, 4), RangeError);
}

TEST_CASE("shift composes additively") {
  for (const Word& w : terminal_words(7)) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (std::size_t k = 0; j + k < w.size(); ++k) {
        CHECK(shift(shift(w, j), k) == shift(w, j + k));
      }
    }
  }
}

TEST_CASE("is_shift_maximal examples") {
  CHECK(is_shift_maximal(parse_word("RLC")));
  CHECK_FALSE(is_shift_maximal(parse_word("RRLC")));
  CHECK(first_non_dominated_shift(parse_word("RRLC")) == 1);
  CHECK(is_shift_maximal(parse_word("C")));
  CHECK(is_shift_maximal(parse_word("RC")));
  CHECK_FALSE(is_shift_maximal(parse_word("LC")));
}

TEST_CASE("parity-lex order is a total order on terminal words up to length 8") {
  const auto words = terminal_words(8);
  std::vector<std::string> text;
  for (const auto& w : words) text.push_back(w.str());

  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Ordering ab = compare_parity_lex(words[i], words[j]);
      const Ordering ba = compare_parity_lex(words[j], words[i]);
      // Equal exactly on identical words; antisymmetric otherwise.
      REQUIRE((ab == Ordering::Equal) == (i == j));
      if (ab == Ordering::Less) REQUIRE(ba == Ordering::Greater);
      if (ab == Ordering::Greater) REQUIRE(ba == Ordering::Less);
      // Agrees with the string-level reference comparator.
      const int ref = oracle::parity_lex_cmp(text[i], text[j]);
      REQUIRE(ref == (ab == Ordering::Less ? -1 : ab == Ordering::Equal ? 0 : 1));
    }
  }

  // Transitivity: sort once, then each pair in sorted order must be Less.
  auto sorted = words;
  std::sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
    return compare_parity_lex(a, b) == Ordering::Less;
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      REQUIRE(compare_parity_lex(sorted[i], sorted[j]) == Ordering::Less);
    }
  }
}

TEST_CASE("shift-maximality matches the string-level definition") {
  for (const Word& w : terminal_words(10)) {
    const std::string s = w.str();
    bool expected = true;
    for (std::size_t k = 1; k < s.size(); ++k) {
      if (oracle::parity_lex_cmp(s.substr(k), s) >= 0) expected = false;
    }
    CHECK_MESSAGE(is_shift_maximal(w) == expected, s);
  }
}
