#include <string>
#include <vector>

#include "doctest.h"
#include "kneading/enumerate.hpp"
#include "kneading/errors.hpp"
#include "support/oracles.hpp"

using namespace kneading;

namespace {

// Formula evaluated term by term with a trial-division Moebius, kept apart
// from the library's implementation.
std::int64_t formula_reference(int n) {
  auto mu = [](int d) {
    int r = 1;
    for (int p = 2; p <= d; ++p) {
      int e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e > 1) return 0;
      if (e == 1) r = -r;
    }
    return r;
  };
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0 && d % 2 == 1) s += mu(d) * (std::int64_t{1} << (n / d));
  }
  return s / (2 * n);
}

// Brute force over strings: all L/R prefixes followed by C, kept when every
// proper shift is smaller.
std::size_t brute_force_count(int n) {
  std::size_t count = 0;
  for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
    std::string s;
    for (int i = 0; i + 1 < n; ++i) s.push_back((bits >> i) & 1u ? 'R' : 'L');
    s.push_back('C');
    bool maximal = true;
    for (std::size_t k = 1; k < s.size() && maximal; ++k) {
      maximal = oracle::parity_lex_cmp(s.substr(k), s) < 0;
    }
    count += maximal;
  }
  return count;
}

}  // namespace

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(3) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(9) == 0);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(105) == -1);
  CHECK_THROWS_AS(mobius(0), RangeError);
  CHECK_THROWS_AS(mobius(-4), RangeError);
}

TEST_CASE("count_kneading examples") {
  CHECK(count_kneading(1) == 1);
  CHECK(count_kneading(4) == 2);
  CHECK(count_kneading(6) == 5);
  CHECK(count_kneading(12) == 170);
  const std::vector<std::int64_t> head{1, 1, 1, 2, 3, 5, 9, 16};
  for (int n = 1; n <= 8; ++n) CHECK(count_kneading(n) == head[static_cast<std::size_t>(n - 1)]);
  CHECK_THROWS_AS(count_kneading(0), RangeError);
  CHECK_THROWS_AS(count_kneading(63), RangeError);
}

TEST_CASE("count_kneading matches the reference evaluation up to n = 62") {
  for (int n = 1; n <= 62; ++n) {
    CHECK_MESSAGE(count_kneading(n) == formula_reference(n), "n = " << n);
  }
}

TEST_CASE("enumerate_kneading examples") {
  auto one = enumerate_kneading(1);
  REQUIRE(one.enumerated.size() == 1);
  CHECK(one.enumerated[0].str() == "C");
  CHECK(one.formula_count == 1);

  auto four = enumerate_kneading(4);
  REQUIRE(four.enumerated.size() == 2);
  CHECK(four.enumerated[0].str() == "RLRC");
  CHECK(four.enumerated[1].str() == "RLLC");

  CHECK(enumerate_kneading(6).enumerated.size() == 5);
  CHECK_THROWS_AS(enumerate_kneading(0), RangeError);
  CHECK_THROWS_AS(enumerate_kneading(21), RangeError);
}

TEST_CASE("census invariants for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    const KneadingCensus census = enumerate_kneading(n);
    CHECK(static_cast<std::int64_t>(census.enumerated.size()) == census.formula_count);
    CHECK(census.enumerated.size() == brute_force_count(n));
    for (std::size_t i = 0; i < census.enumerated.size(); ++i) {
      const Word& w = census.enumerated[i];
      CHECK(w.size() == static_cast<std::size_t>(n));
      CHECK(w.is_terminal());
      CHECK(is_shift_maximal(w));
      if (n >= 2) CHECK(w[0] == Symbol::R);
      if (i > 0) CHECK(compare_parity_lex(census.enumerated[i - 1], w) == Ordering::Less);
    }
  }
}
