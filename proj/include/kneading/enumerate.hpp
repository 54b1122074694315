#pragma once

#include <cstdint>
#include <vector>

#include "kneading/words.hpp"

namespace kneading {

// Moebius function. RangeError for d < 1.
int mobius(std::int64_t d);

// |K_n| = (1 / 2n) * sum over odd square-free divisors d of n of
// mobius(d) * 2^(n/d). RangeError unless 1 <= n <= 62.
std::int64_t count_kneading(int n);

struct KneadingCensus {
  int n = 0;
  std::int64_t formula_count = 0;
  std::vector<Word> enumerated;  // increasing parity-lexicographic order
};

// Every shift-maximal word of length n whose first n-1 symbols are L/R and
// whose last symbol is C, sorted. RangeError unless 1 <= n <= 20;
// InvariantError when the count disagrees with count_kneading(n).
KneadingCensus enumerate_kneading(int n);

}  // namespace kneading
