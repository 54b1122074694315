#include "kneading/enumerate.hpp"

#include <algorithm>
#include <string>

#include "kneading/errors.hpp"

namespace kneading {

int mobius(std::int64_t d) {
  if (d < 1) throw RangeError("mobius needs d >= 1, got " + std::to_string(d));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

std::int64_t count_kneading(int n) {
  if (n < 1 || n > 62) throw RangeError("count_kneading needs 1 <= n <= 62, got " + std::to_string(n));
  std::int64_t sum = 0;
  for (int d = 1; d <= n; d += 2) {
    if (n % d != 0) continue;
    const int m = mobius(d);
    if (m == 0) continue;
    sum += m * (std::int64_t{1} << (n / d));
  }
  const std::int64_t denom = 2 * static_cast<std::int64_t>(n);
  if (sum % denom != 0) {
    throw InvariantError("counting formula is not integral for n = " + std::to_string(n));
  }
  return sum / denom;
}

KneadingCensus enumerate_kneading(int n) {
  if (n < 1 || n > 20) throw RangeError("enumerate_kneading needs 1 <= n <= 20, got " + std::to_string(n));
  KneadingCensus census;
  census.n = n;
  census.formula_count = count_kneading(n);

  const std::uint32_t candidates = std::uint32_t{1} << (n - 1);
  for (std::uint32_t bits = 0; bits < candidates; ++bits) {
    std::vector<Symbol> symbols(static_cast<std::size_t>(n), Symbol::C);
    // Bit (n-2-i) set means R at position i, so candidates run in lexicographic order.
    for (int i = 0; i + 1 < n; ++i) {
      symbols[static_cast<std::size_t>(i)] = (bits >> (n - 2 - i)) & 1u ? Symbol::R : Symbol::L;
    }
    Word w(std::move(symbols));
    if (is_shift_maximal(w)) census.enumerated.push_back(std::move(w));
  }
  std::sort(census.enumerated.begin(), census.enumerated.end(), [](const Word& a, const Word& b) {
    return compare_parity_lex(a, b) == Ordering::Less;
  });

  if (static_cast<std::int64_t>(census.enumerated.size()) != census.formula_count) {
    throw InvariantError("enumerated " + std::to_string(census.enumerated.size()) +
                         " kneading words of length " + std::to_string(n) + ", formula gives " +
                         std::to_string(census.formula_count));
  }
  return census;
}

}  // namespace kneading
