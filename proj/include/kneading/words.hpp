#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kneading {

// Position of an orbit point relative to the critical point c.
// The enumerator values carry the base order L < C < R.
enum class Symbol : unsigned char { L = 0, C = 1, R = 2 };

char to_char(Symbol s) noexcept;

// Finite word over {L, C, R}. C may only appear as the final symbol, so a
// C-terminated word never strictly prefixes another valid word.
class Word {
 public:
  // Throws InvariantError when symbols is empty or has an interior C.
  explicit Word(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  // True when the last symbol is C (the word of a superstable orbit).
  bool is_terminal() const noexcept { return symbols_.back() == Symbol::C; }

  std::string str() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

// Parses an ASCII string such as "RLLC". ParseError on characters outside
// {L, C, R} or on empty input; InvariantError on an interior C.
Word parse_word(std::string_view text);

std::string format_word(const Word& w);

enum class Ordering { Less, Equal, Greater };

// Parity-lexicographic order. At the first differing index N the base order
// L < C < R decides, reversed when positions 0..N-1 hold an odd number of R's.
// Throws PrefixIncomparable when one word strictly prefixes the other.
Ordering compare_parity_lex(const Word& a, const Word& b);

// Same order restricted to the common prefix of the two words: agreement on
// the whole overlap is reported as Equal instead of raising. Used to compare
// truncated itineraries of (possibly) different lengths.
Ordering compare_on_overlap(const Word& a, const Word& b) noexcept;

// Suffix starting at index k. RangeError unless 0 <= k < |w|.
Word shift(const Word& w, std::size_t k);

// True iff every proper shift of w compares Less than w. A shift that cannot
// be ordered against w (truncated words only) counts as not Less.
bool is_shift_maximal(const Word& w);

// Index of the first proper shift that is not Less than w, or 0 when w is
// shift-maximal. Used for diagnostics.
std::size_t first_non_dominated_shift(const Word& w);

}  // namespace kneading
