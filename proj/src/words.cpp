#include "kneading/words.hpp"

#include <algorithm>

#include "kneading/errors.hpp"

namespace kneading {

char to_char(Symbol s) noexcept {
  switch (s) {
    case Symbol::L:
      return 'L';
    case Symbol::C:
      return 'C';
    case Symbol::R:
      return 'R';
  }
  return '?';
}

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvariantError("word must contain at least one symbol");
  auto c = std::find(symbols_.begin(), symbols_.end(), Symbol::C);
  if (c != symbols_.end() && c + 1 != symbols_.end()) {
    throw InvariantError("C may only occur as the final symbol: " + str());
  }
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(to_char(s));
  return out;
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word");
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'L':
        symbols.push_back(Symbol::L);
        break;
      case 'C':
        symbols.push_back(Symbol::C);
        break;
      case 'R':
        symbols.push_back(Symbol::R);
        break;
      default:
        throw ParseError(std::string("invalid symbol '") + ch + "' in word \"" + std::string(text) +
                         "\" (expected L, C or R)");
    }
  }
  return Word(std::move(symbols));
}

std::string format_word(const Word& w) { return w.str(); }

namespace {

// Returns Equal when no difference exists on the overlap; sets `prefix` if
// the lengths differ in that case.
Ordering compare_overlap(const Word& a, const Word& b, bool& prefix) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) {
      const bool base_less = a[i] < b[i];
      return (base_less != odd) ? Ordering::Less : Ordering::Greater;
    }
    if (a[i] == Symbol::R) odd = !odd;
  }
  prefix = a.size() != b.size();
  return Ordering::Equal;
}

}  // namespace

Ordering compare_parity_lex(const Word& a, const Word& b) {
  bool prefix = false;
  const Ordering o = compare_overlap(a, b, prefix);
  if (prefix) {
    throw PrefixIncomparable("\"" + a.str() + "\" and \"" + b.str() +
                             "\" agree on their overlap and cannot be ordered");
  }
  return o;
}

Ordering compare_on_overlap(const Word& a, const Word& b) noexcept {
  bool prefix = false;
  return compare_overlap(a, b, prefix);
}

Word shift(const Word& w, std::size_t k) {
  if (k >= w.size()) {
    throw RangeError("shift count " + std::to_string(k) + " out of range for word of length " +
                     std::to_string(w.size()));
  }
  auto s = w.symbols();
  return Word(std::vector<Symbol>(s.begin() + static_cast<std::ptrdiff_t>(k), s.end()));
}

std::size_t first_non_dominated_shift(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    bool prefix = false;
    const Word s = shift(w, k);
    if (compare_overlap(s, w, prefix) != Ordering::Less) return k;
  }
  return 0;
}

bool is_shift_maximal(const Word& w) { return first_non_dominated_shift(w) == 0; }

}  // namespace kneading
