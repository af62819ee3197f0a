#ifndef MCAL_WORDS_HPP
#define MCAL_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

#include "mcal/errors.hpp"

namespace mcal {

/// The ambient alphabet: letters are the indices 0..size-1, or all naturals
/// for the countable alphabet. Predicates and concatenation work over any
/// alphabet; enumeration is only defined for finite ones.
class Alphabet {
public:
  static Alphabet finite(std::uint32_t size);
  static Alphabet countable();

  bool is_countable() const noexcept { return !size_.has_value(); }
  std::uint32_t size() const;  // throws CountableAlphabet
  bool contains(std::uint32_t letter) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  explicit Alphabet(std::optional<std::uint32_t> size) : size_(size) {}
  std::optional<std::uint32_t> size_;
};

/// A word: a finite sequence of letter indices. The empty sequence is the
/// empty word. Words compare shortlex (length first, then lexicographic),
/// which fixes the enumeration order and canonicalizes every set in the
/// library.
struct Word {
  std::vector<std::uint32_t> letters;

  Word() = default;
  Word(std::initializer_list<std::uint32_t> ls) : letters(ls) {}
  explicit Word(std::vector<std::uint32_t> ls) : letters(std::move(ls)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (auto c = x.letters.size() <=> y.letters.size(); c != 0) return c;
    return x.letters <=> y.letters;
  }
};

Word concat(const Word& a, const Word& b);
Word reverse(const Word& a);

/// True iff b = c.a for some word c. Every word has the empty word as a
/// suffix.
bool is_suffix(const Word& a, const Word& b);

/// True iff one of a, b is a suffix of the other. The negation is
/// suffix-incomparability, which is exactly the zero-product condition in
/// the polycyclic monoid.
bool suffix_comparable(const Word& a, const Word& b);

/// The unique c with b = c.a, when a is a suffix of b.
std::optional<Word> strip_suffix(const Word& a, const Word& b);

/// True iff x occurs as a contiguous factor of y (naive scan).
bool is_subword(const Word& x, const Word& y);

/// All suffixes of w, shortest first (|w|+1 of them).
std::vector<Word> all_suffixes(const Word& w);

/// { x != eps : x is a subword of some a in A }.
std::set<Word> subword_closure(const std::set<Word>& a);

/// Every word of length at most max_len, in shortlex order, each exactly
/// once. Rejects countable alphabets.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

}  // namespace mcal

#endif
