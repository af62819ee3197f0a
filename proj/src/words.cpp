#include "mcal/words.hpp"

#include <algorithm>

namespace mcal {

Alphabet Alphabet::finite(std::uint32_t size) {
  if (size == 0) throw SizeMismatch("alphabet size must be at least 1");
  return Alphabet(size);
}

Alphabet Alphabet::countable() { return Alphabet(std::nullopt); }

std::uint32_t Alphabet::size() const {
  if (!size_) throw CountableAlphabet("countable alphabet has no finite size");
  return *size_;
}

bool Alphabet::contains(std::uint32_t letter) const noexcept {
  return !size_ || letter < *size_;
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.letters.reserve(a.size() + b.size());
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word reverse(const Word& a) {
  Word out = a;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

bool is_suffix(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.letters.begin(), a.letters.end(),
                    b.letters.end() - static_cast<std::ptrdiff_t>(a.size()));
}

bool suffix_comparable(const Word& a, const Word& b) {
  return is_suffix(a, b) || is_suffix(b, a);
}

std::optional<Word> strip_suffix(const Word& a, const Word& b) {
  if (!is_suffix(a, b)) return std::nullopt;
  Word out;
  out.letters.assign(b.letters.begin(),
                     b.letters.end() - static_cast<std::ptrdiff_t>(a.size()));
  return out;
}

bool is_subword(const Word& x, const Word& y) {
  if (x.empty()) return true;
  if (x.size() > y.size()) return false;
  auto it = std::search(y.letters.begin(), y.letters.end(), x.letters.begin(),
                        x.letters.end());
  return it != y.letters.end();
}

std::vector<Word> all_suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t len = 0; len <= w.size(); ++len) {
    Word s;
    s.letters.assign(w.letters.end() - static_cast<std::ptrdiff_t>(len),
                     w.letters.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::set<Word> subword_closure(const std::set<Word>& a) {
  std::set<Word> out;
  for (const Word& w : a) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        Word f;
        f.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(i),
                         w.letters.begin() + static_cast<std::ptrdiff_t>(i + len));
        out.insert(std::move(f));
      }
    }
  }
  return out;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  if (alphabet.is_countable())
    throw CountableAlphabet("cannot enumerate words over a countable alphabet");
  const std::uint32_t lambda = alphabet.size();
  std::vector<Word> out;
  out.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len) {
    // odometer over lambda^len tuples, lexicographic
    Word w;
    w.letters.assign(len, 0);
    for (;;) {
      out.push_back(w);
      std::size_t pos = len;
      while (pos > 0 && w.letters[pos - 1] + 1 == lambda) {
        w.letters[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++w.letters[pos - 1];
    }
  }
  return out;
}

}  // namespace mcal
