#ifndef MCAL_AUTOM_HPP
#define MCAL_AUTOM_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "mcal/exec.hpp"
#include "mcal/mcalister.hpp"

namespace mcal {

/// A permutation of the letters 0..n-1, given by its image table.
class LetterBijection {
public:
  explicit LetterBijection(std::vector<std::uint32_t> images);
  static LetterBijection identity(std::uint32_t n);

  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::uint32_t apply(std::uint32_t letter) const;  // throws LetterOutOfRange
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// Function composition: (f.compose(g))(x) = f(g(x)).
  LetterBijection compose(const LetterBijection& inner) const;
  LetterBijection inverse() const;

  friend bool operator==(const LetterBijection&, const LetterBijection&) = default;
  friend std::strong_ordering operator<=>(const LetterBijection&,
                                          const LetterBijection&) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// Coordinates of an automorphism: a letter permutation plus a sign.
/// Sign +1 relabels the four words in place; sign -1 additionally swaps the
/// two word pairs. Tags with sign +1 order before tags with sign -1.
struct AutTag {
  LetterBijection f;
  int sign;  // +1 or -1

  friend bool operator==(const AutTag&, const AutTag&) = default;
  friend std::strong_ordering operator<=>(const AutTag& s, const AutTag& t) {
    if (auto c = t.sign <=> s.sign; c != 0) return c;
    return s.f <=> t.f;
  }
};

/// Letterwise relabelling of a word; the empty word is fixed.
Word apply_h(const LetterBijection& f, const Word& w);

/// Acts on an element: relabel the four words, swapping the two pairs when
/// the tag's sign is -1. Zero is fixed. Always lands in the semigroup.
MElem apply_aut(const AutTag& t, const MElem& x);

/// (f,sigma).(g,tau) = (f o g, sigma.tau), so that applying the composite
/// equals applying t first and s second. Throws SizeMismatch.
AutTag compose_tags(const AutTag& s, const AutTag& t);

/// The two canonical generator families: G1 = {((eps,x),(x,eps))} and
/// G2 = {((x,eps),(eps,x))} over single letters x, each indexed by letter.
/// Together with zero they generate the whole semigroup.
std::pair<std::vector<MElem>, std::vector<MElem>> generators(std::uint32_t lambda);

/// A sequence of generators (each from G1 or G2) whose product is x.
/// A generator factors as itself; anything else goes through the canonical
/// form and the three-factor decomposition, expanded letterwise, with
/// empty-word pieces dropped. Throws ZeroInput.
std::vector<MElem> factor_over_generators(const MElem& x);

/// Brute-force search for the automorphism group at small lambda: walks all
/// bijections of G1 u G2, keeps those that preserve the inverse pairing and
/// extend consistently over all generator products of length <= probe_len
/// (zero products must map to zero products and conversely), and returns the
/// survivors as tags. Expected size is 2 * lambda!.
std::vector<AutTag> automorphism_census(std::uint32_t lambda, int probe_len,
                                        Exec exec = Exec::parallel);

}  // namespace mcal

#endif
