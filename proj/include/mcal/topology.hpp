#ifndef MCAL_TOPOLOGY_HPP
#define MCAL_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "mcal/mcalister.hpp"

namespace mcal {

/// Basic neighborhood of zero in the compact topology: everything outside
/// the D-classes indexed by `excluded`. Nonzero points are isolated, so the
/// whole topology is determined by these bases.
struct CompactBasis {
  std::set<Word> excluded;  // finite, eps-free
};

/// Zero always lies in the neighborhood; a nonzero element does iff its
/// D-index avoids the excluded set.
bool in_compact_nbhd(const CompactBasis& basis, const MElem& x);

/// Subword-closes the excluded set. The shrunken neighborhood is a
/// two-sided ideal of the semigroup, which is what makes multiplication
/// continuous at zero.
std::set<Word> shrink_compact(const std::set<Word>& a);

/// A finitely described two-sided ideal of the free monoid: a word belongs
/// iff some marker word occurs in it as a subword. `pattern_union(ns)`
/// builds the marker family 0 1^n 0 over the two-letter alphabet.
class IdealSpec {
public:
  enum class Kind { explicit_gens, pattern_union };

  static IdealSpec explicit_gens(std::set<Word> generators);
  static IdealSpec pattern_union(const std::set<std::uint32_t>& ns);

  Kind kind() const noexcept { return kind_; }
  const std::set<Word>& markers() const noexcept { return markers_; }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

private:
  IdealSpec(Kind kind, std::set<Word> markers)
      : kind_(kind), markers_(std::move(markers)) {}
  Kind kind_;
  std::set<Word> markers_;
};

/// Membership in the ideal; the empty word is never a member.
bool in_ideal(const IdealSpec& spec, const Word& w);

/// Marker word 0 1^n 0 for the pattern family.
Word pattern_marker(std::uint32_t n);

/// Neighborhood base datum for an ideal topology: the union of the
/// D-classes indexed by the ideal minus finitely many removed index words,
/// plus zero.
struct IdealBasis {
  IdealSpec ideal;
  std::set<Word> removed;  // finite subset of the ideal
};

/// Replaces `removed` by its subword closure intersected with the ideal.
/// The shrunken neighborhood is again a two-sided ideal of the semigroup.
IdealBasis shrink_ideal(const IdealBasis& basis);

/// Zero always lies in the neighborhood; a nonzero element does iff its
/// D-index is in the ideal and not removed.
bool in_ideal_nbhd(const IdealBasis& basis, const MElem& x);

/// A word separating the pattern-union ideals of two finite index sets:
/// the marker 0 1^n 0 for the smallest n in a minus b, which lies in the
/// first ideal but not the second. Empty when a is a subset of b.
std::optional<Word> distinct_topology_witness(const std::set<std::uint32_t>& a,
                                              const std::set<std::uint32_t>& b);

/// For the countable-alphabet diagonal neighborhoods
/// U_n = { ((x_k,x_k),(x_k,x_k)) : k > n } u {0}: the least n with
/// x.U_n = U_n.x = {0}, from the last letters of the element's words.
/// Throws ZeroInput.
std::uint32_t annihilator_index(const MElem& x);

}  // namespace mcal

#endif
