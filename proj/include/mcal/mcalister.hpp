#ifndef MCAL_MCALISTER_HPP
#define MCAL_MCALISTER_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "mcal/polycyclic.hpp"
#include "mcal/words.hpp"

namespace mcal {

/// A McAlister element: a quadruple ((a,b),(c,d)) of words with
/// a.c^t = b.d^t != eps, or the absorbing zero. Quadruples live inside the
/// Rees quotient of the squared polycyclic monoid, so a zero in either
/// coordinate collapses the whole element to zero.
class MElem {
public:
  static MElem zero() { return MElem(); }

  bool is_zero() const noexcept { return zero_; }
  const Word& a() const noexcept { return a_; }
  const Word& b() const noexcept { return b_; }
  const Word& c() const noexcept { return c_; }
  const Word& d() const noexcept { return d_; }

  PElem first_pair() const;   // (a,b); zero if the element is zero
  PElem second_pair() const;  // (c,d)

  friend bool operator==(const MElem&, const MElem&) = default;
  friend std::strong_ordering operator<=>(const MElem& x, const MElem& y) {
    if (auto cmp = (!x.zero_) <=> (!y.zero_); cmp != 0) return cmp;
    if (auto cmp = x.a_ <=> y.a_; cmp != 0) return cmp;
    if (auto cmp = x.b_ <=> y.b_; cmp != 0) return cmp;
    if (auto cmp = x.c_ <=> y.c_; cmp != 0) return cmp;
    return x.d_ <=> y.d_;
  }

private:
  friend MElem m_make(Word, Word, Word, Word);
  friend MElem m_mul(const MElem&, const MElem&);
  MElem() = default;
  bool zero_ = true;
  Word a_, b_, c_, d_;
};

/// Validated constructor: throws MembershipViolation unless
/// a.c^t = b.d^t != eps.
MElem m_make(Word a, Word b, Word c, Word d);

/// Componentwise polycyclic product, collapsed to zero when either
/// coordinate dies. A nonzero result always satisfies the membership
/// identity; a violation would be an implementation bug and throws
/// std::logic_error.
MElem m_mul(const MElem& x, const MElem& y);

/// ((a,b),(c,d)) -> ((b,a),(d,c)); zero is fixed. The unique inverse.
MElem m_inv(const MElem& x);

bool m_is_idempotent(const MElem& x);

enum class Form { form1, form2 };

/// Canonical decomposition of a nonzero element. Form1 reconstructs
/// ((u,uv),(wv^t,w)), Form2 reconstructs ((uv,u),(w,wv^t)). Components of
/// equal length decompose as Form2 with v = eps.
struct CanonicalForm {
  Form shape;
  Word u, v, w;

  MElem reconstruct() const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canon(const MElem& x);  // throws ZeroInput

/// The word p = a.c^t labelling the D-class of a nonzero element. Equal to
/// b.d^t and independent of the representative.
struct DIndex {
  Word word;
  friend bool operator==(const DIndex&, const DIndex&) = default;
  friend std::strong_ordering operator<=>(const DIndex&, const DIndex&) = default;
};

DIndex d_index(const MElem& x);  // throws ZeroInput

/// The full D-class of a nonempty index word p: one element per pair of
/// splits p = a.c^t, exactly (|p|+1)^2 of them. Throws EmptyIndex on eps.
std::set<MElem> d_class(const DIndex& p);

enum class GreenRel { L, R, H, D, J };

/// Word-level Green's relation test: L is equality of the b,d components,
/// R of the a,c components, H is equality, D and J compare d_index. Zero is
/// related only to itself under all five relations.
bool green(const MElem& x, const MElem& y, GreenRel rel);

/// Natural partial order restricted to idempotents: true iff e.f = e. For
/// nonzero idempotents this is equivalent to f's words being suffixes of
/// e's words; both routes are computed and must agree. Throws NotIdempotent.
bool leq_idempotent(const MElem& e, const MElem& f);

/// True iff e is ((eps,eps),(x,x)) or ((x,x),(eps,eps)) for a single
/// letter x. Throws NotIdempotent.
bool is_maximal_idempotent(const MElem& e);

/// The <= 4 elements reachable by transferring one boundary letter:
/// last of a to the end of c, last of b to the end of d, last of c to the
/// end of a, last of d to the end of b; moves with an empty source are
/// skipped. All results share the element's D-class.
std::set<MElem> eggbox_neighbors(const MElem& x);  // throws ZeroInput

/// All valid elements ((a,b),(c,d)) with a,b,c,d suffixes of x,y,u,v
/// respectively.
std::set<MElem> suffix_box(const Word& x, const Word& y, const Word& u,
                           const Word& v);

/// Everything dividing b by a on either side: {x : a.x = b or x.a = b}.
/// Exhaustive over candidates whose letters occur in a or b and whose
/// component lengths are at most length_bound (default: max component
/// length of a plus max component length of b). Always finite.
std::set<MElem> division_set(const MElem& a, const MElem& b,
                             std::optional<std::size_t> length_bound = {});

/// Constructive witness for the D-index of a nonzero product: words with
/// s1.p.r1 = s2.q.r2 = d_index(x.y) where p = d_index(x), q = d_index(y).
struct DIndexWitness {
  Word s1, r1, s2, r2;
  friend bool operator==(const DIndexWitness&, const DIndexWitness&) = default;
};

/// Derives the witness from the suffix case split of the factors, without
/// inspecting the product; returns nullopt exactly when x.y = 0. Throws
/// ZeroInput if either factor is zero.
std::optional<DIndexWitness> product_dindex_law(const MElem& x, const MElem& y);

/// All valid nonzero elements whose four components have length at most
/// max_comp, over the given letters.
std::vector<MElem> bounded_elements(const std::vector<std::uint32_t>& letters,
                                    std::size_t max_comp);

}  // namespace mcal

#endif
