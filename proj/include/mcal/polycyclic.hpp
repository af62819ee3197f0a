#ifndef MCAL_POLYCYCLIC_HPP
#define MCAL_POLYCYCLIC_HPP

#include <compare>

#include "mcal/words.hpp"

namespace mcal {

/// An element of the polycyclic monoid: a pair of words, or the absorbing
/// zero. (eps,eps) is the identity.
class PElem {
public:
  static PElem zero() { return PElem(); }
  static PElem pair(Word left, Word right) {
    PElem p;
    p.zero_ = false;
    p.left_ = std::move(left);
    p.right_ = std::move(right);
    return p;
  }

  bool is_zero() const noexcept { return zero_; }
  const Word& left() const noexcept { return left_; }
  const Word& right() const noexcept { return right_; }

  friend bool operator==(const PElem&, const PElem&) = default;
  friend std::strong_ordering operator<=>(const PElem& x, const PElem& y) {
    if (auto c = (!x.zero_) <=> (!y.zero_); c != 0) return c;  // zero first
    if (auto c = x.left_ <=> y.left_; c != 0) return c;
    return x.right_ <=> y.right_;
  }

private:
  PElem() = default;
  bool zero_ = true;
  Word left_, right_;
};

/// Polycyclic multiplication. With x=(a,b), y=(c,d): (c1.a, d) if c = c1.b,
/// (a, b1.d) if b = b1.c, zero otherwise; zero absorbs. The two cases agree
/// on (a,d) when b = c.
PElem p_mul(const PElem& x, const PElem& y);

/// (a,b) -> (b,a); zero is fixed.
PElem p_inv(const PElem& x);

/// True iff x*x = x; for a pair exactly when left = right.
bool p_is_idempotent(const PElem& x);

}  // namespace mcal

#endif
