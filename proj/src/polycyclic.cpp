#include "mcal/polycyclic.hpp"

#include <cassert>

namespace mcal {

PElem p_mul(const PElem& x, const PElem& y) {
  if (x.is_zero() || y.is_zero()) return PElem::zero();
  const Word& b = x.right();
  const Word& c = y.left();
  if (auto c1 = strip_suffix(b, c)) {
    // c = c1.b; result (c1.a, d). When also b = b1.c we have b = c and both
    // cases give (a, d); the asserts pin that overlap.
    assert(!is_suffix(c, b) || (b == c && c1->empty()));
    return PElem::pair(concat(*c1, x.left()), y.right());
  }
  if (auto b1 = strip_suffix(c, b)) {
    return PElem::pair(x.left(), concat(*b1, y.right()));
  }
  return PElem::zero();  // b and c suffix-incomparable
}

PElem p_inv(const PElem& x) {
  if (x.is_zero()) return x;
  return PElem::pair(x.right(), x.left());
}

bool p_is_idempotent(const PElem& x) {
  if (x.is_zero()) return true;
  return x.left() == x.right();
}

}  // namespace mcal
