#ifndef MCAL_TEXTIO_HPP
#define MCAL_TEXTIO_HPP

#include <string>
#include <string_view>

#include "mcal/mcalister.hpp"

namespace mcal {

// Surface syntax:
//   WORD := "e" | LETTER ("." LETTER)*        LETTER := decimal integer
//   ELEM := "0" | "((" WORD "," WORD "),(" WORD "," WORD "))"
// Whitespace between tokens is insignificant. render and parse are mutually
// inverse on valid inputs.

std::string render_word(const Word& w);
std::string render_elem(const MElem& x);

/// Throws SyntaxError (with position), LetterOutOfRange.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Throws SyntaxError, LetterOutOfRange, MembershipViolation.
MElem parse_elem(std::string_view text, const Alphabet& alphabet);

}  // namespace mcal

#endif
