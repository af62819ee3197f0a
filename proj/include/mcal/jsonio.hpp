#ifndef MCAL_JSONIO_HPP
#define MCAL_JSONIO_HPP

#include <json.hpp>

#include "mcal/autom.hpp"
#include "mcal/oracle.hpp"

namespace mcal {

// Machine forms: a word is an array of integers, an element is null (zero)
// or an array of four words, a relation is an array of element pairs, a
// report maps suite names to {counterexample, pass}. nlohmann::json keeps
// object keys sorted, so equal inputs serialize byte-identically.

nlohmann::json word_json(const Word& w);
nlohmann::json elem_json(const MElem& x);
nlohmann::json canon_json(const CanonicalForm& cf);
nlohmann::json tag_json(const AutTag& t);
nlohmann::json relation_json(const Truncation& t, const IndexRelation& rel);
nlohmann::json report_json(const Report& report);

}  // namespace mcal

#endif
