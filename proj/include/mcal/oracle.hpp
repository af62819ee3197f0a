#ifndef MCAL_ORACLE_HPP
#define MCAL_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcal/exec.hpp"
#include "mcal/mcalister.hpp"

namespace mcal {

/// A finite brute-force universe: zero plus every valid element whose four
/// component words have length at most max_len. Closed under inversion.
struct Truncation {
  Alphabet alphabet;
  std::size_t max_len;
  std::vector<MElem> elements;  // sorted, zero first

  std::size_t index_of(const MElem& x) const;  // position, or elements.size()
};

/// Filters all word quadruples of bounded length through the membership
/// identity. Guarded: at most 1e7 candidate quadruples. This is the
/// definitional route; nothing here consults the fast predicates.
Truncation build_truncation(std::uint32_t lambda, std::size_t max_len,
                            Exec exec = Exec::parallel);

/// A relation as index pairs into Truncation::elements.
using IndexRelation = std::set<std::pair<std::size_t, std::size_t>>;

/// Green's relations computed from first principles with products and
/// inverses only: L and R through the idempotents x^-1.x and x.x^-1, H as
/// their meet, D as the composition L o R with intermediates drawn from
/// full D-classes, and J by bounded-multiplier ideal search (multiplier
/// components of length at most 2 * max_len).
IndexRelation oracle_green(const Truncation& t, GreenRel rel,
                           Exec exec = Exec::parallel);

/// The composition R o L, for checking that both composition orders agree.
IndexRelation oracle_d_via_rl(const Truncation& t, Exec exec = Exec::parallel);

/// The word-level predicates applied pairwise, for comparison.
IndexRelation fast_green_relation(const Truncation& t, GreenRel rel);

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when the suite passes
};

struct Report {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  Exec exec = Exec::parallel;
  /// The multiplication the associativity suite exercises. Defaults to the
  /// real one; tests substitute a corrupted product to prove the suite can
  /// fail.
  std::function<MElem(const MElem&, const MElem&)> mul;
};

/// Runs every invariant suite against the truncation, in a fixed order,
/// reporting the enumeration-first counterexample on failure.
Report check_all(const Truncation& t, const CheckOptions& opts = {});

}  // namespace mcal

#endif
