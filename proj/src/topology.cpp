#include "mcal/topology.hpp"

#include <algorithm>

namespace mcal {

bool in_compact_nbhd(const CompactBasis& basis, const MElem& x) {
  if (x.is_zero()) return true;
  return !basis.excluded.contains(d_index(x).word);
}

std::set<Word> shrink_compact(const std::set<Word>& a) {
  return subword_closure(a);
}

IdealSpec IdealSpec::explicit_gens(std::set<Word> generators) {
  for (const Word& g : generators)
    if (g.empty())
      throw EmptyIndex("ideal generators must be nonempty words");
  return IdealSpec(Kind::explicit_gens, std::move(generators));
}

Word pattern_marker(std::uint32_t n) {
  Word w{0};
  w.letters.insert(w.letters.end(), n, 1u);
  w.letters.push_back(0u);
  return w;
}

IdealSpec IdealSpec::pattern_union(const std::set<std::uint32_t>& ns) {
  std::set<Word> markers;
  for (std::uint32_t n : ns) markers.insert(pattern_marker(n));
  return IdealSpec(Kind::pattern_union, std::move(markers));
}

bool in_ideal(const IdealSpec& spec, const Word& w) {
  if (w.empty()) return false;
  return std::any_of(spec.markers().begin(), spec.markers().end(),
                     [&](const Word& m) { return is_subword(m, w); });
}

IdealBasis shrink_ideal(const IdealBasis& basis) {
  std::set<Word> closed = subword_closure(basis.removed);
  std::set<Word> kept;
  for (const Word& w : closed)
    if (in_ideal(basis.ideal, w)) kept.insert(w);
  return IdealBasis{basis.ideal, std::move(kept)};
}

bool in_ideal_nbhd(const IdealBasis& basis, const MElem& x) {
  if (x.is_zero()) return true;
  Word p = d_index(x).word;
  return in_ideal(basis.ideal, p) && !basis.removed.contains(p);
}

std::optional<Word> distinct_topology_witness(const std::set<std::uint32_t>& a,
                                              const std::set<std::uint32_t>& b) {
  for (std::uint32_t n : a)
    if (!b.contains(n)) return pattern_marker(n);
  return std::nullopt;
}

std::uint32_t annihilator_index(const MElem& x) {
  if (x.is_zero()) throw ZeroInput("annihilator_index of zero");
  // x.u_k != 0 iff [b empty or b ends with k] and [d empty or d ends with k];
  // dually for u_k.x with a and c. Each side admits at most one escaping k.
  auto escape = [](const Word& p, const Word& q) -> std::optional<std::uint32_t> {
    if (p.empty()) return q.letters.back();  // q nonempty by membership
    if (q.empty()) return p.letters.back();
    if (p.letters.back() == q.letters.back()) return p.letters.back();
    return std::nullopt;
  };
  std::uint32_t n = 0;
  if (auto k = escape(x.b(), x.d())) n = std::max(n, *k);
  if (auto k = escape(x.a(), x.c())) n = std::max(n, *k);
  return n;
}

}  // namespace mcal
