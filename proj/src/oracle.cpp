#include "mcal/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

#include "mcal/autom.hpp"
#include "mcal/rng.hpp"
#include "mcal/textio.hpp"
#include "mcal/topology.hpp"

namespace mcal {

std::size_t Truncation::index_of(const MElem& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it != elements.end() && *it == x)
    return static_cast<std::size_t>(it - elements.begin());
  return elements.size();
}

bool Report::all_pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.pass; });
}

namespace {

// membership identity a.c^t = b.d^t != eps, letter by letter, no allocation;
// rc and rd are the pre-reversed third and fourth words
bool concat_eq(const Word& a, const Word& rc, const Word& b, const Word& rd) {
  const std::size_t n = a.size() + rc.size();
  if (n != b.size() + rd.size() || n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t lhs = i < a.size() ? a.letters[i] : rc.letters[i - a.size()];
    std::uint32_t rhs = i < b.size() ? b.letters[i] : rd.letters[i - b.size()];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

Truncation build_truncation(std::uint32_t lambda, std::size_t max_len, Exec exec) {
  Alphabet alphabet = Alphabet::finite(lambda);
  const std::vector<Word> words = enumerate_words(alphabet, max_len);
  const std::size_t nwords = words.size();
  const double candidates =
      static_cast<double>(nwords) * nwords * nwords * nwords;
  if (candidates > 1e7)
    throw SizeGuard("truncation would filter " + std::to_string(candidates) +
                    " quadruples; the guard allows at most 1e7");
  std::vector<Word> rev(nwords);
  for (std::size_t i = 0; i < nwords; ++i) rev[i] = reverse(words[i]);

  const std::size_t total = nwords * nwords * nwords * nwords;
  auto keep = [&](std::size_t flat, std::vector<MElem>& out) {
    std::size_t l = flat % nwords;
    flat /= nwords;
    std::size_t k = flat % nwords;
    flat /= nwords;
    std::size_t j = flat % nwords;
    std::size_t i = flat / nwords;
    if (concat_eq(words[i], rev[k], words[j], rev[l]))
      out.push_back(m_make(words[i], words[j], words[k], words[l]));
  };

  std::vector<MElem> found;
  if (exec == Exec::serial) {
    for (std::size_t flat = 0; flat < total; ++flat) keep(flat, found);
  } else {
#pragma omp parallel
    {
      std::vector<MElem> local;
#pragma omp for schedule(static) nowait
      for (std::size_t flat = 0; flat < total; ++flat) keep(flat, local);
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
  }
  found.push_back(MElem::zero());
  std::sort(found.begin(), found.end());
  return Truncation{alphabet, max_len, std::move(found)};
}

namespace {

std::vector<MElem> left_keys(const std::vector<MElem>& e, Exec exec) {
  std::vector<MElem> keys(e.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < e.size(); ++i) keys[i] = m_mul(m_inv(e[i]), e[i]);
  return keys;
}

std::vector<MElem> right_keys(const std::vector<MElem>& e, Exec exec) {
  std::vector<MElem> keys(e.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < e.size(); ++i) keys[i] = m_mul(e[i], m_inv(e[i]));
  return keys;
}

IndexRelation pairs_with_equal_keys(const std::vector<MElem>& keys) {
  std::map<MElem, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
  IndexRelation rel;
  for (const auto& [key, members] : groups)
    for (std::size_t i : members)
      for (std::size_t j : members) rel.emplace(i, j);
  return rel;
}

IndexRelation meet(const IndexRelation& x, const IndexRelation& y) {
  IndexRelation out;
  for (const auto& p : x)
    if (y.contains(p)) out.insert(p);
  return out;
}

// D as a composition of the definitional L and R: scan intermediates over
// the full D-class of the left element, in either composition order.
IndexRelation oracle_d_compose(const Truncation& t, bool l_first, Exec exec) {
  const auto& e = t.elements;
  const std::size_t n = e.size();
  std::vector<MElem> lkey = left_keys(e, exec);
  std::vector<MElem> rkey = right_keys(e, exec);

  // for x: the keys of everything reachable from x through one intermediate
  std::vector<std::set<MElem>> step(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].is_zero()) continue;
    for (const MElem& z : d_class(d_index(e[i]))) {
      MElem zl = m_mul(m_inv(z), z);
      MElem zr = m_mul(z, m_inv(z));
      if (l_first) {
        if (zl == lkey[i]) step[i].insert(zr);  // x L z, want z R y
      } else {
        if (zr == rkey[i]) step[i].insert(zl);  // x R z, want z L y
      }
    }
  }

  IndexRelation rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (e[i].is_zero() || e[j].is_zero()) {
        if (e[i].is_zero() && e[j].is_zero()) rel.emplace(i, j);
        continue;
      }
      const MElem& want = l_first ? rkey[j] : lkey[j];
      if (step[i].contains(want)) rel.emplace(i, j);
    }
  }
  return rel;
}

// J by bounded-multiplier search: y is reachable from x when some
// idempotent k = (x.t)^-1.(x.t) with t in the bounded multiplier set (or
// t absent) satisfies y.k = y; then s = y.(x.t)^-1 is a verified left
// witness. Mutual reachability is the relation.
IndexRelation oracle_j(const Truncation& t, Exec exec) {
  const auto& e = t.elements;
  const std::size_t n = e.size();
  std::vector<std::uint32_t> letters(t.alphabet.size());
  std::iota(letters.begin(), letters.end(), 0u);
  const std::vector<MElem> multipliers =
      bounded_elements(letters, 2 * t.max_len);

  std::vector<std::vector<MElem>> keys(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < n; ++i) {
    std::set<MElem> ks;
    ks.insert(m_mul(m_inv(e[i]), e[i]));
    for (const MElem& mult : multipliers) {
      MElem m = m_mul(e[i], mult);
      if (!m.is_zero()) ks.insert(m_mul(m_inv(m), m));
    }
    keys[i].assign(ks.begin(), ks.end());
  }

  std::vector<char> reach(n * n, 0);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const MElem& k : keys[i])
        if (m_mul(e[j], k) == e[j]) {
          reach[i * n + j] = 1;
          break;
        }

  IndexRelation rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i * n + j] && reach[j * n + i]) rel.emplace(i, j);
  return rel;
}

}  // namespace

IndexRelation oracle_green(const Truncation& t, GreenRel rel, Exec exec) {
  switch (rel) {
    case GreenRel::L:
      return pairs_with_equal_keys(left_keys(t.elements, exec));
    case GreenRel::R:
      return pairs_with_equal_keys(right_keys(t.elements, exec));
    case GreenRel::H:
      return meet(pairs_with_equal_keys(left_keys(t.elements, exec)),
                  pairs_with_equal_keys(right_keys(t.elements, exec)));
    case GreenRel::D:
      return oracle_d_compose(t, true, exec);
    case GreenRel::J:
      return oracle_j(t, exec);
  }
  return {};
}

IndexRelation oracle_d_via_rl(const Truncation& t, Exec exec) {
  return oracle_d_compose(t, false, exec);
}

IndexRelation fast_green_relation(const Truncation& t, GreenRel rel) {
  IndexRelation out;
  const auto& e = t.elements;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (green(e[i], e[j], rel)) out.emplace(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// check_all

namespace {

struct SuiteRunner {
  const Truncation& t;
  const CheckOptions& opts;
  Report report;

  void fail(SuiteResult& s, const std::string& witness) {
    if (!s.pass) return;
    s.pass = false;
    s.counterexample = witness;
  }

  void membership_suite() {
    SuiteResult s{"membership", true, ""};
    const auto& e = t.elements;
    if (t.index_of(MElem::zero()) == e.size()) fail(s, "zero missing");
    for (std::size_t i = 0; i < e.size() && s.pass; ++i) {
      if (e[i].is_zero()) continue;
      Word lhs = concat(e[i].a(), reverse(e[i].c()));
      Word rhs = concat(e[i].b(), reverse(e[i].d()));
      if (lhs.empty() || lhs != rhs)
        fail(s, render_elem(e[i]) + " violates the membership identity");
      else if (t.index_of(m_inv(e[i])) == e.size())
        fail(s, "inverse of " + render_elem(e[i]) + " missing");
    }
    report.suites.push_back(std::move(s));
  }

  void associativity_suite() {
    SuiteResult s{"associativity", true, ""};
    const auto& e = t.elements;
    const std::size_t n = e.size();
    auto mul = opts.mul ? opts.mul : [](const MElem& x, const MElem& y) {
      return m_mul(x, y);
    };
    auto violates = [&](std::size_t i, std::size_t j, std::size_t k) {
      return mul(mul(e[i], e[j]), e[k]) != mul(e[i], mul(e[j], e[k]));
    };
    auto describe = [&](std::size_t i, std::size_t j, std::size_t k) {
      return "x=" + render_elem(e[i]) + " y=" + render_elem(e[j]) +
             " z=" + render_elem(e[k]);
    };
    const std::size_t total = n * n * n;
    if (total <= 3'000'000) {
      std::size_t first_bad = total;
      if (opts.exec == Exec::serial) {
        for (std::size_t flat = 0; flat < total && first_bad == total; ++flat) {
          std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
          if (violates(i, j, k)) first_bad = flat;
        }
      } else {
#pragma omp parallel
        {
          std::size_t local = total;
#pragma omp for schedule(static) nowait
          for (std::size_t flat = 0; flat < total; ++flat) {
            if (local != total) continue;
            std::size_t k = flat % n, j = (flat / n) % n, i = flat / (n * n);
            if (violates(i, j, k)) local = flat;
          }
#pragma omp critical
          first_bad = std::min(first_bad, local);
        }
      }
      if (first_bad != total) {
        std::size_t k = first_bad % n, j = (first_bad / n) % n,
                    i = first_bad / (n * n);
        fail(s, describe(i, j, k));
      }
    } else {
      Rng rng(opts.seed);
      for (int trial = 0; trial < 2000 && s.pass; ++trial) {
        std::size_t i = rng.below(n), j = rng.below(n), k = rng.below(n);
        if (violates(i, j, k)) fail(s, describe(i, j, k));
      }
    }
    report.suites.push_back(std::move(s));
  }

  void inverse_axioms_suite() {
    SuiteResult s{"inverse-axioms", true, ""};
    const auto& e = t.elements;
    std::vector<MElem> idempotents;
    for (std::size_t i = 0; i < e.size() && s.pass; ++i) {
      MElem inv = m_inv(e[i]);
      if (m_mul(m_mul(e[i], inv), e[i]) != e[i])
        fail(s, "x x^-1 x != x for x=" + render_elem(e[i]));
      else if (m_mul(m_mul(inv, e[i]), inv) != inv)
        fail(s, "x^-1 x x^-1 != x^-1 for x=" + render_elem(e[i]));
      if (m_is_idempotent(e[i])) idempotents.push_back(e[i]);
    }
    for (std::size_t i = 0; i < idempotents.size() && s.pass; ++i)
      for (std::size_t j = i + 1; j < idempotents.size() && s.pass; ++j)
        if (m_mul(idempotents[i], idempotents[j]) !=
            m_mul(idempotents[j], idempotents[i]))
          fail(s, "idempotents do not commute: e=" + render_elem(idempotents[i]) +
                      " f=" + render_elem(idempotents[j]));
    report.suites.push_back(std::move(s));
  }

  std::string pair_str(const std::pair<std::size_t, std::size_t>& p) {
    return "(" + render_elem(t.elements[p.first]) + ", " +
           render_elem(t.elements[p.second]) + ")";
  }

  void green_agreement_suite() {
    SuiteResult s{"green-agreement", true, ""};
    const struct {
      GreenRel rel;
      const char* name;
    } rels[] = {{GreenRel::L, "L"},
                {GreenRel::R, "R"},
                {GreenRel::H, "H"},
                {GreenRel::D, "D"}};
    for (const auto& [rel, name] : rels) {
      if (!s.pass) break;
      IndexRelation oracle = oracle_green(t, rel, opts.exec);
      IndexRelation fast = fast_green_relation(t, rel);
      if (oracle != fast) {
        std::vector<std::pair<std::size_t, std::size_t>> diff;
        std::set_symmetric_difference(oracle.begin(), oracle.end(), fast.begin(),
                                      fast.end(), std::back_inserter(diff));
        fail(s, std::string(name) + " disagrees at " + pair_str(diff.front()));
        break;
      }
      if (rel == GreenRel::H) {
        for (const auto& p : oracle)
          if (p.first != p.second) {
            fail(s, "H-class not a singleton: " + pair_str(p));
            break;
          }
      }
      if (rel == GreenRel::D) {
        IndexRelation rl = oracle_d_via_rl(t, opts.exec);
        if (rl != oracle) {
          fail(s, "L o R and R o L compositions disagree");
          break;
        }
      }
    }
    report.suites.push_back(std::move(s));
  }

  void d_equals_j_suite() {
    SuiteResult s{"d-equals-j", true, ""};
    IndexRelation j = oracle_green(t, GreenRel::J, opts.exec);
    IndexRelation d = fast_green_relation(t, GreenRel::D);
    for (const auto& p : j)
      if (!d.contains(p)) {
        fail(s, "J-pair outside D: " + pair_str(p));
        break;
      }
    if (s.pass) {
      for (const auto& p : d)
        if (!j.contains(p)) {
          fail(s, "bound-insufficient: D-pair not reached by the multiplier "
                  "search: " + pair_str(p));
          break;
        }
    }
    report.suites.push_back(std::move(s));
  }

  void dclass_counts_suite() {
    SuiteResult s{"dclass-counts", true, ""};
    std::map<Word, std::set<MElem>> by_index;
    for (const MElem& x : t.elements)
      if (!x.is_zero()) by_index[d_index(x).word].insert(x);
    for (const auto& [p, members] : by_index) {
      if (!s.pass) break;
      std::set<MElem> cls = d_class(DIndex{p});
      std::size_t expected = (p.size() + 1) * (p.size() + 1);
      if (cls.size() != expected) {
        fail(s, "|D_" + render_word(p) + "| = " + std::to_string(cls.size()) +
                    ", expected " + std::to_string(expected));
        break;
      }
      for (const MElem& x : cls)
        if (d_index(x).word != p) {
          fail(s, "class member " + render_elem(x) + " has the wrong index");
          break;
        }
      // classes short enough to fit whole are exactly what the truncation holds
      if (p.size() <= t.max_len && members != cls)
        fail(s, "truncation disagrees with D_" + render_word(p));
    }
    report.suites.push_back(std::move(s));
  }

  void idempotent_order_suite() {
    SuiteResult s{"idempotent-order", true, ""};
    std::vector<MElem> idempotents;
    for (const MElem& x : t.elements)
      if (m_is_idempotent(x)) idempotents.push_back(x);
    for (const MElem& e : idempotents) {
      if (!s.pass) break;
      if (!leq_idempotent(MElem::zero(), e)) {
        fail(s, "zero not below " + render_elem(e));
        break;
      }
      if (e.is_zero()) continue;
      for (const MElem& f : idempotents) {
        if (f.is_zero()) continue;
        bool by_mul = m_mul(e, f) == e;
        bool by_suffix = is_suffix(f.a(), e.a()) && is_suffix(f.c(), e.c());
        if (by_mul != by_suffix) {
          fail(s, "order characterizations disagree at e=" + render_elem(e) +
                      " f=" + render_elem(f));
          break;
        }
        if (by_mul && e != f && d_index(e) == d_index(f)) {
          fail(s, "comparable distinct idempotents in one D-class: e=" +
                      render_elem(e) + " f=" + render_elem(f));
          break;
        }
      }
    }
    report.suites.push_back(std::move(s));
  }

  void p1_witnesses_suite() {
    SuiteResult s{"p1-witnesses", true, ""};
    const auto& e = t.elements;
    for (std::size_t i = 0; i < e.size() && s.pass; ++i) {
      if (e[i].is_zero()) continue;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j].is_zero()) continue;
        MElem prod = m_mul(e[i], e[j]);
        auto wit = product_dindex_law(e[i], e[j]);
        std::string at = "x=" + render_elem(e[i]) + " y=" + render_elem(e[j]);
        if (prod.is_zero() != !wit.has_value()) {
          fail(s, "witness/product zero mismatch at " + at);
          break;
        }
        if (!wit) continue;
        Word p = d_index(e[i]).word, q = d_index(e[j]).word;
        Word z = d_index(prod).word;
        Word lhs = concat(concat(wit->s1, p), wit->r1);
        Word rhs = concat(concat(wit->s2, q), wit->r2);
        if (lhs != rhs || lhs != z) {
          fail(s, "witness identity fails at " + at);
          break;
        }
        if (!is_subword(p, z) || !is_subword(q, z)) {
          fail(s, "factor index not a subword of the product index at " + at);
          break;
        }
      }
    }
    report.suites.push_back(std::move(s));
  }

  void eggbox_suite() {
    SuiteResult s{"eggbox", true, ""};
    for (const MElem& x : t.elements) {
      if (!s.pass) break;
      if (x.is_zero()) continue;
      std::set<MElem> nbrs = eggbox_neighbors(x);
      if (nbrs.size() > 4) {
        fail(s, "more than four neighbors at " + render_elem(x));
        break;
      }
      for (const MElem& y : nbrs) {
        if (d_index(y) != d_index(x)) {
          fail(s, "neighbor leaves the D-class: x=" + render_elem(x) +
                      " y=" + render_elem(y));
          break;
        }
        if (!eggbox_neighbors(y).contains(x)) {
          fail(s, "neighbor relation not symmetric: x=" + render_elem(x) +
                      " y=" + render_elem(y));
          break;
        }
      }
    }
    report.suites.push_back(std::move(s));
  }

  void factorization_suite() {
    SuiteResult s{"factorization", true, ""};
    auto [g1, g2] = generators(t.alphabet.size());
    std::set<MElem> gens(g1.begin(), g1.end());
    gens.insert(g2.begin(), g2.end());
    for (const MElem& x : t.elements) {
      if (!s.pass) break;
      if (x.is_zero()) continue;
      std::vector<MElem> factors = factor_over_generators(x);
      MElem prod = factors.front();
      bool in_gens = gens.contains(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) {
        prod = m_mul(prod, factors[i]);
        in_gens = in_gens && gens.contains(factors[i]);
      }
      if (!in_gens)
        fail(s, "factor outside the generator sets at " + render_elem(x));
      else if (prod != x)
        fail(s, "factorization replay fails at " + render_elem(x));
    }
    report.suites.push_back(std::move(s));
  }

  void automorphisms_suite() {
    SuiteResult s{"automorphisms", true, ""};
    const std::uint32_t lambda = t.alphabet.size();
    std::vector<AutTag> tags;
    if (lambda <= 4) {
      std::vector<std::uint32_t> perm(lambda);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        tags.push_back(AutTag{LetterBijection(perm), 1});
        tags.push_back(AutTag{LetterBijection(perm), -1});
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      tags.push_back(AutTag{LetterBijection::identity(lambda), 1});
      tags.push_back(AutTag{LetterBijection::identity(lambda), -1});
    }

    const auto& e = t.elements;
    const std::size_t n = e.size();
    std::set<MElem> universe(e.begin(), e.end());
    auto [g1, g2] = generators(lambda);
    std::set<MElem> gen1(g1.begin(), g1.end()), gen2(g2.begin(), g2.end());

    for (const AutTag& tag : tags) {
      if (!s.pass) break;
      std::string tag_str = std::string(tag.sign == 1 ? "phi" : "psi");
      // bijection on the truncation
      std::set<MElem> image;
      for (const MElem& x : e) image.insert(apply_aut(tag, x));
      if (image != universe) {
        fail(s, tag_str + " does not permute the truncation");
        break;
      }
      // generator sets map the right way
      if (t.max_len >= 1) {
        std::set<MElem> img1;
        for (const MElem& g : gen1) img1.insert(apply_aut(tag, g));
        if (img1 != (tag.sign == 1 ? gen1 : gen2)) {
          fail(s, tag_str + " moves the generator sets incorrectly");
          break;
        }
      }
      // homomorphism
      if (n * n <= 20'000) {
        for (std::size_t i = 0; i < n && s.pass; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (apply_aut(tag, m_mul(e[i], e[j])) !=
                m_mul(apply_aut(tag, e[i]), apply_aut(tag, e[j]))) {
              fail(s, tag_str + " not multiplicative at x=" + render_elem(e[i]) +
                          " y=" + render_elem(e[j]));
              break;
            }
      } else {
        Rng rng(opts.seed);
        for (int trial = 0; trial < 1000 && s.pass; ++trial) {
          const MElem& x = e[rng.below(n)];
          const MElem& y = e[rng.below(n)];
          if (apply_aut(tag, m_mul(x, y)) !=
              m_mul(apply_aut(tag, x), apply_aut(tag, y)))
            fail(s, tag_str + " not multiplicative at x=" + render_elem(x) +
                        " y=" + render_elem(y));
        }
      }
    }
    report.suites.push_back(std::move(s));
  }

  void topology_suite() {
    SuiteResult s{"topology", true, ""};
    // compact topology: shrink a small excluded set and certify the ideal
    // property over the truncation
    std::set<Word> excluded;
    for (const MElem& x : t.elements) {
      if (x.is_zero()) continue;
      excluded.insert(d_index(x).word);
      if (excluded.size() == 3) break;
    }
    std::set<Word> shrunk = shrink_compact(excluded);
    if (shrink_compact(shrunk) != shrunk)
      fail(s, "shrink_compact is not idempotent");
    CompactBasis basis{shrunk};
    for (const MElem& x : t.elements) {
      if (!s.pass) break;
      if (in_compact_nbhd(basis, x) != in_compact_nbhd(basis, m_inv(x))) {
        fail(s, "compact neighborhood not inversion-symmetric at " +
                    render_elem(x));
        break;
      }
      for (const MElem& y : t.elements) {
        if (!in_compact_nbhd(basis, y)) continue;
        if (!in_compact_nbhd(basis, m_mul(x, y)) ||
            !in_compact_nbhd(basis, m_mul(y, x))) {
          fail(s, "shrunken compact neighborhood is not an ideal at x=" +
                      render_elem(x) + " y=" + render_elem(y));
          break;
        }
      }
    }

    // ideal topologies: the explicit ideal generated by the first letter,
    // and the two-marker pattern family when the alphabet allows it
    std::vector<IdealBasis> bases;
    bases.push_back(shrink_ideal(
        IdealBasis{IdealSpec::explicit_gens({Word{0}}), {Word{0}}}));
    if (t.alphabet.size() >= 2)
      bases.push_back(shrink_ideal(IdealBasis{
          IdealSpec::pattern_union({1, 2}), {pattern_marker(1)}}));
    for (const IdealBasis& ib : bases) {
      if (!s.pass) break;
      for (const MElem& x : t.elements) {
        if (!s.pass) break;
        if (in_ideal_nbhd(ib, x) != in_ideal_nbhd(ib, m_inv(x))) {
          fail(s, "ideal neighborhood not inversion-symmetric at " +
                      render_elem(x));
          break;
        }
        for (const MElem& y : t.elements) {
          if (!in_ideal_nbhd(ib, y)) continue;
          if (!in_ideal_nbhd(ib, m_mul(x, y)) ||
              !in_ideal_nbhd(ib, m_mul(y, x))) {
            fail(s, "shrunken ideal neighborhood is not an ideal at x=" +
                        render_elem(x) + " y=" + render_elem(y));
            break;
          }
        }
      }
    }
    report.suites.push_back(std::move(s));
  }
};

}  // namespace

Report check_all(const Truncation& t, const CheckOptions& opts) {
  SuiteRunner runner{t, opts, {}};
  runner.membership_suite();
  runner.associativity_suite();
  runner.inverse_axioms_suite();
  runner.green_agreement_suite();
  runner.d_equals_j_suite();
  runner.dclass_counts_suite();
  runner.idempotent_order_suite();
  runner.p1_witnesses_suite();
  runner.eggbox_suite();
  runner.factorization_suite();
  runner.automorphisms_suite();
  runner.topology_suite();
  return runner.report;
}

}  // namespace mcal
