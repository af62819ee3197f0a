#include "mcal/autom.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>

namespace mcal {

LetterBijection::LetterBijection(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw LetterOutOfRange("image table is not a permutation");
    seen[v] = true;
  }
}

LetterBijection LetterBijection::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  return LetterBijection(std::move(images));
}

std::uint32_t LetterBijection::apply(std::uint32_t letter) const {
  if (letter >= images_.size())
    throw LetterOutOfRange("letter " + std::to_string(letter) +
                           " outside alphabet of size " +
                           std::to_string(images_.size()));
  return images_[letter];
}

LetterBijection LetterBijection::compose(const LetterBijection& inner) const {
  if (size() != inner.size())
    throw SizeMismatch("composing bijections of different alphabets");
  std::vector<std::uint32_t> images(size());
  for (std::uint32_t i = 0; i < size(); ++i) images[i] = images_[inner.images_[i]];
  return LetterBijection(std::move(images));
}

LetterBijection LetterBijection::inverse() const {
  std::vector<std::uint32_t> images(size());
  for (std::uint32_t i = 0; i < size(); ++i) images[images_[i]] = i;
  return LetterBijection(std::move(images));
}

Word apply_h(const LetterBijection& f, const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (std::uint32_t letter : w.letters) out.letters.push_back(f.apply(letter));
  return out;
}

MElem apply_aut(const AutTag& t, const MElem& x) {
  if (x.is_zero()) return x;
  Word a = apply_h(t.f, x.a());
  Word b = apply_h(t.f, x.b());
  Word c = apply_h(t.f, x.c());
  Word d = apply_h(t.f, x.d());
  if (t.sign == 1) return m_make(std::move(a), std::move(b), std::move(c), std::move(d));
  return m_make(std::move(c), std::move(d), std::move(a), std::move(b));
}

AutTag compose_tags(const AutTag& s, const AutTag& t) {
  if (s.f.size() != t.f.size())
    throw SizeMismatch("composing tags over different alphabets");
  return AutTag{s.f.compose(t.f), s.sign * t.sign};
}

std::pair<std::vector<MElem>, std::vector<MElem>> generators(std::uint32_t lambda) {
  std::vector<MElem> g1, g2;
  g1.reserve(lambda);
  g2.reserve(lambda);
  for (std::uint32_t alpha = 0; alpha < lambda; ++alpha) {
    g1.push_back(m_make(Word{}, Word{alpha}, Word{alpha}, Word{}));
    g2.push_back(m_make(Word{alpha}, Word{}, Word{}, Word{alpha}));
  }
  return {std::move(g1), std::move(g2)};
}

namespace {

bool is_generator(const MElem& x) {
  if (x.is_zero()) return false;
  return (x.a().empty() && x.b().size() == 1 && x.c() == x.b() && x.d().empty()) ||
         (x.b().empty() && x.a().size() == 1 && x.d() == x.a() && x.c().empty());
}

// ((eps,u),(u^t,eps)) expands letter by letter in writing order
void expand_g1(const Word& u, std::vector<MElem>& out) {
  for (std::uint32_t letter : u.letters)
    out.push_back(m_make(Word{}, Word{letter}, Word{letter}, Word{}));
}

// ((u,eps),(eps,u^t)) expands letter by letter in reverse order
void expand_g2(const Word& u, std::vector<MElem>& out) {
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    out.push_back(m_make(Word{*it}, Word{}, Word{}, Word{*it}));
}

}  // namespace

std::vector<MElem> factor_over_generators(const MElem& x) {
  if (x.is_zero()) throw ZeroInput("cannot factor zero over the generators");
  if (is_generator(x)) return {x};

  CanonicalForm cf = canon(x);
  Word uv = concat(cf.u, cf.v);
  Word vwt = concat(cf.v, reverse(cf.w));
  Word uvwt = concat(uv, reverse(cf.w));

  std::vector<MElem> out;
  if (cf.shape == Form::form1) {
    // ((u,uv),(wv^t,w)) = ((eps,vw^t),(wv^t,eps)) . ((uvw^t,eps),(eps,wv^tu^t)) . ((eps,uv),(v^tu^t,eps))
    expand_g1(vwt, out);
    expand_g2(uvwt, out);
    expand_g1(uv, out);
  } else {
    // ((uv,u),(w,wv^t)) = ((uv,eps),(eps,v^tu^t)) . ((eps,uvw^t),(wv^tu^t,eps)) . ((vw^t,eps),(eps,wv^t))
    expand_g2(uv, out);
    expand_g1(uvwt, out);
    expand_g2(vwt, out);
  }

  assert([&] {
    MElem prod = out.front();
    for (std::size_t i = 1; i < out.size(); ++i) prod = m_mul(prod, out[i]);
    return prod == x;
  }());
  return out;
}

namespace {

struct CensusTables {
  std::vector<MElem> gens;                     // G1 then G2, indexed 0..2l-1
  std::vector<std::vector<MElem>> products;    // per length, odometer order
  std::size_t probe_len;
  std::uint32_t n;                             // 2 * lambda

  std::size_t partner(std::size_t g) const {
    return g < n / 2 ? g + n / 2 : g - n / 2;
  }
};

CensusTables build_tables(std::uint32_t lambda, int probe_len) {
  CensusTables t;
  t.n = 2 * lambda;
  t.probe_len = static_cast<std::size_t>(probe_len);
  auto [g1, g2] = generators(lambda);
  t.gens = std::move(g1);
  t.gens.insert(t.gens.end(), g2.begin(), g2.end());
  t.products.resize(t.probe_len + 1);
  t.products[1] = t.gens;
  for (std::size_t len = 2; len <= t.probe_len; ++len) {
    const auto& prev = t.products[len - 1];
    auto& cur = t.products[len];
    cur.reserve(prev.size() * t.n);
    for (const MElem& p : prev)
      for (std::uint32_t g = 0; g < t.n; ++g) cur.push_back(m_mul(p, t.gens[g]));
  }
  return t;
}

// checks that the generator map extends consistently over all probed
// products: zero maps to zero, nonzero products map injectively
bool candidate_survives(const CensusTables& t, const std::vector<std::uint32_t>& sigma) {
  for (std::uint32_t g = 0; g < t.n; ++g)
    if (sigma[t.partner(g)] != t.partner(sigma[g])) return false;

  std::map<MElem, MElem> fwd, bwd;
  std::vector<std::uint32_t> seq;
  for (std::size_t len = 1; len <= t.probe_len; ++len) {
    seq.assign(len, 0);
    std::size_t flat = 0;
    for (;;) {
      std::size_t image_flat = 0;
      for (std::uint32_t g : seq) image_flat = image_flat * t.n + sigma[g];
      const MElem& p = t.products[len][flat];
      const MElem& q = t.products[len][image_flat];
      if (p.is_zero() != q.is_zero()) return false;
      if (!p.is_zero()) {
        if (auto [it, inserted] = fwd.emplace(p, q); !inserted && it->second != q)
          return false;
        if (auto [it, inserted] = bwd.emplace(q, p); !inserted && it->second != p)
          return false;
      }
      std::size_t pos = len;
      while (pos > 0 && seq[pos - 1] + 1 == t.n) {
        seq[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++seq[pos - 1];
      ++flat;
    }
  }
  return true;
}

// survivors are tag-shaped: the G1 images land entirely in G1 (sign +1) or
// entirely in G2 (sign -1)
std::vector<AutTag> tags_from_survivors(
    const CensusTables& t, const std::vector<std::vector<std::uint32_t>>& survivors) {
  const std::uint32_t lambda = t.n / 2;
  std::vector<AutTag> out;
  for (const auto& sigma : survivors) {
    bool phi = sigma[0] < lambda;
    bool shaped = true;
    std::vector<std::uint32_t> images(lambda);
    for (std::uint32_t alpha = 0; alpha < lambda && shaped; ++alpha) {
      std::uint32_t img = sigma[alpha];
      shaped = phi ? img < lambda : img >= lambda;
      images[alpha] = phi ? img : img - lambda;
    }
    if (!shaped) continue;  // cannot extend to an automorphism
    out.push_back(AutTag{LetterBijection(images), phi ? 1 : -1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<AutTag> automorphism_census(std::uint32_t lambda, int probe_len,
                                        Exec exec) {
  if (lambda == 0 || lambda > 4)
    throw SizeGuard("census supports 1 <= lambda <= 4, got " +
                    std::to_string(lambda));
  if (probe_len < 2) throw McalError("census probe depth must be at least 2");

  CensusTables t = build_tables(lambda, probe_len);

  std::vector<std::uint32_t> perm(t.n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<std::uint32_t>> candidates;
  do {
    candidates.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<std::uint32_t>> survivors;
  if (exec == Exec::serial) {
    for (const auto& sigma : candidates)
      if (candidate_survives(t, sigma)) survivors.push_back(sigma);
  } else {
    std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t i = 0; i < candidates.size(); ++i)
      keep[i] = candidate_survives(t, candidates[i]) ? 1 : 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (keep[i]) survivors.push_back(candidates[i]);
  }
  return tags_from_survivors(t, survivors);
}

}  // namespace mcal
