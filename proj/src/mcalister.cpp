#include "mcal/mcalister.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace mcal {

namespace {

// minimal word formatter for error messages; the CLI owns the real grammar
std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

bool valid_quad(const Word& a, const Word& b, const Word& c, const Word& d) {
  if (a.size() + c.size() != b.size() + d.size()) return false;
  Word lhs = concat(a, reverse(c));
  if (lhs.empty()) return false;
  return lhs == concat(b, reverse(d));
}

Word drop_last(const Word& w) {
  Word out = w;
  out.letters.pop_back();
  return out;
}

Word append_letter(const Word& w, std::uint32_t letter) {
  Word out = w;
  out.letters.push_back(letter);
  return out;
}

Word tail_from(const Word& w, std::size_t from) {
  Word out;
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(from),
                     w.letters.end());
  return out;
}

}  // namespace

PElem MElem::first_pair() const {
  return zero_ ? PElem::zero() : PElem::pair(a_, b_);
}

PElem MElem::second_pair() const {
  return zero_ ? PElem::zero() : PElem::pair(c_, d_);
}

MElem m_make(Word a, Word b, Word c, Word d) {
  Word lhs = concat(a, reverse(c));
  Word rhs = concat(b, reverse(d));
  if (lhs.empty() || lhs != rhs) {
    throw MembershipViolation("not a McAlister element: a.c^t = " +
                                  word_str(lhs) + ", b.d^t = " + word_str(rhs),
                              word_str(lhs), word_str(rhs));
  }
  MElem m;
  m.zero_ = false;
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  m.c_ = std::move(c);
  m.d_ = std::move(d);
  return m;
}

MElem m_mul(const MElem& x, const MElem& y) {
  if (x.is_zero() || y.is_zero()) return MElem::zero();
  PElem first = p_mul(x.first_pair(), y.first_pair());
  PElem second = p_mul(x.second_pair(), y.second_pair());
  if (first.is_zero() || second.is_zero()) return MElem::zero();
  if (!valid_quad(first.left(), first.right(), second.left(), second.right()))
    throw std::logic_error("m_mul produced a quadruple outside the semigroup");
  MElem m;
  m.zero_ = false;
  m.a_ = first.left();
  m.b_ = first.right();
  m.c_ = second.left();
  m.d_ = second.right();
  return m;
}

MElem m_inv(const MElem& x) {
  if (x.is_zero()) return x;
  return m_make(x.b(), x.a(), x.d(), x.c());
}

bool m_is_idempotent(const MElem& x) {
  if (x.is_zero()) return true;
  return x.a() == x.b() && x.c() == x.d();
}

MElem CanonicalForm::reconstruct() const {
  Word uv = concat(u, v);
  Word wvt = concat(w, reverse(v));
  if (shape == Form::form1) return m_make(u, uv, wvt, w);
  return m_make(uv, u, w, wvt);
}

CanonicalForm canon(const MElem& x) {
  if (x.is_zero()) throw ZeroInput("canon of zero");
  CanonicalForm cf;
  if (x.a().size() > x.b().size()) {
    // a = b.v, d = c.v^t
    cf.shape = Form::form2;
    cf.u = x.b();
    cf.v = tail_from(x.a(), x.b().size());
    cf.w = x.c();
  } else if (x.a().size() < x.b().size()) {
    cf.shape = Form::form1;
    cf.u = x.a();
    cf.v = tail_from(x.b(), x.a().size());
    cf.w = x.d();
  } else {
    // equal lengths force a = b and c = d
    cf.shape = Form::form2;
    cf.u = x.a();
    cf.v = Word{};
    cf.w = x.c();
  }
  assert(cf.reconstruct() == x);
  return cf;
}

DIndex d_index(const MElem& x) {
  if (x.is_zero()) throw ZeroInput("d_index of zero");
  return DIndex{concat(x.a(), reverse(x.c()))};
}

std::set<MElem> d_class(const DIndex& p) {
  if (p.word.empty()) throw EmptyIndex("D-classes are indexed by nonempty words");
  const std::size_t n = p.word.size();
  std::vector<std::pair<Word, Word>> splits;  // (a, c) with a.c^t = p
  splits.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Word a, tail;
    a.letters.assign(p.word.letters.begin(),
                     p.word.letters.begin() + static_cast<std::ptrdiff_t>(i));
    tail.letters.assign(p.word.letters.begin() + static_cast<std::ptrdiff_t>(i),
                        p.word.letters.end());
    splits.emplace_back(std::move(a), reverse(tail));
  }
  std::set<MElem> out;
  for (const auto& [a, c] : splits)
    for (const auto& [b, d] : splits) out.insert(m_make(a, b, c, d));
  assert(out.size() == (n + 1) * (n + 1));
  return out;
}

bool green(const MElem& x, const MElem& y, GreenRel rel) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  switch (rel) {
    case GreenRel::L:
      return x.b() == y.b() && x.d() == y.d();
    case GreenRel::R:
      return x.a() == y.a() && x.c() == y.c();
    case GreenRel::H:
      return x == y;
    case GreenRel::D:
    case GreenRel::J:
      return d_index(x) == d_index(y);
  }
  return false;
}

bool leq_idempotent(const MElem& e, const MElem& f) {
  if (!m_is_idempotent(e) || !m_is_idempotent(f))
    throw NotIdempotent("leq_idempotent requires idempotent arguments");
  bool by_mul = m_mul(e, f) == e;
  if (!e.is_zero() && !f.is_zero()) {
    bool by_suffix = is_suffix(f.a(), e.a()) && is_suffix(f.c(), e.c());
    assert(by_mul == by_suffix);
    (void)by_suffix;
  }
  return by_mul;
}

bool is_maximal_idempotent(const MElem& e) {
  if (!m_is_idempotent(e))
    throw NotIdempotent("is_maximal_idempotent requires an idempotent");
  if (e.is_zero()) return false;
  return (e.a().empty() && e.c().size() == 1) ||
         (e.a().size() == 1 && e.c().empty());
}

std::set<MElem> eggbox_neighbors(const MElem& x) {
  if (x.is_zero()) throw ZeroInput("eggbox_neighbors of zero");
  std::set<MElem> out;
  if (!x.a().empty())
    out.insert(m_make(drop_last(x.a()), x.b(),
                      append_letter(x.c(), x.a().letters.back()), x.d()));
  if (!x.b().empty())
    out.insert(m_make(x.a(), drop_last(x.b()), x.c(),
                      append_letter(x.d(), x.b().letters.back())));
  if (!x.c().empty())
    out.insert(m_make(append_letter(x.a(), x.c().letters.back()), x.b(),
                      drop_last(x.c()), x.d()));
  if (!x.d().empty())
    out.insert(m_make(x.a(), append_letter(x.b(), x.d().letters.back()), x.c(),
                      drop_last(x.d())));
  return out;
}

std::set<MElem> suffix_box(const Word& x, const Word& y, const Word& u,
                           const Word& v) {
  std::set<MElem> out;
  for (const Word& a : all_suffixes(x))
    for (const Word& b : all_suffixes(y))
      for (const Word& c : all_suffixes(u))
        for (const Word& d : all_suffixes(v))
          if (valid_quad(a, b, c, d)) out.insert(m_make(a, b, c, d));
  return out;
}

std::vector<MElem> bounded_elements(const std::vector<std::uint32_t>& letters,
                                    std::size_t max_comp) {
  std::vector<std::uint32_t> ls = letters;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::vector<MElem> out;
  if (ls.empty() || max_comp == 0) return out;

  // walk every index word p with 1 <= |p| <= 2*max_comp, then every pair of
  // splits p = a.c^t with both parts within the component bound
  std::vector<std::size_t> odo;
  for (std::size_t plen = 1; plen <= 2 * max_comp; ++plen) {
    odo.assign(plen, 0);
    for (;;) {
      Word p;
      p.letters.reserve(plen);
      for (std::size_t i : odo) p.letters.push_back(ls[i]);

      std::vector<std::pair<Word, Word>> splits;
      std::size_t lo = plen > max_comp ? plen - max_comp : 0;
      std::size_t hi = std::min(plen, max_comp);
      for (std::size_t i = lo; i <= hi; ++i) {
        Word a, tail;
        a.letters.assign(p.letters.begin(),
                         p.letters.begin() + static_cast<std::ptrdiff_t>(i));
        tail.letters.assign(p.letters.begin() + static_cast<std::ptrdiff_t>(i),
                            p.letters.end());
        splits.emplace_back(std::move(a), reverse(tail));
      }
      for (const auto& [a, c] : splits)
        for (const auto& [b, d] : splits) out.push_back(m_make(a, b, c, d));

      std::size_t pos = plen;
      while (pos > 0 && odo[pos - 1] + 1 == ls.size()) {
        odo[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++odo[pos - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<MElem> division_set(const MElem& a, const MElem& b,
                             std::optional<std::size_t> length_bound) {
  if (a.is_zero() || b.is_zero()) throw ZeroInput("division_set of zero");
  std::vector<std::uint32_t> letters;
  for (const Word* w : {&a.a(), &a.b(), &a.c(), &a.d(), &b.a(), &b.b(), &b.c(),
                        &b.d()})
    letters.insert(letters.end(), w->letters.begin(), w->letters.end());
  auto max_comp = [](const MElem& m) {
    return std::max(std::max(m.a().size(), m.b().size()),
                    std::max(m.c().size(), m.d().size()));
  };
  std::size_t bound = length_bound.value_or(max_comp(a) + max_comp(b));
  std::set<MElem> out;
  for (const MElem& x : bounded_elements(letters, bound))
    if (m_mul(a, x) == b || m_mul(x, a) == b) out.insert(x);
  return out;
}

std::optional<DIndexWitness> product_dindex_law(const MElem& x, const MElem& y) {
  if (x.is_zero() || y.is_zero()) throw ZeroInput("product_dindex_law of zero");
  auto w_left = strip_suffix(x.b(), y.a());   // y.a = w.x.b
  auto w_right = strip_suffix(y.a(), x.b());  // x.b = w.y.a
  auto z_left = strip_suffix(x.d(), y.c());   // y.c = z.x.d
  auto z_right = strip_suffix(y.c(), x.d());  // x.d = z.y.c
  if ((!w_left && !w_right) || (!z_left && !z_right)) {
    assert(m_mul(x, y).is_zero());
    return std::nullopt;
  }
  DIndexWitness wit;
  if (w_left && z_left) {
    wit = {*w_left, reverse(*z_left), Word{}, Word{}};
  } else if (w_left && z_right) {
    wit = {*w_left, Word{}, Word{}, reverse(*z_right)};
  } else if (w_right && z_right) {
    wit = {Word{}, Word{}, *w_right, reverse(*z_right)};
  } else {
    wit = {Word{}, reverse(*z_left), *w_right, Word{}};
  }
  assert([&] {
    Word p = d_index(x).word, q = d_index(y).word;
    Word lhs = concat(concat(wit.s1, p), wit.r1);
    Word rhs = concat(concat(wit.s2, q), wit.r2);
    return lhs == rhs && lhs == d_index(m_mul(x, y)).word;
  }());
  return wit;
}

}  // namespace mcal
