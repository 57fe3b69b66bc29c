#include "starrep/hankel.hpp"
#include "starrep/rewrite.hpp"

#include <map>
#include <stdexcept>

namespace starrep {

namespace {

const Symbol X{0, false};
const Symbol XS{0, true};

const RewriteSystem& system_x2() {
  static const RewriteSystem s = monomial_x2_system();
  return s;
}

// Value of the moment functional on a single word.
Rational functional(const Word& w) {
  auto h = classify_hankel_word(w);
  if (!h || h->family == HankelFamily::u || h->family == HankelFamily::v) return 0;
  return hankel_moment(h->index);
}

Scalar pairing(const Polynomial& p, const Polynomial& q) {
  Scalar out;
  const Polynomial r = normal_form(p * q.star(), system_x2());
  for (auto& [w, c] : r.terms())
    out += c * Scalar(functional(w));
  return out;
}

Rational real_part(const Scalar& s) {
  if (!s.is_real()) throw std::logic_error("squared norm is not real");
  return s.re();
}

void require_family_support(const Polynomial& g) {
  for (auto& [w, c] : g.terms())
    if (!classify_hankel_word(w)) throw std::invalid_argument("g must use nonempty basis words only");
}

using Coefficients = std::map<long, Scalar>;

// ∫₀¹ |Σ c_k t^k|² t^s dt
Rational weighted_integral(const Coefficients& c, long s) {
  Scalar out;
  for (auto& [m, cm] : c)
    for (auto& [n, cn] : c) out += cm * cn.conj() * Scalar(Rational(1, m + n + s + 1));
  return real_part(out);
}

} // namespace

RewriteSystem monomial_x2_system() {
  std::vector<Symbol> order{XS, X};
  Alphabet alphabet({"x"}, SymbolOrder(1, order));
  return RewriteSystem(alphabet, {Polynomial(Word{X, X}), Polynomial(Word{XS, XS})},
                       CompletionStatus::closed);
}

Rational hankel_moment(long m) { return Rational(1, m + 2); }

Word hankel_word(const Alphabet&, HankelWord h) {
  std::vector<Symbol> s;
  switch (h.family) {
  case HankelFamily::u: s.push_back(X); for (long k = 0; k < h.index; ++k) { s.push_back(XS); s.push_back(X); } break;
  case HankelFamily::v: s.push_back(XS); for (long k = 0; k < h.index; ++k) { s.push_back(X); s.push_back(XS); } break;
  case HankelFamily::a: for (long k = 0; k < h.index; ++k) { s.push_back(X); s.push_back(XS); } break;
  case HankelFamily::b: for (long k = 0; k < h.index; ++k) { s.push_back(XS); s.push_back(X); } break;
  }
  return Word(std::move(s));
}

std::optional<HankelWord> classify_hankel_word(const Word& w) {
  if (w.empty()) return std::nullopt;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w[i].base != 0 || (i > 0 && w[i] == w[i - 1])) return std::nullopt;
  const long len = static_cast<long>(w.length());
  const bool starts_x = !w.front().starred;
  if (len % 2 == 1) return HankelWord{starts_x ? HankelFamily::u : HankelFamily::v, len / 2};
  return HankelWord{starts_x ? HankelFamily::a : HankelFamily::b, len / 2};
}

HankelNorms hankel_norms_by_rewriting(const Polynomial& g) {
  require_family_support(g);
  const Polynomial x(Word{X});
  const Polynomial right = normal_form(g * x, system_x2());
  const Polynomial left = normal_form(x * g, system_x2());
  return {real_part(pairing(g, g)), real_part(pairing(right, right)),
          real_part(pairing(left, left))};
}

HankelNorms hankel_norms_by_integrals(const Polynomial& g) {
  require_family_support(g);
  Coefficients p, q, r, f;
  for (auto& [w, c] : g.terms()) {
    auto h = *classify_hankel_word(w);
    switch (h.family) {
    case HankelFamily::a: p[h.index] = c; break;
    case HankelFamily::b: q[h.index] = c; break;
    case HankelFamily::v: r[h.index] = c; break;
    case HankelFamily::u: f[h.index] = c; break;
    }
  }
  HankelNorms out;
  out.norm2 = weighted_integral(p, 1) + weighted_integral(q, 1) + weighted_integral(r, 2) +
              weighted_integral(f, 2);
  // g x = P(u) + (tR)(b)
  out.right_image2 = weighted_integral(p, 2) + weighted_integral(r, 3);
  // x g = Q(u) + (tR)(a)
  out.left_image2 = weighted_integral(q, 2) + weighted_integral(r, 3);
  return out;
}

HankelReport hankel_demo(std::size_t n) {
  HankelReport rep;
  rep.size = n;
  for (std::size_t m = 1; m <= 2 * n + 1; ++m) rep.moments.push_back(hankel_moment(static_cast<long>(m)));
  rep.a.assign(n, std::vector<Scalar>(n));
  rep.a_prime.assign(n, std::vector<Scalar>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      rep.a[i - 1][j - 1] = Scalar(hankel_moment(static_cast<long>(i + j - 1)));
      rep.a_prime[i - 1][j - 1] = Scalar(hankel_moment(static_cast<long>(i + j)));
    }
  rep.minors_a = leading_minors(rep.a);
  rep.minors_a_prime = leading_minors(rep.a_prime);
  rep.minors_positive = true;
  for (auto* minors : {&rep.minors_a, &rep.minors_a_prime})
    for (auto& d : *minors) rep.minors_positive &= d.is_real() && sgn(d.re()) > 0;

  const Alphabet& alphabet = system_x2().alphabet();
  std::vector<Word> words;
  for (auto fam : {HankelFamily::u, HankelFamily::a, HankelFamily::v, HankelFamily::b})
    for (std::size_t k = 0; k < n; ++k) {
      const long idx = (fam == HankelFamily::u || fam == HankelFamily::v) ? long(k) : long(k + 1);
      words.push_back(hankel_word(alphabet, {fam, idx}));
    }
  rep.block_diagonal = true;
  for (std::size_t i = 0; i < 4 * n; ++i)
    for (std::size_t j = 0; j < 4 * n; ++j) {
      Scalar expected;
      if (i / n == j / n) expected = (i / n) % 2 == 0 ? rep.a[i % n][j % n] : rep.a_prime[i % n][j % n];
      rep.block_diagonal &= pairing(Polynomial(words[i]), Polynomial(words[j])) == expected;
    }

  Polynomial example = Polynomial(hankel_word(alphabet, {HankelFamily::u, 0})) +
                       Polynomial(hankel_word(alphabet, {HankelFamily::a, 1}));
  rep.example = hankel_norms_by_rewriting(example);
  rep.example_contracts = rep.example.right_image2 <= rep.example.norm2 &&
                          rep.example.left_image2 <= rep.example.norm2;
  return rep;
}

} // namespace starrep
