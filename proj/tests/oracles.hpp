#pragma once
// Reference implementations that share no code with the library's rewriting,
// enumeration or elimination routines. Only the value types are reused.

#include "starrep/linalg.hpp"
#include "starrep/system.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using namespace starrep;

inline bool contains_subword(const Word& w, const Word& needle) {
  const auto& a = w.symbols();
  const auto& b = needle.symbols();
  return std::search(a.begin(), a.end(), b.begin(), b.end()) != a.end();
}

inline bool avoids_all(const Word& w, const std::vector<Word>& forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(),
                      [&](const Word& f) { return contains_subword(w, f); });
}

/// Every word over the 2n symbols with length <= max_length.
inline std::vector<Word> all_words(std::size_t generators, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (auto& w : level)
      for (std::uint32_t c = 0; c < 2 * generators; ++c) {
        auto s = w.symbols();
        s.push_back(Symbol::from_code(c));
        next.emplace_back(std::move(s));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

/// Words avoiding every leading word, by brute-force filtering.
inline std::vector<Word> basis_words(const RewriteSystem& s, std::size_t max_length) {
  std::vector<Word> out;
  for (auto& w : all_words(s.alphabet().size(), max_length))
    if (avoids_all(w, s.leading_words())) out.push_back(w);
  return out;
}

/// Rewrites a randomly chosen reducible term at a randomly chosen occurrence
/// until nothing is reducible.
inline Polynomial random_strategy_normal_form(Polynomial f, const RewriteSystem& s,
                                              std::mt19937_64& rng) {
  struct Site {
    Word word;
    std::size_t relation, position;
  };
  for (;;) {
    std::vector<Site> sites;
    for (auto& [w, c] : f.terms())
      for (std::size_t r = 0; r < s.size(); ++r) {
        const Word& lead = s.leading_word(r);
        if (lead.length() > w.length()) continue;
        for (std::size_t p = 0; p + lead.length() <= w.length(); ++p)
          if (w.subword(p, lead.length()) == lead) sites.push_back({w, r, p});
      }
    if (sites.empty()) return f;
    const Site& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const Scalar c = f.coefficient(site.word);
    const std::size_t l = s.leading_word(site.relation).length();
    const Word left = site.word.prefix(site.position);
    const Word right = site.word.suffix(site.word.length() - site.position - l);
    // c*w = c*left*(lead - relation)*right + c*left*relation*right
    f -= Polynomial(c, site.word);
    f += sandwich(left, s.tail(site.relation), right) * c;
  }
}

/// Determinant by textbook Gaussian elimination with division (no Bareiss).
inline Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Scalar factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

inline Matrix leading_block(const Matrix& m, std::size_t k) {
  Matrix out(k);
  for (std::size_t r = 0; r < k; ++r) out[r].assign(m[r].begin(), m[r].begin() + k);
  return out;
}

/// Random polynomial with up to `terms` terms over words of length <= max_len.
inline Polynomial random_polynomial(std::size_t generators, std::size_t terms, std::size_t max_len,
                                    std::mt19937_64& rng, bool complex = true,
                                    const std::vector<Symbol>* letters = nullptr) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  Polynomial f;
  std::vector<Symbol> pool;
  if (letters) pool = *letters;
  else
    for (std::uint32_t c = 0; c < 2 * generators; ++c) pool.push_back(Symbol::from_code(c));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, terms)(rng);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<Symbol> w;
    for (std::size_t k = len(rng); k > 0; --k) w.push_back(pool[pick(rng)]);
    Scalar c(Rational(num(rng), den(rng)), complex ? Rational(num(rng), den(rng)) : Rational(0));
    f.add_term(Word(std::move(w)), c);
  }
  return f;
}

} // namespace oracle
