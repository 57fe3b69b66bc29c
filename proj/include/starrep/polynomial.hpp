#pragma once

#include "starrep/scalar.hpp"
#include "starrep/word.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace starrep {

struct ZeroPolynomialError : std::domain_error {
  ZeroPolynomialError() : std::domain_error("leading data requested on the zero polynomial") {}
};

/// Finitely supported map Word -> nonzero Scalar; an element of the free *-algebra.
class Polynomial {
public:
  using Terms = std::map<Word, Scalar>;

  Polynomial() = default;
  Polynomial(Scalar c) { add_term(Word{}, c); }
  Polynomial(Word w) { add_term(std::move(w), Scalar(1)); }
  Polynomial(Scalar c, Word w) { add_term(std::move(w), c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Word& w) const;
  bool contains(const Word& w) const { return terms_.count(w) != 0; }

  /// Adds c*w, dropping the term if it cancels.
  void add_term(Word w, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Conjugate-linear anti-automorphism extending word involution.
  Polynomial star() const;

  /// Maximum word length in the support; 0 for the zero polynomial.
  std::size_t degree() const;

  /// Greatest word in deglex (f-hat). Throws ZeroPolynomialError.
  const Word& leading_word(const SymbolOrder& order) const;
  /// Coefficient at leading_word (lc). Throws ZeroPolynomialError.
  const Scalar& leading_coefficient(const SymbolOrder& order) const;
  /// f-bar = f-hat - lc^{-1} f, the rewrite target of the leading word.
  Polynomial tail(const SymbolOrder& order) const;
  Polynomial monic(const SymbolOrder& order) const;
  /// Words with length == degree(), the "top words".
  std::vector<Word> top_words() const;
  /// Terms sorted greatest first.
  std::vector<std::pair<Word, Scalar>> sorted_terms(const SymbolOrder& order) const;

  std::string format(const Alphabet& alphabet) const;

private:
  Terms terms_;
};

/// left * f * right
Polynomial sandwich(const Word& left, const Polynomial& f, const Word& right);

} // namespace starrep
