#include "starrep/polynomial.hpp"

#include <algorithm>

namespace starrep {

Scalar Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(Word w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add_term(u * v, c * d);
  return out;
}

Polynomial Polynomial::star() const {
  Polynomial out;
  for (const auto& [w, c] : terms_) out.add_term(w.involution(), c.conj());
  return out;
}

std::size_t Polynomial::degree() const {
  // The structural key order sorts by length first.
  return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

const Word& Polynomial::leading_word(const SymbolOrder& order) const {
  if (terms_.empty()) throw ZeroPolynomialError();
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (deglex_compare(w, *best, order) > 0) best = &w;
  return *best;
}

const Scalar& Polynomial::leading_coefficient(const SymbolOrder& order) const {
  return terms_.at(leading_word(order));
}

Polynomial Polynomial::tail(const SymbolOrder& order) const {
  const Word& lead = leading_word(order);
  Polynomial out(lead);
  out -= *this * leading_coefficient(order).inverse();
  return out;
}

Polynomial Polynomial::monic(const SymbolOrder& order) const {
  return *this * leading_coefficient(order).inverse();
}

std::vector<Word> Polynomial::top_words() const {
  std::vector<Word> out;
  const std::size_t d = degree();
  for (const auto& [w, c] : terms_)
    if (w.length() == d) out.push_back(w);
  return out;
}

std::vector<std::pair<Word, Scalar>> Polynomial::sorted_terms(const SymbolOrder& order) const {
  std::vector<std::pair<Word, Scalar>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return deglex_compare(a.first, b.first, order) > 0;
  });
  return out;
}

std::string Polynomial::format(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : sorted_terms(alphabet.order())) {
    Scalar coeff = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) coeff = -c;
    if (out.empty()) out = negative ? "-" : "";
    else out += negative ? " - " : " + ";

    bool unit = coeff.is_one();
    std::string cs = coeff.is_real() ? coeff.to_string() : "(" + coeff.to_string() + ")";
    if (w.empty()) out += cs;
    else if (unit) out += alphabet.format(w);
    else out += cs + " " + alphabet.format(w);
  }
  return out;
}

Polynomial sandwich(const Word& left, const Polynomial& f, const Word& right) {
  Polynomial out;
  for (const auto& [w, c] : f.terms()) out.add_term(left * w * right, c);
  return out;
}

} // namespace starrep
