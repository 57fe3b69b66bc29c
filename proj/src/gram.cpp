#include "starrep/gram.hpp"
#include "starrep/conditions.hpp"
#include "starrep/rewrite.hpp"

#include <algorithm>
#include <string>

namespace starrep {

std::optional<Word> half_of_square(const Word& w) {
  if (w.length() % 2 != 0) return std::nullopt;
  const std::size_t h = w.length() / 2;
  Word u = w.prefix(h);
  if (w.suffix(h) == u.involution()) return u;
  return std::nullopt;
}

Polynomial H(const Polynomial& f) {
  Polynomial out;
  for (auto& [w, c] : f.terms())
    if (auto u = half_of_square(w)) out.add_term(*u, c);
  return out;
}

NonExpandingViolation::NonExpandingViolation(std::size_t i_, std::size_t j_, std::size_t k_,
                                             Word w)
    : std::runtime_error("non-expanding violation: Gram entry (" + std::to_string(i_) + "," +
                         std::to_string(j_) + ") references a_" + std::to_string(k_)),
      i(i_), j(j_), k(k_), word(std::move(w)) {}

std::size_t LinearForm::max_index() const {
  return coefficients.empty() ? 0 : coefficients.rbegin()->first;
}

Scalar LinearForm::evaluate(const std::vector<Rational>& xi) const {
  Scalar out;
  for (auto& [k, c] : coefficients) out += c * Scalar(xi.at(k - 1));
  return out;
}

GramSession::GramSession(RewriteSystem system) : system_(require_closed(system)) {
  if (!is_symmetric(system_).holds())
    throw PreconditionError("Gram construction needs a symmetric relation set");
}

bool GramSession::extend_level() {
  if (exhausted_) return false;
  std::vector<Word> next;
  if (levels_ == 0) {
    if (is_basis_word(Word{}, system_)) next.push_back(Word{});
  } else {
    const auto symbols = system_.alphabet().symbols();
    for (const Word& w : frontier_)
      for (Symbol s : symbols) {
        Word c = w * Word{s};
        if (is_basis_word(c, system_)) next.push_back(std::move(c));
      }
    std::sort(next.begin(), next.end(), DeglexLess{&system_.order()});
  }
  ++levels_;
  if (next.empty()) {
    exhausted_ = true;
    return false;
  }
  for (auto& w : next) {
    index_.emplace(w, words_.size() + 1);
    words_.push_back(w);
  }
  frontier_ = std::move(next);
  return true;
}

const Word& GramSession::word(std::size_t index) {
  if (index == 0) throw std::out_of_range("basis indices start at 1");
  while (words_.size() < index && extend_level()) {}
  if (words_.size() < index) throw std::out_of_range("basis has only " + std::to_string(words_.size()) + " words");
  return words_[index - 1];
}

std::size_t GramSession::index(const Word& w) {
  if (!is_basis_word(w, system_)) throw std::invalid_argument("word is not a basis word");
  while (levels_ <= w.length() && extend_level()) {}
  return index_.at(w);
}

const LinearForm& GramSession::gram_entry(std::size_t i, std::size_t j) {
  auto key = std::make_pair(i, j);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  LinearForm form;
  if (i == j) {
    word(i);
    form.coefficients[i] = Scalar(1);
  } else {
    const Word u = word(i);
    const Word v = word(j);
    const std::size_t bound = std::max(i, j);
    Polynomial r = normal_form(Polynomial(u * v.involution()), system_);
    const Polynomial squares = H(r);
    for (auto& [w, c] : squares.terms()) {
      const std::size_t k = index(w);
      if (k >= bound) throw NonExpandingViolation(i, j, k, w * w.involution());
      form.coefficients[k] += c;
      if (form.coefficients[k].is_zero()) form.coefficients.erase(k);
    }
  }
  return entries_.emplace(key, std::move(form)).first->second;
}

const std::vector<Rational>& GramSession::choose_xi(std::size_t n) {
  for (std::size_t m = xi_.size() + 1; m <= n; ++m) {
    word(m);
    // L D L* update for row m; entries (m, k) with k < m only use a_1..a_{m-1}.
    std::vector<Scalar> row(m - 1);
    Rational c = 0;
    for (std::size_t k = 1; k < m; ++k) {
      Scalar g = gram_entry(m, k).evaluate(xi_);
      for (std::size_t t = 1; t < k; ++t)
        g -= row[t - 1] * Scalar(pivots_[t - 1]) * lower_[k - 1][t - 1].conj();
      row[k - 1] = g / Scalar(pivots_[k - 1]);
      c += row[k - 1].norm2() * pivots_[k - 1];
    }
    const Rational prev = minors_.empty() ? Rational(1) : minors_.back();
    const Rational need = c + 1 / prev;
    mpz_class ceil_need;
    mpz_cdiv_q(ceil_need.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
    Rational a = ceil_need < 1 ? Rational(1) : Rational(ceil_need);
    Rational d = a - c;
    Rational delta = prev * d;
    xi_.push_back(a);
    pivots_.push_back(d);
    minors_.push_back(delta);
    cofactors_.push_back(delta - prev * a);
    lower_.push_back(std::move(row));
  }
  return xi_;
}

Scalar GramSession::gram_value(std::size_t i, std::size_t j) {
  const LinearForm& form = gram_entry(i, j);
  choose_xi(std::max(i, j));
  return form.evaluate(xi_);
}

Matrix GramSession::gram_matrix(std::size_t n) {
  choose_xi(n);
  Matrix g(n, std::vector<Scalar>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) g[i - 1][j - 1] = gram_value(i, j);
  return g;
}

void GramSession::require_basis_support(const Polynomial& f) {
  for (auto& [w, c] : f.terms())
    if (!is_basis_word(w, system_))
      throw std::invalid_argument("polynomial is not supported on basis words: " +
                                  system_.alphabet().format(w));
}

std::size_t GramSession::max_index(const Polynomial& f) {
  std::size_t m = 0;
  for (auto& [w, c] : f.terms()) m = std::max(m, index(w));
  return m;
}

Scalar GramSession::inner_product(const Polynomial& f, const Polynomial& g) {
  require_basis_support(f);
  require_basis_support(g);
  choose_xi(std::max(max_index(f), max_index(g)));
  Scalar out;
  for (auto& [u, cu] : f.terms()) {
    const std::size_t i = index(u);
    for (auto& [v, cv] : g.terms()) out += cu * cv.conj() * gram_value(i, index(v));
  }
  return out;
}

MultiplicationMatrix GramSession::right_multiplication_matrix(const Polynomial& z,
                                                              std::size_t max_len) {
  require_basis_support(z);
  while (levels_ <= max_len && extend_level()) {}
  MultiplicationMatrix out;
  for (auto& w : words_)
    if (w.length() <= max_len) out.basis.push_back(w);
  const std::size_t n = out.basis.size();
  out.matrix.assign(n, std::vector<Scalar>(n));
  for (std::size_t col = 0; col < n; ++col) {
    Polynomial image = normal_form(Polynomial(out.basis[col]) * z, system_);
    for (auto& [w, c] : image.terms()) {
      if (w.length() <= max_len) out.matrix[index(w) - 1][col] = c;
      else out.overflow.push_back({col, w, c});
    }
  }
  return out;
}

bool GramSession::adjoint_check(const Polynomial& z, const Polynomial& f, const Polynomial& g) {
  Scalar lhs = inner_product(normal_form(f * z, system_), g);
  Scalar rhs = inner_product(f, normal_form(g * z.star(), system_));
  return lhs == rhs;
}

std::pair<Word, Scalar> GramSession::faithfulness_witness(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  require_basis_support(f);
  const Word w1 = f.leading_word(system_.order());
  const Word target = w1.involution() * w1;
  Polynomial r = normal_form(Polynomial(w1.involution()) * f, system_);
  return {target, r.coefficient(target)};
}

} // namespace starrep
