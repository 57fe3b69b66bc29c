#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "starrep/conditions.hpp"
#include "starrep/gram.hpp"
#include "starrep/hankel.hpp"
#include "starrep/qdeform.hpp"
#include "starrep/rewrite.hpp"

#include <random>

using namespace testing;

namespace {

// Cauchy determinant: det[1/(x_i + y_j)] = Π_{i<j}(x_j-x_i)(y_j-y_i) / Π_{i,j}(x_i+y_j).
Rational cauchy_det(std::size_t n, long y_shift) {
  Rational num(1), den(1);
  for (long i = 1; i <= static_cast<long>(n); ++i)
    for (long j = 1; j <= static_cast<long>(n); ++j) {
      den *= Rational(i + j + y_shift);
      if (i < j) num *= Rational((j - i) * (j - i));
    }
  return num / den;
}

// H by hand: keep words of even length whose second half is the star of the first.
Polynomial oracle_H(const Polynomial& f) {
  Polynomial out;
  for (auto& [w, c] : f.terms()) {
    const std::size_t n = w.length();
    if (n % 2) continue;
    bool square = true;
    for (std::size_t k = 0; k < n / 2 && square; ++k) square = w.symbols()[n - 1 - k] == w.symbols()[k].star();
    if (square) out.add_term(w.prefix(n / 2), c);
  }
  return out;
}

Polynomial random_basis_polynomial(GramSession& g, std::size_t limit, std::size_t terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(1, limit);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  Polynomial f;
  for (std::size_t t = 0; t < terms; ++t)
    f.add_term(g.word(pick(rng)), Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
  return f;
}

} // namespace

TEST_SUITE("gns-builder") {

TEST_CASE("H keeps exactly the squares") {
  RewriteSystem s = preset("monomial-x2");
  Polynomial f = poly(s, "3 x x* + 2 x* x + 5 - x x x* x* + x* x x* x");
  CHECK(H(f) == oracle_H(f));
  CHECK(H(f) == poly(s, "3 x + 2 x* + 5 - x x + x* x"));
  CHECK(half_of_square(word(s, "x x* x x*")) == word(s, "x x*"));
  CHECK(half_of_square(word(s, "x x* x x* x x*")) == word(s, "x x* x"));
  CHECK(half_of_square(word(s, "x x* x* x")) == std::nullopt);
  CHECK(half_of_square(word(s, "x x* x")) == std::nullopt);
  CHECK(half_of_square(word(s, "x* x x* x")) == word(s, "x* x"));
  CHECK(half_of_square(Word{}) == Word{});
}

TEST_CASE("enumeration follows deglex over the basis words") {
  GramSession g(preset("monomial-x2"));
  CHECK(g.word(1) == Word{});
  auto brute = oracle::basis_words(g.system(), 6);
  // brute force lists words by length then lexicographic code; deglex orders within
  // a length by the symbol order, so compare sets level by level
  std::size_t idx = 1;
  for (std::size_t len = 0; len <= 6; ++len) {
    std::vector<Word> level;
    for (auto& w : brute)
      if (w.length() == len) level.push_back(w);
    for (std::size_t k = 0; k < level.size(); ++k, ++idx) {
      const Word& w = g.word(idx);
      CHECK(w.length() == len);
      CHECK(std::find(level.begin(), level.end(), w) != level.end());
      CHECK(g.index(w) == idx);
      if (idx > 1) {
        const Word& prev = g.word(idx - 1);
        CHECK(deglex_compare(prev, w, g.system().order()) < 0);
      }
    }
  }
  CHECK_THROWS_AS(g.index(word(g.system(), "x x")), std::invalid_argument);
}

TEST_CASE("gram entries match an independent rewrite and H") {
  RewriteSystem s = preset("monomial-x2");
  GramSession g(s);
  std::mt19937_64 rng(11);
  for (std::size_t i = 1; i <= 14; ++i)
    for (std::size_t j = 1; j <= 14; ++j) {
      Polynomial uv = Polynomial(Scalar(1), g.word(i)) * Polynomial(Scalar(1), g.word(j)).star();
      Polynomial h = oracle_H(oracle::random_strategy_normal_form(uv, s, rng));
      LinearForm expected;
      for (auto& [w, c] : h.terms()) expected.coefficients[g.index(w)] += c;
      const LinearForm& got = g.gram_entry(i, j);
      CHECK(got.coefficients == expected.coefficients);
      if (i != j) CHECK(got.max_index() < std::max(i, j));
    }
}

TEST_CASE("weights give minors at least one, confirmed by elimination") {
  GramSession g(preset("monomial-x2"));
  const auto& xi = g.choose_xi(25);
  REQUIRE(xi.size() == 25u);
  CHECK(xi[0] == 1);
  Matrix m = g.gram_matrix(25);
  CHECK(is_hermitian(m));
  for (std::size_t k = 1; k <= 25; ++k) {
    const Scalar det = oracle::determinant(oracle::leading_block(m, k));
    CHECK(det.im() == 0);
    CHECK(det.re() >= 1);
    CHECK(det == Scalar(g.minors()[k - 1]));
    CHECK(g.cofactors()[k - 1] == g.minors()[k - 1] - (k > 1 ? g.minors()[k - 2] : Rational(1)) * xi[k - 1]);
  }
}

TEST_CASE("inner product is positive definite on random vectors") {
  GramSession g(preset("monomial-x2"));
  g.choose_xi(20);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    Polynomial f = random_basis_polynomial(g, 20, 5, rng);
    if (f.is_zero()) continue;
    Scalar n = g.inner_product(f, f);
    CHECK(n.im() == 0);
    CHECK(n.re() > 0);
    Polynomial h = random_basis_polynomial(g, 20, 4, rng);
    CHECK(g.inner_product(f, h) == g.inner_product(h, f).conj());
    CHECK(g.inner_product(f * Scalar(Rational(2), Rational(1)), h) ==
          g.inner_product(f, h) * Scalar(Rational(2), Rational(1)));
  }
}

TEST_CASE("right multiplication is adjoint to multiplication by the star") {
  RewriteSystem s = preset("monomial-x2");
  GramSession g(s);
  std::mt19937_64 rng(17);
  for (const char* z : {"x", "x*"}) {
    Polynomial zp = poly(s, z);
    auto mm = g.right_multiplication_matrix(zp, 4);
    CHECK(mm.basis.size() == mm.matrix.size());
    for (int t = 0; t < 25; ++t) {
      Polynomial f = random_basis_polynomial(g, 10, 4, rng);
      Polynomial h = random_basis_polynomial(g, 10, 4, rng);
      CHECK(g.adjoint_check(zp, f, h));
    }
  }
}

TEST_CASE("faithfulness witness is nonzero on random elements") {
  RewriteSystem s = preset("monomial-x2");
  GramSession g(s);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Polynomial f = normal_form(oracle::random_polynomial(1, 5, 5, rng), s);
    if (f.is_zero()) continue;
    auto [target, coefficient] = g.faithfulness_witness(f);
    const Word w1 = f.leading_word(s.order());
    CHECK(target == w1.involution() * w1);
    CHECK(coefficient == f.leading_coefficient(s.order()));
  }
}

TEST_CASE("expanding systems are rejected with the offending entry") {
  RewriteSystem s = system_from("generators: x y\nrel: x x* - x y - y x*\nrel: (x x* - x y - y x*)*\n");
  GramSession g(s);
  bool thrown = false;
  try {
    g.choose_xi(40);
  } catch (const NonExpandingViolation& e) {
    thrown = true;
    CHECK(e.k >= std::max(e.i, e.j));
    CHECK(g.word(e.k) * g.word(e.k).involution() == e.word);
  }
  CHECK(thrown);
}

TEST_CASE("sessions require closed symmetric systems") {
  CHECK_THROWS_AS(GramSession(system_from("generators: x\nrel: x x - x*\n")), PreconditionError);
}

TEST_CASE("hankel moments and minors") {
  for (long m = 1; m <= 10; ++m) CHECK(hankel_moment(m) == Rational(1, m + 2));
  HankelReport r = hankel_demo(8);
  REQUIRE(r.moments.size() == 17u);
  CHECK(r.minors_positive);
  CHECK(r.block_diagonal);
  for (std::size_t k = 1; k <= 8; ++k) {
    // A_ij = 1/(i+j+1), A'_ij = 1/(i+j+2)
    CHECK(oracle::determinant(oracle::leading_block(r.a, k)) == Scalar(cauchy_det(k, 1)));
    CHECK(oracle::determinant(oracle::leading_block(r.a_prime, k)) == Scalar(cauchy_det(k, 2)));
    CHECK(r.minors_a[k - 1] == Scalar(cauchy_det(k, 1)));
    CHECK(r.minors_a_prime[k - 1] == Scalar(cauchy_det(k, 2)));
  }
  CHECK(r.example.norm2 == Rational(7, 12));
  CHECK(r.example.right_image2 == Rational(1, 5));
  CHECK(r.example.left_image2 == 0);
  CHECK(r.example_contracts);
}

TEST_CASE("hankel words round-trip through classification") {
  RewriteSystem s = monomial_x2_system();
  for (auto fam : {HankelFamily::u, HankelFamily::a, HankelFamily::v, HankelFamily::b})
    for (long k = 0; k < 5; ++k) {
      if ((fam == HankelFamily::a || fam == HankelFamily::b) && k == 0) continue;
      Word w = hankel_word(s.alphabet(), {fam, k});
      CHECK(is_basis_word(w, s));
      auto back = classify_hankel_word(w);
      REQUIRE(back);
      CHECK(back->family == fam);
      CHECK(back->index == k);
    }
  CHECK_FALSE(classify_hankel_word(Word{}));
  CHECK_FALSE(classify_hankel_word(word(s, "x x")));
}

TEST_CASE("hankel multiplication contracts and both norm routes agree") {
  RewriteSystem s = monomial_x2_system();
  std::mt19937_64 rng(29);
  auto basis = oracle::basis_words(s, 10);
  basis.erase(basis.begin());  // drop e
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  for (int t = 0; t < 60; ++t) {
    Polynomial g;
    for (int k = 0; k < 4; ++k)
      g.add_term(basis[pick(rng)], Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    if (g.is_zero()) continue;
    HankelNorms a = hankel_norms_by_rewriting(g), b = hankel_norms_by_integrals(g);
    CHECK(a.norm2 == b.norm2);
    CHECK(a.right_image2 == b.right_image2);
    CHECK(a.left_image2 == b.left_image2);
    CHECK(a.right_image2 <= a.norm2);
    CHECK(a.left_image2 <= a.norm2);
  }
}

TEST_CASE("q-deformed functional matches its closed form") {
  RewriteSystem s = preset("qdeform");
  QDeformData d = match_qdeform(s);
  CHECK(d.q == Rational(1, 2));
  CHECK_THROWS_AS(match_qdeform(preset("toeplitz")), std::invalid_argument);
  // F(a a*) : a a* is already a square
  CHECK(qdeform_F(poly(s, "a a*"), s) == Scalar(1));
  CHECK(qdeform_F(Polynomial{}, s) == Scalar(0));
  std::mt19937_64 rng(31);
  const std::vector<Symbol> letters{d.a, d.x};
  for (int t = 0; t < 40; ++t) {
    Polynomial z = oracle::random_polynomial(2, 6, 3, rng, true, &letters);
    if (normal_form(z, s).is_zero()) continue;
    Polynomial y = z * z.star();
    CHECK(qdeform_F(y, s) == Scalar(qdeform_F_prediction(z, s)));
  }
}

TEST_CASE("q-deformed functional with the star letters") {
  RewriteSystem s = preset("qdeform");
  // (a*)^2 (a*)^2* = a* a* a a; q^{4} weight
  Polynomial z = poly(s, "a* a*");
  CHECK(qdeform_F(z * z.star(), s) == Scalar(qdeform_F_prediction(z, s)));
  CHECK(qdeform_F_prediction(z, s) == Rational(1, 16));
}

} // TEST_SUITE
