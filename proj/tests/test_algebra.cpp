#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("algebra-core") {

TEST_CASE("scalar field operations are exact") {
  Scalar a(Q(1, 2), Q(3, 4));
  Scalar b(Q(-2), Q(1, 3));
  CHECK(a + b == Scalar(Q(-3, 2), Q(13, 12)));
  CHECK(a * b == Scalar(Q(-1) - Q(1, 4), Q(1, 6) - Q(3, 2)));
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK(a.norm2() == Q(1, 4) + Q(9, 16));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
}

TEST_CASE("scalar printing") {
  CHECK(Scalar(Q(1, 2), Q(3, 4)).to_string() == "1/2+3/4i");
  CHECK(Scalar(Q(0), Q(-1)).to_string() == "-i");
  CHECK(Scalar(Q(-3)).to_string() == "-3");
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK(parse_rational("6/4") == Q(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("symbols") {
  Symbol s{3, false};
  CHECK(s.star().star() == s);
  CHECK(s.star() != s);
  CHECK(Symbol::from_code(s.star().code()) == s.star());
}

TEST_CASE("deglex comparison") {
  Alphabet a({"x1", "x2"}, SymbolOrder::starred_first(2));
  const auto& ord = a.order();
  // x1 > x2 in the default order
  CHECK(deglex_compare(word(a, "x1 x2"), word(a, "x2 x1"), ord) > 0);
  CHECK(deglex_compare(word(a, "x2 x2 x2"), word(a, "x1* x1*"), ord) > 0);
  Word w = word(a, "x1 x2* x1");
  CHECK(deglex_compare(w, w, ord) == 0);
}

TEST_CASE("deglex is total and compatible with concatenation") {
  Alphabet a({"x", "y"}, SymbolOrder::starred_first(2));
  auto words = oracle::all_words(2, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int t = 0; t < 400; ++t) {
    const Word& u = words[pick(rng)];
    const Word& v = words[pick(rng)];
    const Word& l = words[pick(rng)];
    const Word& r = words[pick(rng)];
    auto c = deglex_compare(u, v, a.order());
    CHECK((c == 0) == (u == v));
    CHECK(deglex_compare(v, u, a.order()) == (0 <=> c));
    if (c < 0) CHECK(deglex_compare(l * u * r, l * v * r, a.order()) < 0);
  }
}

TEST_CASE("symbol order validation") {
  std::vector<Symbol> missing{{0, true}, {0, true}};
  CHECK_THROWS_AS(SymbolOrder(1, missing), std::invalid_argument);
}

TEST_CASE("word involution") {
  Alphabet a({"x", "y"}, SymbolOrder::starred_first(2));
  CHECK(word(a, "x y").involution() == word(a, "y* x*"));
  CHECK(word(a, "x x*").involution() == word(a, "x x*"));
  CHECK(Word{}.involution() == Word{});
  CHECK(a.format(word(a, "x x y*")) == "x^2 y*");
  CHECK(a.format(Word{}) == "1");
}

TEST_CASE("leading data") {
  // b > a
  Alphabet al({"a", "b"}, SymbolOrder(2, std::vector<Symbol>{{1, true}, {0, true}, {1, false}, {0, false}}));
  Polynomial f = poly(al, "2 b a - 2 (1/3) a b");
  CHECK(f.leading_word(al.order()) == word(al, "b a"));
  CHECK(f.leading_coefficient(al.order()) == Scalar(2));
  CHECK(f.tail(al.order()) == poly(al, "1/3 a b"));
  CHECK(f.monic(al.order()) == poly(al, "b a - 1/3 a b"));
  Polynomial ba = poly(al, "b a");
  CHECK((ba * ba).leading_word(al.order()) == word(al, "b a b a"));
  CHECK_THROWS_AS(Polynomial().leading_word(al.order()), ZeroPolynomialError);
  CHECK(poly(al, "a^2").star() == poly(al, "a*^2"));
}

TEST_CASE("polynomial involution laws on random input") {
  std::mt19937_64 rng(11);
  Alphabet a({"x", "y"}, SymbolOrder::starred_first(2));
  for (int t = 0; t < 100; ++t) {
    Polynomial f = oracle::random_polynomial(2, 5, 3, rng);
    Polynomial g = oracle::random_polynomial(2, 5, 3, rng);
    Scalar lambda(Q(t % 7 - 3, 2), Q(t % 5 - 2, 3));
    CHECK(f.star().star() == f);
    CHECK((f * g).star() == g.star() * f.star());
    CHECK((f * lambda).star() == f.star() * lambda.conj());
    if (!f.is_zero()) {
      const auto& ord = a.order();
      CHECK(f == (Polynomial(f.leading_word(ord)) - f.tail(ord)) * f.leading_coefficient(ord));
      if (!g.is_zero())
        CHECK((f * g).leading_word(ord) == f.leading_word(ord) * g.leading_word(ord));
    }
  }
}

TEST_CASE("zero coefficients are never stored") {
  Alphabet a({"x"}, SymbolOrder::starred_first(1));
  Polynomial f = poly(a, "x - x + 0 x*");
  CHECK(f.is_zero());
  CHECK(f.size() == 0);
}

}
