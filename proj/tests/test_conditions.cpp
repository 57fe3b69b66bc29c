#include "helpers.hpp"
#include "oracles.hpp"

#include "starrep/conditions.hpp"
#include "starrep/rewrite.hpp"

#include <doctest.h>

using namespace testing;

namespace {

const std::vector<std::string> kPresets{"toeplitz", "qdeform",    "monomial-x2", "t3",
                                        "b4-double", "heisenberg", "wick",        "monomial:x y x,y^2"};

// Direct transcription of the definition: is there a d with w = d* d u or w = u d* d?
bool shrinkable_oracle(const Word& w) {
  for (std::size_t k = 1; 2 * k <= w.length(); ++k) {
    Word d = w.subword(k, k);
    if (w.prefix(2 * k) == d.involution() * d) return true;
    Word e = w.suffix(k);
    if (w.suffix(2 * k) == e.involution() * e) return true;
  }
  return false;
}

} // namespace

TEST_SUITE("star-conditions") {

TEST_CASE("unshrinkable words") {
  Alphabet a({"x"}, SymbolOrder::starred_first(1));
  CHECK_FALSE(is_unshrinkable(word(a, "x x*")));
  CHECK(is_unshrinkable(word(a, "x^2")));
  CHECK_FALSE(is_unshrinkable(word(a, "x x x*")));
  for (auto& w : oracle::all_words(2, 6)) {
    if (w.empty()) continue;
    CHECK(is_unshrinkable(w) == !shrinkable_oracle(w));
    CHECK(is_unshrinkable(w) == is_unshrinkable(w.involution()));
  }
}

TEST_CASE("symmetric") {
  auto m = is_symmetric(preset("monomial-x2"));
  CHECK(m.holds());
  CHECK(m.parameters.at("literal_star_closed") == "yes");
  auto h = is_symmetric(preset("heisenberg"));
  CHECK(h.holds());
  CHECK(h.parameters.at("literal_star_closed") == "no");
  RewriteSystem q = system_from("generators: a b\norder: b* > a* > b > a\nparam: q = 2/3\nrel: b a - q a b\n");
  auto r = is_symmetric(q);
  CHECK(r.fails());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().polynomial.has_value());
}

TEST_CASE("strictly appropriate") {
  CHECK(check_strictly_appropriate(preset("monomial-x2")).holds());
  CHECK(check_strictly_appropriate(preset("wick")).holds());
  // the top word x* x is d* d with d = x
  RewriteSystem crafted = system_from(
      "generators: x y\norder: y* > y > x* > x\n"
      "rel: y x - x* x\nrel: x* y* - x* x\n");
  REQUIRE(is_closed_under_compositions(crafted).holds());
  auto r = check_strictly_appropriate(crafted);
  CHECK(r.fails());
  CHECK(std::any_of(r.witnesses.begin(), r.witnesses.end(),
                    [](auto& w) { return w.kind == "shrinkable-top"; }));
}

TEST_CASE("distinct head") {
  CHECK(check_distinct_head(preset("wick")).holds());
  CHECK(check_distinct_head(preset("heisenberg")).holds());
  // top x z shares its first letter with the head x y
  RewriteSystem crafted = system_from("generators: x y z\nrel: x y - x z\nrel: y* x* - z* x*\n");
  REQUIRE(is_closed_under_compositions(crafted).holds());
  auto r = check_distinct_head(crafted);
  CHECK(r.fails());
}

TEST_CASE("overlap-free tops") {
  CHECK(check_overlap_free_tops(preset("monomial-x2")).holds());
  CHECK(check_overlap_free_tops(preset("monomial:x y x,y^2")).holds());
  auto t3 = check_overlap_free_tops(preset("t3"));
  CHECK(t3.fails());
  // tops a_l a_k* end in a starred letter, and heads a_i* a_j start with one
  auto w = check_overlap_free_tops(preset("wick"));
  CHECK(w.fails());
  REQUIRE_FALSE(w.witnesses.empty());
  CHECK(w.witnesses.front().kind == "top-composes-with-head");
}

TEST_CASE("star double") {
  CHECK(check_star_double(preset("b4-double")).holds());
  // S ∪ S* is closed for t3, but deglex cannot make the heads of S* the
  // stars of the heads of S, so BW is not *-closed
  auto t3 = check_star_double(preset("t3"));
  CHECK(t3.fails());
  CHECK(t3.witnesses.front().kind == "head-star-not-a-head");
  CHECK(check_non_expanding_bounded(preset("t3"), 3).fails());
  CHECK(check_star_double(preset("monomial-x2")).holds());
  auto t = check_star_double(preset("toeplitz"));
  CHECK(t.fails());
  CHECK(std::any_of(t.witnesses.begin(), t.witnesses.end(), [](auto& w) { return w.kind == "mixed-head"; }));
}

TEST_CASE("strictness") {
  CHECK(check_strictness(preset("monomial-x2"), 4).holds());
  // d = u* is a basis word but d d* = u* u is a head
  RewriteSystem toe = preset("toeplitz");
  auto tr = check_strictness(toe, 4);
  CHECK(tr.fails());
  REQUIRE_FALSE(tr.witnesses.empty());
  CHECK(tr.witnesses.front().words.front() == word(toe, "u*"));
  CHECK(check_strictness(preset("b4-double"), 3).holds());
  RewriteSystem s = system_from("generators: x\nrel: x x*\nrel: x* x\n");
  auto r = check_strictness(s, 2);
  CHECK(r.fails());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().words.front() == word(s, "x"));
}

TEST_CASE("bounded non-expanding") {
  auto m = check_non_expanding_bounded(preset("monomial-x2"), 5);
  CHECK(m.holds());
  CHECK(m.bound == 5u);
  CHECK(m.note == "inconclusive beyond bound");
  CHECK(check_non_expanding_bounded(preset("b4-double"), 3).holds());
  RewriteSystem free(Alphabet({"x", "y"}, SymbolOrder::starred_first(2)), {}, CompletionStatus::closed);
  CHECK(check_non_expanding_bounded(free, 3).holds());
}

TEST_CASE("non-expanding witnesses carry their reduction") {
  RewriteSystem s = system_from(
      "generators: x y\nrel: x x* - x y - y x*\nrel: (x x* - x y - y x*)*\n");
  REQUIRE(is_closed_under_compositions(s).holds());
  REQUIRE(is_symmetric(s).holds());
  auto r = check_non_expanding_bounded(s, 2);
  CHECK(r.fails());
  REQUIRE_FALSE(r.witnesses.empty());
  const Witness& w = r.witnesses.front();
  REQUIRE(w.words.size() == 3);
  RewriteCertificate c{Polynomial(w.words[0] * w.words[1].involution()), *w.polynomial, w.trace};
  CHECK(c.verify(s));
  CHECK(w.polynomial->contains(w.words[2]));
  CHECK(check_non_expanding(s, 2).fails());
}

TEST_CASE("unclosed input is rejected") {
  RewriteSystem s = system_from("generators: x y\nrel: x y x - y x y\n");
  CHECK_THROWS_AS(check_distinct_head(s), PreconditionError);
}

TEST_CASE("implication chain across presets") {
  for (auto& name : kPresets) {
    RewriteSystem s = preset(name);
    const bool dh = check_distinct_head(s).holds();
    const bool sa = check_strictly_appropriate(s).holds();
    const bool oft = check_overlap_free_tops(s).holds();
    const bool sd = check_star_double(s).holds();
    if (dh) CHECK_MESSAGE(sa, name);
    for (std::size_t len = 1; len <= 3; ++len) {
      if (dh || sa || oft || sd) CHECK_MESSAGE(check_non_expanding_bounded(s, len).holds(), name);
      if (sd) CHECK_MESSAGE(check_strictness(s, len).holds(), name);
    }
  }
}

TEST_CASE("symmetric systems commute with the involution") {
  std::mt19937_64 rng(5);
  for (auto& name : kPresets) {
    RewriteSystem s = preset(name);
    if (!is_symmetric(s).holds()) continue;
    // the ideal is *-invariant, so f* and R(f)* share a normal form
    for (int t = 0; t < 20; ++t) {
      Polynomial f = oracle::random_polynomial(s.alphabet().size(), 4, 3, rng);
      CHECK_MESSAGE(normal_form(f.star(), s) == normal_form(normal_form(f, s).star(), s), name);
    }
    // BW* = BW and R(f*) = R(f)* need heads closed under *
    const auto& heads = s.leading_words();
    const bool heads_closed = std::all_of(heads.begin(), heads.end(), [&](const Word& h) {
      return std::find(heads.begin(), heads.end(), h.involution()) != heads.end();
    });
    if (!heads_closed) continue;
    const std::size_t len = s.alphabet().size() > 2 ? 3 : 4;
    for (auto& w : oracle::all_words(s.alphabet().size(), len))
      CHECK_MESSAGE(is_basis_word(w, s) == is_basis_word(w.involution(), s), name);
    for (int t = 0; t < 20; ++t) {
      Polynomial f = oracle::random_polynomial(s.alphabet().size(), 4, 3, rng);
      CHECK_MESSAGE(normal_form(f.star(), s) == normal_form(f, s).star(), name);
    }
  }
}

TEST_CASE("heisenberg basis words are not closed under the involution") {
  RewriteSystem h = preset("heisenberg");
  CHECK(is_symmetric(h).holds());
  CHECK(is_basis_word(word(h, "e1"), h));
  CHECK_FALSE(is_basis_word(word(h, "e1*"), h));
}

TEST_CASE("star-double search") {
  // declared starred order q1* > q2* does not close for this base
  RewriteSystem base = complete(system_from("generators: q1 q2\norder: q2 > q1 > q1* > q2*\nparam: alpha = 1\n"
                                            "rel: q1^3 - q1\nrel: q2^3 - q2\n"
                                            "rel: (alpha - q1 - q2)^3 - (alpha - q1 - q2)\n"),
                                8, 50);
  auto found = find_star_double(base);
  REQUIRE(found);
  CHECK(found->status() == CompletionStatus::closed);
  CHECK(found->size() == 2 * base.size());
  CHECK(is_closed_under_compositions(*found).holds());
}

}
