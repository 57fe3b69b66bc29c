#pragma once

#include "starrep/linalg.hpp"
#include "starrep/system.hpp"

#include <optional>
#include <vector>

namespace starrep {

/// <x | x^2, x*^2> with order x* > x, already closed.
RewriteSystem monomial_x2_system();

/// α_m = ∫₀¹ t^{m+1} dt = 1/(m+2), the moments of the density f ≡ 1.
Rational hankel_moment(long m);

/// The four basis word families of the x^2 algebra.
enum class HankelFamily { u, a, v, b };

struct HankelWord {
  HankelFamily family;
  long index;  // k >= 0 for u, v; m >= 1 for a, b
};

/// u_k = x (x* x)^k, a_m = (x x*)^m, v_k = x* (x x*)^k, b_m = (x* x)^m.
Word hankel_word(const Alphabet& alphabet, HankelWord w);
/// nullopt for the empty word and for non-basis words.
std::optional<HankelWord> classify_hankel_word(const Word& w);

struct HankelNorms {
  Rational norm2;         // ||g||^2
  Rational right_image2;  // ||g x||^2
  Rational left_image2;   // ||x g||^2
};

/// Norms computed as <p, q> = α(R_S(p q*)), α(a_m) = α(b_m) = α_m and 0 on
/// other words. g must be supported on nonempty basis words.
HankelNorms hankel_norms_by_rewriting(const Polynomial& g);
/// The same norms from the moment integrals of the family polynomials
/// g = P(a) + Q(b) + R(v) + F(u).
HankelNorms hankel_norms_by_integrals(const Polynomial& g);

struct HankelReport {
  std::size_t size = 0;
  std::vector<Rational> moments;  // α_1 .. α_{2N+1}
  Matrix a, a_prime;
  std::vector<Scalar> minors_a, minors_a_prime;
  bool minors_positive = false;
  /// Gram over u_0..u_{N-1}, a_1..a_N, v_0..v_{N-1}, b_1..b_N computed by
  /// rewriting equals diag(A, A', A, A').
  bool block_diagonal = false;
  /// g = u_0 + a_1.
  HankelNorms example;
  bool example_contracts = false;
};

HankelReport hankel_demo(std::size_t n);

} // namespace starrep
