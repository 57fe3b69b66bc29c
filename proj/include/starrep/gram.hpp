#pragma once

#include "starrep/linalg.hpp"
#include "starrep/system.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace starrep {

/// Linear map on words: u u* -> u, every other word -> 0. e = e e* maps to e.
Polynomial H(const Polynomial& f);

/// The word u with w = u u*, if any.
std::optional<Word> half_of_square(const Word& w);

/// Off-diagonal Gram entry (i, j) referenced a_k with k >= max(i, j): the
/// system is not non-expanding.
struct NonExpandingViolation : std::runtime_error {
  NonExpandingViolation(std::size_t i, std::size_t j, std::size_t k, Word word);
  std::size_t i, j, k;
  Word word;
};

/// Sum of c_k a_k, keyed by the 1-based index k.
struct LinearForm {
  std::map<std::size_t, Scalar> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  /// Largest referenced index, 0 for the zero form.
  std::size_t max_index() const;
  /// Requires xi.size() >= max_index().
  Scalar evaluate(const std::vector<Rational>& xi) const;
};

struct Overflow {
  std::size_t column = 0;
  Word word;
  Scalar coefficient;
};

/// Matrix of f -> R_S(f z) on the basis words of length <= max_len; column j
/// is the image of basis word j. Image words outside that range are flagged.
struct MultiplicationMatrix {
  std::vector<Word> basis;
  Matrix matrix;
  std::vector<Overflow> overflow;
};

/// Lazily built Gram data for a closed symmetric system: the deglex
/// enumeration φ of basis words (1-based, φ(e) = 1), entries
/// g_ij = T(H(R_S(u v*))) as linear forms in the weights a_k, and the weights
/// ξ chosen so every leading principal minor is at least 1.
/// Single owner; not safe for concurrent mutation.
class GramSession {
public:
  /// Throws PreconditionError unless the system is closed and symmetric.
  explicit GramSession(RewriteSystem system);

  const RewriteSystem& system() const { return system_; }

  /// φ⁻¹(index). Throws std::out_of_range past a finite basis.
  const Word& word(std::size_t index);
  /// φ(w). Throws std::invalid_argument if w is not a basis word.
  std::size_t index(const Word& w);
  /// Number of basis words enumerated so far.
  std::size_t enumerated() const { return words_.size(); }

  /// Throws NonExpandingViolation.
  const LinearForm& gram_entry(std::size_t i, std::size_t j);
  /// Fixes weights a_1..a_n (extending the current prefix). Returns all fixed weights.
  const std::vector<Rational>& choose_xi(std::size_t n);
  const std::vector<Rational>& xi() const { return xi_; }
  /// Δ_1..Δ_m for the fixed prefix.
  const std::vector<Rational>& minors() const { return minors_; }
  /// p_m = Δ_m - Δ_{m-1} a_m.
  const std::vector<Rational>& cofactors() const { return cofactors_; }

  /// g_ij with weights fixed as needed.
  Scalar gram_value(std::size_t i, std::size_t j);
  /// n x n Gram matrix with weights fixed.
  Matrix gram_matrix(std::size_t n);

  /// Sesquilinear, linear in f. f and g must be supported on basis words.
  Scalar inner_product(const Polynomial& f, const Polynomial& g);

  MultiplicationMatrix right_multiplication_matrix(const Polynomial& z, std::size_t max_len);

  /// <R_S(f z), g> == <f, R_S(g z*)>.
  bool adjoint_check(const Polynomial& z, const Polynomial& f, const Polynomial& g);

  /// Coefficient of w1* w1 in R_S(w1* f), w1 the leading word of f.
  std::pair<Word, Scalar> faithfulness_witness(const Polynomial& f);

private:
  bool extend_level();
  void require_basis_support(const Polynomial& f);
  std::size_t max_index(const Polynomial& f);

  RewriteSystem system_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<Word> frontier_;
  std::size_t levels_ = 0;
  bool exhausted_ = false;

  std::map<std::pair<std::size_t, std::size_t>, LinearForm> entries_;
  std::vector<Rational> xi_;
  std::vector<Rational> minors_;
  std::vector<Rational> cofactors_;
  std::vector<Rational> pivots_;            // d_m of G = L D L*
  std::vector<std::vector<Scalar>> lower_;  // rows of L below the diagonal
};

} // namespace starrep
