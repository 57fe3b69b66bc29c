#pragma once

#include "starrep/condition.hpp"
#include "starrep/system.hpp"

#include <optional>
#include <vector>

namespace starrep {

struct Occurrence {
  std::size_t relation = 0;
  std::size_t position = 0;
  Word prefix;
  Word suffix;
};

/// Locates w = prefix * lead(relation) * suffix. Policy: leftmost start,
/// then longest leading word, then lowest relation index. nullopt iff w is a
/// basis word.
std::optional<Occurrence> find_forbidden_subword(const Word& w, const RewriteSystem& system);

bool is_basis_word(const Word& w, const RewriteSystem& system);

/// Full rewriting to canonical form R_S(f), with the substitution trace.
RewriteCertificate reduce(const Polynomial& f, const RewriteSystem& system);
/// Same result as reduce(f).normal_form without recording steps.
Polynomial normal_form(const Polynomial& f, const RewriteSystem& system);

struct CompositionWitness {
  std::size_t left = 0;
  std::size_t right = 0;
  /// x * y * z where lead(left) = x y and lead(right) = y z, y nonempty.
  Word overlap_word;
  std::size_t overlap_length = 0;
  /// lc(right) * left * z - lc(left) * x * right
  Polynomial result;
};

/// All compositions of f with g. When `same` is set (f and g are one
/// relation) the trivial overlap y = lead(f) is skipped.
std::vector<CompositionWitness> compositions(const Polynomial& f, const Polynomial& g,
                                             const SymbolOrder& order, bool same = false);
/// Compositions of relation i with relation j of `system`, indices filled in.
std::vector<CompositionWitness> compositions(const RewriteSystem& system, std::size_t i,
                                             std::size_t j);

/// Closure condition: no leading word inside another, and every composition
/// reduces to zero. Condition name "groebner".
ConditionReport is_closed_under_compositions(const RewriteSystem& system);

/// Returns `system` with status closed when the closure check passes.
/// Throws std::invalid_argument otherwise.
RewriteSystem certify_closed(const RewriteSystem& system);

/// R_S(s) == s for every relation, i.e. no non-leading word contains a
/// leading word. Condition name "reduced".
ConditionReport is_reduced(const RewriteSystem& system);

/// Replaces every relation by its normal form modulo the others until
/// stable; zero results are dropped. Same ideal; the output is reduced.
RewriteSystem inter_reduce(const RewriteSystem& system);

/// One factor of a derivation: coefficient * left * pool[source] * right.
struct DerivationTerm {
  Scalar coefficient;
  Word left;
  std::size_t source = 0;
  Word right;
};

/// How a completion pool element was obtained: either a copy of an input
/// relation or a combination of strictly earlier pool elements.
struct Derivation {
  std::optional<std::size_t> input;
  std::vector<DerivationTerm> terms;
};

struct CompletionTrace {
  std::vector<Polynomial> originals;
  std::vector<Polynomial> pool;
  std::vector<Derivation> derivations;
  /// Pool id of each relation of the completed system.
  std::vector<std::size_t> final_ids;
  std::size_t rounds = 0;
  std::size_t discarded = 0;

  /// Every pool element equals its derivation (exact re-multiplication), so
  /// every completed relation lies in the ideal of the originals.
  bool verify_derivations() const;
};

struct CompletionResult {
  RewriteSystem system;
  CompletionTrace trace;
};

/// Critical-pair completion. Status closed when no composition yields a new
/// element; cap_reached when max_iterations rounds pass or a nonzero
/// composition of degree > max_degree was discarded.
CompletionResult complete_traced(const RewriteSystem& system, std::size_t max_degree,
                                 std::size_t max_iterations);
RewriteSystem complete(const RewriteSystem& system, std::size_t max_degree,
                       std::size_t max_iterations);

/// Both directions of ideal equality: each original reduces to zero modulo the
/// completed system, and the trace derivations check out.
struct IdealEquality {
  std::vector<RewriteCertificate> originals_reduce_to_zero;
  bool derivations_verified = false;
  bool holds() const;
};
IdealEquality certify_same_ideal(const CompletionResult& completion);

/// Basis words of length <= max_length, ascending in deglex.
std::vector<Word> enumerate_basis_words(const RewriteSystem& system, std::size_t max_length);

/// S together with the star of every relation, deduplicated up to scaling.
RewriteSystem with_involution_closure(const RewriteSystem& system);

} // namespace starrep
