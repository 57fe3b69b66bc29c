#pragma once

#include "starrep/polynomial.hpp"

#include <string_view>
#include <vector>

namespace starrep {

enum class CompletionStatus { raw, closed, cap_reached };

std::string_view to_string(CompletionStatus status);

/// A relation set S over a fixed alphabet. Every stored relation is nonzero
/// and monic; relation i rewrites leading_word(i) -> tail(i).
class RewriteSystem {
public:
  RewriteSystem() = default;
  /// Zero relations are dropped, the rest are normalized to leading coefficient 1.
  RewriteSystem(Alphabet alphabet, std::vector<Polynomial> relations,
                CompletionStatus status = CompletionStatus::raw);

  const Alphabet& alphabet() const { return alphabet_; }
  const SymbolOrder& order() const { return alphabet_.order(); }
  std::size_t size() const { return relations_.size(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const Polynomial& relation(std::size_t i) const { return relations_.at(i); }
  const Word& leading_word(std::size_t i) const { return leads_.at(i); }
  const std::vector<Word>& leading_words() const { return leads_; }
  const Polynomial& tail(std::size_t i) const { return tails_.at(i); }
  CompletionStatus status() const { return status_; }
  RewriteSystem with_status(CompletionStatus status) const;

  /// Relation indices (ascending) whose nonempty leading word starts with `s`.
  const std::vector<std::size_t>& candidates(Symbol s) const { return by_first_.at(s.code()); }
  /// Relations whose leading word is the empty word (the ideal is everything).
  const std::vector<std::size_t>& unit_relations() const { return units_; }

private:
  Alphabet alphabet_;
  std::vector<Polynomial> relations_;
  std::vector<Word> leads_;
  std::vector<Polynomial> tails_;
  std::vector<std::vector<std::size_t>> by_first_;
  std::vector<std::size_t> units_;
  CompletionStatus status_ = CompletionStatus::raw;
};

/// One substitution: the running polynomial lost coefficient * left * s_relation * right.
struct RewriteStep {
  std::size_t relation = 0;
  Word left;
  Word right;
  Scalar coefficient;
};

/// input - normal_form == sum of coefficient * left * relation * right over steps.
struct RewriteCertificate {
  Polynomial input;
  Polynomial normal_form;
  std::vector<RewriteStep> steps;

  Polynomial expansion(const RewriteSystem& system) const;
  /// Re-multiplies the steps and compares exactly.
  bool verify(const RewriteSystem& system) const;
};

} // namespace starrep
