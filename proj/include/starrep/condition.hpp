#pragma once

#include "starrep/system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace starrep {

enum class Verdict { holds, fails, inconclusive };

std::string_view to_string(Verdict verdict);

/// A structured counterexample. Which fields are populated depends on `kind`.
struct Witness {
  std::string kind;
  std::vector<std::size_t> relations;
  std::vector<Word> words;
  std::optional<Polynomial> polynomial;
  std::vector<RewriteStep> trace;
  std::string note;
};

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::holds;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> parameters;
  /// Set when the verdict only covers words up to a length bound.
  std::optional<std::size_t> bound;
  std::string note;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }
};

} // namespace starrep
