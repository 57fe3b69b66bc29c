#pragma once

#include "starrep/cli.hpp"
#include "starrep/presentation.hpp"
#include "starrep/presets.hpp"

#include <stdexcept>
#include <string>

namespace testing {

using namespace starrep;

inline RewriteSystem system_from(const std::string& dsl) { return parse_presentation(dsl).system(); }

inline RewriteSystem preset(const std::string& name, const Bindings& overrides = {}) {
  return prepare_system(parse_presentation(*preset_text(name)), overrides);
}

inline Polynomial poly(const RewriteSystem& s, const std::string& expr) {
  return parse_expression(expr, s.alphabet(), {});
}
inline Polynomial poly(const Alphabet& a, const std::string& expr) { return parse_expression(expr, a, {}); }

inline Word word(const Alphabet& a, const std::string& expr) {
  Polynomial p = parse_expression(expr, a, {});
  if (p.size() != 1 || !p.terms().begin()->second.is_one()) throw std::invalid_argument("not a word: " + expr);
  return p.terms().begin()->first;
}
inline Word word(const RewriteSystem& s, const std::string& expr) { return word(s.alphabet(), expr); }

inline Rational Q(long p, long q = 1) { return Rational(p, q); }

} // namespace testing
