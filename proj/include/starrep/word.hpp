#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace starrep {

/// One of the 2n letters x_1..x_n, x_1*..x_n* of the free *-semigroup.
struct Symbol {
  std::uint32_t base = 0;
  bool starred = false;

  constexpr Symbol star() const { return Symbol{base, !starred}; }
  /// Dense index in [0, 2n): 2*base + starred.
  constexpr std::uint32_t code() const { return 2 * base + (starred ? 1 : 0); }
  static constexpr Symbol from_code(std::uint32_t c) { return Symbol{c / 2, (c & 1) != 0}; }

  friend constexpr bool operator==(Symbol, Symbol) = default;
  friend constexpr auto operator<=>(Symbol a, Symbol b) { return a.code() <=> b.code(); }
};

/// Element of the free *-semigroup W. The empty word is the unit e.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t length() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  /// Reverses and stars every symbol.
  Word involution() const;
  Word concat(const Word& other) const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(length() - len, len); }
  Word power(std::size_t k) const;

  bool contains_at(const Word& needle, std::size_t pos) const;
  std::optional<std::size_t> find(const Word& needle) const;
  bool contains(const Word& needle) const { return find(needle).has_value(); }
  bool starts_with(const Word& w) const { return w.length() <= length() && contains_at(w, 0); }
  bool ends_with(const Word& w) const {
    return w.length() <= length() && contains_at(w, length() - w.length());
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Structural order (length, then symbol code). Used only as a container key.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.symbols_ < b.symbols_;
  }

private:
  std::vector<Symbol> symbols_;
};

Word operator*(const Word& a, const Word& b);

/// Total order on the 2n symbols. rank(s) in [0, 2n); a larger rank is a greater symbol.
class SymbolOrder {
public:
  SymbolOrder() = default;
  /// `descending` lists every symbol exactly once, greatest first.
  /// Throws std::invalid_argument if it is not a permutation of the 2n symbols.
  SymbolOrder(std::size_t generators, std::span<const Symbol> descending);

  /// x_1* > ... > x_n* > x_1 > ... > x_n
  static SymbolOrder starred_first(std::size_t generators);

  std::size_t generator_count() const { return rank_.size() / 2; }
  std::uint32_t rank(Symbol s) const { return rank_[s.code()]; }
  /// Greatest symbol first.
  std::vector<Symbol> descending() const;

private:
  std::vector<std::uint32_t> rank_;
};

/// Degree-lexicographic comparison: longer words are greater; equal lengths
/// compare letter by letter by rank.
std::strong_ordering deglex_compare(const Word& u, const Word& v, const SymbolOrder& order);

struct DeglexLess {
  const SymbolOrder* order;
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v, *order) < 0; }
};

/// Generator names plus the symbol order; everything needed to print words.
class Alphabet {
public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> names, SymbolOrder order);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const SymbolOrder& order() const { return order_; }
  std::string name(Symbol s) const { return names_.at(s.base) + (s.starred ? "*" : ""); }
  std::optional<std::uint32_t> generator(const std::string& name) const;
  /// Symbols x_1..x_n, x_1*..x_n*.
  std::vector<Symbol> symbols() const;

  /// "1" for the empty word; runs compress to powers, e.g. "x^2 x*".
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.order_.descending() == b.order_.descending();
  }

private:
  std::vector<std::string> names_;
  SymbolOrder order_;
};

} // namespace starrep

template <>
struct std::hash<starrep::Word> {
  std::size_t operator()(const starrep::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto s : w.symbols()) h = (h ^ s.code()) * 1099511628211ull;
    return h;
  }
};
