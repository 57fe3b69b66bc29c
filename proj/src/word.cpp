#include "starrep/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace starrep {

Word Word::involution() const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size());
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.push_back(it->star());
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() + other.symbols_.size());
  out.insert(out.end(), symbols_.begin(), symbols_.end());
  out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size()) throw std::out_of_range("subword out of range");
  return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::power(std::size_t k) const {
  std::vector<Symbol> out;
  out.reserve(symbols_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), symbols_.begin(), symbols_.end());
  return Word(std::move(out));
}

bool Word::contains_at(const Word& needle, std::size_t pos) const {
  if (pos + needle.length() > length()) return false;
  return std::equal(needle.symbols_.begin(), needle.symbols_.end(),
                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& needle) const {
  if (needle.length() > length()) return std::nullopt;
  auto it = std::search(symbols_.begin(), symbols_.end(), needle.symbols_.begin(),
                        needle.symbols_.end());
  if (it == symbols_.end() && !needle.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

Word operator*(const Word& a, const Word& b) { return a.concat(b); }

SymbolOrder::SymbolOrder(std::size_t generators, std::span<const Symbol> descending) {
  const std::size_t total = 2 * generators;
  if (descending.size() != total)
    throw std::invalid_argument("symbol order must list all " + std::to_string(total) +
                                " symbols");
  rank_.assign(total, static_cast<std::uint32_t>(total));
  for (std::size_t i = 0; i < total; ++i) {
    Symbol s = descending[i];
    if (s.base >= generators) throw std::invalid_argument("symbol order names unknown generator");
    if (rank_[s.code()] != total) throw std::invalid_argument("symbol order repeats a symbol");
    rank_[s.code()] = static_cast<std::uint32_t>(total - 1 - i);
  }
}

SymbolOrder SymbolOrder::starred_first(std::size_t generators) {
  std::vector<Symbol> desc;
  for (std::uint32_t g = 0; g < generators; ++g) desc.push_back(Symbol{g, true});
  for (std::uint32_t g = 0; g < generators; ++g) desc.push_back(Symbol{g, false});
  return SymbolOrder(generators, desc);
}

std::vector<Symbol> SymbolOrder::descending() const {
  std::vector<Symbol> out(rank_.size());
  for (std::uint32_t c = 0; c < rank_.size(); ++c)
    out[rank_.size() - 1 - rank_[c]] = Symbol::from_code(c);
  return out;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v, const SymbolOrder& order) {
  if (u.length() != v.length()) return u.length() <=> v.length();
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u[i] == v[i]) continue;
    return order.rank(u[i]) <=> order.rank(v[i]);
  }
  return std::strong_ordering::equal;
}

Alphabet::Alphabet(std::vector<std::string> names, SymbolOrder order)
    : names_(std::move(names)), order_(std::move(order)) {
  if (order_.generator_count() != names_.size())
    throw std::invalid_argument("symbol order does not match generator count");
}

std::optional<std::uint32_t> Alphabet::generator(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::vector<Symbol> Alphabet::symbols() const {
  std::vector<Symbol> out;
  for (std::uint32_t g = 0; g < names_.size(); ++g) out.push_back(Symbol{g, false});
  for (std::uint32_t g = 0; g < names_.size(); ++g) out.push_back(Symbol{g, true});
  return out;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length();) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

} // namespace starrep
