#include "starrep/presets.hpp"
#include "starrep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace starrep {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"toeplitz",
       "name: toeplitz\n"
       "generators: u\n"
       "order: u* > u\n"
       "rel: u* u - 1\n"},
      {"qdeform",
       "name: qdeform\n"
       "generators: a x\n"
       "order: x* > x > a* > a\n"
       "param: q = 1/2\n"
       "rel: a* a - q a a*\n"
       "rel: x x* + a a* - 1\n"},
      {"monomial-x2",
       "name: monomial-x2\n"
       "generators: x\n"
       "order: x* > x\n"
       "rel: x^2\n"
       "rel: x*^2\n"},
      {"t3",
       "name: t3\n"
       "# q3 = alpha - q1 - q2 is eliminated\n"
       "generators: q1 q2\n"
       "order: q2 > q1 > q2* > q1*\n"
       "param: alpha = 1\n"
       "rel: q1^3 - q1\n"
       "rel: q2^3 - q2\n"
       "rel: (alpha - q1 - q2)^3 - (alpha - q1 - q2)\n"
       "double: yes\n"},
      {"b4-double",
       "name: b4-double\n"
       "# q4 = alpha - q1 - q2 - q3 is eliminated\n"
       "generators: q1 q2 q3\n"
       "order: q3 > q2 > q1 > q2* > q3* > q1*\n"
       "param: alpha = 0\n"
       "rel: q1^2 - q1\n"
       "rel: q2^2 - q2\n"
       "rel: q3^2 - q3\n"
       "rel: (alpha - q1 - q2 - q3)^2 - (alpha - q1 - q2 - q3)\n"
       "double: yes\n"},
      {"heisenberg",
       "name: heisenberg\n"
       "# [e1, e2] = e3, the other brackets vanish; e* = -e\n"
       "generators: e1 e2 e3\n"
       "order: e1* > e2* > e3* > e1 > e2 > e3\n"
       "rel: e1 e2 - e2 e1 - e3\n"
       "rel: e1 e3 - e3 e1\n"
       "rel: e2 e3 - e3 e2\n"
       "rel: e1* + e1\n"
       "rel: e2* + e2\n"
       "rel: e3* + e3\n"},
      {"wick",
       "name: wick\n"
       "# real t1, t2 keep the relation set *-invariant\n"
       "generators: a1 a2\n"
       "order: a1* > a2* > a1 > a2\n"
       "param: t1 = 1/2\n"
       "param: t2 = 1/3\n"
       "rel: a1* a2 - t1 a2 a1* - t2 a1 a2*\n"
       "rel: a2* a1 - t2 a2 a1* - t1 a1 a2*\n"},
  };
  return t;
}

std::optional<std::string> monomial_text(const std::string& list) {
  std::vector<std::string> words;
  std::stringstream in(list);
  std::string w;
  while (std::getline(in, w, ',')) {
    while (!w.empty() && std::isspace(static_cast<unsigned char>(w.back()))) w.pop_back();
    while (!w.empty() && std::isspace(static_cast<unsigned char>(w.front()))) w.erase(0, 1);
    if (!w.empty()) words.push_back(w);
  }
  if (words.empty()) return std::nullopt;
  // generators in order of first appearance
  std::vector<std::string> gens;
  std::set<std::string> seen;
  for (auto& word : words)
    for (std::size_t k = 0; k < word.size();) {
      if (std::isalpha(static_cast<unsigned char>(word[k])) || word[k] == '_') {
        std::size_t e = k;
        while (e < word.size() && (std::isalnum(static_cast<unsigned char>(word[e])) || word[e] == '_')) ++e;
        std::string g = word.substr(k, e - k);
        if (seen.insert(g).second) gens.push_back(g);
        k = e;
      } else {
        ++k;
      }
    }
  // each word together with its star, without repeats
  const Alphabet alphabet(gens, SymbolOrder::starred_first(gens.size()));
  std::vector<Word> rels;
  try {
    for (auto& text : words) {
      Polynomial p = parse_expression(text, alphabet, {});
      if (p.size() != 1 || !p.terms().begin()->second.is_one()) return std::nullopt;
      const Word w = p.terms().begin()->first;
      for (const Word& r : {w, w.involution()})
        if (std::find(rels.begin(), rels.end(), r) == rels.end()) rels.push_back(r);
    }
  } catch (const ParseError&) {
    return std::nullopt;
  }
  std::ostringstream out;
  out << "name: monomial\ngenerators:";
  for (auto& g : gens) out << " " << g;
  out << "\n";
  for (auto& r : rels) out << "rel: " << alphabet.format(r) << "\n";
  return out.str();
}

} // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : table()) out.push_back(k);
  out.push_back("monomial:WORDS");
  return out;
}

std::optional<std::string> preset_text(const std::string& spec) {
  if (auto it = table().find(spec); it != table().end()) return it->second;
  if (spec.rfind("monomial:", 0) == 0) return monomial_text(spec.substr(9));
  return std::nullopt;
}

} // namespace starrep
