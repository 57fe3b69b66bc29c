#include "starrep/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace starrep {

ParseError::ParseError(std::string msg, std::size_t line_, std::size_t column_)
    : std::runtime_error(line_ ? std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg
                               : "column " + std::to_string(column_) + ": " + msg),
      message(std::move(msg)), line(line_), column(column_) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(const std::string& s) {
  return !s.empty() && is_ident_start(s[0]) && std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Recursive-descent parser; '*' is always the postfix involution and
// juxtaposition is multiplication.
class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const Alphabet* alphabet, const Bindings& bindings,
                   const std::set<std::string>* unbound, bool lenient, std::size_t line,
                   std::size_t offset)
      : text_(text), alphabet_(alphabet), bindings_(bindings), unbound_(unbound),
        lenient_(lenient), line_(line), offset_(offset) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, offset_ + at + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c) || c == '(';
  }

  Polynomial expr() {
    Polynomial out;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    out = negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      if (!starts_factor()) fail("expected a term");
      Polynomial next = term();
      if (minus) out -= next;
      else out += next;
    }
    return out;
  }

  Polynomial term() {
    if (!starts_factor()) fail("expected a term");
    Polynomial out = factor();
    while (starts_factor()) out = out * factor();
    return out;
  }

  Polynomial factor() {
    Polynomial base = atom();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        base = base.star();
      } else if (c == '^') {
        ++pos_;
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        if (pos_ - start > 4) fail("exponent too large", start);
        const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        Polynomial p(Scalar(1));
        for (int j = 0; j < k; ++j) p = p * base;
        base = p;
      } else {
        return base;
      }
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("malformed coefficient: missing denominator", start);
        if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
          fail("malformed coefficient: zero denominator", start);
        num += "/" + den;
      }
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))
        fail("malformed coefficient", start);
      return Polynomial(Scalar(parse_rational(num)));
    }
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (alphabet_) {
        if (auto g = alphabet_->generator(name)) return Polynomial(Word{Symbol{*g, false}});
      }
      if (auto it = bindings_.find(name); it != bindings_.end()) return Polynomial(it->second);
      if (unbound_ && unbound_->count(name)) {
        if (lenient_) return Polynomial(Scalar(1));
        fail("unbound parameter '" + name + "'", start);
      }
      if (name == "i") return Polynomial(Scalar::imaginary_unit());
      fail("unknown symbol '" + name + "'", start);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Alphabet* alphabet_;
  const Bindings& bindings_;
  const std::set<std::string>* unbound_;
  bool lenient_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::set<std::string> unbound_names(const std::vector<Parameter>& params, const Bindings& b) {
  std::set<std::string> out;
  for (auto& p : params)
    if (!b.count(p.name)) out.insert(p.name);
  return out;
}

std::vector<Symbol> parse_order(const std::string& text, const std::vector<std::string>& gens,
                                std::size_t line, std::size_t offset) {
  std::vector<Symbol> out;
  std::set<std::uint32_t> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('>', pos);
    if (next == std::string::npos) next = text.size();
    std::string item = trim(std::string_view(text).substr(pos, next - pos));
    const std::size_t col = offset + pos + 1;
    bool starred = !item.empty() && item.back() == '*';
    if (starred) item = trim(item.substr(0, item.size() - 1));
    auto it = std::find(gens.begin(), gens.end(), item);
    if (item.empty()) throw ParseError("empty entry in order", line, col);
    if (it == gens.end()) throw ParseError("unknown symbol '" + item + "' in order", line, col);
    Symbol s{static_cast<std::uint32_t>(it - gens.begin()), starred};
    if (!seen.insert(s.code()).second)
      throw ParseError("duplicate declaration of '" + item + (starred ? "*" : "") + "' in order", line, col);
    out.push_back(s);
    pos = next + 1;
  }
  if (out.size() != 2 * gens.size())
    throw ParseError("order must list all " + std::to_string(2 * gens.size()) + " symbols", line, offset + 1);
  return out;
}

} // namespace

Polynomial parse_expression(std::string_view text, const Alphabet& alphabet,
                            const Bindings& bindings, std::size_t line, std::size_t column_offset) {
  return ExpressionParser(text, &alphabet, bindings, nullptr, false, line, column_offset).parse();
}

Scalar parse_scalar(std::string_view text, std::size_t line, std::size_t column_offset) {
  Bindings none;
  Polynomial p = ExpressionParser(text, nullptr, none, nullptr, false, line, column_offset).parse();
  if (p.is_zero()) return Scalar(0);
  if (p.size() != 1 || !p.terms().begin()->first.empty())
    throw ParseError("malformed coefficient", line, column_offset + 1);
  return p.terms().begin()->second;
}

Alphabet Presentation::alphabet() const {
  const std::size_t n = generators.size();
  if (order.empty()) return Alphabet(generators, SymbolOrder::starred_first(n));
  return Alphabet(generators, SymbolOrder(n, order));
}

Bindings Presentation::bindings(const Bindings& overrides) const {
  Bindings out;
  for (auto& p : parameters)
    if (p.value) out[p.name] = *p.value;
  for (auto& [k, v] : overrides) {
    if (std::none_of(parameters.begin(), parameters.end(), [&](auto& p) { return p.name == k; }))
      throw ParseError("unknown parameter '" + k + "'", 0, 1);
    out[k] = v;
  }
  return out;
}

std::vector<Polynomial> Presentation::relation_polynomials(const Bindings& overrides) const {
  const Bindings b = bindings(overrides);
  const std::set<std::string> unbound = unbound_names(parameters, b);
  const Alphabet a = alphabet();
  std::vector<Polynomial> out;
  for (auto& r : relations)
    out.push_back(ExpressionParser(r.text, &a, b, &unbound, false, r.line, r.column - 1).parse());
  return out;
}

RewriteSystem Presentation::system(const Bindings& overrides) const {
  return RewriteSystem(alphabet(), relation_polynomials(overrides));
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_name = false, have_gens = false, have_double = false;
  std::optional<std::pair<std::string, std::pair<std::size_t, std::size_t>>> order_src;
  std::set<std::string> names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;

    const std::size_t colon = line.find(':');
    const std::size_t indent = line.find_first_not_of(" \t");
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, indent + 1);
    const std::string key = trim(std::string_view(line).substr(0, colon));
    std::size_t vstart = colon + 1;
    while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
    const std::string value = trim(std::string_view(line).substr(vstart));
    const std::size_t vcol = vstart + 1;

    if (key == "name") {
      if (have_name) throw ParseError("duplicate declaration of name", line_no, indent + 1);
      have_name = true;
      p.name = value;
    } else if (key == "generators") {
      if (have_gens) throw ParseError("duplicate declaration of generators", line_no, indent + 1);
      have_gens = true;
      std::istringstream in(value);
      std::string g;
      while (in >> g) {
        const std::size_t col = vstart + value.find(g) + 1;
        if (!valid_identifier(g) || g == "i")
          throw ParseError("invalid generator name '" + g + "'", line_no, col);
        if (!names.insert(g).second) throw ParseError("duplicate declaration of '" + g + "'", line_no, col);
        p.generators.push_back(g);
      }
      if (p.generators.empty()) throw ParseError("no generators declared", line_no, vcol);
    } else if (key == "order") {
      if (order_src) throw ParseError("duplicate declaration of order", line_no, indent + 1);
      order_src = {value, {line_no, vstart}};
    } else if (key == "param") {
      const std::size_t eq = value.find('=');
      const std::string pname = trim(value.substr(0, eq));
      if (!valid_identifier(pname) || pname == "i")
        throw ParseError("invalid parameter name '" + pname + "'", line_no, vcol);
      if (!names.insert(pname).second)
        throw ParseError("duplicate declaration of '" + pname + "'", line_no, vcol);
      Parameter param{pname, std::nullopt, line_no};
      if (eq != std::string::npos) {
        std::size_t s = eq + 1;
        while (s < value.size() && std::isspace(static_cast<unsigned char>(value[s]))) ++s;
        param.value = parse_scalar(value.substr(s), line_no, vstart + s);
      }
      p.parameters.push_back(std::move(param));
    } else if (key == "rel") {
      if (value.empty()) throw ParseError("empty relation", line_no, vcol);
      p.relations.push_back({value, line_no, vcol});
    } else if (key == "double") {
      if (have_double) throw ParseError("duplicate declaration of double", line_no, indent + 1);
      have_double = true;
      if (value == "yes") p.star_double = true;
      else if (value != "no") throw ParseError("double expects yes or no", line_no, vcol);
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no, indent + 1);
    }
  }
  if (!have_gens) throw ParseError("missing 'generators:' declaration", 0, 1);
  for (auto& gname : p.generators)
    if (std::any_of(p.parameters.begin(), p.parameters.end(), [&](auto& q) { return q.name == gname; }))
      throw ParseError("duplicate declaration of '" + gname + "'", 0, 1);
  if (order_src)
    p.order = parse_order(order_src->first, p.generators, order_src->second.first,
                          order_src->second.second);

  // Validate symbols now; unbound parameters are only an error once the
  // system is built.
  const Bindings b = p.bindings();
  const std::set<std::string> unbound = unbound_names(p.parameters, b);
  const Alphabet a = p.alphabet();
  for (auto& r : p.relations)
    ExpressionParser(r.text, &a, b, &unbound, true, r.line, r.column - 1).parse();
  return p;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  if (!p.name.empty()) out << "name: " << p.name << "\n";
  out << "generators:";
  for (auto& g : p.generators) out << " " << g;
  out << "\n";
  if (!p.order.empty()) {
    out << "order:";
    for (std::size_t k = 0; k < p.order.size(); ++k)
      out << (k ? " > " : " ") << p.generators.at(p.order[k].base) << (p.order[k].starred ? "*" : "");
    out << "\n";
  }
  for (auto& param : p.parameters) {
    out << "param: " << param.name;
    if (param.value) out << " = " << param.value->to_string();
    out << "\n";
  }
  for (auto& r : p.relations) out << "rel: " << r.text << "\n";
  if (p.star_double) out << "double: yes\n";
  return out.str();
}

} // namespace starrep
