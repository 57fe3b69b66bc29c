#include "starrep/conditions.hpp"
#include "starrep/rewrite.hpp"

#include <algorithm>
#include <set>

namespace starrep {

namespace {

constexpr std::size_t kMaxWitnesses = 32;

void add_witness(ConditionReport& report, Witness w) {
  report.verdict = Verdict::fails;
  if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
}

Witness relation_witness(std::string kind, std::vector<std::size_t> relations,
                         std::vector<Word> words, std::string note = {}) {
  Witness w;
  w.kind = std::move(kind);
  w.relations = std::move(relations);
  w.words = std::move(words);
  w.note = std::move(note);
  return w;
}

// Folds a sub-report's failure into `report` as a single witness.
bool absorb(ConditionReport& report, const ConditionReport& sub, const std::string& kind) {
  if (sub.holds()) return true;
  Witness w;
  w.kind = kind;
  if (!sub.witnesses.empty()) {
    const Witness& first = sub.witnesses.front();
    w.relations = first.relations;
    w.words = first.words;
    w.polynomial = first.polynomial;
    w.note = first.kind;
  }
  add_witness(report, std::move(w));
  return false;
}

std::vector<Word> non_leading_tops(const RewriteSystem& system, std::size_t i) {
  std::vector<Word> out;
  const Word& lead = system.leading_word(i);
  for (auto& u : system.relation(i).top_words())
    if (!(u == lead)) out.push_back(u);
  return out;
}

void check_tops_unshrinkable(const RewriteSystem& system, ConditionReport& report) {
  for (std::size_t i = 0; i < system.size(); ++i)
    for (auto& u : system.relation(i).top_words())
      if (!is_unshrinkable(u))
        add_witness(report, relation_witness("shrinkable-top", {i}, {u}));
}

} // namespace

RewriteSystem require_closed(const RewriteSystem& system) {
  switch (system.status()) {
  case CompletionStatus::closed: return system;
  case CompletionStatus::cap_reached:
    throw PreconditionError("relation set is not closed (completion hit its cap)");
  case CompletionStatus::raw: break;
  }
  if (!is_closed_under_compositions(system).holds())
    throw PreconditionError("relation set is not closed under compositions; run completion first");
  return system.with_status(CompletionStatus::closed);
}

bool is_literally_star_closed(const RewriteSystem& system) {
  const auto& rels = system.relations();
  for (const auto& s : rels) {
    Polynomial t = s.star().monic(system.order());
    if (std::find(rels.begin(), rels.end(), t) == rels.end()) return false;
  }
  return true;
}

ConditionReport is_symmetric(const RewriteSystem& system) {
  ConditionReport report;
  report.condition = "symmetric";
  const bool literal = is_literally_star_closed(system);
  report.parameters["literal_star_closed"] = literal ? "yes" : "no";
  if (literal) {
    report.note = "S* = S";
    return report;
  }
  RewriteSystem closed = require_closed(system);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    RewriteCertificate cert = reduce(closed.relation(i).star(), closed);
    if (!cert.normal_form.is_zero()) {
      Witness w = relation_witness("star-not-in-ideal", {i}, {});
      w.polynomial = cert.normal_form;
      w.trace = std::move(cert.steps);
      add_witness(report, std::move(w));
    }
  }
  return report;
}

bool is_unshrinkable(const Word& w) {
  const std::size_t n = w.length();
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    // prefix d* d
    if (w.subword(0, k) == w.subword(k, k).involution()) return false;
    // suffix d* d
    if (w.subword(n - 2 * k, k) == w.subword(n - k, k).involution()) return false;
  }
  return true;
}

ConditionReport check_unshrinkable_tops(const RewriteSystem& system) {
  ConditionReport report;
  report.condition = "unshrinkable-tops";
  check_tops_unshrinkable(system, report);
  return report;
}

ConditionReport check_strictly_appropriate(const RewriteSystem& input) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "strictly-appropriate";
  absorb(report, is_reduced(system), "not-reduced");
  absorb(report, is_symmetric(system), "not-symmetric");
  check_tops_unshrinkable(system, report);

  std::vector<std::size_t> with_tops;
  for (std::size_t k = 0; k < system.size(); ++k)
    if (!non_leading_tops(system, k).empty()) with_tops.push_back(k);

  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& head = system.leading_word(i);
    if (head.empty()) continue;
    for (auto& u : non_leading_tops(system, i)) {
      if (u.empty() || u.front() != head.front()) continue;
      for (std::size_t k : with_tops) {
        const Word& h1 = system.leading_word(k);
        if (h1.contains(u)) {
          add_witness(report, relation_witness("top-inside-head", {i, k}, {u, h1}));
          continue;
        }
        const std::size_t upper = std::min(u.length(), h1.length());
        for (std::size_t len = 2; len + 1 <= upper; ++len) {
          if (h1.ends_with(u.prefix(len))) {
            add_witness(report, relation_witness("head-overlaps-top", {i, k}, {u, h1},
                                                 "overlap length " + std::to_string(len)));
            break;
          }
        }
      }
    }
  }
  return report;
}

ConditionReport check_distinct_head(const RewriteSystem& input) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "distinct-head";
  absorb(report, is_symmetric(system), "not-symmetric");
  check_tops_unshrinkable(system, report);
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& head = system.leading_word(i);
    if (head.empty()) continue;
    for (auto& u : non_leading_tops(system, i))
      if (!u.empty() && u.front() == head.front())
        add_witness(report, relation_witness("top-shares-first-symbol", {i}, {u, head}));
  }
  return report;
}

ConditionReport check_overlap_free_tops(const RewriteSystem& input) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "overlap-free-tops";
  absorb(report, is_reduced(system), "not-reduced");
  absorb(report, is_symmetric(system), "not-symmetric");
  check_tops_unshrinkable(system, report);
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (auto& u : non_leading_tops(system, i)) {
      for (std::size_t j = 0; j < system.size(); ++j) {
        const Word& head = system.leading_word(j);
        const std::size_t upper = std::min(u.length(), head.length());
        for (std::size_t len = 1; len <= upper; ++len) {
          if (u.suffix(len) == head.prefix(len)) {
            add_witness(report, relation_witness("top-composes-with-head", {i, j}, {u, head},
                                                 "overlap length " + std::to_string(len)));
            break;
          }
        }
      }
    }
  }
  return report;
}

ConditionReport check_star_double(const RewriteSystem& input,
                                  std::optional<std::vector<Symbol>> unstarred) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "star-double";

  std::set<Symbol> g;
  if (unstarred) {
    g.insert(unstarred->begin(), unstarred->end());
    for (Symbol s : g)
      if (g.count(s.star()) || s.base >= system.alphabet().size())
        throw std::invalid_argument("generator split must pick exactly one of s, s* per letter");
    if (g.size() != system.alphabet().size())
      throw std::invalid_argument("generator split must cover every letter");
  } else {
    for (std::uint32_t b = 0; b < system.alphabet().size(); ++b) g.insert(Symbol{b, false});
  }
  // 0 = inside G, 1 = inside G*, -1 = mixed or empty
  auto side = [&](const Word& w) {
    if (w.empty()) return -1;
    const bool first = g.count(w.front()) != 0;
    for (Symbol s : w.symbols())
      if ((g.count(s) != 0) != first) return -1;
    return first ? 0 : 1;
  };

  if (!is_literally_star_closed(system))
    add_witness(report, relation_witness("not-star-closed", {}, {}));
  // The argument needs BW* = BW, which holds once the heads are closed under
  // the involution; S* = S alone does not give it under deglex.
  const auto& heads = system.leading_words();
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word mirrored = heads[i].involution();
    if (std::find(heads.begin(), heads.end(), mirrored) == heads.end())
      add_witness(report, relation_witness("head-star-not-a-head", {i}, {heads[i], mirrored}));
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& head = system.leading_word(i);
    const int hs = side(head);
    if (hs < 0) {
      add_witness(report, relation_witness("mixed-head", {i}, {head}));
      continue;
    }
    for (auto& u : system.relation(i).top_words())
      if (side(u) != hs)
        add_witness(report, relation_witness("top-in-other-semigroup", {i}, {u, head}));
  }
  return report;
}

ConditionReport check_strictness(const RewriteSystem& input, std::size_t max_length) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "strictness";
  report.bound = max_length;
  for (const Word& d : enumerate_basis_words(system, max_length)) {
    Word dd = d * d.involution();
    if (!is_basis_word(dd, system)) add_witness(report, relation_witness("dd*-reducible", {}, {d, dd}));
  }
  if (report.holds()) {
    const auto& heads = system.leading_words();
    bool certified = true;
    for (auto& h : heads)
      certified &= is_unshrinkable(h) &&
                   std::find(heads.begin(), heads.end(), h.involution()) != heads.end();
    report.note = certified
                      ? "certified for all lengths (heads unshrinkable and closed under *)"
                      : "inconclusive beyond bound";
  }
  return report;
}

ConditionReport check_non_expanding_bounded(const RewriteSystem& input, std::size_t max_length) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "non-expanding";
  report.bound = max_length;
  absorb(report, is_symmetric(system), "not-symmetric");

  std::vector<Word> words = enumerate_basis_words(system, max_length);
  // ascending deglex, so same-length words are contiguous
  std::size_t begin = 0;
  while (begin < words.size()) {
    std::size_t end = begin;
    while (end < words.size() && words[end].length() == words[begin].length()) ++end;
    for (std::size_t a = begin; a < end; ++a) {
      const Word& u = words[a];
      const Word target = u * u.involution();
      for (std::size_t b = begin; b < a; ++b) {
        const Word& v = words[b];
        RewriteCertificate cert = reduce(Polynomial(u * v.involution()), system);
        if (cert.normal_form.contains(target)) {
          Witness w = relation_witness("uu*-in-R(uv*)", {}, {u, v, target});
          w.polynomial = cert.normal_form;
          w.trace = std::move(cert.steps);
          add_witness(report, std::move(w));
        }
      }
    }
    begin = end;
  }
  if (report.holds()) report.note = "inconclusive beyond bound";
  return report;
}

ConditionReport check_non_expanding(const RewriteSystem& input, std::size_t scan_length) {
  RewriteSystem system = require_closed(input);
  ConditionReport report;
  report.condition = "non-expanding";
  std::vector<ConditionReport> sufficient = {
      check_distinct_head(system), check_strictly_appropriate(system),
      check_overlap_free_tops(system), check_star_double(system)};
  for (auto& r : sufficient) {
    report.parameters[r.condition] = std::string(to_string(r.verdict));
    if (r.holds() && report.note.empty()) report.note = "certified by " + r.condition;
  }
  if (!report.note.empty()) return report;

  ConditionReport scan = check_non_expanding_bounded(system, scan_length);
  report.bound = scan_length;
  report.witnesses = std::move(scan.witnesses);
  if (scan.fails()) {
    report.verdict = Verdict::fails;
  } else {
    report.verdict = Verdict::inconclusive;
    report.note = "no sufficient condition holds; bounded scan found no witness";
  }
  return report;
}

std::optional<RewriteSystem> find_star_double(const RewriteSystem& input) {
  RewriteSystem system = require_closed(input);
  for (auto& r : system.relations())
    for (auto& [w, c] : r.terms())
      for (Symbol s : w.symbols())
        if (s.starred) throw std::invalid_argument("star-double search expects relations over G only");

  std::vector<Symbol> desc = system.order().descending();
  std::vector<std::size_t> slots;
  std::vector<Symbol> starred;
  for (std::size_t k = 0; k < desc.size(); ++k)
    if (desc[k].starred) {
      slots.push_back(k);
      starred.push_back(desc[k]);
    }
  if (starred.size() > 8) throw std::invalid_argument("too many letters for an exhaustive search");

  // Try the declared order first, then every other permutation.
  std::vector<std::vector<Symbol>> candidates{starred};
  std::vector<Symbol> perm = starred;
  std::sort(perm.begin(), perm.end());
  do {
    if (perm != starred) candidates.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Polynomial> rels = system.relations();
  for (auto& r : system.relations()) rels.push_back(r.star());
  for (auto& cand : candidates) {
    std::vector<Symbol> order = desc;
    for (std::size_t k = 0; k < slots.size(); ++k) order[slots[k]] = cand[k];
    Alphabet alphabet(system.alphabet().names(), SymbolOrder(system.alphabet().size(), order));
    RewriteSystem doubled(alphabet, rels);
    if (is_closed_under_compositions(doubled).holds())
      return doubled.with_status(CompletionStatus::closed);
  }
  return std::nullopt;
}

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names{
      "groebner",      "reduced",           "symmetric",   "unshrinkable-tops", "strictly-appropriate",
      "distinct-head", "overlap-free-tops", "star-double", "strict",            "non-expanding"};
  return names;
}

ConditionReport check_condition(const RewriteSystem& s, const std::string& name,
                                std::optional<std::size_t> max_length) {
  const std::size_t len = max_length.value_or(kDefaultScanLength);
  if (name == "groebner") return is_closed_under_compositions(s);
  if (name == "reduced") return is_reduced(s);
  if (name == "symmetric") return is_symmetric(s);
  if (name == "unshrinkable-tops") return check_unshrinkable_tops(s);
  if (name == "strictly-appropriate") return check_strictly_appropriate(s);
  if (name == "distinct-head") return check_distinct_head(s);
  if (name == "overlap-free-tops") return check_overlap_free_tops(s);
  if (name == "star-double") return check_star_double(s);
  if (name == "strict") return check_strictness(s, len);
  if (name == "non-expanding")
    return max_length ? check_non_expanding_bounded(s, len) : check_non_expanding(s, len);
  throw std::invalid_argument("unknown condition '" + name + "'");
}

} // namespace starrep
