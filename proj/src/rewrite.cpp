#include "starrep/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace starrep {
namespace {

constexpr std::size_t kMaxWitnesses = 32;

void add_witness(ConditionReport& report, Witness w) {
  report.verdict = Verdict::fails;
  if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
}

template <bool Record>
Polynomial rewrite(const Polynomial& f, const RewriteSystem& system,
                   std::vector<RewriteStep>* steps) {
  std::map<Word, Scalar, DeglexLess> work(DeglexLess{&system.order()});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);

  Polynomial out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = std::move(it->second);
    work.erase(it);

    auto occ = find_forbidden_subword(w, system);
    if (!occ) {
      // Every later term is smaller, so this one is final.
      out.add_term(std::move(w), c);
      continue;
    }
    for (const auto& [t, d] : system.tail(occ->relation).terms()) {
      Word image = occ->prefix * t * occ->suffix;
      Scalar add = c * d;
      auto [pos, inserted] = work.try_emplace(std::move(image), add);
      if (!inserted) {
        pos->second += add;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
    if constexpr (Record)
      steps->push_back(RewriteStep{occ->relation, std::move(occ->prefix),
                                   std::move(occ->suffix), std::move(c)});
  }
  return out;
}

} // namespace

std::optional<Occurrence> find_forbidden_subword(const Word& w, const RewriteSystem& system) {
  for (std::size_t pos = 0; pos <= w.length(); ++pos) {
    std::optional<std::size_t> best;
    if (pos < w.length()) {
      for (std::size_t r : system.candidates(w[pos])) {
        const Word& lead = system.leading_word(r);
        if (!w.contains_at(lead, pos)) continue;
        if (!best || lead.length() > system.leading_word(*best).length()) best = r;
      }
    }
    if (!best && !system.unit_relations().empty()) best = system.unit_relations().front();
    if (best) {
      const std::size_t len = system.leading_word(*best).length();
      return Occurrence{*best, pos, w.prefix(pos), w.suffix(w.length() - pos - len)};
    }
  }
  return std::nullopt;
}

bool is_basis_word(const Word& w, const RewriteSystem& system) {
  return !find_forbidden_subword(w, system).has_value();
}

RewriteCertificate reduce(const Polynomial& f, const RewriteSystem& system) {
  RewriteCertificate cert;
  cert.input = f;
  cert.normal_form = rewrite<true>(f, system, &cert.steps);
  return cert;
}

Polynomial normal_form(const Polynomial& f, const RewriteSystem& system) {
  return rewrite<false>(f, system, nullptr);
}

std::vector<CompositionWitness> compositions(const Polynomial& f, const Polynomial& g,
                                             const SymbolOrder& order, bool same) {
  const Word& a = f.leading_word(order);
  const Word& b = g.leading_word(order);
  const Scalar& lf = f.leading_coefficient(order);
  const Scalar& lg = g.leading_coefficient(order);
  std::vector<CompositionWitness> out;
  const std::size_t max_k = std::min(a.length(), b.length());
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (same && k == a.length()) continue;
    if (!b.starts_with(a.suffix(k))) continue;
    Word x = a.prefix(a.length() - k);
    Word z = b.suffix(b.length() - k);
    CompositionWitness cw;
    cw.overlap_word = x * b;
    cw.overlap_length = k;
    cw.result = sandwich(Word{}, f, z) * lg - sandwich(x, g, Word{}) * lf;
    out.push_back(std::move(cw));
  }
  return out;
}

std::vector<CompositionWitness> compositions(const RewriteSystem& system, std::size_t i,
                                             std::size_t j) {
  auto out = compositions(system.relation(i), system.relation(j), system.order(), i == j);
  for (auto& cw : out) {
    cw.left = i;
    cw.right = j;
  }
  return out;
}

ConditionReport is_closed_under_compositions(const RewriteSystem& system) {
  ConditionReport report;
  report.condition = "groebner";
  const std::size_t n = system.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !system.leading_word(j).contains(system.leading_word(i))) continue;
      Witness w;
      w.kind = "leading-word-inclusion";
      w.relations = {i, j};
      w.words = {system.leading_word(i), system.leading_word(j)};
      w.note = "leading word of relation " + std::to_string(i) +
               " is a subword of the leading word of relation " + std::to_string(j);
      add_witness(report, std::move(w));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& cw : compositions(system, i, j)) {
        auto cert = reduce(cw.result, system);
        if (cert.normal_form.is_zero()) continue;
        Witness w;
        w.kind = "composition";
        w.relations = {i, j};
        w.words = {cw.overlap_word};
        w.polynomial = cert.normal_form;
        w.trace = std::move(cert.steps);
        w.note = "composition does not reduce to zero";
        add_witness(report, std::move(w));
      }
  report.parameters["relations"] = std::to_string(n);
  return report;
}

RewriteSystem certify_closed(const RewriteSystem& system) {
  if (!is_closed_under_compositions(system).holds())
    throw std::invalid_argument("relation set is not closed under compositions");
  return system.with_status(CompletionStatus::closed);
}

ConditionReport is_reduced(const RewriteSystem& system) {
  ConditionReport report;
  report.condition = "reduced";
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Word& lead = system.leading_word(i);
    for (const auto& [w, c] : system.relation(i).terms()) {
      if (w == lead) continue;
      auto occ = find_forbidden_subword(w, system);
      if (!occ) continue;
      Witness wit;
      wit.kind = "reducible-term";
      wit.relations = {i, occ->relation};
      wit.words = {w};
      wit.note = "non-leading word contains a leading word";
      add_witness(report, std::move(wit));
    }
  }
  return report;
}

RewriteSystem inter_reduce(const RewriteSystem& system) {
  std::vector<Polynomial> rels = system.relations();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(rels.size() - 1);
      for (std::size_t j = 0; j < rels.size(); ++j)
        if (j != i) others.push_back(rels[j]);
      Polynomial nf = normal_form(rels[i], RewriteSystem(system.alphabet(), std::move(others)));
      if (nf.is_zero()) {
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      Polynomial m = nf.monic(system.order());
      if (!(m == rels[i])) {
        rels[i] = std::move(m);
        changed = true;
      }
    }
  }
  auto status = system.status() == CompletionStatus::closed ? CompletionStatus::closed
                                                            : CompletionStatus::raw;
  return RewriteSystem(system.alphabet(), std::move(rels), status);
}

// --- completion -----------------------------------------------------------

namespace {

class Completer {
public:
  Completer(const RewriteSystem& input, std::size_t max_degree)
      : alphabet_(input.alphabet()), max_degree_(max_degree) {
    trace_.originals = input.relations();
    for (std::size_t i = 0; i < input.size(); ++i) {
      Derivation d;
      d.input = i;
      working_.push_back(add(input.relation(i), std::move(d)));
    }
  }

  bool round() {
    ++trace_.rounds;
    inter_reduce_pool();
    last_discarded_ = 0;

    std::vector<std::pair<Polynomial, Derivation>> candidates;
    const auto snapshot = working_;
    const RewriteSystem sys = system_of(snapshot);
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = 0; j < snapshot.size(); ++j)
        for (auto& cw : compositions(sys, i, j)) {
          Derivation d;
          const Word x = cw.overlap_word.prefix(cw.overlap_word.length() -
                                                sys.leading_word(j).length());
          const Word z = cw.overlap_word.suffix(cw.overlap_word.length() -
                                                sys.leading_word(i).length());
          d.terms.push_back({Scalar(1), Word{}, snapshot[i], z});
          d.terms.push_back({Scalar(-1), x, snapshot[j], Word{}});
          candidates.emplace_back(std::move(cw.result), std::move(d));
        }

    bool added = false;
    for (auto& [poly, deriv] : candidates) {
      auto [nf, nd] = reduce_in_pool(poly, std::move(deriv), working_);
      if (nf.is_zero()) continue;
      if (nf.degree() > max_degree_) {
        ++last_discarded_;
        continue;
      }
      working_.push_back(add(std::move(nf), std::move(nd)));
      added = true;
    }
    trace_.discarded += last_discarded_;
    return added;
  }

  CompletionResult finish(CompletionStatus status) {
    inter_reduce_pool();
    std::sort(working_.begin(), working_.end(), [&](std::size_t a, std::size_t b) {
      return deglex_compare(trace_.pool[a].leading_word(alphabet_.order()),
                            trace_.pool[b].leading_word(alphabet_.order()),
                            alphabet_.order()) < 0;
    });
    trace_.final_ids = working_;
    RewriteSystem sys = system_of(working_).with_status(status);
    return CompletionResult{std::move(sys), std::move(trace_)};
  }

  std::size_t last_discarded() const { return last_discarded_; }

private:
  std::size_t add(Polynomial p, Derivation d) {
    trace_.pool.push_back(std::move(p));
    trace_.derivations.push_back(std::move(d));
    return trace_.pool.size() - 1;
  }

  RewriteSystem system_of(const std::vector<std::size_t>& ids) const {
    std::vector<Polynomial> rels;
    rels.reserve(ids.size());
    for (auto id : ids) rels.push_back(trace_.pool[id]);
    return RewriteSystem(alphabet_, std::move(rels));
  }

  /// Normal form of `p` modulo pool[ids], made monic, with its derivation.
  std::pair<Polynomial, Derivation> reduce_in_pool(const Polynomial& p, Derivation d,
                                                   const std::vector<std::size_t>& ids) {
    auto cert = reduce(p, system_of(ids));
    if (cert.normal_form.is_zero()) return {Polynomial{}, Derivation{}};
    for (auto& step : cert.steps)
      d.terms.push_back({-step.coefficient, step.left, ids[step.relation], step.right});
    Scalar inv = cert.normal_form.leading_coefficient(alphabet_.order()).inverse();
    for (auto& t : d.terms) t.coefficient *= inv;
    return {cert.normal_form * inv, std::move(d)};
  }

  void inter_reduce_pool() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < working_.size(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < working_.size(); ++j)
          if (j != i) others.push_back(working_[j]);
        const std::size_t id = working_[i];
        Derivation d;
        d.terms.push_back({Scalar(1), Word{}, id, Word{}});
        auto [nf, nd] = reduce_in_pool(trace_.pool[id], std::move(d), others);
        if (nf.is_zero()) {
          working_.erase(working_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (nf == trace_.pool[id]) continue;
        working_[i] = add(std::move(nf), std::move(nd));
        changed = true;
      }
    }
  }

  Alphabet alphabet_;
  std::size_t max_degree_;
  CompletionTrace trace_;
  std::vector<std::size_t> working_;
  std::size_t last_discarded_ = 0;
};

} // namespace

bool CompletionTrace::verify_derivations() const {
  if (pool.size() != derivations.size()) return false;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const auto& d = derivations[k];
    if (d.input) {
      if (*d.input >= originals.size() || !(pool[k] == originals[*d.input])) return false;
      continue;
    }
    Polynomial sum;
    for (const auto& t : d.terms) {
      if (t.source >= k) return false;
      sum += sandwich(t.left, pool[t.source], t.right) * t.coefficient;
    }
    if (!(sum == pool[k])) return false;
  }
  return true;
}

CompletionResult complete_traced(const RewriteSystem& system, std::size_t max_degree,
                                 std::size_t max_iterations) {
  Completer completer(system, max_degree);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    if (completer.round()) continue;
    auto status = completer.last_discarded() == 0 ? CompletionStatus::closed
                                                  : CompletionStatus::cap_reached;
    return completer.finish(status);
  }
  return completer.finish(CompletionStatus::cap_reached);
}

RewriteSystem complete(const RewriteSystem& system, std::size_t max_degree,
                       std::size_t max_iterations) {
  return complete_traced(system, max_degree, max_iterations).system;
}

bool IdealEquality::holds() const {
  if (!derivations_verified) return false;
  return std::all_of(originals_reduce_to_zero.begin(), originals_reduce_to_zero.end(),
                     [](const RewriteCertificate& c) { return c.normal_form.is_zero(); });
}

IdealEquality certify_same_ideal(const CompletionResult& completion) {
  IdealEquality eq;
  for (const auto& r : completion.trace.originals)
    eq.originals_reduce_to_zero.push_back(reduce(r, completion.system));
  eq.derivations_verified = completion.trace.verify_derivations();
  return eq;
}

std::vector<Word> enumerate_basis_words(const RewriteSystem& system, std::size_t max_length) {
  if (!system.unit_relations().empty()) return {};
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  const auto symbols = system.alphabet().symbols();
  const DeglexLess less{&system.order()};
  for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (auto s : symbols) {
        Word c = w * Word{s};
        // The prefix already avoids every leading word; only suffixes can match.
        bool ok = std::none_of(system.leading_words().begin(), system.leading_words().end(),
                               [&](const Word& lead) { return c.ends_with(lead); });
        if (ok) next.push_back(std::move(c));
      }
    std::sort(next.begin(), next.end(), less);
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

RewriteSystem with_involution_closure(const RewriteSystem& system) {
  std::vector<Polynomial> rels = system.relations();
  for (const auto& r : system.relations()) {
    Polynomial s = r.star().monic(system.order());
    if (std::find(rels.begin(), rels.end(), s) == rels.end()) rels.push_back(std::move(s));
  }
  return RewriteSystem(system.alphabet(), std::move(rels));
}

} // namespace starrep
