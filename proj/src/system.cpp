#include "starrep/condition.hpp"
#include "starrep/system.hpp"

namespace starrep {

std::string_view to_string(CompletionStatus status) {
  switch (status) {
  case CompletionStatus::raw: return "raw";
  case CompletionStatus::closed: return "closed";
  case CompletionStatus::cap_reached: return "cap_reached";
  }
  return "raw";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::holds: return "holds";
  case Verdict::fails: return "fails";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Polynomial> relations,
                             CompletionStatus status)
    : alphabet_(std::move(alphabet)), status_(status) {
  by_first_.resize(2 * alphabet_.size());
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    Polynomial m = r.monic(order());
    const std::size_t index = relations_.size();
    const Word& lead = m.leading_word(order());
    if (lead.empty()) units_.push_back(index);
    else by_first_.at(lead.front().code()).push_back(index);
    leads_.push_back(lead);
    tails_.push_back(m.tail(order()));
    relations_.push_back(std::move(m));
  }
}

RewriteSystem RewriteSystem::with_status(CompletionStatus status) const {
  RewriteSystem out = *this;
  out.status_ = status;
  return out;
}

Polynomial RewriteCertificate::expansion(const RewriteSystem& system) const {
  Polynomial out;
  for (const auto& step : steps)
    out += sandwich(step.left, system.relation(step.relation), step.right) * step.coefficient;
  return out;
}

bool RewriteCertificate::verify(const RewriteSystem& system) const {
  for (const auto& step : steps)
    if (step.relation >= system.size()) return false;
  return input - normal_form == expansion(system);
}

} // namespace starrep
