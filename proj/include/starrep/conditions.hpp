#pragma once

#include "starrep/condition.hpp"
#include "starrep/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starrep {

/// A check was handed a relation set that is not closed under compositions.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Returns the system with status closed, verifying closure if the status is
/// raw. Throws PreconditionError when it is not closed.
RewriteSystem require_closed(const RewriteSystem& system);

/// S* = S as sets of monic relations.
bool is_literally_star_closed(const RewriteSystem& system);

/// The ideal is *-invariant: R_S(s*) = 0 for every relation.
ConditionReport is_symmetric(const RewriteSystem& system);

/// No factorization d* d u or u d* d with d nonempty.
bool is_unshrinkable(const Word& w);

/// Every top word (length == degree) of every relation is unshrinkable.
ConditionReport check_unshrinkable_tops(const RewriteSystem& system);

/// Closed, reduced, symmetric, every top word unshrinkable, and no top word
/// sharing a first letter with its head sits inside, or overlaps the tail of,
/// the head of a relation that has its own non-leading top word.
ConditionReport check_strictly_appropriate(const RewriteSystem& system);

/// Symmetric, top words unshrinkable, and every non-leading top word starts
/// with a different symbol than the head.
ConditionReport check_distinct_head(const RewriteSystem& system);

/// Reduced, symmetric, top words unshrinkable, and no non-leading top word u
/// has a nonempty suffix that is a prefix of any head.
ConditionReport check_overlap_free_tops(const RewriteSystem& system);

/// S* = S; the heads are closed under the involution; every head lies wholly
/// in G or wholly in G*, and every top word lies in the same semigroup as its
/// head. `unstarred` defaults to the plain generators.
ConditionReport check_star_double(const RewriteSystem& system,
                                  std::optional<std::vector<Symbol>> unstarred = std::nullopt);

/// d d* is a basis word for every basis word d with |d| <= max_length.
ConditionReport check_strictness(const RewriteSystem& system, std::size_t max_length);

/// For all basis words u > v with |u| = |v| <= max_length, u u* does not
/// occur in R_S(u v*). The verdict covers only the bound.
ConditionReport check_non_expanding_bounded(const RewriteSystem& system, std::size_t max_length);

/// Non-expanding for all lengths: holds when one of the sufficient conditions
/// (distinct-head, strictly-appropriate, overlap-free-tops, star-double)
/// holds; otherwise fails if the bounded scan finds a witness, else
/// inconclusive.
ConditionReport check_non_expanding(const RewriteSystem& system, std::size_t scan_length);

/// Names accepted by check_condition, in documentation order.
const std::vector<std::string>& condition_names();

/// Dispatches on a condition name. `max_length` bounds the strict and
/// non-expanding scans; for non-expanding, leaving it unset asks for the
/// unbounded verdict (scanning to kDefaultScanLength). Throws
/// std::invalid_argument for an unknown name.
inline constexpr std::size_t kDefaultScanLength = 4;
ConditionReport check_condition(const RewriteSystem& system, const std::string& name,
                                std::optional<std::size_t> max_length = std::nullopt);

/// Finds an order on the starred letters (the unstarred part and the block
/// placement are kept) under which S ∪ S* is closed. Returns the closed
/// double, or nullopt if no permutation works. Requires `system` closed and
/// free of starred letters.
std::optional<RewriteSystem> find_star_double(const RewriteSystem& system);

} // namespace starrep
