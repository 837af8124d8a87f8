#ifndef RULEKIT_PREDICATES_HPP
#define RULEKIT_PREDICATES_HPP

#include <vector>

#include "rulekit/associations.hpp"
#include "rulekit/transactions.hpp"

namespace rulekit {

// Rule i is redundant iff another rule in the set has the same RHS, a
// strictly smaller LHS and a confidence at least as high. Requires a
// "confidence" quality column.
std::vector<bool> is_redundant(const Rules& r);

// No other element's itemset (LHS ∪ RHS for rules) is a strict superset.
std::vector<bool> is_maximal(const Itemsets& s);
std::vector<bool> is_maximal(const Rules& r);

// No strict superset over the whole universe has the same support in t.
std::vector<bool> is_closed(const Itemsets& s, const Transactions& t);
std::vector<bool> is_closed(const Rules& r, const Transactions& t);

// No strict subset has the same support in t.
std::vector<bool> is_generator(const Itemsets& s, const Transactions& t);
std::vector<bool> is_generator(const Rules& r, const Transactions& t);

enum class PValueAdjustment { none, bonferroni };

// One-sided Fisher exact test of positive association between LHS and RHS;
// significant iff the p-value is below alpha, or below alpha / |r| with
// Bonferroni adjustment.
std::vector<bool> is_significant(const Rules& r, const Transactions& t, double alpha = 0.01,
                                 PValueAdjustment adjustment = PValueAdjustment::none);

// Intersection of all transactions containing `items`; the full universe
// when no transaction does.
std::vector<ItemId> closure(std::span<const ItemId> items, const Transactions& t);

}  // namespace rulekit

#endif  // RULEKIT_PREDICATES_HPP
