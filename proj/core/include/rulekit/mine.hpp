#ifndef RULEKIT_MINE_HPP
#define RULEKIT_MINE_HPP

#include <cstddef>
#include <variant>

#include "rulekit/associations.hpp"
#include "rulekit/transactions.hpp"

namespace rulekit {

enum class MiningTarget { frequent_itemsets, rules };

/// Thresholds for mining. Lengths count items; for rules they bound
/// |LHS ∪ RHS|, so minlen = 1 admits rules with an empty LHS.
///
/// Defaults: support 0.1, confidence 0.8, minlen 1, maxlen 10, target rules.
struct MiningParams {
    double support = 0.1;
    double confidence = 0.8;
    std::size_t minlen = 1;
    std::size_t maxlen = 10;
    MiningTarget target = MiningTarget::rules;

    void validate() const;
};

// Smallest transaction count c with c / m >= support, at least 1.
std::size_t min_count(double support, std::size_t m);

// Frequent itemsets ordered by (length, item ids), with quality columns
// support and count.
Itemsets apriori_itemsets(const Transactions& t, const MiningParams& p);
Itemsets eclat(const Transactions& t, const MiningParams& p);

// Rules with a single-item RHS, ordered by (LHS, RHS); quality columns
// support, confidence, coverage, lift, count.
Rules apriori_rules(const Transactions& t, const MiningParams& p);

// Dispatches on p.target.
std::variant<Itemsets, Rules> apriori(const Transactions& t, const MiningParams& p);

// All single-RHS rules X\{y} => {y} from the given itemsets whose
// confidence reaches min_confidence; counts are taken from t.
Rules induce_rules(const Itemsets& itemsets, const Transactions& t, double min_confidence);

}  // namespace rulekit

#endif  // RULEKIT_MINE_HPP
