#ifndef RULEKIT_MEASURES_HPP
#define RULEKIT_MEASURES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/associations.hpp"
#include "rulekit/transactions.hpp"

namespace rulekit {

// Counts behind every rule measure. An empty LHS is contained in every
// transaction, so n_x == m.
struct ContingencyCounts {
    std::size_t m = 0;     // transactions
    std::size_t n_x = 0;   // containing LHS
    std::size_t n_y = 0;   // containing RHS
    std::size_t n_xy = 0;  // containing LHS and RHS

    void validate() const;
};

enum class Measure {
    support,
    confidence,
    coverage,
    lift,
    count,
    leverage,
    conviction,
    improvement,
    odds_ratio,
    fishers_exact_test,
};

// "support", "confidence", ..., "oddsRatio", "fishersExactTest".
std::optional<Measure> measure_from_name(std::string_view name);
std::string measure_name(Measure m);
const std::vector<std::string>& measure_names();

// Value of a measure computed from counts alone. `improvement` needs the
// surrounding rule set and is rejected here.
double measure_value(Measure m, const ContingencyCounts& c);

// P(N >= n_xy) for N hypergeometric with population m, n_y successes and
// n_x draws: the one-sided Fisher exact test for positive association.
double fisher_exact_greater(const ContingencyCounts& c);

// Counts for every rule against t.
std::vector<ContingencyCounts> contingency_counts(const Rules& r, const Transactions& t);

// Confidence minus the best confidence of any strictly more general rule
// (same RHS, LHS a strict subset) in the set. Rules without such a rule,
// including empty-LHS rules, get their own confidence.
std::vector<double> improvement(const Rules& r, const std::vector<double>& confidence);

// Requested measures as quality columns, in request order.
QualityTable interest_measure(const Rules& r, const std::vector<std::string>& names,
                              const Transactions& t);
// Itemsets support "support" and "count" only.
QualityTable interest_measure(const Itemsets& s, const std::vector<std::string>& names,
                              const Transactions& t);

}  // namespace rulekit

#endif  // RULEKIT_MEASURES_HPP
