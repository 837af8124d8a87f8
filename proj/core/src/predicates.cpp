#include "rulekit/predicates.hpp"

#include <algorithm>

#include "rule_index.hpp"
#include "rulekit/error.hpp"
#include "rulekit/measures.hpp"

namespace rulekit {

namespace {

void require_universe(const ItemInfoPtr& a, const Transactions& t) {
    if (!same_universe(a, t.item_info_ptr()))
        throw Error("associations and transactions use different item universes");
}

std::vector<bool> maximal_rows(const ItemMatrix& sets) {
    std::vector<bool> out(sets.n_rows(), true);
    for (std::size_t i = 0; i < sets.n_rows(); ++i) {
        auto items = sets.row(i);
        // Rows containing every item of row i, found through the column index.
        for (auto j : rows_containing(items, sets))
            if (sets.row_size(j) > items.size()) {
                out[i] = false;
                break;
            }
    }
    return out;
}

std::vector<bool> closed_rows(const ItemMatrix& sets, const Transactions& t) {
    std::vector<bool> out(sets.n_rows());
    for (std::size_t i = 0; i < sets.n_rows(); ++i)
        out[i] = closure(sets.row(i), t).size() == sets.row_size(i);
    return out;
}

std::vector<bool> generator_rows(const ItemMatrix& sets, const Transactions& t) {
    const auto& m = t.matrix();
    std::vector<bool> out(sets.n_rows(), true);
    std::vector<ItemId> sub;
    for (std::size_t i = 0; i < sets.n_rows(); ++i) {
        auto items = sets.row(i);
        const auto c = count_containing(items, m);
        // Support is anti-monotone, so checking the immediate subsets suffices.
        for (std::size_t skip = 0; skip < items.size(); ++skip) {
            sub.assign(items.begin(), items.end());
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
            if (count_containing(sub, m) == c) {
                out[i] = false;
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::vector<ItemId> closure(std::span<const ItemId> items, const Transactions& t) {
    const auto& m = t.matrix();
    auto rows = rows_containing(items, m);
    std::vector<ItemId> acc;
    if (rows.empty()) {
        acc.resize(m.n_cols());
        for (ItemId c = 0; c < acc.size(); ++c) acc[c] = c;
        return acc;
    }
    auto first = m.row(rows.front());
    acc.assign(first.begin(), first.end());
    std::vector<ItemId> next;
    for (std::size_t k = 1; k < rows.size() && acc.size() > items.size(); ++k) {
        auto r = m.row(rows[k]);
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), r.begin(), r.end(), std::back_inserter(next));
        acc.swap(next);
    }
    return acc;
}

std::vector<bool> is_redundant(const Rules& r) {
    if (!r.quality().has("confidence"))
        throw Error("is_redundant needs a 'confidence' quality column");
    const auto& conf = r.quality().column("confidence");
    auto best = internal::best_general_confidence(r, conf);
    std::vector<bool> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = best[i].has_value() && *best[i] >= conf[i];
    return out;
}

std::vector<bool> is_maximal(const Itemsets& s) { return maximal_rows(s.items()); }
std::vector<bool> is_maximal(const Rules& r) { return maximal_rows(r.items()); }

std::vector<bool> is_closed(const Itemsets& s, const Transactions& t) {
    require_universe(s.item_info_ptr(), t);
    return closed_rows(s.items(), t);
}

std::vector<bool> is_closed(const Rules& r, const Transactions& t) {
    require_universe(r.item_info_ptr(), t);
    return closed_rows(r.items(), t);
}

std::vector<bool> is_generator(const Itemsets& s, const Transactions& t) {
    require_universe(s.item_info_ptr(), t);
    return generator_rows(s.items(), t);
}

std::vector<bool> is_generator(const Rules& r, const Transactions& t) {
    require_universe(r.item_info_ptr(), t);
    return generator_rows(r.items(), t);
}

std::vector<bool> is_significant(const Rules& r, const Transactions& t, double alpha,
                                 PValueAdjustment adjustment) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
    auto counts = contingency_counts(r, t);
    const double threshold =
        adjustment == PValueAdjustment::bonferroni && r.size() > 0 ? alpha / static_cast<double>(r.size())
                                                                   : alpha;
    std::vector<bool> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = fisher_exact_greater(counts[i]) < threshold;
    return out;
}

}  // namespace rulekit
