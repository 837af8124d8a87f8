#include "rulekit/transactions.hpp"

#include <unordered_set>

#include "rulekit/error.hpp"

namespace rulekit {

namespace {

std::vector<std::string> ordinal_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    return ids;
}

void check_ids(const std::vector<std::string>& ids, std::size_t n_rows) {
    if (ids.size() != n_rows)
        throw Error("got " + std::to_string(ids.size()) + " transaction ids for " +
                    std::to_string(n_rows) + " transactions");
    std::unordered_set<std::string_view> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw Error("duplicate transaction id '" + id + "'");
}

// Repeated ids get ".1", ".2", ... suffixes.
void make_ids_unique(std::vector<std::string>& ids) {
    std::unordered_set<std::string> seen;
    for (auto& id : ids) {
        if (seen.insert(id).second) continue;
        std::string base = id;
        for (std::size_t k = 1;; ++k) {
            id = base + "." + std::to_string(k);
            if (seen.insert(id).second) break;
        }
    }
}

}  // namespace

Transactions::Transactions(ItemMatrix matrix)
    : matrix_(std::move(matrix)), ids_(ordinal_ids(matrix_.n_rows())) {}

Transactions::Transactions(ItemMatrix matrix, std::vector<std::string> ids)
    : matrix_(std::move(matrix)), ids_(std::move(ids)) {
    check_ids(ids_, matrix_.n_rows());
}

Transactions Transactions::from_label_sets(const std::vector<std::vector<std::string>>& sets,
                                           ItemInfoPtr info) {
    return Transactions(ItemMatrix::from_label_sets(sets, std::move(info)));
}

Transactions Transactions::select(std::span<const std::size_t> indices) const {
    auto m = matrix_.select(indices);
    std::vector<std::string> ids;
    ids.reserve(indices.size());
    for (auto i : indices) ids.push_back(ids_[i]);
    make_ids_unique(ids);
    return Transactions(std::move(m), std::move(ids));
}

Transactions Transactions::unique_rows() const { return select(matrix_.first_occurrences()); }

Transactions Transactions::combine(std::span<const Transactions> parts) {
    std::vector<ItemMatrix> mats;
    std::vector<std::string> ids;
    for (const auto& p : parts) {
        mats.push_back(p.matrix_);
        ids.insert(ids.end(), p.ids_.begin(), p.ids_.end());
    }
    auto m = ItemMatrix::combine(mats);
    make_ids_unique(ids);
    return Transactions(std::move(m), std::move(ids));
}

}  // namespace rulekit
