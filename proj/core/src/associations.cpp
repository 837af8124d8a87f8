#include "rulekit/associations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rulekit/error.hpp"

namespace rulekit {

bool QualityTable::has(std::string_view name) const {
    return std::any_of(columns_.begin(), columns_.end(),
                       [&](const auto& c) { return c.first == name; });
}

const std::vector<double>& QualityTable::column(std::string_view name) const {
    for (const auto& c : columns_)
        if (c.first == name) return c.second;
    throw Error("quality column '" + std::string(name) + "' does not exist");
}

std::vector<std::string> QualityTable::names() const {
    std::vector<std::string> out;
    for (const auto& c : columns_) out.push_back(c.first);
    return out;
}

void QualityTable::set(std::string name, std::vector<double> values) {
    if (values.size() != n_rows_)
        throw Error("quality column '" + name + "' has " + std::to_string(values.size()) +
                    " values for " + std::to_string(n_rows_) + " rows");
    for (auto& c : columns_)
        if (c.first == name) {
            c.second = std::move(values);
            return;
        }
    columns_.emplace_back(std::move(name), std::move(values));
}

QualityTable QualityTable::select(std::span<const std::size_t> indices) const {
    QualityTable out(indices.size());
    for (const auto& [name, values] : columns_) {
        std::vector<double> v;
        v.reserve(indices.size());
        for (auto i : indices) v.push_back(values.at(i));
        out.columns_.emplace_back(name, std::move(v));
    }
    return out;
}

QualityTable QualityTable::combine(std::span<const QualityTable> parts) {
    QualityTable out;
    if (parts.empty()) return out;
    for (const auto& p : parts) {
        if (p.names() != parts.front().names())
            throw Error("cannot combine associations with different quality columns");
        out.n_rows_ += p.n_rows_;
    }
    for (std::size_t c = 0; c < parts.front().columns_.size(); ++c) {
        std::vector<double> v;
        for (const auto& p : parts)
            v.insert(v.end(), p.columns_[c].second.begin(), p.columns_[c].second.end());
        out.columns_.emplace_back(parts.front().columns_[c].first, std::move(v));
    }
    return out;
}

void merge_quality(QualityTable& into, const QualityTable& columns) {
    if (columns.n_cols() == 0) return;
    if (columns.n_rows() != into.n_rows())
        throw Error("quality columns have " + std::to_string(columns.n_rows()) + " rows, expected " +
                    std::to_string(into.n_rows()));
    for (const auto& [name, values] : columns.columns()) into.set(name, values);
}

Itemsets::Itemsets(ItemMatrix items, QualityTable quality)
    : items_(std::move(items)), quality_(std::move(quality)) {
    if (quality_.n_cols() == 0 && quality_.n_rows() == 0) quality_ = QualityTable(items_.n_rows());
    if (quality_.n_rows() != items_.n_rows())
        throw Error("quality table has " + std::to_string(quality_.n_rows()) + " rows for " +
                    std::to_string(items_.n_rows()) + " itemsets");
}

Itemsets Itemsets::select(std::span<const std::size_t> indices) const {
    return Itemsets(items_.select(indices), quality_.select(indices));
}

Itemsets Itemsets::unique_rows() const { return select(items_.first_occurrences()); }

Itemsets Itemsets::combine(std::span<const Itemsets> parts) {
    std::vector<ItemMatrix> m;
    std::vector<QualityTable> q;
    for (const auto& p : parts) {
        m.push_back(p.items_);
        q.push_back(p.quality_);
    }
    return Itemsets(ItemMatrix::combine(m), QualityTable::combine(q));
}

Itemsets Itemsets::with_quality(QualityTable q) const { return Itemsets(items_, std::move(q)); }

Rules::Rules(ItemMatrix lhs, ItemMatrix rhs) : Rules(lhs, rhs, QualityTable(lhs.n_rows())) {}

Rules::Rules(ItemMatrix lhs, ItemMatrix rhs, QualityTable quality)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), quality_(std::move(quality)) {
    if (!same_universe(lhs_.item_info_ptr(), rhs_.item_info_ptr()))
        throw Error("rule LHS and RHS use different item universes");
    if (lhs_.n_rows() != rhs_.n_rows())
        throw Error("rule LHS has " + std::to_string(lhs_.n_rows()) + " rows but RHS has " +
                    std::to_string(rhs_.n_rows()));
    if (quality_.n_cols() == 0 && quality_.n_rows() == 0) quality_ = QualityTable(lhs_.n_rows());
    if (quality_.n_rows() != lhs_.n_rows())
        throw Error("quality table has " + std::to_string(quality_.n_rows()) + " rows for " +
                    std::to_string(lhs_.n_rows()) + " rules");
    for (std::size_t i = 0; i < lhs_.n_rows(); ++i) {
        if (rhs_.row_size(i) == 0) throw Error("rule " + std::to_string(i) + " has an empty RHS");
        auto l = lhs_.row(i);
        auto r = rhs_.row(i);
        std::vector<ItemId> common;
        std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
        if (!common.empty())
            throw Error("rule " + std::to_string(i) + " has item '" + item_info().label(common[0]) +
                        "' on both sides");
    }
}

std::vector<ItemId> Rules::items(std::size_t i) const {
    std::vector<ItemId> out;
    auto l = lhs_.row(i);
    auto r = rhs_.row(i);
    std::merge(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
    return out;
}

ItemMatrix Rules::items() const {
    std::vector<std::vector<ItemId>> rows;
    rows.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) rows.push_back(items(i));
    return ItemMatrix(rows, item_info_ptr());
}

Rules Rules::select(std::span<const std::size_t> indices) const {
    return Rules(lhs_.select(indices), rhs_.select(indices), quality_.select(indices));
}

Rules Rules::unique_rows() const {
    using Key = std::pair<std::vector<ItemId>, std::vector<ItemId>>;
    std::map<Key, std::size_t> seen;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size(); ++i) {
        auto l = lhs_.row(i);
        auto r = rhs_.row(i);
        Key k{{l.begin(), l.end()}, {r.begin(), r.end()}};
        if (seen.emplace(std::move(k), i).second) keep.push_back(i);
    }
    return select(keep);
}

Rules Rules::combine(std::span<const Rules> parts) {
    std::vector<ItemMatrix> l, r;
    std::vector<QualityTable> q;
    for (const auto& p : parts) {
        l.push_back(p.lhs_);
        r.push_back(p.rhs_);
        q.push_back(p.quality_);
    }
    return Rules(ItemMatrix::combine(l), ItemMatrix::combine(r), QualityTable::combine(q));
}

Rules Rules::with_quality(QualityTable q) const { return Rules(lhs_, rhs_, std::move(q)); }

std::vector<std::size_t> sort_order(const QualityTable& q, std::string_view column, bool descending) {
    const auto& v = q.column(column);
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        double x = v[a], y = v[b];
        if (std::isnan(x) || std::isnan(y)) return !std::isnan(x) && std::isnan(y);
        return descending ? x > y : x < y;
    });
    return order;
}

std::vector<std::string> labels(const Itemsets& s) { return labels(s.items()); }

std::vector<std::string> labels(const Rules& r) {
    std::vector<std::string> out;
    out.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out.push_back(itemset_label(r.lhs().row(i), r.item_info()) + " => " +
                      itemset_label(r.rhs().row(i), r.item_info()));
    return out;
}

}  // namespace rulekit
