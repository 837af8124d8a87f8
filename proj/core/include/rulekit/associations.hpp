#ifndef RULEKIT_ASSOCIATIONS_HPP
#define RULEKIT_ASSOCIATIONS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rulekit/item_matrix.hpp"

namespace rulekit {

// Named numeric columns of equal length, in insertion order.
class QualityTable {
  public:
    QualityTable() = default;
    explicit QualityTable(std::size_t n_rows) : n_rows_(n_rows) {}

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return columns_.size(); }
    bool has(std::string_view name) const;
    const std::vector<double>& column(std::string_view name) const;
    std::vector<std::string> names() const;
    const std::vector<std::pair<std::string, std::vector<double>>>& columns() const { return columns_; }

    // Replaces an existing column of the same name in place, otherwise appends.
    void set(std::string name, std::vector<double> values);

    QualityTable select(std::span<const std::size_t> indices) const;
    static QualityTable combine(std::span<const QualityTable> parts);

    friend bool operator==(const QualityTable&, const QualityTable&) = default;

  private:
    std::size_t n_rows_ = 0;
    std::vector<std::pair<std::string, std::vector<double>>> columns_;
};

class Itemsets {
  public:
    Itemsets() = default;
    Itemsets(ItemMatrix items, QualityTable quality);

    const ItemMatrix& items() const { return items_; }
    const QualityTable& quality() const { return quality_; }
    const ItemInfo& item_info() const { return items_.item_info(); }
    const ItemInfoPtr& item_info_ptr() const { return items_.item_info_ptr(); }
    std::size_t size() const { return items_.n_rows(); }

    Itemsets select(std::span<const std::size_t> indices) const;
    Itemsets unique_rows() const;
    static Itemsets combine(std::span<const Itemsets> parts);
    Itemsets with_quality(QualityTable q) const;

    friend bool operator==(const Itemsets&, const Itemsets&) = default;

  private:
    ItemMatrix items_;
    QualityTable quality_;
};

/// Association rules LHS => RHS over one item universe. Per row, LHS and
/// RHS are disjoint and RHS is non-empty.
class Rules {
  public:
    Rules() = default;
    Rules(ItemMatrix lhs, ItemMatrix rhs, QualityTable quality);
    Rules(ItemMatrix lhs, ItemMatrix rhs);

    const ItemMatrix& lhs() const { return lhs_; }
    const ItemMatrix& rhs() const { return rhs_; }
    const QualityTable& quality() const { return quality_; }
    const ItemInfo& item_info() const { return lhs_.item_info(); }
    const ItemInfoPtr& item_info_ptr() const { return lhs_.item_info_ptr(); }
    std::size_t size() const { return lhs_.n_rows(); }

    // LHS union RHS of rule i, sorted.
    std::vector<ItemId> items(std::size_t i) const;
    // All rule unions as one item matrix.
    ItemMatrix items() const;

    Rules select(std::span<const std::size_t> indices) const;
    Rules unique_rows() const;
    static Rules combine(std::span<const Rules> parts);
    Rules with_quality(QualityTable q) const;

    friend bool operator==(const Rules&, const Rules&) = default;

  private:
    ItemMatrix lhs_;
    ItemMatrix rhs_;
    QualityTable quality_;
};

// Stable sort on a quality column; NaN sorts last in either direction.
std::vector<std::size_t> sort_order(const QualityTable& q, std::string_view column, bool descending);

template <class Assoc>
Assoc sort_by(const Assoc& a, std::string_view column, bool descending = true) {
    return a.select(sort_order(a.quality(), column, descending));
}

// Row labels: "{a,b}" for itemsets, "{a} => {b}" for rules.
std::vector<std::string> labels(const Itemsets& s);
std::vector<std::string> labels(const Rules& r);

void merge_quality(QualityTable& into, const QualityTable& columns);

// Extends or overwrites quality columns.
template <class Assoc>
Assoc add_quality(const Assoc& a, const QualityTable& columns) {
    QualityTable q = a.quality();
    merge_quality(q, columns);
    return a.with_quality(std::move(q));
}

}  // namespace rulekit

#endif  // RULEKIT_ASSOCIATIONS_HPP
