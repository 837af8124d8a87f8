#ifndef RULEKIT_ITEM_MATRIX_HPP
#define RULEKIT_ITEM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rulekit/item_info.hpp"

namespace rulekit {

using RowIndex = std::uint32_t;

// Dense row-major 0/1 matrix, used for containment results and exports.
struct BoolMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::uint8_t> cells;

    bool operator()(std::size_t r, std::size_t c) const { return cells[r * n_cols + c] != 0; }
    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
};

struct Triplet {
    std::size_t row;
    std::size_t col;
    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Sparse binary matrix. Rows are transactions or itemsets, columns are
/// items of a shared universe.
///
/// Storage is compressed sparse column (column pointers plus sorted row
/// indices). A row-major copy is materialized at construction so that row
/// access is also O(row length). Instances are immutable.
class ItemMatrix {
  public:
    ItemMatrix();

    // Rows given as item ids; ids within a row are sorted and deduplicated.
    ItemMatrix(const std::vector<std::vector<ItemId>>& rows, ItemInfoPtr info);

    static ItemMatrix from_label_sets(const std::vector<std::vector<std::string>>& sets,
                                      ItemInfoPtr info);

    std::size_t n_rows() const { return row_ptr_.size() - 1; }
    std::size_t n_cols() const { return info_ ? info_->size() : 0; }
    std::size_t size() const { return n_rows(); }
    std::size_t nnz() const { return row_idx_.size(); }

    std::span<const ItemId> row(std::size_t r) const {
        return {col_idx_.data() + row_ptr_[r], col_idx_.data() + row_ptr_[r + 1]};
    }
    std::span<const RowIndex> column(std::size_t c) const {
        return {row_idx_.data() + col_ptr_[c], row_idx_.data() + col_ptr_[c + 1]};
    }
    std::size_t row_size(std::size_t r) const { return row_ptr_[r + 1] - row_ptr_[r]; }
    bool contains(std::size_t r, ItemId c) const;

    const ItemInfo& item_info() const { return *info_; }
    const ItemInfoPtr& item_info_ptr() const { return info_; }

    // CSC arrays, as exposed by as_csc-style accessors.
    std::span<const std::size_t> csc_col_ptr() const { return col_ptr_; }
    std::span<const RowIndex> csc_row_idx() const { return row_idx_; }

    std::vector<std::vector<ItemId>> rows() const;

    ItemMatrix select(std::span<const std::size_t> indices) const;
    ItemMatrix unique_rows() const;
    ItemMatrix sample_rows(std::size_t k, std::uint64_t seed) const;
    static ItemMatrix combine(std::span<const ItemMatrix> parts);

    // Indices of the first occurrence of every distinct row, in order.
    std::vector<std::size_t> first_occurrences() const;

    BoolMatrix export_dense() const;
    std::vector<std::vector<std::string>> export_label_sets() const;
    std::vector<Triplet> export_sparse_triplets() const;

    friend bool operator==(const ItemMatrix& a, const ItemMatrix& b);

  private:
    void build_columns();

    ItemInfoPtr info_;
    std::vector<std::size_t> col_ptr_;
    std::vector<RowIndex> row_idx_;
    std::vector<std::size_t> row_ptr_;
    std::vector<ItemId> col_idx_;
};

// Entry (i, j) is true iff every item of row i of `patterns` is in row j of
// `transactions`. Both matrices must share a universe.
BoolMatrix row_is_subset_of(const ItemMatrix& patterns, const ItemMatrix& transactions);

// Number of rows of `transactions` containing `items`.
std::size_t count_containing(std::span<const ItemId> items, const ItemMatrix& transactions);

// Sorted ids of the rows of `transactions` containing `items`.
std::vector<RowIndex> rows_containing(std::span<const ItemId> items, const ItemMatrix& transactions);

// Per-row containment counts: result[i] = count_containing(patterns.row(i), transactions).
std::vector<std::size_t> support_counts(const ItemMatrix& patterns, const ItemMatrix& transactions);

// Canonical itemset order: by length, then lexicographically by item id.
bool itemset_less(std::span<const ItemId> a, std::span<const ItemId> b);

// Renders "{l1,l2,...}" with items in universe order.
std::string itemset_label(std::span<const ItemId> items, const ItemInfo& info);

// One rendered label per row.
std::vector<std::string> labels(const ItemMatrix& m);

}  // namespace rulekit

#endif  // RULEKIT_ITEM_MATRIX_HPP
