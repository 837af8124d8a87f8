#include "rulekit/item_matrix.hpp"

#include <algorithm>
#include <map>

#include "rulekit/error.hpp"
#include "rulekit/selection.hpp"

namespace rulekit {

ItemMatrix::ItemMatrix() : info_(make_item_info(ItemInfo{})), col_ptr_{0}, row_ptr_{0} {}

ItemMatrix::ItemMatrix(const std::vector<std::vector<ItemId>>& rows, ItemInfoPtr info)
    : info_(std::move(info)) {
    if (!info_) throw Error("item matrix requires an item universe");
    const std::size_t n_cols = info_->size();
    row_ptr_.reserve(rows.size() + 1);
    row_ptr_.push_back(0);
    std::vector<ItemId> scratch;
    for (const auto& r : rows) {
        scratch.assign(r.begin(), r.end());
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        if (!scratch.empty() && scratch.back() >= n_cols)
            throw Error("item id " + std::to_string(scratch.back()) + " out of range for " +
                        std::to_string(n_cols) + " items");
        col_idx_.insert(col_idx_.end(), scratch.begin(), scratch.end());
        row_ptr_.push_back(col_idx_.size());
    }
    build_columns();
}

void ItemMatrix::build_columns() {
    const std::size_t n_cols = info_->size();
    col_ptr_.assign(n_cols + 1, 0);
    for (auto c : col_idx_) ++col_ptr_[c + 1];
    for (std::size_t c = 0; c < n_cols; ++c) col_ptr_[c + 1] += col_ptr_[c];
    row_idx_.resize(col_idx_.size());
    std::vector<std::size_t> fill(col_ptr_.begin(), col_ptr_.end() - 1);
    for (std::size_t r = 0; r + 1 < row_ptr_.size(); ++r)
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            row_idx_[fill[col_idx_[k]]++] = static_cast<RowIndex>(r);
}

ItemMatrix ItemMatrix::from_label_sets(const std::vector<std::vector<std::string>>& sets,
                                       ItemInfoPtr info) {
    if (!info) throw Error("item matrix requires an item universe");
    std::vector<std::vector<ItemId>> rows;
    rows.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto& row = rows.emplace_back();
        for (const auto& label : sets[i]) {
            auto id = info->find(label);
            if (!id)
                throw Error("unknown label '" + label + "' in row " + std::to_string(i));
            row.push_back(*id);
        }
    }
    return ItemMatrix(rows, std::move(info));
}

bool ItemMatrix::contains(std::size_t r, ItemId c) const {
    auto items = row(r);
    return std::binary_search(items.begin(), items.end(), c);
}

std::vector<std::vector<ItemId>> ItemMatrix::rows() const {
    std::vector<std::vector<ItemId>> out;
    out.reserve(n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r) {
        auto items = row(r);
        out.emplace_back(items.begin(), items.end());
    }
    return out;
}

ItemMatrix ItemMatrix::select(std::span<const std::size_t> indices) const {
    ItemMatrix out;
    out.info_ = info_;
    out.row_ptr_.reserve(indices.size() + 1);
    for (auto i : indices) {
        if (i >= n_rows())
            throw Error("index " + std::to_string(i) + " out of bounds for " +
                        std::to_string(n_rows()) + " rows");
        auto items = row(i);
        out.col_idx_.insert(out.col_idx_.end(), items.begin(), items.end());
        out.row_ptr_.push_back(out.col_idx_.size());
    }
    out.build_columns();
    return out;
}

std::vector<std::size_t> ItemMatrix::first_occurrences() const {
    // Rows hold sorted ids, so element-wise comparison is set equality.
    std::map<std::span<const ItemId>, std::size_t,
             decltype([](std::span<const ItemId> a, std::span<const ItemId> b) {
                 return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
             })>
        seen;
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < n_rows(); ++r)
        if (seen.emplace(row(r), r).second) keep.push_back(r);
    return keep;
}

ItemMatrix ItemMatrix::unique_rows() const { return select(first_occurrences()); }

ItemMatrix ItemMatrix::sample_rows(std::size_t k, std::uint64_t seed) const {
    return select(sample_indices(n_rows(), k, seed));
}

ItemMatrix ItemMatrix::combine(std::span<const ItemMatrix> parts) {
    if (parts.empty()) throw Error("combine needs at least one part");
    ItemMatrix out;
    out.info_ = parts.front().info_;
    for (const auto& p : parts) {
        if (!same_universe(p.info_, out.info_))
            throw Error("cannot combine item matrices over different item universes");
        std::size_t base = out.col_idx_.size();
        out.col_idx_.insert(out.col_idx_.end(), p.col_idx_.begin(), p.col_idx_.end());
        for (std::size_t r = 1; r < p.row_ptr_.size(); ++r)
            out.row_ptr_.push_back(base + p.row_ptr_[r]);
    }
    out.build_columns();
    return out;
}

BoolMatrix ItemMatrix::export_dense() const {
    BoolMatrix out{n_rows(), n_cols(), std::vector<std::uint8_t>(n_rows() * n_cols(), 0)};
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (auto c : row(r)) out.cells[r * n_cols() + c] = 1;
    return out;
}

std::vector<std::vector<std::string>> ItemMatrix::export_label_sets() const {
    std::vector<std::vector<std::string>> out(n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r)
        for (auto c : row(r)) out[r].push_back(info_->label(c));
    return out;
}

std::vector<Triplet> ItemMatrix::export_sparse_triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t c = 0; c < n_cols(); ++c)
        for (auto r : column(c)) out.push_back({r, c});
    return out;
}

bool operator==(const ItemMatrix& a, const ItemMatrix& b) {
    return same_universe(a.info_, b.info_) && a.row_ptr_ == b.row_ptr_ && a.col_idx_ == b.col_idx_;
}

namespace {

void require_same_universe(const ItemMatrix& a, const ItemMatrix& b) {
    if (!same_universe(a.item_info_ptr(), b.item_info_ptr()))
        throw Error("item universes differ");
}

}  // namespace

std::vector<RowIndex> rows_containing(std::span<const ItemId> items, const ItemMatrix& transactions) {
    std::vector<RowIndex> acc;
    if (items.empty()) {
        acc.resize(transactions.n_rows());
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = static_cast<RowIndex>(r);
        return acc;
    }
    // Start from the shortest tidlist.
    auto shortest = *std::min_element(items.begin(), items.end(), [&](ItemId a, ItemId b) {
        return transactions.column(a).size() < transactions.column(b).size();
    });
    auto first = transactions.column(shortest);
    acc.assign(first.begin(), first.end());
    std::vector<RowIndex> next;
    for (auto item : items) {
        if (item == shortest) continue;
        auto col = transactions.column(item);
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), col.begin(), col.end(),
                              std::back_inserter(next));
        acc.swap(next);
        if (acc.empty()) break;
    }
    return acc;
}

std::size_t count_containing(std::span<const ItemId> items, const ItemMatrix& transactions) {
    if (items.empty()) return transactions.n_rows();
    if (items.size() == 1) return transactions.column(items[0]).size();
    return rows_containing(items, transactions).size();
}

BoolMatrix row_is_subset_of(const ItemMatrix& patterns, const ItemMatrix& transactions) {
    require_same_universe(patterns, transactions);
    BoolMatrix out{patterns.n_rows(), transactions.n_rows(),
                   std::vector<std::uint8_t>(patterns.n_rows() * transactions.n_rows(), 0)};
    for (std::size_t i = 0; i < patterns.n_rows(); ++i)
        for (auto j : rows_containing(patterns.row(i), transactions))
            out.cells[i * out.n_cols + j] = 1;
    return out;
}

std::vector<std::size_t> support_counts(const ItemMatrix& patterns, const ItemMatrix& transactions) {
    require_same_universe(patterns, transactions);
    std::vector<std::size_t> out(patterns.n_rows());
    for (std::size_t i = 0; i < patterns.n_rows(); ++i)
        out[i] = count_containing(patterns.row(i), transactions);
    return out;
}

bool itemset_less(std::span<const ItemId> a, std::span<const ItemId> b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string itemset_label(std::span<const ItemId> items, const ItemInfo& info) {
    std::string out = "{";
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += ',';
        out += info.label(items[k]);
    }
    out += '}';
    return out;
}

std::vector<std::string> labels(const ItemMatrix& m) {
    std::vector<std::string> out;
    out.reserve(m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r) out.push_back(itemset_label(m.row(r), m.item_info()));
    return out;
}

}  // namespace rulekit
