#ifndef RULEKIT_TRANSACTIONS_HPP
#define RULEKIT_TRANSACTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "rulekit/item_matrix.hpp"

namespace rulekit {

/// The mining database: an item matrix whose rows are transactions, plus
/// one unique identifier per transaction.
class Transactions {
  public:
    Transactions() = default;
    // Ids default to the zero-based row ordinals.
    explicit Transactions(ItemMatrix matrix);
    Transactions(ItemMatrix matrix, std::vector<std::string> ids);

    static Transactions from_label_sets(const std::vector<std::vector<std::string>>& sets,
                                        ItemInfoPtr info);

    const ItemMatrix& matrix() const { return matrix_; }
    const std::vector<std::string>& transaction_ids() const { return ids_; }
    const ItemInfo& item_info() const { return matrix_.item_info(); }
    const ItemInfoPtr& item_info_ptr() const { return matrix_.item_info_ptr(); }

    std::size_t size() const { return matrix_.n_rows(); }
    std::size_t n_items() const { return matrix_.n_cols(); }

    // Selection and combination suffix repeated ids ("7", "7.1", ...).
    Transactions select(std::span<const std::size_t> indices) const;
    Transactions unique_rows() const;
    static Transactions combine(std::span<const Transactions> parts);

    friend bool operator==(const Transactions&, const Transactions&) = default;

  private:
    ItemMatrix matrix_;
    std::vector<std::string> ids_;
};

inline const ItemInfo& item_info(const Transactions& t) { return t.item_info(); }

inline BoolMatrix row_is_subset_of(const ItemMatrix& patterns, const Transactions& t) {
    return row_is_subset_of(patterns, t.matrix());
}

}  // namespace rulekit

#endif  // RULEKIT_TRANSACTIONS_HPP
