#ifndef RULEKIT_ITEM_INFO_HPP
#define RULEKIT_ITEM_INFO_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rulekit {

using ItemId = std::uint32_t;

struct ItemInfoRow {
    std::string label;
    std::string variable;
    std::string level;

    friend bool operator==(const ItemInfoRow&, const ItemInfoRow&) = default;
};

// The item universe: one row per item column, in column order.
// Labels are unique and non-empty.
class ItemInfo {
  public:
    ItemInfo() = default;
    explicit ItemInfo(std::vector<ItemInfoRow> rows);

    // Builds rows from bare labels. "var=level" splits into variable and
    // level, anything else is treated as a boolean item (level "TRUE").
    static ItemInfo from_labels(const std::vector<std::string>& labels);

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const ItemInfoRow& operator[](std::size_t i) const { return rows_[i]; }
    const std::vector<ItemInfoRow>& rows() const { return rows_; }
    const std::string& label(ItemId id) const { return rows_[id].label; }
    std::vector<std::string> labels() const;

    std::optional<ItemId> find(std::string_view label) const;

    friend bool operator==(const ItemInfo& a, const ItemInfo& b) { return a.rows_ == b.rows_; }

  private:
    std::vector<ItemInfoRow> rows_;
    std::unordered_map<std::string, ItemId> index_;
};

using ItemInfoPtr = std::shared_ptr<const ItemInfo>;

inline ItemInfoPtr make_item_info(ItemInfo info) {
    return std::make_shared<const ItemInfo>(std::move(info));
}

// True when both pointers denote the same universe (identity or equal rows).
inline bool same_universe(const ItemInfoPtr& a, const ItemInfoPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace rulekit

#endif  // RULEKIT_ITEM_INFO_HPP
