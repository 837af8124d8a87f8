#include "rulekit/item_info.hpp"

#include "rulekit/error.hpp"

namespace rulekit {

ItemInfo::ItemInfo(std::vector<ItemInfoRow> rows) : rows_(std::move(rows)) {
    index_.reserve(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& label = rows_[i].label;
        if (label.empty()) throw Error("item label at column " + std::to_string(i) + " is empty");
        if (!index_.emplace(label, static_cast<ItemId>(i)).second)
            throw Error("duplicate item label '" + label + "'");
    }
}

ItemInfo ItemInfo::from_labels(const std::vector<std::string>& labels) {
    std::vector<ItemInfoRow> rows;
    rows.reserve(labels.size());
    for (const auto& label : labels) {
        auto eq = label.find('=');
        if (eq == std::string::npos || eq == 0)
            rows.push_back({label, label, "TRUE"});
        else
            rows.push_back({label, label.substr(0, eq), label.substr(eq + 1)});
    }
    return ItemInfo(std::move(rows));
}

std::vector<std::string> ItemInfo::labels() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.label);
    return out;
}

std::optional<ItemId> ItemInfo::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace rulekit
