#include "rule_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace rulekit::internal {

namespace {

constexpr ItemId kSeparator = std::numeric_limits<ItemId>::max();
// Beyond this LHS length the subset walk is replaced by a scan of the RHS group.
constexpr std::size_t kMaxEnumeratedLhs = 14;

std::vector<ItemId> rule_key(std::span<const ItemId> lhs, std::span<const ItemId> rhs) {
    std::vector<ItemId> key(rhs.begin(), rhs.end());
    key.push_back(kSeparator);
    key.insert(key.end(), lhs.begin(), lhs.end());
    return key;
}

}  // namespace

std::vector<std::optional<double>> best_general_confidence(const Rules& r,
                                                           const std::vector<double>& confidence) {
    const std::size_t n = r.size();
    std::unordered_map<std::vector<ItemId>, double, ItemsetHash> conf_of;
    std::unordered_map<std::vector<ItemId>, std::vector<std::size_t>, ItemsetHash> by_rhs;
    conf_of.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto rhs = r.rhs().row(i);
        by_rhs[std::vector<ItemId>(rhs.begin(), rhs.end())].push_back(i);
        if (std::isnan(confidence[i])) continue;
        auto [it, inserted] = conf_of.emplace(rule_key(r.lhs().row(i), rhs), confidence[i]);
        if (!inserted) it->second = std::max(it->second, confidence[i]);
    }

    std::vector<std::optional<double>> best(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto lhs = r.lhs().row(i);
        auto rhs = r.rhs().row(i);
        std::optional<double> acc;
        auto consider = [&](double c) { acc = acc ? std::max(*acc, c) : c; };
        if (lhs.size() <= kMaxEnumeratedLhs) {
            const std::uint32_t full = (1u << lhs.size()) - 1;
            std::vector<ItemId> key(rhs.begin(), rhs.end());
            key.push_back(kSeparator);
            const std::size_t prefix = key.size();
            for (std::uint32_t mask = 0; mask < full; ++mask) {
                key.resize(prefix);
                for (std::size_t b = 0; b < lhs.size(); ++b)
                    if (mask & (1u << b)) key.push_back(lhs[b]);
                auto it = conf_of.find(key);
                if (it != conf_of.end()) consider(it->second);
            }
        } else {
            const auto& group = by_rhs.at(std::vector<ItemId>(rhs.begin(), rhs.end()));
            for (auto j : group) {
                auto other = r.lhs().row(j);
                if (other.size() >= lhs.size() || std::isnan(confidence[j])) continue;
                if (std::includes(lhs.begin(), lhs.end(), other.begin(), other.end()))
                    consider(confidence[j]);
            }
        }
        best[i] = acc;
    }
    return best;
}

}  // namespace rulekit::internal
