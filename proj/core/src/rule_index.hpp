#ifndef RULEKIT_SRC_RULE_INDEX_HPP
#define RULEKIT_SRC_RULE_INDEX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rulekit/associations.hpp"

namespace rulekit::internal {

struct ItemsetHash {
    std::size_t operator()(const std::vector<ItemId>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h ^ v.size();
    }
};

// For each rule, the highest confidence among rules in the same set that
// have the same RHS and a strictly smaller LHS; nullopt when none exists.
std::vector<std::optional<double>> best_general_confidence(const Rules& r,
                                                           const std::vector<double>& confidence);

}  // namespace rulekit::internal

#endif  // RULEKIT_SRC_RULE_INDEX_HPP
