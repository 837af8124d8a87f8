#ifndef RULEKIT_TOOLS_API_HPP
#define RULEKIT_TOOLS_API_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rulekit/associations.hpp"

namespace rulekit::cli {

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
    int status = 200;
    std::string body;  // JSON
};

class RuleStore {
  public:
    explicit RuleStore(Rules rules) : rules_(std::move(rules)) {}
    const Rules& rules() const { return rules_; }

  private:
    Rules rules_;
};

inline constexpr std::size_t kDefaultPageSize = 50;
inline constexpr std::size_t kDefaultGraphTop = 100;

// Handlers are pure: same store and parameters, same response.
// Malformed parameters give status 400 and {"error": "..."}.
ApiResponse api_meta(const RuleStore& store);
// offset, limit, sort (default confidence), desc (default true),
// minSupport, minConfidence, minLift, lhsContains, rhsContains.
ApiResponse api_rules(const RuleStore& store, const QueryParams& q);
// Same filters as api_rules; one point per matching rule.
ApiResponse api_scatter(const RuleStore& store, const QueryParams& q);
// Same filters; the `top` rules (default 100) by measure `by` (default confidence).
ApiResponse api_graph(const RuleStore& store, const QueryParams& q);

// Filter expression equivalent to the query's filter parameters.
std::string filter_expression(const QueryParams& q);

}  // namespace rulekit::cli

#endif
