#ifndef RULEKIT_VIZ_HPP
#define RULEKIT_VIZ_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rulekit/associations.hpp"

namespace rulekit {

// x = support, y = confidence, shade = lift.
struct ScatterPoint {
    double x = 0;
    double y = 0;
    double shade = 0;
    std::size_t rule_index = 0;

    friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

// One point per rule, in rule order. Needs support, confidence and lift.
std::vector<ScatterPoint> scatter_data(const Rules& r);
// JSON array of {x, y, shade, rule_index}.
std::string scatter_json(const std::vector<ScatterPoint>& points);
// SVG 1.1 with one <circle class="rule"> per rule, labelled axes and a lift legend.
std::string scatter_svg(const Rules& r, int width = 640, int height = 480);

struct GroupedCell {
    ItemId rhs = 0;
    std::size_t n_rules = 0;
    double lift = 0;     // mean over the cell's rules
    double support = 0;  // mean over the cell's rules
};

struct RuleGroup {
    std::string label;  // "N rules: {a, b, +n items}"
    std::vector<std::size_t> rules;
    std::vector<std::vector<ItemId>> lhs;  // distinct LHS itemsets in the group
    double max_lift = 0;
    std::vector<GroupedCell> cells;  // one per RHS item present, in item order
};

struct GroupedMatrix {
    std::vector<ItemId> rhs_items;
    std::vector<RuleGroup> groups;  // by decreasing max lift
};

/// Groups rules by antecedent. Each distinct LHS is described by its vector
/// of lifts over the RHS items (0 where no rule exists); up to k groups are
/// formed by k-medoids clustering of these vectors, seeded deterministically
/// and capped at `max_iterations`. With at most k distinct LHS every LHS is
/// its own group. Needs lift and support.
GroupedMatrix grouped_matrix(const Rules& r, std::size_t k, std::uint64_t seed = 42,
                             int max_iterations = 50);
std::string grouped_svg(const GroupedMatrix& g, const ItemInfo& info, int width = 900, int height = 600);
std::string grouped_json(const GroupedMatrix& g, const ItemInfo& info);

struct GraphNode {
    enum class Kind { item, rule };
    std::string id;  // "i<col>" for items, "r<rule index>" for rules
    Kind kind = Kind::item;
    std::string label;
    std::optional<double> support;
    std::optional<double> lift;
};

struct GraphEdge {
    std::string from;
    std::string to;
};

// Items point into the rules they appear in on the LHS; rules point to
// their RHS items. Item nodes are shared between rules.
struct RuleGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
};

constexpr std::size_t kDefaultGraphCap = 1000;

// Throws if r has more than `cap` rules.
RuleGraph rule_graph(const Rules& r, std::size_t cap = kDefaultGraphCap);
// {"nodes": [{id, kind, support?, lift?, label}], "edges": [{from, to}]}
std::string graph_json(const RuleGraph& g);
std::string graph_dot(const RuleGraph& g);

enum class GraphFormat { json, dot };
std::string graph_data(const Rules& r, GraphFormat format, std::size_t cap = kDefaultGraphCap);

}  // namespace rulekit

#endif  // RULEKIT_VIZ_HPP
