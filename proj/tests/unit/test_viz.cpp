#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "oracles.hpp"
#include "rulekit/error.hpp"
#include "rulekit/measures.hpp"
#include "rulekit/selection.hpp"
#include "rulekit/viz.hpp"
#include "zoo.hpp"

using namespace rulekit;
using nlohmann::json;

namespace {

std::size_t occurrences(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
    return n;
}

Rules type_rules_top(std::size_t k) {
    const auto& r = testdata::zoo_rules();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.item_info().rows()[r.rhs().row(i)[0]].variable == "type") idx.push_back(i);
    return select_range(sort_by(r.select(idx), "confidence"), 0, k);
}

}  // namespace

TEST(Scatter, PaperTableCoordinates) {
    auto info = testdata::zoo().item_info_ptr();
    Rules r(ItemMatrix::from_label_sets({{"hair", "milk", "predator"}, {"hair", "tail", "predator"}, {"fins"}}, info),
            ItemMatrix::from_label_sets({{"type=mammal"}, {"type=mammal"}, {"type=fish"}}, info));
    QualityTable q(3);
    q.set("support", {0.2, 0.16, 0.13});
    q.set("confidence", {1, 1, 0.76});
    q.set("lift", {2.46, 2.46, 5.94});
    auto pts = scatter_data(r.with_quality(q));
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_EQ(pts[2], (ScatterPoint{0.13, 0.76, 5.94, 2}));
}

TEST(Scatter, ZooPointsAndSvg) {
    const auto& r = testdata::zoo_rules();
    auto pts = scatter_data(r);
    EXPECT_EQ(pts.size(), r.size());
    for (auto& p : pts) {
        EXPECT_GE(p.x, 0);
        EXPECT_LE(p.x, 1);
        EXPECT_GE(p.y, 0);
        EXPECT_LE(p.y, 1);
        EXPECT_GE(p.shade, 0);
    }
    auto small = select_range(r, 0, 200);
    auto svg = scatter_svg(small);
    EXPECT_EQ(occurrences(svg, "<circle class=\"rule\""), 200u);
    EXPECT_NE(svg.find(">support</text>"), std::string::npos);
    EXPECT_NE(svg.find(">confidence</text>"), std::string::npos);
    EXPECT_NE(svg.find("class=\"legend\""), std::string::npos);
}

TEST(Scatter, SelectCommutes) {
    const auto& r = testdata::zoo_rules();
    std::vector<std::size_t> idx{5, 17, 3000, 2};
    auto a = scatter_data(r.select(idx));
    auto all = scatter_data(r);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        EXPECT_EQ(a[i].x, all[idx[i]].x);
        EXPECT_EQ(a[i].y, all[idx[i]].y);
        EXPECT_EQ(a[i].shade, all[idx[i]].shade);
    }
}

TEST(Scatter, EmptyAndMissingColumns) {
    auto empty = select_range(testdata::zoo_rules(), 0, 0);
    EXPECT_TRUE(scatter_data(empty).empty());
    auto svg = scatter_svg(empty);
    EXPECT_EQ(occurrences(svg, "<circle"), 0u);
    EXPECT_NE(svg.find(">support</text>"), std::string::npos);
    EXPECT_THROW(scatter_data(Rules(empty.lhs(), empty.rhs())), Error);
}

TEST(Grouped, IdentityWhenFewDistinctLhs) {
    auto r = type_rules_top(60);
    std::set<std::vector<ItemId>> distinct;
    for (std::size_t i = 0; i < r.size(); ++i) distinct.insert({r.lhs().row(i).begin(), r.lhs().row(i).end()});
    auto g = grouped_matrix(r, distinct.size());
    EXPECT_EQ(g.groups.size(), distinct.size());
    for (auto& grp : g.groups) {
        ASSERT_EQ(grp.lhs.size(), 1u);
        for (auto i : grp.rules)
            EXPECT_EQ(std::vector<ItemId>(r.lhs().row(i).begin(), r.lhs().row(i).end()), grp.lhs[0]);
    }
}

TEST(Grouped, PartitionOrderAndLabels) {
    const auto& r = testdata::zoo_rules();
    auto g = grouped_matrix(r, 20);
    EXPECT_LE(g.groups.size(), 20u);
    std::vector<int> seen(r.size(), 0);
    for (auto& grp : g.groups)
        for (auto i : grp.rules) ++seen[i];
    for (int s : seen) ASSERT_EQ(s, 1);
    for (std::size_t k = 1; k < g.groups.size(); ++k) EXPECT_GE(g.groups[k - 1].max_lift, g.groups[k].max_lift);
    const auto& lift = r.quality().column("lift");
    EXPECT_EQ(g.groups.front().max_lift, *std::max_element(lift.begin(), lift.end()));
    for (auto& grp : g.groups) EXPECT_EQ(grp.label.rfind(std::to_string(grp.rules.size()) + " rule", 0), 0u);
    EXPECT_EQ(grouped_matrix(r, 20).groups.size(), g.groups.size());
    EXPECT_THROW(grouped_matrix(r, 0), Error);
    auto svg = grouped_svg(g, r.item_info());
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_EQ(json::parse(grouped_json(g, r.item_info()))["groups"].size(), g.groups.size());
}

TEST(Graph, SingleRule) {
    auto info = make_item_info(ItemInfo::from_labels({"a", "b"}));
    Rules r(ItemMatrix::from_label_sets({{"a"}}, info), ItemMatrix::from_label_sets({{"b"}}, info));
    auto g = rule_graph(r);
    EXPECT_EQ(g.nodes.size(), 3u);
    EXPECT_EQ(g.edges.size(), 2u);
    auto j = json::parse(graph_data(r, GraphFormat::json));
    EXPECT_EQ(j["nodes"].size(), 3u);
    EXPECT_EQ(j["edges"].size(), 2u);
    auto dot = graph_data(r, GraphFormat::dot);
    std::string why;
    EXPECT_TRUE(oracle::is_valid_dot(dot, &why)) << why << "\n" << dot;
    EXPECT_NE(dot.find("\"r0\""), std::string::npos);
}

TEST(Graph, TopHundredTypeRules) {
    auto r = type_rules_top(100);
    auto g = rule_graph(r);
    std::size_t rule_nodes = 0, item_nodes = 0, lhs_total = 0;
    for (auto& n : g.nodes) (n.kind == GraphNode::Kind::rule ? rule_nodes : item_nodes)++;
    for (std::size_t i = 0; i < r.size(); ++i) lhs_total += r.lhs().row_size(i);
    EXPECT_EQ(rule_nodes, 100u);
    EXPECT_LE(item_nodes, 25u);
    EXPECT_EQ(g.edges.size(), lhs_total + r.size());
    std::set<std::string> ids;
    for (auto& n : g.nodes) ids.insert(n.id);
    EXPECT_EQ(ids.size(), g.nodes.size());
    for (auto& e : g.edges) {
        EXPECT_TRUE(ids.count(e.from));
        EXPECT_TRUE(ids.count(e.to));
    }
    std::string why;
    EXPECT_TRUE(oracle::is_valid_dot(graph_dot(g), &why)) << why;
}

TEST(Graph, CapAndDotChecker) {
    EXPECT_THROW(rule_graph(testdata::zoo_rules()), Error);
    EXPECT_NO_THROW(rule_graph(select_range(testdata::zoo_rules(), 0, 10), 10));
    EXPECT_FALSE(oracle::is_valid_dot("digraph { a -> }"));
    EXPECT_FALSE(oracle::is_valid_dot("digraph { \"a\" [label=\"x] }"));
    EXPECT_TRUE(oracle::is_valid_dot("graph g { a -- b; c [x=1, y=\"z\"]; }"));
}
