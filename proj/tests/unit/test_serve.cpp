#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <thread>

#include <httplib.h>

#include "server.hpp"
#include "zoo.hpp"

using namespace rulekit::cli;
using nlohmann::json;

TEST(Serve, RoutesOverHttp) {
    ApiServer server(RuleStore(testdata::zoo_rules()));
    const int port = server.bind_any("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread th([&] { server.listen(); });
    server.wait_until_ready();

    httplib::Client c("127.0.0.1", port);
    auto meta = c.Get("/api/meta");
    ASSERT_TRUE(meta);
    EXPECT_EQ(meta->status, 200);
    EXPECT_NE(meta->get_header_value("Content-Type").find("application/json"), std::string::npos);
    EXPECT_EQ(json::parse(meta->body)["ruleCount"], 30438);

    auto rules = c.Get("/api/rules?rhsContains=type%3Damphibian&sort=confidence&limit=5");
    ASSERT_TRUE(rules);
    auto j = json::parse(rules->body);
    EXPECT_GT(j["total"].get<int>(), 0);
    for (auto& r : j["rules"]) EXPECT_EQ(r["rhs"], json({"type=amphibian"}));

    auto scatter = c.Get("/api/scatter?minLift=5");
    ASSERT_TRUE(scatter);
    EXPECT_EQ(scatter->status, 200);

    auto graph = c.Get("/api/graph?top=10&by=lift");
    ASSERT_TRUE(graph);
    EXPECT_EQ(json::parse(graph->body)["nodes"].is_array(), true);

    auto bad = c.Get("/api/rules?sort=zest");
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->status, 400);
    EXPECT_TRUE(json::parse(bad->body).contains("error"));

    server.stop();
    th.join();
}
