#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rulekit/error.hpp"
#include "rulekit/format.hpp"
#include "rulekit/ingest.hpp"
#include "zoo.hpp"

using namespace rulekit;

namespace {

Table table(const std::string& csv) {
    std::istringstream in(csv);
    return read_csv(in);
}

}  // namespace

TEST(Csv, QuotedFieldsAndMissingCells) {
    auto t = table("a,b\n\"x,1\",\n\"say \"\"hi\"\"\",2\n");
    ASSERT_EQ(t.names, (std::vector<std::string>{"a", "b"}));
    ASSERT_EQ(t.n_rows(), 2u);
    EXPECT_EQ(*t.columns[0][0], "x,1");
    EXPECT_FALSE(t.columns[1][0]);
    EXPECT_EQ(*t.columns[0][1], "say \"hi\"");
    EXPECT_EQ(csv_escape("x,1"), "\"x,1\"");
    EXPECT_EQ(csv_escape("plain"), "plain");
}

TEST(Csv, RaggedRowIsAnError) { EXPECT_THROW(table("a,b\n1\n"), Error); }

TEST(Discretize, ZooLegsFrequencyThreeBins) {
    auto t = read_csv_file(testdata::zoo_csv_path());
    auto col = std::find(t.names.begin(), t.names.end(), "legs") - t.names.begin();
    std::vector<double> legs;
    for (auto& c : t.columns[col]) legs.push_back(*parse_number(*c));
    auto d = discretize(legs, {});
    EXPECT_EQ(d.interval_labels, (std::vector<std::string>{"[0,2)", "[2,4)", "[4,8]"}));
    EXPECT_EQ(d.breaks, (std::vector<double>{0, 2, 4, 8}));
}

TEST(Discretize, IntervalMidpoint) {
    std::vector<double> v{0, 1, 2, 3, 4, 5, 6, 7, 8};
    auto d = discretize(v, {DiscretizeMethod::interval, 2, {}});
    EXPECT_EQ(d.interval_labels, (std::vector<std::string>{"[0,4)", "[4,8]"}));
    EXPECT_EQ(d.bin_of_value[3], 0u);
    EXPECT_EQ(d.bin_of_value[4], 1u);
    EXPECT_EQ(d.bin_of_value[8], 1u);
}

TEST(Discretize, FrequencyAgainstSortAndSplit) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> v(300);
        for (auto& x : v) x = u(rng);
        auto d = discretize(v, {});
        ASSERT_EQ(d.breaks.size(), 4u);
        for (int k = 0; k <= 3; ++k) EXPECT_DOUBLE_EQ(d.breaks[k], oracle::quantile7(v, k / 3.0));
        // Sorting and cutting at the order statistics gives the same bins.
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> counts(3, 0);
        for (auto b : d.bin_of_value) ++counts[b];
        for (std::size_t k = 0; k < 3; ++k) {
            auto expect = std::count_if(v.begin(), v.end(), [&](double x) {
                return x >= d.breaks[k] && (k == 2 ? x <= d.breaks[3] : x < d.breaks[k + 1]);
            });
            EXPECT_EQ(counts[k], static_cast<std::size_t>(expect));
            EXPECT_NEAR(static_cast<double>(counts[k]), 100.0, 1.0);
        }
    }
}

TEST(Discretize, PartitionCoversRange) {
    std::vector<double> v{3.5, -1, 2, 2, 7.25, 0};
    for (auto method : {DiscretizeMethod::frequency, DiscretizeMethod::interval}) {
        auto d = discretize(v, {method, 3, {}});
        EXPECT_EQ(d.breaks.front(), -1);
        EXPECT_EQ(d.breaks.back(), 7.25);
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto b = d.bin_of_value[i];
            EXPECT_GE(v[i], d.breaks[b]);
            EXPECT_LE(v[i], d.breaks[b + 1]);
        }
    }
}

TEST(Discretize, Errors) {
    std::vector<double> few{1, 1, 2};
    EXPECT_THROW(discretize(few, {}), Error);
    EXPECT_THROW(discretize(std::vector<double>{}, {}), Error);
    std::vector<double> v{1, 2, 3};
    EXPECT_THROW(discretize(v, {DiscretizeMethod::interval, 1, {}}), Error);
    EXPECT_THROW(discretize(v, {DiscretizeMethod::fixed, 3, {0, 0, 4}}), Error);
    EXPECT_THROW(discretize(v, {DiscretizeMethod::fixed, 3, {0, 2}}), Error);
    auto d = discretize(v, {DiscretizeMethod::fixed, 0, {0, 1.5, 4}});
    EXPECT_EQ(d.interval_labels, (std::vector<std::string>{"[0,1.5)", "[1.5,4]"}));
}

TEST(Ingest, ZooShape) {
    const auto& t = testdata::zoo();
    EXPECT_EQ(t.size(), 101u);
    EXPECT_EQ(t.n_items(), 25u);
    const auto& rows = item_info(t).rows();
    EXPECT_EQ(rows[0], (ItemInfoRow{"hair", "hair", "TRUE"}));
    EXPECT_EQ(rows[12], (ItemInfoRow{"legs=[0,2)", "legs", "[0,2)"}));
    std::vector<std::string> types;
    for (const auto& r : rows)
        if (r.variable == "type") types.push_back(r.label);
    EXPECT_EQ(types, (std::vector<std::string>{"type=amphibian", "type=bird", "type=fish", "type=insect",
                                               "type=mammal", "type=mollusc.et.al", "type=reptile"}));
}

TEST(Ingest, OneHotRowsSumToOne) {
    const auto& t = testdata::zoo();
    for (std::size_t r = 0; r < t.size(); ++r) {
        int legs = 0, type = 0;
        for (auto c : t.matrix().row(r)) {
            const auto& v = t.item_info().rows()[c].variable;
            legs += v == "legs";
            type += v == "type";
        }
        EXPECT_EQ(legs, 1);
        EXPECT_EQ(type, 1);
    }
}

TEST(Ingest, SmallTables) {
    auto t = transactions_from_table(table("x\ntrue\nfalse\n"));
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(t.n_items(), 1u);
    EXPECT_EQ(t.matrix().nnz(), 1u);
    EXPECT_EQ(t.item_info().rows()[0], (ItemInfoRow{"x", "x", "TRUE"}));

    auto n = transactions_from_table(table("c,d\nq,1\np,0\n,0\n"));
    EXPECT_EQ(n.item_info().rows()[0], (ItemInfoRow{"c=p", "c", "p"}));
    EXPECT_EQ(n.item_info().rows()[1], (ItemInfoRow{"c=q", "c", "q"}));
    EXPECT_EQ(n.size(), 3u);
    EXPECT_EQ(n.matrix().row_size(2), 0u);
    EXPECT_EQ(n.transaction_ids(), (std::vector<std::string>{"0", "1", "2"}));
}

TEST(Ingest, Errors) {
    EXPECT_THROW(transactions_from_table(table("a,b\n")), Error);
    EXPECT_THROW(transactions_from_table(table("a,b\n1,\n0,\n")), Error);
}

TEST(Ingest, ColumnSpecsOverrideInference) {
    auto specs = parse_column_specs(R"({"n": {"kind": "nominal"}, "v": {"method": "fixed", "breaks": [0, 5, 10]}})");
    auto t = transactions_from_table(table("n,v\n1,2\n2,7\n"), specs);
    EXPECT_EQ(t.item_info().labels(), (std::vector<std::string>{"n=1", "n=2", "v=[0,5)", "v=[5,10]"}));
    EXPECT_THROW(parse_column_specs(R"({"v": {"method": "sideways"}})"), Error);
    EXPECT_THROW(parse_column_specs("[1]"), Error);
}

TEST(Ingest, Deterministic) {
    auto a = transactions_from_table(read_csv_file(testdata::zoo_csv_path()));
    EXPECT_EQ(a, testdata::zoo());
}

TEST(Ingest, BooleanParsing) {
    for (auto s : {"True", "TRUE", "true", "1"}) EXPECT_EQ(parse_boolean(s), true);
    for (auto s : {"False", "FALSE", "false", "0"}) EXPECT_EQ(parse_boolean(s), false);
    EXPECT_FALSE(parse_boolean("yes"));
}

TEST(RandomTransactions, DensityExtremesAndDeterminism) {
    EXPECT_EQ(random_transactions(10, 50, 0.0, 1).matrix().nnz(), 0u);
    EXPECT_EQ(random_transactions(10, 50, 1.0, 1).matrix().nnz(), 500u);
    EXPECT_EQ(random_transactions(10, 50, 0.3, 8), random_transactions(10, 50, 0.3, 8));
    auto t = random_transactions(3, 2, 0.5, 1);
    EXPECT_EQ(t.item_info().labels(), (std::vector<std::string>{"item1", "item2", "item3"}));
    EXPECT_THROW(random_transactions(3, 2, 1.5, 1), Error);
}

TEST(RandomTransactions, SupportCountsSumToStoredElements) {
    auto t = random_transactions(10, 1000, 0.3, 4);
    std::size_t sum = 0;
    for (std::size_t c = 0; c < t.n_items(); ++c) sum += t.matrix().column(c).size();
    EXPECT_EQ(sum, t.matrix().nnz());
}
