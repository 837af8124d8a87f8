// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rulekit/format.hpp"
#include "rulekit/ingest.hpp"
#include "rulekit/measures.hpp"
#include "rulekit/mine.hpp"
#include "rulekit/predicates.hpp"
#include "rulekit/viz.hpp"

using namespace rulekit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string zoo_path() { return std::string(RULEKIT_DATA_DIR) + "/Zoo.csv"; }

const Transactions& zoo() {
    static const auto t = transactions_from_table(read_csv_file(zoo_path()));
    return t;
}

const Rules& zoo_rules() {
    static const auto r = [] {
        MiningParams p;
        p.support = 0.01;
        p.confidence = 0.7;
        p.minlen = 1;
        p.maxlen = 10;
        return apriori_rules(zoo(), p);
    }();
    return r;
}

Outcome zoo_ingestion() {
    const std::vector<ItemInfoRow> expected = {
        {"hair", "hair", "TRUE"},
        {"feathers", "feathers", "TRUE"},
        {"eggs", "eggs", "TRUE"},
        {"milk", "milk", "TRUE"},
        {"airborne", "airborne", "TRUE"},
        {"aquatic", "aquatic", "TRUE"},
        {"predator", "predator", "TRUE"},
        {"toothed", "toothed", "TRUE"},
        {"backbone", "backbone", "TRUE"},
        {"breathes", "breathes", "TRUE"},
        {"venomous", "venomous", "TRUE"},
        {"fins", "fins", "TRUE"},
        {"legs=[0,2)", "legs", "[0,2)"},
        {"legs=[2,4)", "legs", "[2,4)"},
        {"legs=[4,8]", "legs", "[4,8]"},
        {"tail", "tail", "TRUE"},
        {"domestic", "domestic", "TRUE"},
        {"catsize", "catsize", "TRUE"},
        {"type=amphibian", "type", "amphibian"},
        {"type=bird", "type", "bird"},
        {"type=fish", "type", "fish"},
        {"type=insect", "type", "insect"},
        {"type=mammal", "type", "mammal"},
        {"type=mollusc.et.al", "type", "mollusc.et.al"},
        {"type=reptile", "type", "reptile"},
    };
    auto t0 = Clock::now();
    auto t = transactions_from_table(read_csv_file(zoo_path()));
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << t.size() << " transactions, " << t.n_items() << " items, " << secs << " s";
    bool ok = t.size() == 101 && t.n_items() == 25 && secs < 1.0;
    if (item_info(t).rows() != expected) {
        ok = false;
        d << ", item info differs";
    }
    return {ok, d.str()};
}

Outcome zoo_mining() {
    auto t0 = Clock::now();
    MiningParams p;
    p.support = 0.01;
    p.confidence = 0.7;
    auto r = apriori_rules(zoo(), p);
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << r.size() << " rules in " << secs << " s";
    return {r.size() == 30438 && secs < 10.0, d.str()};
}

Outcome golden_values() {
    const auto& r = zoo_rules();
    auto all = labels(r);
    auto find = [&](const std::string& l) -> long {
        auto it = std::find(all.begin(), all.end(), l);
        return it == all.end() ? -1 : it - all.begin();
    };
    struct Want {
        std::string rule;
        std::vector<std::pair<std::string, double>> rounded;  // 2 decimals
        long count;                                          // -1 if unchecked
    };
    const std::vector<Want> wants = {
        {"{type=amphibian} => {aquatic}", {{"support", 0.04}, {"confidence", 1}, {"lift", 2.81}}, 4},
        {"{fins} => {type=fish}", {{"support", 0.13}, {"confidence", 0.76}, {"lift", 5.94}}, -1},
        {"{} => {tail}", {{"support", 0.74}, {"lift", 1}}, 75},
    };
    std::ostringstream d;
    bool ok = true;
    for (const auto& w : wants) {
        auto i = find(w.rule);
        if (i < 0) {
            ok = false;
            d << w.rule << " missing; ";
            continue;
        }
        for (const auto& [col, v] : w.rounded) {
            auto got = format_rounded(r.quality().column(col)[i], 2);
            if (got != format_rounded(v, 2)) {
                ok = false;
                d << w.rule << " " << col << "=" << got << "; ";
            }
        }
        if (w.count >= 0 && r.quality().column("count")[i] != static_cast<double>(w.count)) {
            ok = false;
            d << w.rule << " count; ";
        }
    }
    if (ok) d << "3 rules match";
    return {ok, d.str()};
}

Outcome redundancy() {
    const auto& r = zoo_rules();
    auto red = is_redundant(r);
    const auto kept = static_cast<std::size_t>(std::count(red.begin(), red.end(), false));
    const double ratio = static_cast<double>(kept) / static_cast<double>(r.size());
    std::ostringstream d;
    d << kept << " of " << r.size() << " non-redundant, ratio " << ratio << " (band [0.30, 0.36])";
    return {ratio >= 0.30 && ratio <= 0.36, d.str()};
}

Outcome miner_equivalence() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> sigma(0.05, 0.5), density(0.1, 0.7);
    int bad = 0;
    std::size_t itemsets = 0;
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng() % 12, m = 1 + rng() % 50;
        auto t = oracle::random_instance(rng, n, m, density(rng));
        MiningParams p;
        p.support = sigma(rng);
        p.target = MiningTarget::frequent_itemsets;
        auto a = apriori_itemsets(t, p);
        auto e = eclat(t, p);
        auto want = oracle::all_frequent(t, oracle::min_count(p.support, m), p.minlen, p.maxlen);
        itemsets += want.size();
        bool ok = oracle::as_counted(a) == want && oracle::as_counted(e) == want;
        for (const auto* s : {&a, &e}) {
            const auto& sup = s->quality().column("support");
            for (std::size_t i = 0; ok && i < want.size(); ++i)
                ok = std::fabs(sup[i] - static_cast<double>(want[i].count) / static_cast<double>(m)) <= 1e-9;
        }
        bad += !ok;
    }
    return {bad == 0, std::to_string(100 - bad) + "/100 instances agree, " + std::to_string(itemsets) + " itemsets"};
}

Outcome predicate_oracle() {
    std::mt19937_64 rng(5150);
    int bad = 0;
    for (int rep = 0; rep < 50; ++rep) {
        auto t = oracle::random_instance(rng, 1 + rng() % 10, 5 + rng() % 40, 0.3 + 0.4 * (rng() % 100) / 100.0);
        MiningParams p;
        p.support = 0.05 + 0.25 * (rng() % 100) / 100.0;
        p.target = MiningTarget::frequent_itemsets;
        auto s = apriori_itemsets(t, p);
        bool ok = is_closed(s, t) == oracle::closed(s.items(), t) &&
                  is_generator(s, t) == oracle::generator(s.items(), t) && is_maximal(s) == oracle::maximal(s.items());
        bad += !ok;
    }
    return {bad == 0, std::to_string(50 - bad) + "/50 instances agree"};
}

Outcome measure_identities() {
    const auto& r = zoo_rules();
    const auto& q = r.quality();
    const double m = static_cast<double>(zoo().size());
    std::size_t bad = 0, empty_lhs = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double s = q.column("support")[i];
        bad += std::fabs(q.column("confidence")[i] * q.column("coverage")[i] - s) > 1e-9;
        bad += std::fabs(q.column("count")[i] - std::round(s * m)) > 1e-9;
        if (r.lhs().row_size(i) == 0) {
            ++empty_lhs;
            bad += q.column("lift")[i] != 1.0;
        }
    }
    std::size_t tables = 0, fisher_bad = 0;
    double worst = 0;
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned nx = 0; nx <= n; ++nx)
            for (unsigned ny = 0; ny <= n; ++ny)
                for (unsigned k = nx + ny > n ? nx + ny - n : 0; k <= std::min(nx, ny); ++k) {
                    const double diff = std::fabs(fisher_exact_greater({n, nx, ny, k}) -
                                                  oracle::hypergeometric_upper_tail(n, nx, ny, k));
                    worst = std::max(worst, diff);
                    fisher_bad += diff > 1e-10;
                    ++tables;
                }
    std::ostringstream d;
    d << r.size() << " rules (" << empty_lhs << " with empty LHS), " << bad << " identity violations; " << tables
      << " Fisher tables, max error " << worst;
    return {bad == 0 && fisher_bad == 0, d.str()};
}

Outcome random_density() {
    int inside = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        auto nnz = random_transactions(10, 1000, 0.3, seed).matrix().nnz();
        inside += nnz >= 2862 && nnz <= 3138;
    }
    return {inside >= 99, std::to_string(inside) + "/100 seeds within [2862, 3138]"};
}

Outcome viz_structure() {
    std::ostringstream d;
    bool ok = true;

    auto info = make_item_info(ItemInfo::from_labels({"a", "b"}));
    Rules one(ItemMatrix::from_label_sets({{"a"}}, info), ItemMatrix::from_label_sets({{"b"}}, info));
    auto g = rule_graph(one);
    ok &= g.nodes.size() == 3 && g.edges.size() == 2;
    d << "graph " << g.nodes.size() << " nodes/" << g.edges.size() << " edges";

    const auto& r = zoo_rules();
    auto pts = scatter_data(r);
    ok &= pts.size() == r.size();
    d << "; scatter " << pts.size() << " points";

    // Rules with few distinct antecedents: the top 60 type rules by confidence.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.item_info().rows()[r.rhs().row(i)[0]].variable == "type") idx.push_back(i);
    std::vector<std::size_t> top(60);
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
    auto sub = sort_by(r.select(idx), "confidence").select(top);
    std::set<std::vector<ItemId>> distinct;
    for (std::size_t i = 0; i < sub.size(); ++i) distinct.insert({sub.lhs().row(i).begin(), sub.lhs().row(i).end()});
    bool identity = true;
    for (std::size_t k : {distinct.size(), distinct.size() + 5}) {
        auto gm = grouped_matrix(sub, k);
        identity &= gm.groups.size() == distinct.size();
        for (const auto& grp : gm.groups) {
            identity &= grp.lhs.size() == 1;
            for (auto i : grp.rules)
                identity &= grp.lhs.size() == 1 &&
                            std::vector<ItemId>(sub.lhs().row(i).begin(), sub.lhs().row(i).end()) == grp.lhs[0];
        }
    }
    ok &= identity;
    d << "; grouped identity over " << distinct.size() << " LHS " << (identity ? "holds" : "broken");
    return {ok, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"zoo-ingestion", zoo_ingestion},       {"zoo-mining", zoo_mining},
        {"golden-rule-values", golden_values},  {"redundancy-reduction", redundancy},
        {"miner-equivalence", miner_equivalence}, {"predicate-oracle", predicate_oracle},
        {"measure-identities", measure_identities}, {"random-transactions", random_density},
        {"viz-structure", viz_structure},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    }
    std::fflush(stdout);
    return failures;
}
