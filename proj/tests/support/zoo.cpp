#include "zoo.hpp"

#include "rulekit/ingest.hpp"
#include "rulekit/mine.hpp"

namespace testdata {

std::string zoo_csv_path() { return std::string(RULEKIT_DATA_DIR) + "/Zoo.csv"; }

const rulekit::Transactions& zoo() {
    static const auto t = rulekit::transactions_from_table(rulekit::read_csv_file(zoo_csv_path()));
    return t;
}

const rulekit::Rules& zoo_rules() {
    static const auto r = [] {
        rulekit::MiningParams p;
        p.support = 0.01;
        p.confidence = 0.7;
        return rulekit::apriori_rules(zoo(), p);
    }();
    return r;
}

long find_rule(const rulekit::Rules& r, const std::string& label) {
    auto all = rulekit::labels(r);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == label) return static_cast<long>(i);
    return -1;
}

}  // namespace testdata
