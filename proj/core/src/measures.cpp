#include "rulekit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "rulekit/error.hpp"
#include "rule_index.hpp"

namespace rulekit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NamedMeasure {
    Measure measure;
    const char* name;
};

constexpr NamedMeasure kMeasures[] = {
    {Measure::support, "support"},
    {Measure::confidence, "confidence"},
    {Measure::coverage, "coverage"},
    {Measure::lift, "lift"},
    {Measure::count, "count"},
    {Measure::leverage, "leverage"},
    {Measure::conviction, "conviction"},
    {Measure::improvement, "improvement"},
    {Measure::odds_ratio, "oddsRatio"},
    {Measure::fishers_exact_test, "fishersExactTest"},
};

Measure require_measure(const std::string& name) {
    auto m = measure_from_name(name);
    if (!m) {
        std::string known;
        for (const auto& n : measure_names()) known += (known.empty() ? "" : ", ") + n;
        throw Error("unknown interest measure '" + name + "' (known: " + known + ")");
    }
    return *m;
}

}  // namespace

void ContingencyCounts::validate() const {
    if (n_x > m || n_y > m || n_xy > std::min(n_x, n_y) || n_x + n_y > m + n_xy)
        throw Error("inconsistent contingency counts");
}

std::optional<Measure> measure_from_name(std::string_view name) {
    for (const auto& nm : kMeasures)
        if (name == nm.name) return nm.measure;
    return std::nullopt;
}

std::string measure_name(Measure m) {
    for (const auto& nm : kMeasures)
        if (nm.measure == m) return nm.name;
    return "?";
}

const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& nm : kMeasures) v.emplace_back(nm.name);
        return v;
    }();
    return names;
}

double fisher_exact_greater(const ContingencyCounts& c) {
    c.validate();
    const std::size_t k_max = std::min(c.n_x, c.n_y);
    const double m = static_cast<double>(c.m);
    const double nx = static_cast<double>(c.n_x);
    const double ny = static_cast<double>(c.n_y);
    // log P(N = n_xy) = log C(ny,k) + log C(m-ny, nx-k) - log C(m, nx)
    auto log_choose = [](double n, double k) {
        return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
    };
    double k = static_cast<double>(c.n_xy);
    double term = std::exp(log_choose(ny, k) + log_choose(m - ny, nx - k) - log_choose(m, nx));
    double p = 0;
    for (std::size_t kk = c.n_xy; kk <= k_max; ++kk) {
        p += term;
        k = static_cast<double>(kk);
        term *= (ny - k) * (nx - k) / ((k + 1) * (m - ny - nx + k + 1));
    }
    return std::min(p, 1.0);
}

double measure_value(Measure measure, const ContingencyCounts& c) {
    const double m = static_cast<double>(c.m);
    const double nx = static_cast<double>(c.n_x);
    const double ny = static_cast<double>(c.n_y);
    const double nxy = static_cast<double>(c.n_xy);
    switch (measure) {
        case Measure::support: return nxy / m;
        case Measure::confidence: return c.n_x == 0 ? kNaN : nxy / nx;
        case Measure::coverage: return nx / m;
        case Measure::lift: return c.n_x == 0 || c.n_y == 0 ? kNaN : (nxy * m) / (nx * ny);
        case Measure::count: return nxy;
        case Measure::leverage: return nxy / m - (nx / m) * (ny / m);
        case Measure::conviction: {
            if (c.n_x == 0) return kNaN;
            double conf = nxy / nx;
            return (1.0 - ny / m) / (1.0 - conf);
        }
        case Measure::odds_ratio: {
            double n10 = nx - nxy;
            double n01 = ny - nxy;
            double n00 = m - nx - ny + nxy;
            return (nxy * n00) / (n10 * n01);
        }
        case Measure::fishers_exact_test: return fisher_exact_greater(c);
        case Measure::improvement:
            throw Error("improvement depends on the rule set and cannot be computed from counts");
    }
    return kNaN;
}

std::vector<ContingencyCounts> contingency_counts(const Rules& r, const Transactions& t) {
    if (!same_universe(r.item_info_ptr(), t.item_info_ptr()))
        throw Error("rules and transactions use different item universes");
    const auto& tm = t.matrix();
    std::vector<ContingencyCounts> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto& c = out[i];
        c.m = tm.n_rows();
        c.n_x = count_containing(r.lhs().row(i), tm);
        c.n_y = count_containing(r.rhs().row(i), tm);
        auto both = r.items(i);
        c.n_xy = count_containing(both, tm);
    }
    return out;
}

std::vector<double> improvement(const Rules& r, const std::vector<double>& confidence) {
    if (confidence.size() != r.size()) throw Error("confidence column length mismatch");
    auto best = internal::best_general_confidence(r, confidence);
    std::vector<double> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = confidence[i] - best[i].value_or(0.0);
    return out;
}

QualityTable interest_measure(const Rules& r, const std::vector<std::string>& names,
                              const Transactions& t) {
    std::vector<Measure> wanted;
    for (const auto& n : names) wanted.push_back(require_measure(n));
    auto counts = contingency_counts(r, t);
    QualityTable q(r.size());
    std::vector<double> conf;
    for (std::size_t k = 0; k < wanted.size(); ++k) {
        std::vector<double> col(r.size());
        if (wanted[k] == Measure::improvement) {
            if (conf.empty()) {
                conf.resize(r.size());
                for (std::size_t i = 0; i < r.size(); ++i)
                    conf[i] = measure_value(Measure::confidence, counts[i]);
            }
            col = improvement(r, conf);
        } else {
            for (std::size_t i = 0; i < r.size(); ++i) col[i] = measure_value(wanted[k], counts[i]);
        }
        q.set(names[k], std::move(col));
    }
    return q;
}

QualityTable interest_measure(const Itemsets& s, const std::vector<std::string>& names,
                              const Transactions& t) {
    if (!same_universe(s.item_info_ptr(), t.item_info_ptr()))
        throw Error("itemsets and transactions use different item universes");
    auto counts = support_counts(s.items(), t.matrix());
    const double m = static_cast<double>(t.size());
    QualityTable q(s.size());
    for (const auto& n : names) {
        auto measure = require_measure(n);
        std::vector<double> col(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (measure == Measure::support)
                col[i] = static_cast<double>(counts[i]) / m;
            else if (measure == Measure::count)
                col[i] = static_cast<double>(counts[i]);
            else
                throw Error("measure '" + n + "' is not defined for itemsets");
        }
        q.set(n, std::move(col));
    }
    return q;
}

}  // namespace rulekit
