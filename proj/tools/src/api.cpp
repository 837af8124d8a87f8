#include "api.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "filter_expr.hpp"
#include "rulekit/error.hpp"
#include "rulekit/format.hpp"
#include "rulekit/io.hpp"
#include "rulekit/viz.hpp"

namespace rulekit::cli {

namespace {

using json = nlohmann::ordered_json;

struct BadRequest : Error {
    using Error::Error;
};

const std::string* param(const QueryParams& q, const std::string& key) {
    auto it = q.find(key);
    return it == q.end() ? nullptr : &it->second;
}

std::size_t count_param(const QueryParams& q, const std::string& key, std::size_t fallback) {
    auto s = param(q, key);
    if (!s) return fallback;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
    if (ec != std::errc() || p != s->data() + s->size()) throw BadRequest(key + " must be a non-negative integer");
    return v;
}

bool bool_param(const QueryParams& q, const std::string& key, bool fallback) {
    auto s = param(q, key);
    if (!s) return fallback;
    if (*s == "true" || *s == "1") return true;
    if (*s == "false" || *s == "0") return false;
    throw BadRequest(key + " must be true or false");
}

std::string quote(const std::string& s) {
    if (s.find('\'') == std::string::npos) return "'" + s + "'";
    if (s.find('"') == std::string::npos) return "\"" + s + "\"";
    throw BadRequest("substring filters cannot contain both quote characters");
}

// Matching rule indices in original order.
std::vector<std::size_t> matching(const RuleStore& store, const QueryParams& q) {
    try {
        return filter_indices(parse_filter(filter_expression(q)), store.rules());
    } catch (const FilterError& e) {
        throw BadRequest(e.what());
    }
}

// Sorts idx by a quality column, stable, NaN last.
void sort_indices(std::vector<std::size_t>& idx, const Rules& r, const std::string& by, bool desc) {
    if (!r.quality().has(by)) throw BadRequest("unknown sort column '" + by + "'");
    QualityTable sub(idx.size());
    std::vector<double> v(idx.size());
    const auto& col = r.quality().column(by);
    for (std::size_t i = 0; i < idx.size(); ++i) v[i] = col[idx[i]];
    sub.set(by, std::move(v));
    auto order = sort_order(sub, by, desc);
    std::vector<std::size_t> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = idx[order[i]];
    idx = std::move(out);
}

template <class F>
ApiResponse handle(F&& f) {
    try {
        return {200, f()};
    } catch (const Error& e) {
        return {400, json{{"error", e.what()}}.dump()};
    }
}

}  // namespace

std::string filter_expression(const QueryParams& q) {
    std::vector<std::string> parts;
    const std::pair<const char*, const char*> mins[] = {
        {"minSupport", "support"}, {"minConfidence", "confidence"}, {"minLift", "lift"}};
    for (auto [key, col] : mins)
        if (auto s = param(q, key)) {
            auto v = parse_number(*s);
            if (!v || std::isnan(*v)) throw BadRequest(std::string(key) + " must be a number");
            parts.push_back(std::string(col) + " >= " + format_number(*v));
        }
    if (auto s = param(q, "lhsContains")) parts.push_back("lhs~" + quote(*s));
    if (auto s = param(q, "rhsContains")) parts.push_back("rhs~" + quote(*s));
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " & ") + p;
    return out;
}

ApiResponse api_meta(const RuleStore& store) {
    return handle([&] {
        const auto& r = store.rules();
        return json{{"ruleCount", r.size()},
                    {"measures", export_column_order(r.quality())},
                    {"items", r.item_info().labels()}}
            .dump();
    });
}

ApiResponse api_rules(const RuleStore& store, const QueryParams& q) {
    return handle([&] {
        const auto& r = store.rules();
        auto idx = matching(store, q);
        sort_indices(idx, r, param(q, "sort") ? *param(q, "sort") : "confidence", bool_param(q, "desc", true));
        const std::size_t total = idx.size();
        const std::size_t offset = std::min(count_param(q, "offset", 0), total);
        const std::size_t limit = count_param(q, "limit", kDefaultPageSize);
        std::vector<std::size_t> page(idx.begin() + static_cast<std::ptrdiff_t>(offset),
                                      idx.begin() + static_cast<std::ptrdiff_t>(std::min(total, offset + limit)));
        auto rows = json::parse(export_rules(r.select(page), ExportFormat::json));
        for (std::size_t i = 0; i < page.size(); ++i) rows[i]["index"] = page[i];
        return json{{"total", total}, {"offset", offset}, {"rules", rows}}.dump();
    });
}

ApiResponse api_scatter(const RuleStore& store, const QueryParams& q) {
    return handle([&] {
        auto idx = matching(store, q);
        auto pts = scatter_data(store.rules().select(idx));
        for (auto& p : pts) p.rule_index = idx[p.rule_index];
        return scatter_json(pts);
    });
}

ApiResponse api_graph(const RuleStore& store, const QueryParams& q) {
    return handle([&] {
        const auto& r = store.rules();
        auto idx = matching(store, q);
        sort_indices(idx, r, param(q, "by") ? *param(q, "by") : "confidence", true);
        idx.resize(std::min(idx.size(), count_param(q, "top", kDefaultGraphTop)));
        return graph_data(r.select(idx), GraphFormat::json);
    });
}

}  // namespace rulekit::cli
