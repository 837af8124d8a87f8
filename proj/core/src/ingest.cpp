#include "rulekit/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rulekit/error.hpp"
#include "rulekit/format.hpp"

namespace rulekit {

namespace {

std::vector<std::vector<std::string>> parse_csv_records(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool any_char = false;
    std::size_t line = 1;
    char c;
    auto end_record = [&] {
        record.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(record));
        record.clear();
        field_started = false;
    };
    while (in.get(c)) {
        any_char = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!field.empty())
                    throw Error("stray quote in CSV field on line " + std::to_string(line));
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                field_started = true;
                break;
            case '\r':
                if (in.peek() == '\n') break;
                [[fallthrough]];
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (in_quotes) throw Error("unterminated quoted CSV field");
    if (any_char && (field_started || !record.empty())) end_record();
    return records;
}

std::string format_interval(double lo, double hi, bool closed) {
    return "[" + format_number(lo) + "," + format_number(hi) + (closed ? "]" : ")");
}

double quantile_sorted(const std::vector<double>& sorted, double p) {
    double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

bool is_missing(const std::optional<std::string>& cell) { return !cell.has_value(); }

std::optional<double> parse_finite(std::string_view s) {
    auto v = parse_number(s);
    if (!v || !std::isfinite(*v)) return std::nullopt;
    return v;
}

}  // namespace

Table read_csv(std::istream& in) {
    auto records = parse_csv_records(in);
    // Trailing blank lines.
    while (!records.empty() && records.back().size() == 1 && records.back()[0].empty())
        records.pop_back();
    if (records.empty()) throw Error("CSV input is empty");
    Table t;
    t.names = records.front();
    t.columns.resize(t.names.size());
    for (std::size_t r = 1; r < records.size(); ++r) {
        auto& rec = records[r];
        if (rec.size() != t.names.size())
            throw Error("CSV record " + std::to_string(r + 1) + " has " +
                        std::to_string(rec.size()) + " fields, header has " +
                        std::to_string(t.names.size()));
        for (std::size_t c = 0; c < rec.size(); ++c) {
            if (rec[c].empty())
                t.columns[c].emplace_back(std::nullopt);
            else
                t.columns[c].emplace_back(std::move(rec[c]));
        }
    }
    return t;
}

Table read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_csv(in);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void Discretization::validate() const {
    switch (method) {
        case DiscretizeMethod::frequency:
        case DiscretizeMethod::interval:
            if (bins < 2) throw Error("discretization needs at least 2 bins");
            break;
        case DiscretizeMethod::fixed:
            if (breaks.size() < 2) throw Error("fixed discretization needs at least 2 breaks");
            for (std::size_t i = 1; i < breaks.size(); ++i)
                if (!(breaks[i - 1] < breaks[i]))
                    throw Error("fixed breaks must be strictly increasing");
            break;
    }
}

std::vector<std::string> DiscretizeResult::value_labels() const {
    std::vector<std::string> out;
    out.reserve(bin_of_value.size());
    for (auto b : bin_of_value) out.push_back(interval_labels[b]);
    return out;
}

DiscretizeResult discretize(std::span<const double> values, const Discretization& how) {
    how.validate();
    if (values.empty()) throw Error("cannot discretize an empty column");
    for (double v : values)
        if (!std::isfinite(v)) throw Error("cannot discretize non-finite value");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front();
    const double hi = sorted.back();

    DiscretizeResult res;
    switch (how.method) {
        case DiscretizeMethod::frequency: {
            std::vector<double> d = sorted;
            auto distinct = static_cast<std::size_t>(std::unique(d.begin(), d.end()) - d.begin());
            if (distinct < static_cast<std::size_t>(how.bins))
                throw Error("column has " + std::to_string(distinct) + " distinct values but " +
                            std::to_string(how.bins) +
                            " frequency bins were requested; use fewer bins or fixed breaks");
            for (int k = 0; k <= how.bins; ++k)
                res.breaks.push_back(quantile_sorted(sorted, static_cast<double>(k) / how.bins));
            res.breaks.erase(std::unique(res.breaks.begin(), res.breaks.end()), res.breaks.end());
            break;
        }
        case DiscretizeMethod::interval: {
            if (!(lo < hi)) throw Error("cannot split a constant column into equal-width intervals");
            for (int k = 0; k <= how.bins; ++k)
                res.breaks.push_back(k == how.bins ? hi : lo + (hi - lo) * k / how.bins);
            break;
        }
        case DiscretizeMethod::fixed: {
            res.breaks = how.breaks;
            if (lo < res.breaks.front() || hi > res.breaks.back())
                throw Error("value outside fixed breaks [" + format_number(res.breaks.front()) +
                            "," + format_number(res.breaks.back()) + "]");
            break;
        }
    }

    const std::size_t n_bins = res.breaks.size() - 1;
    for (std::size_t b = 0; b < n_bins; ++b)
        res.interval_labels.push_back(
            format_interval(res.breaks[b], res.breaks[b + 1], b + 1 == n_bins));
    res.bin_of_value.reserve(values.size());
    for (double v : values) {
        // First break strictly greater than v closes v's interval.
        auto it = std::upper_bound(res.breaks.begin(), res.breaks.end(), v);
        auto b = static_cast<std::size_t>(it - res.breaks.begin());
        b = b == 0 ? 0 : std::min(b - 1, n_bins - 1);
        res.bin_of_value.push_back(b);
    }
    return res;
}

std::optional<bool> parse_boolean(std::string_view s) {
    if (s == "True" || s == "TRUE" || s == "true" || s == "1") return true;
    if (s == "False" || s == "FALSE" || s == "false" || s == "0") return false;
    return std::nullopt;
}

ColumnKind infer_kind(const std::vector<std::optional<std::string>>& cells) {
    bool all_bool = true;
    bool all_num = true;
    for (const auto& c : cells) {
        if (is_missing(c)) continue;
        if (all_bool && !parse_boolean(*c)) all_bool = false;
        if (all_num && !parse_finite(*c)) all_num = false;
    }
    if (all_bool) return ColumnKind::boolean;
    if (all_num) return ColumnKind::numeric;
    return ColumnKind::nominal;
}

ColumnSpecs parse_column_specs(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("column spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw Error("column spec must be a JSON object");
    ColumnSpecs specs;
    for (const auto& [name, v] : j.items()) {
        if (!v.is_object()) throw Error("column spec for '" + name + "' must be an object");
        ColumnSpec spec;
        spec.name = name;
        if (v.contains("kind")) {
            auto k = v.at("kind").get<std::string>();
            if (k == "boolean")
                spec.kind = ColumnKind::boolean;
            else if (k == "numeric")
                spec.kind = ColumnKind::numeric;
            else if (k == "nominal")
                spec.kind = ColumnKind::nominal;
            else
                throw Error("unknown column kind '" + k + "' for '" + name + "'");
        }
        if (v.contains("breaks")) {
            spec.discretization.method = DiscretizeMethod::fixed;
            spec.discretization.breaks = v.at("breaks").get<std::vector<double>>();
        }
        if (v.contains("method")) {
            auto m = v.at("method").get<std::string>();
            if (m == "frequency")
                spec.discretization.method = DiscretizeMethod::frequency;
            else if (m == "interval")
                spec.discretization.method = DiscretizeMethod::interval;
            else if (m == "fixed")
                spec.discretization.method = DiscretizeMethod::fixed;
            else
                throw Error("unknown discretization method '" + m + "' for '" + name + "'");
        }
        if (v.contains("bins")) spec.discretization.bins = v.at("bins").get<int>();
        spec.discretization.validate();
        specs.emplace(name, std::move(spec));
    }
    return specs;
}

Transactions transactions_from_table(const Table& table, const ColumnSpecs& specs) {
    if (table.n_cols() == 0 || table.n_rows() == 0) throw Error("input table is empty");
    for (const auto& [name, _] : specs)
        if (std::find(table.names.begin(), table.names.end(), name) == table.names.end())
            throw Error("column spec names unknown column '" + name + "'");

    const std::size_t n_rows = table.n_rows();
    std::vector<ItemInfoRow> info;
    std::vector<std::vector<ItemId>> rows(n_rows);

    for (std::size_t c = 0; c < table.n_cols(); ++c) {
        const auto& name = table.names[c];
        const auto& cells = table.columns[c];
        if (std::all_of(cells.begin(), cells.end(), is_missing))
            throw Error("column '" + name + "' has no values");

        auto spec_it = specs.find(name);
        const ColumnSpec* spec = spec_it == specs.end() ? nullptr : &spec_it->second;
        ColumnKind kind = spec && spec->kind ? *spec->kind : infer_kind(cells);
        const auto base = static_cast<ItemId>(info.size());

        switch (kind) {
            case ColumnKind::boolean: {
                info.push_back({name, name, "TRUE"});
                for (std::size_t r = 0; r < n_rows; ++r) {
                    if (is_missing(cells[r])) continue;
                    auto b = parse_boolean(*cells[r]);
                    if (!b)
                        throw Error("column '" + name + "' row " + std::to_string(r) +
                                    ": '" + *cells[r] + "' is not a boolean");
                    if (*b) rows[r].push_back(base);
                }
                break;
            }
            case ColumnKind::numeric: {
                std::vector<double> values;
                std::vector<std::size_t> present;
                for (std::size_t r = 0; r < n_rows; ++r) {
                    if (is_missing(cells[r])) continue;
                    auto v = parse_finite(*cells[r]);
                    if (!v)
                        throw Error("column '" + name + "' row " + std::to_string(r) +
                                    ": '" + *cells[r] + "' is not a finite number");
                    values.push_back(*v);
                    present.push_back(r);
                }
                auto d = discretize(values, spec ? spec->discretization : Discretization{});
                for (const auto& lbl : d.interval_labels) info.push_back({name + "=" + lbl, name, lbl});
                for (std::size_t k = 0; k < present.size(); ++k)
                    rows[present[k]].push_back(base + static_cast<ItemId>(d.bin_of_value[k]));
                break;
            }
            case ColumnKind::nominal: {
                std::set<std::string> levels;
                for (const auto& cell : cells)
                    if (!is_missing(cell)) levels.insert(*cell);
                std::vector<std::string> ordered(levels.begin(), levels.end());
                for (const auto& lvl : ordered) info.push_back({name + "=" + lvl, name, lvl});
                for (std::size_t r = 0; r < n_rows; ++r) {
                    if (is_missing(cells[r])) continue;
                    auto pos = std::lower_bound(ordered.begin(), ordered.end(), *cells[r]);
                    rows[r].push_back(base + static_cast<ItemId>(pos - ordered.begin()));
                }
                break;
            }
        }
    }
    return Transactions(ItemMatrix(rows, make_item_info(ItemInfo(std::move(info)))));
}

Transactions random_transactions(std::size_t n_items, std::size_t n_trans, double density,
                                 std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) throw Error("density must lie in [0, 1]");
    std::vector<std::string> labels;
    labels.reserve(n_items);
    for (std::size_t i = 1; i <= n_items; ++i) labels.push_back("item" + std::to_string(i));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<ItemId>> rows(n_trans);
    for (auto& row : rows)
        for (std::size_t i = 0; i < n_items; ++i) {
            // 53-bit uniform in [0, 1).
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < density) row.push_back(static_cast<ItemId>(i));
        }
    return Transactions(ItemMatrix(rows, make_item_info(ItemInfo::from_labels(labels))));
}

}  // namespace rulekit
