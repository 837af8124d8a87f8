#include "rulekit/io.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rulekit/error.hpp"
#include "rulekit/format.hpp"
#include "rulekit/ingest.hpp"

namespace rulekit {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kStandardColumns[] = {"support", "confidence", "coverage", "lift", "count"};

ojson parse_json(std::string_view text, const char* what) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string(what) + " is not valid JSON: " + e.what());
    }
}

ojson number_to_json(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    if (v == std::trunc(v) && std::fabs(v) < 9007199254740992.0) return static_cast<std::int64_t>(v);
    return v;
}

double number_from_json(const ojson& j, const std::string& key) {
    if (j.is_null()) return std::nan("");
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        auto v = parse_number(j.get<std::string>());
        if (v) return *v;
    }
    throw Error("quality value for '" + key + "' is not a number");
}

ojson labels_json(std::span<const ItemId> items, const ItemInfo& info) {
    ojson a = ojson::array();
    for (auto id : items) a.push_back(info.label(id));
    return a;
}

std::vector<std::string> labels_from_json(const ojson& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw Error(std::string("association object lacks a '") + key + "' array");
    return j.at(key).get<std::vector<std::string>>();
}

std::string dump(const ojson& j) { return j.dump(); }

ojson associations_to_json(const QualityTable& q, const std::vector<std::string>& cols,
                           const std::function<void(std::size_t, ojson&)>& fill_items) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < q.n_rows(); ++i) {
        ojson o = ojson::object();
        fill_items(i, o);
        for (const auto& c : cols) o[c] = number_to_json(q.column(c)[i]);
        arr.push_back(std::move(o));
    }
    return arr;
}

QualityTable quality_from_objects(const ojson& arr, const std::vector<std::string>& skip) {
    QualityTable q(arr.size());
    if (arr.empty()) return q;
    std::vector<std::string> cols;
    for (const auto& [k, _] : arr.front().items())
        if (std::find(skip.begin(), skip.end(), k) == skip.end()) cols.push_back(k);
    for (const auto& c : cols) {
        std::vector<double> v;
        v.reserve(arr.size());
        for (const auto& o : arr) {
            if (!o.contains(c)) throw Error("association object lacks quality '" + c + "'");
            v.push_back(number_from_json(o.at(c), c));
        }
        q.set(c, std::move(v));
    }
    return q;
}

std::string render_value(const std::string& column, double v, int digits) {
    if (column == "count") return format_rounded(v, 0);
    return format_rounded(v, digits);
}

}  // namespace

std::string dense_csv(const ItemMatrix& m) {
    std::string out;
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
        if (c) out += ',';
        out += csv_escape(m.item_info().label(static_cast<ItemId>(c)));
    }
    out += '\n';
    auto dense = m.export_dense();
    for (std::size_t r = 0; r < dense.n_rows; ++r) {
        for (std::size_t c = 0; c < dense.n_cols; ++c) {
            if (c) out += ',';
            out += dense(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string triplets_csv(const ItemMatrix& m) {
    std::string out = "row,col\n";
    for (const auto& t : m.export_sparse_triplets())
        out += std::to_string(t.row) + "," + std::to_string(t.col) + "\n";
    return out;
}

ItemMatrix matrix_from_triplets_csv(std::string_view text, std::size_t n_rows, ItemInfoPtr info) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || (line != "row,col" && line != "row,col\r"))
        throw Error("triplet CSV must start with the header 'row,col'");
    std::vector<std::vector<ItemId>> rows(n_rows);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto comma = line.find(',');
        auto r = comma == std::string::npos ? std::nullopt : parse_number(line.substr(0, comma));
        auto c = comma == std::string::npos ? std::nullopt : parse_number(line.substr(comma + 1));
        if (!r || !c || *r < 0 || *c < 0 || *r != std::trunc(*r) || *c != std::trunc(*c))
            throw Error("bad triplet on line " + std::to_string(line_no));
        auto ri = static_cast<std::size_t>(*r);
        auto ci = static_cast<std::size_t>(*c);
        if (ri >= n_rows || ci >= info->size())
            throw Error("triplet (" + std::to_string(ri) + "," + std::to_string(ci) +
                        ") out of bounds on line " + std::to_string(line_no));
        rows[ri].push_back(static_cast<ItemId>(ci));
    }
    return ItemMatrix(rows, std::move(info));
}

std::string label_sets_json(const ItemMatrix& m) {
    ojson arr = ojson::array();
    for (std::size_t r = 0; r < m.n_rows(); ++r) arr.push_back(labels_json(m.row(r), m.item_info()));
    return dump(arr);
}

ItemMatrix matrix_from_label_sets_json(std::string_view text, ItemInfoPtr info) {
    auto j = parse_json(text, "label sets");
    if (!j.is_array()) throw Error("label sets must be a JSON array");
    try {
        return ItemMatrix::from_label_sets(j.get<std::vector<std::vector<std::string>>>(), std::move(info));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("label sets must be arrays of strings: ") + e.what());
    }
}

std::string item_info_json(const ItemInfo& info) {
    ojson arr = ojson::array();
    for (const auto& r : info.rows())
        arr.push_back({{"label", r.label}, {"variable", r.variable}, {"level", r.level}});
    return arr.dump(1);
}

ItemInfo item_info_from_json(std::string_view text) {
    auto j = parse_json(text, "item info");
    if (!j.is_array()) throw Error("item info must be a JSON array");
    std::vector<ItemInfoRow> rows;
    try {
        for (const auto& o : j)
            rows.push_back({o.at("label").get<std::string>(), o.at("variable").get<std::string>(),
                            o.at("level").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed item info entry: ") + e.what());
    }
    return ItemInfo(std::move(rows));
}

std::string quality_csv(const QualityTable& q) {
    std::string out;
    const auto names = q.names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(names[c]);
    }
    out += '\n';
    for (std::size_t r = 0; r < q.n_rows(); ++r) {
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (c) out += ',';
            out += format_number(q.columns()[c].second[r]);
        }
        out += '\n';
    }
    return out;
}

QualityTable quality_from_csv(std::string_view text, std::size_t n_rows) {
    std::istringstream in{std::string(text)};
    QualityTable q(n_rows);
    // No columns: empty header line.
    if (text.empty() || text.front() == '\n') return q;
    Table t = read_csv(in);
    if (t.n_rows() != n_rows)
        throw Error("quality CSV has " + std::to_string(t.n_rows()) + " rows, expected " +
                    std::to_string(n_rows));
    for (std::size_t c = 0; c < t.n_cols(); ++c) {
        std::vector<double> v;
        v.reserve(n_rows);
        for (const auto& cell : t.columns[c]) {
            auto x = cell ? parse_number(*cell) : std::nullopt;
            if (!x) throw Error("quality column '" + t.names[c] + "' holds a non-number");
            v.push_back(*x);
        }
        q.set(t.names[c], std::move(v));
    }
    return q;
}

std::vector<std::string> export_column_order(const QualityTable& q) {
    std::vector<std::string> cols;
    for (const char* c : kStandardColumns)
        if (q.has(c)) cols.emplace_back(c);
    for (const auto& n : q.names())
        if (std::find(cols.begin(), cols.end(), n) == cols.end()) cols.push_back(n);
    return cols;
}

std::string export_rules(const Rules& r, ExportFormat format) {
    const auto cols = export_column_order(r.quality());
    if (format == ExportFormat::json) {
        return dump(associations_to_json(r.quality(), cols, [&](std::size_t i, ojson& o) {
            o["lhs"] = labels_json(r.lhs().row(i), r.item_info());
            o["rhs"] = labels_json(r.rhs().row(i), r.item_info());
        }));
    }
    std::string out = "LHS,RHS";
    for (const auto& c : cols) out += "," + csv_escape(c);
    out += '\n';
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += csv_escape(itemset_label(r.lhs().row(i), r.item_info()));
        out += ',';
        out += csv_escape(itemset_label(r.rhs().row(i), r.item_info()));
        for (const auto& c : cols) out += "," + format_number(r.quality().column(c)[i]);
        out += '\n';
    }
    return out;
}

std::string export_itemsets(const Itemsets& s, ExportFormat format) {
    const auto cols = export_column_order(s.quality());
    if (format == ExportFormat::json) {
        return dump(associations_to_json(s.quality(), cols, [&](std::size_t i, ojson& o) {
            o["items"] = labels_json(s.items().row(i), s.item_info());
        }));
    }
    std::string out = "items";
    for (const auto& c : cols) out += "," + csv_escape(c);
    out += '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += csv_escape(itemset_label(s.items().row(i), s.item_info()));
        for (const auto& c : cols) out += "," + format_number(s.quality().column(c)[i]);
        out += '\n';
    }
    return out;
}

Rules rules_from_json(std::string_view text, ItemInfoPtr info) {
    auto arr = parse_json(text, "rules");
    if (!arr.is_array()) throw Error("rules JSON must be an array");
    std::vector<std::vector<std::string>> lhs, rhs;
    for (const auto& o : arr) {
        if (!o.is_object()) throw Error("rules JSON entries must be objects");
        lhs.push_back(labels_from_json(o, "lhs"));
        rhs.push_back(labels_from_json(o, "rhs"));
    }
    return Rules(ItemMatrix::from_label_sets(lhs, info), ItemMatrix::from_label_sets(rhs, info),
                 quality_from_objects(arr, {"lhs", "rhs"}));
}

Itemsets itemsets_from_json(std::string_view text, ItemInfoPtr info) {
    auto arr = parse_json(text, "itemsets");
    if (!arr.is_array()) throw Error("itemsets JSON must be an array");
    std::vector<std::vector<std::string>> items;
    for (const auto& o : arr) {
        if (!o.is_object()) throw Error("itemsets JSON entries must be objects");
        items.push_back(labels_from_json(o, "items"));
    }
    return Itemsets(ItemMatrix::from_label_sets(items, std::move(info)),
                    quality_from_objects(arr, {"items"}));
}

std::vector<std::vector<std::string>> render(const Rules& r, int digits) {
    const auto cols = export_column_order(r.quality());
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"LHS", "RHS"};
    header.insert(header.end(), cols.begin(), cols.end());
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::vector<std::string> row{itemset_label(r.lhs().row(i), r.item_info()),
                                     itemset_label(r.rhs().row(i), r.item_info())};
        for (const auto& c : cols) row.push_back(render_value(c, r.quality().column(c)[i], digits));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<std::string>> render(const Itemsets& s, int digits) {
    const auto cols = export_column_order(s.quality());
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"items"};
    header.insert(header.end(), cols.begin(), cols.end());
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::string> row{itemset_label(s.items().row(i), s.item_info())};
        for (const auto& c : cols) row.push_back(render_value(c, s.quality().column(c)[i], digits));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            // Label columns left-aligned, numbers right-aligned.
            bool numeric = parse_number(row[c]).has_value() && &row != &rows.front();
            std::string pad(width[c] - row[c].size(), ' ');
            line += numeric ? pad + row[c] : row[c] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + '\n';
    }
    return out;
}

}  // namespace rulekit
