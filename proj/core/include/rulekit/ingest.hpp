#ifndef RULEKIT_INGEST_HPP
#define RULEKIT_INGEST_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rulekit/transactions.hpp"

namespace rulekit {

// Column-oriented table of raw cell text. A missing (empty) cell is nullopt.
struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<std::optional<std::string>>> columns;

    std::size_t n_rows() const { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t n_cols() const { return names.size(); }
};

// RFC 4180 CSV with a header row. Quoted fields may contain separators,
// doubled quotes and line breaks. Throws on ragged rows.
Table read_csv(std::istream& in);
Table read_csv_file(const std::string& path);

// Writes fields, quoting only where needed.
std::string csv_escape(std::string_view field);

enum class DiscretizeMethod { frequency, interval, fixed };

struct Discretization {
    DiscretizeMethod method = DiscretizeMethod::frequency;
    int bins = 3;
    std::vector<double> breaks;  // fixed method only

    void validate() const;
};

struct DiscretizeResult {
    std::vector<double> breaks;              // bins + 1 strictly increasing cut points
    std::vector<std::string> interval_labels;  // "[lo,hi)" ... last "[lo,hi]"
    std::vector<std::size_t> bin_of_value;     // one bin index per input value

    std::size_t n_bins() const { return interval_labels.size(); }
    std::vector<std::string> value_labels() const;
};

// Maps every value to a half-open interval [lo,hi); the last interval is
// closed. Frequency breaks are sample quantiles (linear interpolation
// between order statistics); duplicate quantiles are merged.
DiscretizeResult discretize(std::span<const double> values, const Discretization& how);

enum class ColumnKind { boolean, numeric, nominal };

struct ColumnSpec {
    std::string name;
    std::optional<ColumnKind> kind;  // inferred when absent
    Discretization discretization;
};

using ColumnSpecs = std::map<std::string, ColumnSpec>;

// Parses a JSON object mapping column name to
// {"kind": "boolean"|"numeric"|"nominal", "method": "frequency"|"interval"|"fixed",
//  "bins": n, "breaks": [..]}.
ColumnSpecs parse_column_specs(const std::string& json_text);

// True/False/TRUE/FALSE/true/false/1/0.
std::optional<bool> parse_boolean(std::string_view s);

ColumnKind infer_kind(const std::vector<std::optional<std::string>>& cells);

// Converts a table into transactions: boolean columns become one item,
// numeric columns one item per interval, nominal columns one item per
// level (levels in sorted order). Items follow column order.
Transactions transactions_from_table(const Table& table, const ColumnSpecs& specs = {});

// Each (transaction, item) bit is set independently with probability
// `density`. Items are labelled item1..itemN.
Transactions random_transactions(std::size_t n_items, std::size_t n_trans, double density,
                                 std::uint64_t seed);

}  // namespace rulekit

#endif  // RULEKIT_INGEST_HPP
