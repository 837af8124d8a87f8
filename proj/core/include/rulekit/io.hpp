#ifndef RULEKIT_IO_HPP
#define RULEKIT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rulekit/associations.hpp"
#include "rulekit/item_matrix.hpp"

namespace rulekit {

// --- item matrices -------------------------------------------------------

// Header row of item labels, then one 0/1 row per matrix row.
std::string dense_csv(const ItemMatrix& m);
// Header "row,col", then one zero-based (row, col) pair per stored element.
std::string triplets_csv(const ItemMatrix& m);
ItemMatrix matrix_from_triplets_csv(std::string_view text, std::size_t n_rows, ItemInfoPtr info);
// JSON array of arrays of item labels.
std::string label_sets_json(const ItemMatrix& m);
ItemMatrix matrix_from_label_sets_json(std::string_view text, ItemInfoPtr info);

// JSON array of {"label", "variable", "level"} objects.
std::string item_info_json(const ItemInfo& info);
ItemInfo item_info_from_json(std::string_view text);

// --- quality tables ------------------------------------------------------

// Header of column names, numbers in round-trip form (Inf, NA for NaN).
std::string quality_csv(const QualityTable& q);
QualityTable quality_from_csv(std::string_view text, std::size_t n_rows);

// --- association sets ----------------------------------------------------

enum class ExportFormat { csv, json };

// CSV: LHS,RHS (or items), then support, confidence, coverage, lift, count
// when present, then any other quality columns in table order.
// JSON: array of objects with "lhs"/"rhs" (or "items") label arrays and
// one key per quality column in the same order. Integral values print
// without a fraction, infinities as the string "Inf", NaN as null.
std::string export_rules(const Rules& r, ExportFormat format);
std::string export_itemsets(const Itemsets& s, ExportFormat format);

Rules rules_from_json(std::string_view text, ItemInfoPtr info);
Itemsets itemsets_from_json(std::string_view text, ItemInfoPtr info);

// Quality columns in export order.
std::vector<std::string> export_column_order(const QualityTable& q);

// Header plus one row per rule: LHS, RHS and every quality column in
// export order, numbers rounded to `digits` decimals (count as integer).
std::vector<std::vector<std::string>> render(const Rules& r, int digits = 2);
std::vector<std::vector<std::string>> render(const Itemsets& s, int digits = 2);

// Space-padded text table; the first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace rulekit

#endif  // RULEKIT_IO_HPP
