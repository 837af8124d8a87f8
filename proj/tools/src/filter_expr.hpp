#ifndef RULEKIT_TOOLS_FILTER_EXPR_HPP
#define RULEKIT_TOOLS_FILTER_EXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rulekit/associations.hpp"
#include "rulekit/error.hpp"

namespace rulekit::cli {

class FilterError : public Error {
  public:
    FilterError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

enum class CompareOp { lt, le, gt, ge, eq };

struct Condition {
    enum class Kind { compare, lhs_contains, rhs_contains };
    Kind kind = Kind::compare;
    std::string column;  // quality column, or the substring for containment
    CompareOp op = CompareOp::ge;
    double value = 0;
    std::size_t position = 0;
};

// Conjunction of conditions; empty matches everything.
struct Filter {
    std::vector<Condition> conditions;
};

//   expr  := cond ( ('&' | '&&' | 'and') cond )*
//   cond  := name op number | ('lhs' | 'rhs') '~' string
//   op    := '<' | '<=' | '>' | '>=' | '=='
// Strings take single or double quotes. Containment tests the rendered
// itemset label, e.g. "{hair,milk}".
Filter parse_filter(std::string_view text);

// Indices of matching rules, in order. Unknown quality columns raise
// FilterError at the column's position.
std::vector<std::size_t> filter_indices(const Filter& f, const Rules& r);

}  // namespace rulekit::cli

#endif
