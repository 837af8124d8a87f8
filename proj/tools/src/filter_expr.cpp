#include "filter_expr.hpp"

#include <cctype>
#include <cmath>

#include "rulekit/format.hpp"
#include "rulekit/item_matrix.hpp"

namespace rulekit::cli {

FilterError::FilterError(const std::string& what, std::size_t position)
    : Error("bad filter expression at position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Filter run() {
        Filter f;
        skip();
        if (done()) return f;
        f.conditions.push_back(condition());
        for (skip(); !done(); skip()) {
            if (!conjunction()) throw FilterError("expected '&' between conditions", pos_);
            skip();
            if (done()) throw FilterError("condition expected after '&'", pos_);
            f.conditions.push_back(condition());
        }
        return f;
    }

  private:
    bool done() const { return pos_ >= s_.size(); }
    char peek(std::size_t k = 0) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool conjunction() {
        if (peek() == '&') {
            pos_ += peek(1) == '&' ? 2 : 1;
            return true;
        }
        auto rest = s_.substr(pos_);
        if ((rest.starts_with("and") || rest.starts_with("AND")) &&
            (rest.size() == 3 || !std::isalnum(static_cast<unsigned char>(rest[3])))) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    std::string name() {
        const auto start = pos_;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '.')) ++pos_;
        if (pos_ == start) throw FilterError("expected a column name, lhs or rhs", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    Condition condition() {
        Condition c;
        c.position = pos_;
        auto id = name();
        skip();
        if ((id == "lhs" || id == "rhs") && peek() == '~') {
            ++pos_;
            skip();
            c.kind = id == "lhs" ? Condition::Kind::lhs_contains : Condition::Kind::rhs_contains;
            c.column = quoted();
            return c;
        }
        c.kind = Condition::Kind::compare;
        c.column = id;
        c.op = op();
        skip();
        c.value = number();
        return c;
    }

    CompareOp op() {
        const char a = peek();
        const bool eq = peek(1) == '=';
        CompareOp op;
        if (a == '<') op = eq ? CompareOp::le : CompareOp::lt;
        else if (a == '>') op = eq ? CompareOp::ge : CompareOp::gt;
        else if (a == '=' && eq) op = CompareOp::eq;
        else throw FilterError("expected one of < <= > >= ==", pos_);
        pos_ += eq ? 2 : 1;
        return op;
    }

    double number() {
        const auto start = pos_;
        while (!done() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '&') ++pos_;
        auto v = parse_number(s_.substr(start, pos_ - start));
        if (start == pos_ || !v || std::isnan(*v)) throw FilterError("expected a number", start);
        return *v;
    }

    std::string quoted() {
        const char q = peek();
        if (q != '\'' && q != '"') throw FilterError("expected a quoted string", pos_);
        const auto start = ++pos_;
        while (!done() && peek() != q) ++pos_;
        if (done()) throw FilterError("unterminated string", start - 1);
        return std::string(s_.substr(start, pos_++ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

bool compare(double x, CompareOp op, double v) {
    switch (op) {
        case CompareOp::lt: return x < v;
        case CompareOp::le: return x <= v;
        case CompareOp::gt: return x > v;
        case CompareOp::ge: return x >= v;
        case CompareOp::eq: return x == v;
    }
    return false;
}

}  // namespace

Filter parse_filter(std::string_view text) { return Parser(text).run(); }

std::vector<std::size_t> filter_indices(const Filter& f, const Rules& r) {
    std::vector<const std::vector<double>*> cols(f.conditions.size(), nullptr);
    bool need_labels = false;
    for (std::size_t k = 0; k < f.conditions.size(); ++k) {
        const auto& c = f.conditions[k];
        if (c.kind != Condition::Kind::compare) {
            need_labels = true;
            continue;
        }
        if (!r.quality().has(c.column)) throw FilterError("unknown quality column '" + c.column + "'", c.position);
        cols[k] = &r.quality().column(c.column);
    }
    std::vector<std::size_t> out;
    std::string lhs, rhs;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (need_labels) {
            lhs = itemset_label(r.lhs().row(i), r.item_info());
            rhs = itemset_label(r.rhs().row(i), r.item_info());
        }
        bool ok = true;
        for (std::size_t k = 0; k < f.conditions.size() && ok; ++k) {
            const auto& c = f.conditions[k];
            switch (c.kind) {
                case Condition::Kind::compare: ok = compare((*cols[k])[i], c.op, c.value); break;
                case Condition::Kind::lhs_contains: ok = lhs.find(c.column) != std::string::npos; break;
                case Condition::Kind::rhs_contains: ok = rhs.find(c.column) != std::string::npos; break;
            }
        }
        if (ok) out.push_back(i);
    }
    return out;
}

}  // namespace rulekit::cli
