#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "rulekit/item_info.hpp"

namespace oracle {

using namespace rulekit;

Transactions random_instance(std::mt19937_64& rng, std::size_t n_items, std::size_t n_trans, double density) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n_items; ++i) labels.push_back(i < 26 ? std::string(1, char('a' + i)) : "x" + std::to_string(i));
    auto info = make_item_info(ItemInfo::from_labels(labels));
    std::bernoulli_distribution bit(density);
    std::vector<std::vector<ItemId>> rows(n_trans);
    for (auto& r : rows)
        for (ItemId c = 0; c < n_items; ++c)
            if (bit(rng)) r.push_back(c);
    return Transactions(ItemMatrix(std::move(rows), info));
}

bool contains(const std::vector<ItemId>& row, const Set& s) {
    for (auto x : s)
        if (std::find(row.begin(), row.end(), x) == row.end()) return false;
    return true;
}

std::size_t count(const Transactions& t, const Set& s) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
        auto row = t.matrix().row(r);
        n += contains({row.begin(), row.end()}, s);
    }
    return n;
}

namespace {

std::vector<Set> all_subsets(std::size_t n_items) {
    std::vector<Set> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_items); ++mask) {
        Set s;
        for (ItemId i = 0; i < n_items; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace

std::vector<CountedSet> all_frequent(const Transactions& t, std::size_t min_count, std::size_t minlen,
                                     std::size_t maxlen) {
    std::vector<CountedSet> out;
    for (auto& s : all_subsets(t.n_items())) {
        if (s.size() < minlen || s.size() > maxlen) continue;
        auto c = count(t, s);
        if (c >= min_count) out.push_back({s, c});
    }
    return out;
}

std::vector<CountedRule> all_rules(const Transactions& t, std::size_t min_count, double min_conf,
                                   std::size_t minlen, std::size_t maxlen) {
    std::vector<CountedRule> out;
    for (auto& z : all_frequent(t, min_count, std::max<std::size_t>(minlen, 1), maxlen))
        for (auto y : z.items) {
            Set x;
            for (auto i : z.items)
                if (i != y) x.push_back(i);
            auto n_x = count(t, x);
            if (static_cast<double>(z.count) / static_cast<double>(n_x) >= min_conf)
                out.push_back({x, y, z.count, n_x, count(t, {y})});
        }
    return out;
}

std::size_t min_count(double support, std::size_t m) {
    std::size_t c = 0;
    while (c <= m && static_cast<double>(c) / static_cast<double>(m) < support) ++c;
    return std::max<std::size_t>(c, 1);
}

std::vector<CountedSet> as_counted(const Itemsets& s) {
    const auto& cnt = s.quality().column("count");
    std::vector<CountedSet> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto row = s.items().row(i);
        out.push_back({{row.begin(), row.end()}, static_cast<std::size_t>(cnt[i])});
    }
    return out;
}

std::vector<bool> closed(const ItemMatrix& sets, const Transactions& t) {
    auto universe = all_subsets(t.n_items());
    std::vector<bool> out;
    for (std::size_t i = 0; i < sets.n_rows(); ++i) {
        Set x(sets.row(i).begin(), sets.row(i).end());
        auto cx = count(t, x);
        bool ok = true;
        for (auto& y : universe)
            if (y.size() > x.size() && contains(y, x) && count(t, y) == cx) {
                ok = false;
                break;
            }
        out.push_back(ok);
    }
    return out;
}

std::vector<bool> generator(const ItemMatrix& sets, const Transactions& t) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < sets.n_rows(); ++i) {
        Set x(sets.row(i).begin(), sets.row(i).end());
        auto cx = count(t, x);
        bool ok = true;
        for (std::uint64_t mask = 0; ok && mask + 1 < (std::uint64_t{1} << x.size()); ++mask) {
            Set y;
            for (std::size_t b = 0; b < x.size(); ++b)
                if (mask >> b & 1) y.push_back(x[b]);
            if (count(t, y) == cx) ok = false;
        }
        out.push_back(ok);
    }
    return out;
}

std::vector<bool> maximal(const ItemMatrix& sets) {
    std::vector<bool> out;
    for (std::size_t i = 0; i < sets.n_rows(); ++i) {
        Set x(sets.row(i).begin(), sets.row(i).end());
        bool ok = true;
        for (std::size_t j = 0; j < sets.n_rows() && ok; ++j) {
            Set y(sets.row(j).begin(), sets.row(j).end());
            if (y.size() > x.size() && contains(y, x)) ok = false;
        }
        out.push_back(ok);
    }
    return out;
}

std::vector<bool> redundant(const Rules& r) {
    const auto& conf = r.quality().column("confidence");
    std::vector<bool> out(r.size(), false);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Set li(r.lhs().row(i).begin(), r.lhs().row(i).end());
        Set ri(r.rhs().row(i).begin(), r.rhs().row(i).end());
        for (std::size_t j = 0; j < r.size(); ++j) {
            Set lj(r.lhs().row(j).begin(), r.lhs().row(j).end());
            Set rj(r.rhs().row(j).begin(), r.rhs().row(j).end());
            if (rj == ri && lj.size() < li.size() && contains(li, lj) && conf[j] >= conf[i]) {
                out[i] = true;
                break;
            }
        }
    }
    return out;
}

std::uint64_t choose(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    // Exact at every step: c * (n - k + i) is divisible by i.
    for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

double hypergeometric_upper_tail(unsigned m, unsigned n_x, unsigned n_y, unsigned n_xy) {
    std::uint64_t num = 0;
    for (unsigned k = n_xy; k <= std::min(n_x, n_y); ++k) num += choose(n_y, k) * choose(m - n_y, n_x - k);
    return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(choose(m, n_x)));
}

double quantile7(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

namespace {

class DotChecker {
  public:
    explicit DotChecker(std::string_view s) : s_(s) {}

    bool run(std::string* why) {
        try {
            graph();
            ws();
            if (i_ != s_.size()) fail("trailing input");
            return true;
        } catch (const std::string& e) {
            if (why) *why = e + " at " + std::to_string(i_);
            return false;
        }
    }

  private:
    [[noreturn]] void fail(const std::string& e) { throw e; }

    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool lit(std::string_view w) {
        ws();
        if (s_.substr(i_, w.size()) != w) return false;
        i_ += w.size();
        return true;
    }
    bool keyword(std::string_view w) {
        ws();
        if (s_.substr(i_, w.size()) != w) return false;
        auto after = i_ + w.size();
        if (after < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
            return false;
        i_ = after;
        return true;
    }

    bool id() {
        ws();
        if (i_ >= s_.size()) return false;
        const char c = s_[i_];
        if (c == '"') {
            for (++i_; i_ < s_.size() && s_[i_] != '"'; ++i_)
                if (s_[i_] == '\\') ++i_;
            if (i_ >= s_.size()) fail("unterminated string");
            ++i_;
            return true;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return true;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.') {
            ++i_;
            while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
            return true;
        }
        return false;
    }

    void attr_list() {
        while (lit("[")) {
            while (!lit("]")) {
                if (!id()) fail("attribute name expected");
                if (!lit("=")) fail("'=' expected");
                if (!id()) fail("attribute value expected");
                lit(",") || lit(";");
            }
        }
    }

    void stmt() {
        if (keyword("graph") || keyword("node") || keyword("edge")) {
            attr_list();
            return;
        }
        if (!id()) fail("statement expected");
        if (lit("=")) {
            if (!id()) fail("value expected");
            return;
        }
        while (lit(directed_ ? "->" : "--"))
            if (!id()) fail("edge target expected");
        attr_list();
    }

    void graph() {
        keyword("strict");
        if (keyword("digraph")) directed_ = true;
        else if (!keyword("graph")) fail("graph or digraph expected");
        id();
        if (!lit("{")) fail("'{' expected");
        while (!lit("}")) {
            stmt();
            lit(";");
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
    bool directed_ = false;
};

}  // namespace

bool is_valid_dot(std::string_view text, std::string* why) { return DotChecker(text).run(why); }

}  // namespace oracle
