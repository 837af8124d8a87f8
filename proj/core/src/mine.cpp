#include "rulekit/mine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rulekit/error.hpp"
#include "rulekit/measures.hpp"

namespace rulekit {

namespace {

/// Prefix tree of itemsets. Each node is an itemset (the path from the
/// root); children are kept sorted by item. Used for Apriori candidate
/// counting and afterwards as a support lookup table.
class PrefixTree {
  public:
    static constexpr std::uint32_t kRoot = 0;

    PrefixTree() { nodes_.push_back({0, 0, 0, {}}); }

    std::uint32_t add_child(std::uint32_t parent, ItemId item) {
        auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back({item, nodes_[parent].depth + 1, 0, {}});
        nodes_[parent].children.push_back(id);  // callers add in item order
        return id;
    }

    // Adds one to every node at `depth` whose itemset is contained in `items`.
    void count_transaction(std::span<const ItemId> items, std::uint32_t depth) {
        visit(kRoot, items, 0, depth);
    }

    // Drops depth-`depth` nodes below `min_count`; returns how many survive.
    std::size_t prune(std::uint32_t depth, std::size_t min_count) {
        std::size_t survivors = 0;
        for (auto& n : nodes_) {
            if (n.depth + 1 != depth) continue;
            std::erase_if(n.children, [&](std::uint32_t c) { return nodes_[c].count < min_count; });
            survivors += n.children.size();
        }
        return survivors;
    }

    std::optional<std::size_t> find(std::span<const ItemId> items) const {
        std::uint32_t node = kRoot;
        for (auto item : items) {
            auto c = child(node, item);
            if (!c) return std::nullopt;
            node = *c;
        }
        return nodes_[node].count;
    }

    std::optional<std::uint32_t> child(std::uint32_t node, ItemId item) const {
        const auto& ch = nodes_[node].children;
        auto it = std::lower_bound(ch.begin(), ch.end(), item,
                                   [&](std::uint32_t c, ItemId v) { return nodes_[c].item < v; });
        if (it == ch.end() || nodes_[*it].item != item) return std::nullopt;
        return *it;
    }

    const std::vector<std::uint32_t>& children(std::uint32_t node) const { return nodes_[node].children; }
    ItemId item(std::uint32_t node) const { return nodes_[node].item; }
    std::size_t count(std::uint32_t node) const { return nodes_[node].count; }
    void set_count(std::uint32_t node, std::size_t c) { nodes_[node].count = c; }
    std::uint32_t depth(std::uint32_t node) const { return nodes_[node].depth; }

    template <class Fn>
    void for_each_itemset(Fn&& fn) const {
        std::vector<ItemId> path;
        walk(kRoot, path, fn);
    }

  private:
    struct Node {
        ItemId item;
        std::uint32_t depth;
        std::size_t count;
        std::vector<std::uint32_t> children;
    };

    void visit(std::uint32_t node, std::span<const ItemId> items, std::size_t start,
               std::uint32_t target) {
        const auto& ch = nodes_[node].children;
        const std::uint32_t remaining = target - nodes_[node].depth;
        std::size_t ci = 0;
        // Merge the sorted child list against the sorted transaction.
        for (std::size_t p = start; p + remaining <= items.size() && ci < ch.size();) {
            ItemId ci_item = nodes_[ch[ci]].item;
            if (ci_item < items[p]) {
                ++ci;
            } else if (items[p] < ci_item) {
                ++p;
            } else {
                if (remaining == 1)
                    ++nodes_[ch[ci]].count;
                else
                    visit(ch[ci], items, p + 1, target);
                ++ci;
                ++p;
            }
        }
    }

    template <class Fn>
    void walk(std::uint32_t node, std::vector<ItemId>& path, Fn& fn) const {
        for (auto c : nodes_[node].children) {
            path.push_back(nodes_[c].item);
            fn(std::span<const ItemId>(path), nodes_[c].count);
            walk(c, path, fn);
            path.pop_back();
        }
    }

    std::vector<Node> nodes_;
};

void require_nonempty(const Transactions& t) {
    if (t.size() == 0) throw Error("cannot mine an empty transaction set");
}

// Adds every depth+1 candidate below the depth-`depth` nodes: two frequent
// siblings are joined, and the result is kept only if all of its
// depth-subsets are frequent. Returns the number of candidates added.
std::size_t generate_candidates(PrefixTree& tree, std::uint32_t depth) {
    std::size_t added = 0;
    std::vector<ItemId> path, sub;
    auto rec = [&](auto& self, std::uint32_t node) -> void {
        // Copies: add_child may reallocate the node storage.
        const std::vector<std::uint32_t> kids = tree.children(node);
        if (tree.depth(node) + 1 < depth) {
            for (auto c : kids) {
                path.push_back(tree.item(c));
                self(self, c);
                path.pop_back();
            }
            return;
        }
        for (std::size_t a = 0; a < kids.size(); ++a) {
            for (std::size_t b = a + 1; b < kids.size(); ++b) {
                bool all_frequent = true;
                // Subsets missing one prefix item; the two joined ones are known frequent.
                for (std::size_t skip = 0; skip < path.size() && all_frequent; ++skip) {
                    sub.clear();
                    for (std::size_t k = 0; k < path.size(); ++k)
                        if (k != skip) sub.push_back(path[k]);
                    sub.push_back(tree.item(kids[a]));
                    sub.push_back(tree.item(kids[b]));
                    all_frequent = tree.find(sub).has_value();
                }
                if (all_frequent) {
                    tree.add_child(kids[a], tree.item(kids[b]));
                    ++added;
                }
            }
        }
    };
    rec(rec, PrefixTree::kRoot);
    return added;
}

// Levelwise Apriori over lengths 1..maxlen (minlen is applied by callers).
PrefixTree mine_prefix_tree(const Transactions& t, std::size_t min_cnt, std::size_t maxlen) {
    const auto& m = t.matrix();
    PrefixTree tree;
    if (min_cnt > t.size()) return tree;

    for (ItemId i = 0; i < m.n_cols(); ++i) {
        auto c = m.column(i).size();
        if (c >= min_cnt) tree.set_count(tree.add_child(PrefixTree::kRoot, i), c);
    }
    for (std::uint32_t depth = 1; depth < maxlen; ++depth) {
        if (generate_candidates(tree, depth) == 0) break;
        for (std::size_t r = 0; r < m.n_rows(); ++r)
            if (m.row_size(r) > depth) tree.count_transaction(m.row(r), depth + 1);
        if (tree.prune(depth + 1, min_cnt) == 0) break;
    }
    return tree;
}

Itemsets make_itemsets(std::vector<std::pair<std::vector<ItemId>, std::size_t>> found,
                       const Transactions& t) {
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return itemset_less(a.first, b.first); });
    std::vector<std::vector<ItemId>> rows;
    std::vector<double> support, count;
    const double m = static_cast<double>(t.size());
    for (auto& [items, c] : found) {
        rows.push_back(std::move(items));
        support.push_back(static_cast<double>(c) / m);
        count.push_back(static_cast<double>(c));
    }
    QualityTable q(rows.size());
    q.set("support", std::move(support));
    q.set("count", std::move(count));
    return Itemsets(ItemMatrix(rows, t.item_info_ptr()), std::move(q));
}

struct RuleRow {
    std::vector<ItemId> lhs;
    ItemId rhs;
    ContingencyCounts counts;
};

Rules make_rules(std::vector<RuleRow> found, const Transactions& t) {
    std::sort(found.begin(), found.end(), [](const RuleRow& a, const RuleRow& b) {
        if (a.lhs != b.lhs) return itemset_less(a.lhs, b.lhs);
        return a.rhs < b.rhs;
    });
    std::vector<std::vector<ItemId>> lhs, rhs;
    const Measure cols[] = {Measure::support, Measure::confidence, Measure::coverage, Measure::lift,
                            Measure::count};
    std::vector<std::vector<double>> values(std::size(cols));
    for (auto& r : found) {
        for (std::size_t k = 0; k < std::size(cols); ++k)
            values[k].push_back(measure_value(cols[k], r.counts));
        lhs.push_back(std::move(r.lhs));
        rhs.push_back({r.rhs});
    }
    QualityTable q(lhs.size());
    for (std::size_t k = 0; k < std::size(cols); ++k) q.set(measure_name(cols[k]), std::move(values[k]));
    return Rules(ItemMatrix(lhs, t.item_info_ptr()), ItemMatrix(rhs, t.item_info_ptr()), std::move(q));
}

bool passes_confidence(const ContingencyCounts& c, double min_confidence) {
    return c.n_x > 0 && static_cast<double>(c.n_xy) / static_cast<double>(c.n_x) >= min_confidence;
}

void eclat_recurse(std::vector<ItemId>& prefix,
                   const std::vector<std::pair<ItemId, std::vector<RowIndex>>>& exts,
                   std::size_t min_cnt, std::size_t maxlen,
                   std::vector<std::pair<std::vector<ItemId>, std::size_t>>& out) {
    std::vector<std::pair<ItemId, std::vector<RowIndex>>> next;
    for (std::size_t i = 0; i < exts.size(); ++i) {
        prefix.push_back(exts[i].first);
        out.emplace_back(prefix, exts[i].second.size());
        if (prefix.size() < maxlen) {
            next.clear();
            for (std::size_t j = i + 1; j < exts.size(); ++j) {
                std::vector<RowIndex> tids;
                std::set_intersection(exts[i].second.begin(), exts[i].second.end(),
                                      exts[j].second.begin(), exts[j].second.end(),
                                      std::back_inserter(tids));
                if (tids.size() >= min_cnt) next.emplace_back(exts[j].first, std::move(tids));
            }
            if (!next.empty()) eclat_recurse(prefix, next, min_cnt, maxlen, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

void MiningParams::validate() const {
    if (!(support >= 0.0 && support <= 1.0)) throw Error("support must lie in [0, 1]");
    if (!(confidence >= 0.0 && confidence <= 1.0)) throw Error("confidence must lie in [0, 1]");
    if (minlen < 1) throw Error("minlen must be at least 1");
    if (maxlen < minlen) throw Error("maxlen must be at least minlen");
}

std::size_t min_count(double support, std::size_t m) {
    const double md = static_cast<double>(m);
    auto c = static_cast<std::size_t>(std::ceil(support * md));
    while (c > 0 && static_cast<double>(c - 1) / md >= support) --c;
    while (c <= m && static_cast<double>(c) / md < support) ++c;
    return std::max<std::size_t>(c, 1);
}

Itemsets apriori_itemsets(const Transactions& t, const MiningParams& p) {
    p.validate();
    require_nonempty(t);
    auto tree = mine_prefix_tree(t, min_count(p.support, t.size()), p.maxlen);
    std::vector<std::pair<std::vector<ItemId>, std::size_t>> found;
    tree.for_each_itemset([&](std::span<const ItemId> items, std::size_t c) {
        if (items.size() >= p.minlen && items.size() <= p.maxlen)
            found.emplace_back(std::vector<ItemId>(items.begin(), items.end()), c);
    });
    return make_itemsets(std::move(found), t);
}

Itemsets eclat(const Transactions& t, const MiningParams& p) {
    p.validate();
    require_nonempty(t);
    const auto min_cnt = min_count(p.support, t.size());
    const auto& m = t.matrix();
    std::vector<std::pair<ItemId, std::vector<RowIndex>>> roots;
    for (ItemId i = 0; i < m.n_cols(); ++i) {
        auto col = m.column(i);
        if (col.size() >= min_cnt) roots.emplace_back(i, std::vector<RowIndex>(col.begin(), col.end()));
    }
    std::vector<std::pair<std::vector<ItemId>, std::size_t>> found;
    std::vector<ItemId> prefix;
    eclat_recurse(prefix, roots, min_cnt, p.maxlen, found);
    std::erase_if(found, [&](const auto& f) { return f.first.size() < p.minlen; });
    return make_itemsets(std::move(found), t);
}

Rules apriori_rules(const Transactions& t, const MiningParams& p) {
    p.validate();
    require_nonempty(t);
    auto tree = mine_prefix_tree(t, min_count(p.support, t.size()), p.maxlen);
    const auto& m = t.matrix();
    std::vector<RuleRow> found;
    std::vector<ItemId> lhs;
    tree.for_each_itemset([&](std::span<const ItemId> items, std::size_t c) {
        if (items.size() < p.minlen || items.size() > p.maxlen) return;
        for (std::size_t k = 0; k < items.size(); ++k) {
            lhs.assign(items.begin(), items.end());
            lhs.erase(lhs.begin() + static_cast<std::ptrdiff_t>(k));
            ContingencyCounts cc;
            cc.m = t.size();
            cc.n_x = lhs.empty() ? t.size() : *tree.find(lhs);
            cc.n_y = m.column(items[k]).size();
            cc.n_xy = c;
            if (passes_confidence(cc, p.confidence)) found.push_back({lhs, items[k], cc});
        }
    });
    return make_rules(std::move(found), t);
}

std::variant<Itemsets, Rules> apriori(const Transactions& t, const MiningParams& p) {
    if (p.target == MiningTarget::frequent_itemsets) return apriori_itemsets(t, p);
    return apriori_rules(t, p);
}

Rules induce_rules(const Itemsets& itemsets, const Transactions& t, double min_confidence) {
    if (!(min_confidence >= 0.0 && min_confidence <= 1.0)) throw Error("confidence must lie in [0, 1]");
    if (!same_universe(itemsets.item_info_ptr(), t.item_info_ptr()))
        throw Error("itemsets and transactions use different item universes");
    const auto& m = t.matrix();
    auto unique = itemsets.items().unique_rows();
    std::vector<RuleRow> found;
    std::vector<ItemId> lhs;
    for (std::size_t i = 0; i < unique.n_rows(); ++i) {
        auto items = unique.row(i);
        if (items.empty()) continue;
        const auto n_xy = count_containing(items, m);
        for (std::size_t k = 0; k < items.size(); ++k) {
            lhs.assign(items.begin(), items.end());
            lhs.erase(lhs.begin() + static_cast<std::ptrdiff_t>(k));
            ContingencyCounts cc{t.size(), count_containing(lhs, m), m.column(items[k]).size(), n_xy};
            if (passes_confidence(cc, min_confidence)) found.push_back({lhs, items[k], cc});
        }
    }
    return make_rules(std::move(found), t);
}

}  // namespace rulekit
