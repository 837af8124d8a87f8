#include "rulekit/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rulekit/error.hpp"
#include "rulekit/format.hpp"
#include "rulekit/selection.hpp"

namespace rulekit {

namespace {

using json = nlohmann::ordered_json;

const std::vector<double>& need(const Rules& r, const char* name, const char* what) {
    if (!r.quality().has(name))
        throw Error(std::string(what) + " needs a '" + name + "' quality column");
    return r.quality().column(name);
}

json number(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
    if (v == std::floor(v) && std::fabs(v) < 9e15) return static_cast<long long>(v);
    return v;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Light yellow to dark red.
std::string ramp(double t) {
    if (!std::isfinite(t)) t = 1;
    t = std::clamp(t, 0.0, 1.0);
    auto mix = [t](int a, int b) { return static_cast<int>(std::lround(a + (b - a) * t)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", mix(0xff, 0xb2), mix(0xed, 0x18), mix(0xa0, 0x2b));
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (lo > hi) lo = 0, hi = 1;
        if (lo == hi) lo -= 0.5, hi += 0.5;
    }
    double unit(double v) const { return (v - lo) / (hi - lo); }
};

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

std::size_t nearest(const std::vector<double>& v, const std::vector<std::vector<double>>& feats,
                    const std::vector<std::size_t>& centers) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
        double d = sq_dist(v, feats[centers[c]]);
        if (d < best_d) best_d = d, best = c;
    }
    return best;
}

// Cluster id per feature vector.
std::vector<std::size_t> k_medoids(const std::vector<std::vector<double>>& feats, std::size_t k,
                                   std::uint64_t seed, int max_iterations) {
    const std::size_t d = feats.size();
    std::vector<std::size_t> assign(d);
    if (d <= k) {
        std::iota(assign.begin(), assign.end(), std::size_t{0});
        return assign;
    }
    auto medoids = sample_indices(d, k, seed);
    std::sort(medoids.begin(), medoids.end());
    for (int it = 0; it < max_iterations; ++it) {
        for (std::size_t i = 0; i < d; ++i) assign[i] = nearest(feats[i], feats, medoids);
        auto next = medoids;
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<double> centroid(feats[0].size(), 0.0);
            std::size_t n = 0;
            for (std::size_t i = 0; i < d; ++i)
                if (assign[i] == c) {
                    ++n;
                    for (std::size_t j = 0; j < centroid.size(); ++j) centroid[j] += feats[i][j];
                }
            if (n == 0) continue;
            for (auto& x : centroid) x /= static_cast<double>(n);
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < d; ++i)
                if (assign[i] == c) {
                    double dd = sq_dist(feats[i], centroid);
                    if (dd < best_d) best_d = dd, next[c] = i;
                }
        }
        if (next == medoids) break;
        medoids = std::move(next);
    }
    for (std::size_t i = 0; i < d; ++i) assign[i] = nearest(feats[i], feats, medoids);
    return assign;
}

std::string group_label(const RuleGroup& g, const Rules& r) {
    std::map<ItemId, std::size_t> freq;
    for (auto i : g.rules)
        for (auto it : r.lhs().row(i)) ++freq[it];
    std::vector<std::pair<ItemId, std::size_t>> items(freq.begin(), freq.end());
    std::stable_sort(items.begin(), items.end(), [](auto& a, auto& b) { return a.second > b.second; });
    std::string s = std::to_string(g.rules.size()) + (g.rules.size() == 1 ? " rule: {" : " rules: {");
    for (std::size_t i = 0; i < items.size() && i < 2; ++i) {
        if (i) s += ", ";
        s += r.item_info().label(items[i].first);
    }
    if (items.size() > 2) s += ", +" + std::to_string(items.size() - 2) + " items";
    return s + "}";
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<ScatterPoint> scatter_data(const Rules& r) {
    const auto& sup = need(r, "support", "scatter plot");
    const auto& conf = need(r, "confidence", "scatter plot");
    const auto& lift = need(r, "lift", "scatter plot");
    std::vector<ScatterPoint> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = {sup[i], conf[i], lift[i], i};
    return out;
}

std::string scatter_json(const std::vector<ScatterPoint>& points) {
    json a = json::array();
    for (const auto& p : points)
        a.push_back({{"x", number(p.x)}, {"y", number(p.y)}, {"shade", number(p.shade)}, {"rule_index", p.rule_index}});
    return a.dump();
}

std::string scatter_svg(const Rules& r, int width, int height) {
    auto pts = scatter_data(r);
    auto names = labels(r);
    Range xr, yr, sr;
    for (const auto& p : pts) xr.add(p.x), yr.add(p.y), sr.add(p.shade);
    xr.finish(), yr.finish(), sr.finish();

    const double left = 70, right = 110, top = 20, bottom = 50;
    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double v) { return left + xr.unit(v) * pw; };
    auto py = [&](double v) { return top + (1 - yr.unit(v)) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        double fx = xr.lo + (xr.hi - xr.lo) * t / 4, fy = yr.lo + (yr.hi - yr.lo) * t / 4;
        o << "<text class=\"tick\" x=\"" << px(fx) << "\" y=\"" << top + ph + 15 << "\" text-anchor=\"middle\">"
          << fmt(fx) << "</text>\n";
        o << "<text class=\"tick\" x=\"" << left - 6 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">"
          << fmt(fy) << "</text>\n";
    }
    o << "<text class=\"axis-label\" x=\"" << left + pw / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\">support</text>\n";
    o << "<text class=\"axis-label\" transform=\"translate(16," << top + ph / 2
      << ") rotate(-90)\" text-anchor=\"middle\">confidence</text>\n";
    o << "<g class=\"rules\">\n";
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
        o << "<circle class=\"rule\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\""
          << ramp(sr.unit(p.shade)) << "\" fill-opacity=\"0.8\"><title>" << xml_escape(names[p.rule_index])
          << "</title></circle>\n";
    }
    o << "</g>\n";
    const double lx = width - right + 30, lh = ph * 0.6;
    o << "<g class=\"legend\">\n<text x=\"" << lx << "\" y=\"" << top + 10 << "\">lift</text>\n";
    for (int s = 0; s < 20; ++s)
        o << "<rect x=\"" << lx << "\" y=\"" << top + 20 + lh * s / 20 << "\" width=\"14\" height=\"" << lh / 20 + 0.5
          << "\" fill=\"" << ramp(1 - s / 19.0) << "\"/>\n";
    o << "<text x=\"" << lx + 20 << "\" y=\"" << top + 30 << "\">" << fmt(sr.hi) << "</text>\n";
    o << "<text x=\"" << lx + 20 << "\" y=\"" << top + 20 + lh << "\">" << fmt(sr.lo) << "</text>\n</g>\n";
    o << "</svg>\n";
    return o.str();
}

GroupedMatrix grouped_matrix(const Rules& r, std::size_t k, std::uint64_t seed, int max_iterations) {
    if (k == 0) throw Error("number of groups must be positive");
    const auto& lift = need(r, "lift", "grouped matrix");
    const auto& sup = need(r, "support", "grouped matrix");

    GroupedMatrix g;
    std::map<ItemId, std::size_t> rhs_pos;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (auto it : r.rhs().row(i)) rhs_pos.emplace(it, 0);
    for (auto& [item, pos] : rhs_pos) {
        pos = g.rhs_items.size();
        g.rhs_items.push_back(item);
    }

    auto lhs_less = [](const std::vector<ItemId>& a, const std::vector<ItemId>& b) { return itemset_less(a, b); };
    std::map<std::vector<ItemId>, std::size_t, decltype(lhs_less)> lhs_pos(lhs_less);
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto row = r.lhs().row(i);
        lhs_pos.emplace(std::vector<ItemId>(row.begin(), row.end()), 0);
    }
    std::vector<std::vector<ItemId>> distinct;
    for (auto& [items, pos] : lhs_pos) {
        pos = distinct.size();
        distinct.push_back(items);
    }
    std::vector<std::size_t> rule_lhs(r.size());
    std::vector<std::vector<double>> feats(distinct.size(), std::vector<double>(g.rhs_items.size(), 0.0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        auto row = r.lhs().row(i);
        rule_lhs[i] = lhs_pos.at(std::vector<ItemId>(row.begin(), row.end()));
        double l = std::isfinite(lift[i]) ? lift[i] : 0.0;
        for (auto it : r.rhs().row(i)) {
            auto& cell = feats[rule_lhs[i]][rhs_pos.at(it)];
            cell = std::max(cell, l);
        }
    }
    if (distinct.empty()) return g;

    auto assign = k_medoids(feats, k, seed, max_iterations);
    const std::size_t n_clusters = *std::max_element(assign.begin(), assign.end()) + 1;
    std::vector<RuleGroup> groups(n_clusters);
    for (std::size_t d = 0; d < distinct.size(); ++d) groups[assign[d]].lhs.push_back(distinct[d]);
    for (std::size_t i = 0; i < r.size(); ++i) groups[assign[rule_lhs[i]]].rules.push_back(i);

    std::erase_if(groups, [](const RuleGroup& x) { return x.rules.empty(); });
    for (auto& grp : groups) {
        grp.max_lift = -std::numeric_limits<double>::infinity();
        std::map<ItemId, GroupedCell> cells;
        for (auto i : grp.rules) {
            if (!std::isnan(lift[i])) grp.max_lift = std::max(grp.max_lift, lift[i]);
            for (auto it : r.rhs().row(i)) {
                auto& c = cells[it];
                c.rhs = it;
                ++c.n_rules;
                c.lift += lift[i];
                c.support += sup[i];
            }
        }
        for (auto& [it, c] : cells) {
            c.lift /= static_cast<double>(c.n_rules);
            c.support /= static_cast<double>(c.n_rules);
            grp.cells.push_back(c);
        }
        grp.label = group_label(grp, r);
    }
    std::stable_sort(groups.begin(), groups.end(), [](const RuleGroup& a, const RuleGroup& b) {
        if (a.max_lift != b.max_lift) return a.max_lift > b.max_lift;
        return a.rules.front() < b.rules.front();
    });
    g.groups = std::move(groups);
    return g;
}

std::string grouped_json(const GroupedMatrix& g, const ItemInfo& info) {
    json rhs = json::array();
    for (auto it : g.rhs_items) rhs.push_back(info.label(it));
    json groups = json::array();
    for (const auto& grp : g.groups) {
        json cells = json::array();
        for (const auto& c : grp.cells)
            cells.push_back({{"rhs", info.label(c.rhs)},
                             {"n_rules", c.n_rules},
                             {"lift", number(c.lift)},
                             {"support", number(c.support)}});
        groups.push_back({{"label", grp.label},
                          {"n_rules", grp.rules.size()},
                          {"rules", grp.rules},
                          {"max_lift", number(grp.max_lift)},
                          {"cells", cells}});
    }
    return json{{"rhs", rhs}, {"groups", groups}}.dump();
}

std::string grouped_svg(const GroupedMatrix& g, const ItemInfo& info, int width, int height) {
    const double left = 160, top = 20, bottom = 220, right = 20;
    const double pw = width - left - right, ph = height - top - bottom;
    const std::size_t nc = std::max<std::size_t>(g.groups.size(), 1), nr = std::max<std::size_t>(g.rhs_items.size(), 1);
    const double cw = pw / static_cast<double>(nc), rh = ph / static_cast<double>(nr);
    std::map<ItemId, std::size_t> row_of;
    for (std::size_t i = 0; i < g.rhs_items.size(); ++i) row_of[g.rhs_items[i]] = i;

    Range lr, sr;
    for (const auto& grp : g.groups)
        for (const auto& c : grp.cells) lr.add(c.lift), sr.add(c.support);
    lr.finish(), sr.finish();
    const double rmax = std::max(2.0, std::min(cw, rh) / 2 - 1);

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
    for (std::size_t i = 0; i < g.rhs_items.size(); ++i)
        o << "<text class=\"rhs\" x=\"" << left - 6 << "\" y=\"" << top + rh * (i + 0.5) + 3
          << "\" text-anchor=\"end\">" << xml_escape(info.label(g.rhs_items[i])) << "</text>\n";
    for (std::size_t j = 0; j < g.groups.size(); ++j) {
        const auto& grp = g.groups[j];
        const double cx = left + cw * (j + 0.5);
        o << "<text class=\"group\" transform=\"translate(" << cx << "," << top + ph + 8
          << ") rotate(60)\">" << xml_escape(grp.label) << "</text>\n";
        for (const auto& c : grp.cells) {
            const double rad = 1.5 + (rmax - 1.5) * std::sqrt(std::clamp(sr.unit(c.support), 0.0, 1.0));
            o << "<circle class=\"cell\" cx=\"" << cx << "\" cy=\"" << top + rh * (row_of[c.rhs] + 0.5) << "\" r=\""
              << rad << "\" fill=\"" << ramp(lr.unit(c.lift)) << "\"><title>" << xml_escape(grp.label) << " => "
              << xml_escape(info.label(c.rhs)) << " lift " << fmt(c.lift) << "</title></circle>\n";
        }
    }
    o << "<text x=\"" << left << "\" y=\"" << height - 6 << "\">size: support, color: lift</text>\n";
    o << "</svg>\n";
    return o.str();
}

RuleGraph rule_graph(const Rules& r, std::size_t cap) {
    if (r.size() > cap)
        throw Error("rule set has " + std::to_string(r.size()) + " rules but the graph is limited to " +
                    std::to_string(cap) + "; filter or sort and truncate the rules first");
    const bool has_sup = r.quality().has("support"), has_lift = r.quality().has("lift");
    auto names = labels(r);
    RuleGraph g;
    std::vector<bool> seen(r.item_info().size(), false);
    auto item_node = [&](ItemId it) {
        std::string id = "i" + std::to_string(it);
        if (!seen[it]) {
            seen[it] = true;
            g.nodes.push_back({id, GraphNode::Kind::item, r.item_info().label(it), std::nullopt, std::nullopt});
        }
        return id;
    };
    for (std::size_t i = 0; i < r.size(); ++i) {
        GraphNode n{"r" + std::to_string(i), GraphNode::Kind::rule, names[i], std::nullopt, std::nullopt};
        if (has_sup) n.support = r.quality().column("support")[i];
        if (has_lift) n.lift = r.quality().column("lift")[i];
        g.nodes.push_back(n);
        for (auto it : r.lhs().row(i)) g.edges.push_back({item_node(it), n.id});
        for (auto it : r.rhs().row(i)) g.edges.push_back({n.id, item_node(it)});
    }
    return g;
}

std::string graph_json(const RuleGraph& g) {
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json o;
        o["id"] = n.id;
        o["kind"] = n.kind == GraphNode::Kind::item ? "item" : "rule";
        if (n.support) o["support"] = number(*n.support);
        if (n.lift) o["lift"] = number(*n.lift);
        o["label"] = n.label;
        nodes.push_back(std::move(o));
    }
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}});
    return json{{"nodes", nodes}, {"edges", edges}}.dump();
}

std::string graph_dot(const RuleGraph& g) {
    Range lr;
    for (const auto& n : g.nodes)
        if (n.lift) lr.add(*n.lift);
    lr.finish();
    std::ostringstream o;
    o << "digraph rules {\n  rankdir=LR;\n";
    for (const auto& n : g.nodes) {
        o << "  " << dot_quote(n.id) << " [";
        if (n.kind == GraphNode::Kind::item) {
            o << "shape=box, label=" << dot_quote(n.label);
        } else {
            std::string tip = n.label;
            if (n.support) tip += " support=" + format_rounded(*n.support, 3);
            if (n.lift) tip += " lift=" + format_rounded(*n.lift, 3);
            o << "shape=circle, label=\"\", style=filled, fillcolor=" << dot_quote(ramp(n.lift ? lr.unit(*n.lift) : 0.5))
              << ", tooltip=" << dot_quote(tip);
        }
        o << "];\n";
    }
    for (const auto& e : g.edges) o << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to) << ";\n";
    o << "}\n";
    return o.str();
}

std::string graph_data(const Rules& r, GraphFormat format, std::size_t cap) {
    auto g = rule_graph(r, cap);
    return format == GraphFormat::json ? graph_json(g) : graph_dot(g);
}

}  // namespace rulekit
