#include "commands.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "artifact.hpp"
#include "filter_expr.hpp"
#include "rulekit/ingest.hpp"
#include "rulekit/io.hpp"
#include "rulekit/mine.hpp"
#include "rulekit/selection.hpp"
#include "rulekit/viz.hpp"
#include "server.hpp"

namespace rulekit::cli {

namespace fs = std::filesystem;

namespace {

struct PortBusy : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    o << text;
    if (!o) throw std::runtime_error("cannot write " + path.string());
}

std::string lower_ext(const fs::path& p) {
    auto e = p.extension().string();
    for (auto& c : e) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return e;
}

struct ConvertOpts {
    std::string csv, out, columns;
};

struct MineOpts {
    std::string in, out, target = "rules", algorithm = "apriori";
    MiningParams params;
};

struct FilterOpts {
    std::string in, out, expr;
};

struct InspectOpts {
    std::string in, sort, format = "table";
    bool ascending = false;
    std::size_t top = 0;
    int digits = 2;
};

struct PlotOpts {
    std::string in, out, method;
    std::size_t k = 20, cap = kDefaultGraphCap;
    std::uint64_t seed = 42;
    int width = 0, height = 0;
};

struct ServeOpts {
    std::string in, host = "127.0.0.1";
    int port = 8080;
};

void cmd_convert(const ConvertOpts& o, std::ostream& out) {
    ColumnSpecs specs;
    if (!o.columns.empty()) specs = parse_column_specs(slurp(o.columns));
    auto t = transactions_from_table(read_csv_file(o.csv), specs);
    write_artifact(o.out, t);
    out << "wrote " << t.size() << " transactions over " << t.n_items() << " items to " << o.out << "\n";
}

void cmd_mine(MineOpts o, std::ostream& out) {
    auto t = read_transactions(o.in);
    if (t.size() == 0) throw Error("cannot mine an empty transaction set");
    o.params.target = o.target == "rules" ? MiningTarget::rules : MiningTarget::frequent_itemsets;
    o.params.validate();
    if (o.params.target == MiningTarget::frequent_itemsets) {
        auto s = o.algorithm == "eclat" ? eclat(t, o.params) : apriori_itemsets(t, o.params);
        write_artifact(o.out, s);
        out << "wrote " << s.size() << " itemsets to " << o.out << "\n";
        return;
    }
    Rules r;
    if (o.algorithm == "eclat") {
        auto ip = o.params;
        ip.target = MiningTarget::frequent_itemsets;
        r = induce_rules(eclat(t, ip), t, o.params.confidence);
    } else {
        r = apriori_rules(t, o.params);
    }
    write_artifact(o.out, r);
    out << "wrote " << r.size() << " rules to " << o.out << "\n";
}

void cmd_filter(const FilterOpts& o, std::ostream& out) {
    auto f = parse_filter(o.expr);
    auto r = read_rules(o.in);
    auto kept = r.select(filter_indices(f, r));
    write_artifact(o.out, kept);
    out << "kept " << kept.size() << " of " << r.size() << " rules in " << o.out << "\n";
}

std::string export_associations(const Rules& r, ExportFormat f) { return export_rules(r, f); }
std::string export_associations(const Itemsets& s, ExportFormat f) { return export_itemsets(s, f); }

template <class Assoc>
void inspect(const Assoc& a, const InspectOpts& o, std::ostream& out) {
    auto s = o.sort.empty() ? a : sort_by(a, o.sort, !o.ascending);
    if (o.top > 0 && o.top < s.size()) s = select_range(s, 0, o.top);
    if (o.format == "csv") out << export_associations(s, ExportFormat::csv);
    else if (o.format == "json") out << export_associations(s, ExportFormat::json) << "\n";
    else out << format_table(render(s, o.digits));
}

void cmd_inspect(const InspectOpts& o, std::ostream& out) {
    std::visit([&](const auto& a) { inspect(a, o, out); }, read_associations(o.in));
}

void cmd_plot(const PlotOpts& o, std::ostream& out) {
    auto r = read_rules(o.in);
    const auto ext = lower_ext(o.out);
    std::string text;
    if (o.method == "scatter") {
        if (ext == ".json") text = scatter_json(scatter_data(r));
        else if (ext == ".svg") text = scatter_svg(r, o.width ? o.width : 640, o.height ? o.height : 480);
        else throw Error("scatter plots are written as .svg or .json");
    } else if (o.method == "grouped") {
        auto g = grouped_matrix(r, o.k, o.seed);
        if (ext == ".json") text = grouped_json(g, r.item_info());
        else if (ext == ".svg") text = grouped_svg(g, r.item_info(), o.width ? o.width : 900, o.height ? o.height : 600);
        else throw Error("grouped plots are written as .svg or .json");
    } else {
        if (ext == ".json") text = graph_data(r, GraphFormat::json, o.cap);
        else if (ext == ".dot" || ext == ".gv") text = graph_data(r, GraphFormat::dot, o.cap);
        else throw Error("graphs are written as .json or .dot");
    }
    write_file(o.out, text);
    out << "wrote " << o.method << " plot of " << r.size() << " rules to " << o.out << "\n";
}

void cmd_serve(const ServeOpts& o, std::ostream& out) {
    ApiServer server(RuleStore(read_rules(o.in)));
    if (!server.bind(o.host, o.port)) throw PortBusy("port " + std::to_string(o.port) + " is busy");
    out << "serving on http://" << o.host << ":" << o.port << "\n" << std::flush;
    if (!server.listen()) throw std::runtime_error("server stopped unexpectedly");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Association rule mining toolkit", "rulekit"};
    app.require_subcommand(1);

    ConvertOpts conv;
    auto* c = app.add_subcommand("convert", "CSV table to a transactions artifact");
    c->add_option("csv", conv.csv, "input CSV")->required();
    c->add_option("-o,--out", conv.out, "artifact directory")->required();
    c->add_option("--columns", conv.columns, "JSON column specs");

    MineOpts mine;
    auto* m = app.add_subcommand("mine", "frequent itemsets or rules from transactions");
    m->add_option("transactions", mine.in)->required();
    m->add_option("-o,--out", mine.out)->required();
    m->add_option("-s,--support", mine.params.support)->capture_default_str();
    m->add_option("-c,--confidence", mine.params.confidence)->capture_default_str();
    m->add_option("--minlen", mine.params.minlen)->capture_default_str();
    m->add_option("--maxlen", mine.params.maxlen)->capture_default_str();
    m->add_option("--target", mine.target)->check(CLI::IsMember({"rules", "itemsets"}))->capture_default_str();
    m->add_option("--algorithm", mine.algorithm)->check(CLI::IsMember({"apriori", "eclat"}))->capture_default_str();

    FilterOpts filt;
    auto* f = app.add_subcommand("filter", "keep rules matching an expression");
    f->add_option("rules", filt.in)->required();
    f->add_option("-e,--expr", filt.expr, "e.g. \"lift > 2 & rhs~'type='\"")->required();
    f->add_option("-o,--out", filt.out)->required();

    InspectOpts insp;
    auto* i = app.add_subcommand("inspect", "print rules or itemsets");
    i->add_option("artifact", insp.in)->required();
    i->add_option("--sort", insp.sort, "quality column, descending unless --asc");
    i->add_flag("--asc", insp.ascending);
    i->add_option("--top", insp.top);
    i->add_option("--format", insp.format)->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
    i->add_option("--digits", insp.digits)->capture_default_str();

    PlotOpts plot;
    auto* p = app.add_subcommand("plot", "scatter, grouped matrix or graph; format from the output extension");
    p->add_option("rules", plot.in)->required();
    p->add_option("--method", plot.method)->required()->check(CLI::IsMember({"scatter", "grouped", "graph"}));
    p->add_option("-o,--out", plot.out)->required();
    p->add_option("-k,--groups", plot.k)->capture_default_str();
    p->add_option("--seed", plot.seed)->capture_default_str();
    p->add_option("--cap", plot.cap, "maximum rules in a graph")->capture_default_str();
    p->add_option("--width", plot.width);
    p->add_option("--height", plot.height);

    ServeOpts serve;
    auto* s = app.add_subcommand("serve", "JSON API over a rules artifact");
    s->add_option("rules", serve.in)->required();
    s->add_option("--host", serve.host)->capture_default_str();
    s->add_option("-p,--port", serve.port)->check(CLI::Range(1, 65535))->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*c) cmd_convert(conv, out);
        else if (*m) cmd_mine(mine, out);
        else if (*f) cmd_filter(filt, out);
        else if (*i) cmd_inspect(insp, out);
        else if (*p) cmd_plot(plot, out);
        else if (*s) cmd_serve(serve, out);
        return kOk;
    } catch (const PortBusy& e) {
        err << "rulekit: " << e.what() << "\n";
        return kPortBusy;
    } catch (const Error& e) {
        err << "rulekit: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "rulekit: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace rulekit::cli
