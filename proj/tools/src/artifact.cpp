#include "artifact.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rulekit/io.hpp"

namespace rulekit::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void put(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + p.string());
}

std::string get(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ArtifactError("artifact file missing: " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void begin(const fs::path& dir, ArtifactKind kind, std::size_t n_rows, const ItemInfo& info) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    json m;
    m["format"] = kArtifactFormat;
    m["version"] = kArtifactVersion;
    m["kind"] = kind_name(kind);
    m["n_rows"] = n_rows;
    m["n_items"] = info.size();
    put(dir / "manifest.json", m.dump(2) + "\n");
    put(dir / "items.json", item_info_json(info) + "\n");
}

struct Manifest {
    ArtifactKind kind;
    std::size_t n_rows;
    ItemInfoPtr info;
};

Manifest open(const fs::path& dir, std::optional<ArtifactKind> want) {
    if (!fs::is_directory(dir)) throw ArtifactError("not an artifact directory: " + dir.string());
    json m;
    try {
        m = json::parse(get(dir / "manifest.json"));
        if (m.at("format").get<std::string>() != kArtifactFormat) throw ArtifactError("unknown artifact format");
        if (m.at("version").get<int>() != kArtifactVersion)
            throw ArtifactError("unsupported artifact version " + m.at("version").dump());
    } catch (const json::exception& e) {
        throw ArtifactError("malformed manifest in " + dir.string() + ": " + e.what());
    }
    Manifest out{};
    try {
        auto k = m.at("kind").get<std::string>();
        if (k == "transactions") out.kind = ArtifactKind::transactions;
        else if (k == "itemsets") out.kind = ArtifactKind::itemsets;
        else if (k == "rules") out.kind = ArtifactKind::rules;
        else throw ArtifactError("unknown artifact kind '" + k + "'");
        out.n_rows = m.at("n_rows").get<std::size_t>();
        if (want && *want != out.kind)
            throw ArtifactError(dir.string() + " holds " + k + ", expected " + kind_name(*want));
        out.info = make_item_info(item_info_from_json(get(dir / "items.json")));
        if (out.info->size() != m.at("n_items").get<std::size_t>())
            throw ArtifactError("item count disagrees with manifest");
    } catch (const json::exception& e) {
        throw ArtifactError("malformed manifest in " + dir.string() + ": " + e.what());
    }
    return out;
}

// Core parse errors are artifact errors here.
template <class F>
auto guarded(const fs::path& dir, F&& f) {
    try {
        return f();
    } catch (const ArtifactError&) {
        throw;
    } catch (const Error& e) {
        throw ArtifactError("malformed artifact " + dir.string() + ": " + e.what());
    }
}

}  // namespace

std::string kind_name(ArtifactKind k) {
    switch (k) {
        case ArtifactKind::transactions: return "transactions";
        case ArtifactKind::itemsets: return "itemsets";
        case ArtifactKind::rules: return "rules";
    }
    return "?";
}

void write_artifact(const fs::path& dir, const Transactions& t) {
    begin(dir, ArtifactKind::transactions, t.size(), t.item_info());
    put(dir / "matrix.csv", triplets_csv(t.matrix()));
    put(dir / "ids.json", json(t.transaction_ids()).dump() + "\n");
}

void write_artifact(const fs::path& dir, const Itemsets& s) {
    begin(dir, ArtifactKind::itemsets, s.size(), s.item_info());
    put(dir / "matrix.csv", triplets_csv(s.items()));
    put(dir / "quality.csv", quality_csv(s.quality()));
}

void write_artifact(const fs::path& dir, const Rules& r) {
    begin(dir, ArtifactKind::rules, r.size(), r.item_info());
    put(dir / "lhs.csv", triplets_csv(r.lhs()));
    put(dir / "rhs.csv", triplets_csv(r.rhs()));
    put(dir / "quality.csv", quality_csv(r.quality()));
}

ArtifactKind artifact_kind(const fs::path& dir) { return open(dir, std::nullopt).kind; }

Transactions read_transactions(const fs::path& dir) {
    auto m = open(dir, ArtifactKind::transactions);
    return guarded(dir, [&] {
        auto mat = matrix_from_triplets_csv(get(dir / "matrix.csv"), m.n_rows, m.info);
        std::vector<std::string> ids;
        try {
            ids = json::parse(get(dir / "ids.json")).get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw ArtifactError("malformed ids.json: " + std::string(e.what()));
        }
        return Transactions(std::move(mat), std::move(ids));
    });
}

Itemsets read_itemsets(const fs::path& dir) {
    auto m = open(dir, ArtifactKind::itemsets);
    return guarded(dir, [&] {
        return Itemsets(matrix_from_triplets_csv(get(dir / "matrix.csv"), m.n_rows, m.info),
                        quality_from_csv(get(dir / "quality.csv"), m.n_rows));
    });
}

Rules read_rules(const fs::path& dir) {
    auto m = open(dir, ArtifactKind::rules);
    return guarded(dir, [&] {
        return Rules(matrix_from_triplets_csv(get(dir / "lhs.csv"), m.n_rows, m.info),
                     matrix_from_triplets_csv(get(dir / "rhs.csv"), m.n_rows, m.info),
                     quality_from_csv(get(dir / "quality.csv"), m.n_rows));
    });
}

Associations read_associations(const fs::path& dir) {
    switch (artifact_kind(dir)) {
        case ArtifactKind::rules: return read_rules(dir);
        case ArtifactKind::itemsets: return read_itemsets(dir);
        default: throw ArtifactError(dir.string() + " holds transactions, expected rules or itemsets");
    }
}

}  // namespace rulekit::cli
