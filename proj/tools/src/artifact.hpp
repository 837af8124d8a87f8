#ifndef RULEKIT_TOOLS_ARTIFACT_HPP
#define RULEKIT_TOOLS_ARTIFACT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "rulekit/associations.hpp"
#include "rulekit/error.hpp"
#include "rulekit/transactions.hpp"

namespace rulekit::cli {

// Raised for anything wrong with an artifact directory on disk.
class ArtifactError : public Error {
  public:
    using Error::Error;
};

inline constexpr const char* kArtifactFormat = "rulekit-artifact";
inline constexpr int kArtifactVersion = 1;

enum class ArtifactKind { transactions, itemsets, rules };

std::string kind_name(ArtifactKind k);

// Directory layout:
//   manifest.json  {format, version, kind, n_rows, n_items}
//   items.json     item info
//   transactions:  matrix.csv (row,col triplets), ids.json
//   itemsets:      matrix.csv, quality.csv
//   rules:         lhs.csv, rhs.csv, quality.csv
void write_artifact(const std::filesystem::path& dir, const Transactions& t);
void write_artifact(const std::filesystem::path& dir, const Itemsets& s);
void write_artifact(const std::filesystem::path& dir, const Rules& r);

ArtifactKind artifact_kind(const std::filesystem::path& dir);
Transactions read_transactions(const std::filesystem::path& dir);
Itemsets read_itemsets(const std::filesystem::path& dir);
Rules read_rules(const std::filesystem::path& dir);

using Associations = std::variant<Itemsets, Rules>;
Associations read_associations(const std::filesystem::path& dir);

}  // namespace rulekit::cli

#endif
