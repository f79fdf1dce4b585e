#pragma once

// Catalog of example contexts and claim instances, bound to the checkers.
//
// Records ship as JSON data compiled into the library; extra records in the
// same format can be loaded from a directory.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oreqb/descriptor.hpp"
#include "oreqb/properties.hpp"
#include "oreqb/report.hpp"

namespace oreqb {

/// One expected verdict. `witness` maps roles to literals (null accepts any
/// value); an empty object only requires the status.
struct ExpectedCheck {
  std::string property;
  ReportStatus status = ReportStatus::Verified;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json witness = nlohmann::json::object();
};

struct ExampleRecord {
  std::string id;
  std::string title;
  std::string analog_note;
  std::optional<std::string> skip_reason;
  std::optional<ContextDescriptor> context;
  std::vector<ExpectedCheck> expected;
  /// Per-property hint lists, e.g. {"compatible": [["1+t", "t"]]}.
  nlohmann::json hints = nlohmann::json::object();
  /// Per-claim generator panels, e.g. {"PROP_3_2": [["[0,1]"], ["[1]"]]}.
  nlohmann::json panels = nlohmann::json::object();

  bool skipped() const { return skip_reason.has_value(); }
};

struct ClaimRecord {
  std::string id;
  std::string statement;
  nlohmann::json params = nlohmann::json::object();
  /// Example ids, or {"*"} for every active example.
  std::vector<std::string> applicable;
  ReportStatus default_expected = ReportStatus::Verified;
  std::map<std::string, ReportStatus> expected;

  ReportStatus expected_for(const std::string& example) const;
};

class Registry {
 public:
  /// The records compiled into the library.
  static const Registry& builtin();
  static Registry from_documents(const std::vector<nlohmann::json>& examples,
                                 const nlohmann::json& claims);

  /// Adds every *.json example record in `dir` (a claims.json there is
  /// ignored). Ids must not collide.
  void load_directory(const std::filesystem::path& dir);

  const std::vector<ExampleRecord>& examples() const noexcept { return examples_; }
  const std::vector<ClaimRecord>& claims() const noexcept { return claims_; }

  /// Throw UnknownId.
  const ExampleRecord& example(const std::string& id) const;
  const ClaimRecord& claim(const std::string& id) const;
  bool has_example(const std::string& id) const;
  bool has_claim(const std::string& id) const;

  /// Memoized per registry object; throws for skipped records.
  ContextPtr instantiate(const std::string& id) const;

 private:
  void add_example(ExampleRecord rec);

  std::vector<ExampleRecord> examples_;
  std::vector<ClaimRecord> claims_;
  mutable std::map<std::string, ContextPtr> contexts_;
};

ExampleRecord example_from_json(const nlohmann::json& j);
ClaimRecord claim_from_json(const nlohmann::json& j);

struct CheckOptions {
  std::size_t max_degree = 2;
  std::uint64_t budget = 20'000'000;
  std::uint64_t seed = 42;
  std::uint64_t trials = 100'000;
  /// "auto", "exhaustive" or "randomized"; only the Armendariz searches use it.
  std::string mode = "auto";
};

/// Names accepted by run_property.
std::vector<std::string> property_names();
/// Whether the property depends on sigma or delta (and not only on R).
bool property_needs_maps(const std::string& name);

/// Dispatches a named checker. `params` may carry "element" (stable),
/// "deg_p"/"deg_q" (Armendariz; both default to max_degree), "elements"
/// (idempotents), "mode". Hints come from a record's hint block. Throws
/// UnknownId for unknown names, BudgetExceeded from bounded searches.
PropertyVerdict run_property(const ContextPtr& ctx, const std::string& name,
                             const nlohmann::json& params, const nlohmann::json& hints,
                             const CheckOptions& opts);

/// Compares a verdict's witness against an expected role map; returns an
/// explanation of the first mismatch, or nullopt.
std::optional<std::string> match_witness(const FiniteRing& ring, const PropertyVerdict& verdict,
                                         const nlohmann::json& expected);

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::uint64_t budget = 20'000'000;
  std::uint64_t trials = 100'000;
};

/// Entries for one claim over its applicable examples (ordered by example).
std::vector<ReportEntry> verify_claim(const Registry& reg, const std::string& claim_id,
                                      const VerifyOptions& opts,
                                      const std::vector<std::string>& only_examples = {});

/// Expected-verdict entries of one example (a single skipped entry for
/// skipped records).
std::vector<ReportEntry> verify_example(const Registry& reg, const std::string& example_id,
                                        const VerifyOptions& opts);

/// `target` is "all", a claim id or an example id; an example id also runs
/// every claim on that example. Throws UnknownId.
ReportDocument verify(const Registry& reg, const std::string& target, const VerifyOptions& opts);

/// Filtered run over explicit example and claim ids (either may be empty).
ReportDocument verify_filtered(const Registry& reg, const std::vector<std::string>& examples,
                               const std::vector<std::string>& claims, const VerifyOptions& opts);

/// "EX_2_4/skew-armendariz(deg_p=1,deg_q=1)"; "mode" is left out.
std::string property_entry_id(const std::string& target, const std::string& property,
                              const nlohmann::json& params);

std::string tool_version();

}  // namespace oreqb
