#pragma once

// Report documents shared by the command-line tool and the registry.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oreqb/properties.hpp"

namespace oreqb {

enum class ReportStatus { Verified, Refuted, CertifiedBounded, HypothesisNotMet, Skipped };

std::string_view report_status_name(ReportStatus s);
/// Throws Error for names outside the closed set.
ReportStatus report_status_from_name(std::string_view name);
ReportStatus report_status(Status s);

struct ReportEntry {
  std::string id;
  std::string kind;     // "property", "claim" or "example"
  std::string example;  // empty for ring-only checks
  std::string subject;  // property name or claim id
  ReportStatus status = ReportStatus::Verified;
  std::optional<ReportStatus> expected;
  nlohmann::json witness;   // null unless refuted
  nlohmann::json bound;     // null when the check is exact
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  double elapsed_ms = 0;
  std::string analog_note;
  std::string detail;
  nlohmann::json evidence;  // free-form supporting data, never a witness

  bool meets_expectation() const { return !expected || *expected == status; }

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t certified_bounded = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t skipped = 0;
  std::size_t unexpected = 0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct ReportDocument {
  static constexpr std::string_view kSchema = "oreqb-report/1";

  std::string tool_version;
  nlohmann::json invocation = nlohmann::json::object();
  std::vector<ReportEntry> entries;

  ReportSummary summary() const;
  bool all_expected() const { return summary().unexpected == 0; }

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Roles become keys: elements and polynomial literals as strings, sets as
/// arrays of names, integers as numbers, plus "note" when present.
nlohmann::json witness_to_json(const FiniteRing& ring, const Witness& w);

/// Fills status, witness (only for Fails), bound, mode, seed, trials and
/// elapsed_ms from a verdict.
void apply_verdict(ReportEntry& entry, const FiniteRing& ring, const PropertyVerdict& v);

nlohmann::json to_json(const ReportEntry& e);
nlohmann::json to_json(const ReportDocument& doc);

/// Validates the schema invariants (closed status set, witness iff
/// refuted, summary consistent with entries); throws Error otherwise.
ReportEntry entry_from_json(const nlohmann::json& j);
ReportDocument report_from_json(const nlohmann::json& j);

std::string render_text(const ReportDocument& doc);

/// Copy of the document with every elapsed_ms set to zero.
ReportDocument without_timings(ReportDocument doc);

}  // namespace oreqb
