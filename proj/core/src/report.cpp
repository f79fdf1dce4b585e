#include "oreqb/report.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"

namespace oreqb {

using nlohmann::json;

namespace {

constexpr std::pair<ReportStatus, std::string_view> kStatusNames[] = {
    {ReportStatus::Verified, "verified"},
    {ReportStatus::Refuted, "refuted"},
    {ReportStatus::CertifiedBounded, "certified_bounded"},
    {ReportStatus::HypothesisNotMet, "hypothesis_not_met"},
    {ReportStatus::Skipped, "skipped"},
};

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + value_text(v[i]);
    return out + "}";
  }
  return v.dump();
}

}  // namespace

std::string_view report_status_name(ReportStatus s) {
  for (const auto& [k, n] : kStatusNames)
    if (k == s) return n;
  return "unknown";
}

ReportStatus report_status_from_name(std::string_view name) {
  for (const auto& [k, n] : kStatusNames)
    if (n == name) return k;
  throw Error("unknown report status \"" + std::string(name) + "\"");
}

ReportStatus report_status(Status s) {
  switch (s) {
    case Status::Holds: return ReportStatus::Verified;
    case Status::Fails: return ReportStatus::Refuted;
    case Status::CertifiedUpToBound: return ReportStatus::CertifiedBounded;
  }
  return ReportStatus::Refuted;
}

json witness_to_json(const FiniteRing& R, const Witness& w) {
  json j = json::object();
  for (const auto& [role, e] : w.elements) j[role] = R.name(e);
  for (const auto& [role, p] : w.polys) j[role] = format_coefficient_list(R, p);
  for (const auto& [role, s] : w.sets) {
    json arr = json::array();
    for (Elem e : s) arr.push_back(R.name(e));
    j[role] = std::move(arr);
  }
  for (const auto& [role, v] : w.integers) j[role] = v;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

void apply_verdict(ReportEntry& entry, const FiniteRing& R, const PropertyVerdict& v) {
  entry.status = report_status(v.status);
  entry.witness = nullptr;
  if (v.status == Status::Fails) {
    entry.witness = v.witness ? witness_to_json(R, *v.witness) : json::object();
  }
  entry.bound = nullptr;
  if (v.bound)
    entry.bound = {{"deg_p", v.bound->deg_p},
                   {"deg_q", v.bound->deg_q},
                   {"candidates", static_cast<double>(v.bound->candidates)}};
  entry.mode = std::string(mode_name(v.mode.kind));
  entry.trials.reset();
  if (v.mode.kind == SearchMode::Kind::Randomized) {
    entry.seed = v.mode.seed;
    entry.trials = v.mode.trials;
  }
  entry.elapsed_ms = v.elapsed_ms;
  if (!v.detail.empty()) entry.detail = v.detail;
}

json to_json(const ReportEntry& e) {
  json j;
  j["id"] = e.id;
  j["kind"] = e.kind;
  j["example"] = e.example;
  j["subject"] = e.subject;
  j["status"] = std::string(report_status_name(e.status));
  j["expected_status"] =
      e.expected ? json(std::string(report_status_name(*e.expected))) : json(nullptr);
  j["meets_expectation"] = e.meets_expectation();
  if (e.status == ReportStatus::Refuted) j["witness"] = e.witness;
  j["bound"] = e.bound;
  j["mode"] = e.mode;
  j["seed"] = e.seed;
  if (e.trials) j["trials"] = *e.trials;
  j["elapsed_ms"] = e.elapsed_ms;
  j["analog_note"] = e.analog_note;
  j["detail"] = e.detail;
  j["evidence"] = e.evidence;
  return j;
}

ReportSummary ReportDocument::summary() const {
  ReportSummary s;
  s.total = entries.size();
  for (const auto& e : entries) {
    switch (e.status) {
      case ReportStatus::Verified: ++s.verified; break;
      case ReportStatus::Refuted: ++s.refuted; break;
      case ReportStatus::CertifiedBounded: ++s.certified_bounded; break;
      case ReportStatus::HypothesisNotMet: ++s.hypothesis_not_met; break;
      case ReportStatus::Skipped: ++s.skipped; break;
    }
    if (!e.meets_expectation()) ++s.unexpected;
  }
  return s;
}

json to_json(const ReportDocument& doc) {
  json entries = json::array();
  for (const auto& e : doc.entries) entries.push_back(to_json(e));
  const ReportSummary s = doc.summary();
  return json{{"schema", std::string(ReportDocument::kSchema)},
              {"tool_version", doc.tool_version},
              {"invocation", doc.invocation},
              {"entries", std::move(entries)},
              {"summary",
               {{"total", s.total},
                {"verified", s.verified},
                {"refuted", s.refuted},
                {"certified_bounded", s.certified_bounded},
                {"hypothesis_not_met", s.hypothesis_not_met},
                {"skipped", s.skipped},
                {"unexpected", s.unexpected},
                {"all_expected", s.unexpected == 0}}}};
}

ReportEntry entry_from_json(const json& j) {
  if (!j.is_object()) throw Error("report entry must be an object");
  ReportEntry e;
  e.id = j.at("id").get<std::string>();
  e.kind = j.at("kind").get<std::string>();
  e.example = get_or<std::string>(j, "example", "");
  e.subject = get_or<std::string>(j, "subject", "");
  e.status = report_status_from_name(j.at("status").get<std::string>());
  if (auto it = j.find("expected_status"); it != j.end() && !it->is_null())
    e.expected = report_status_from_name(it->get<std::string>());
  const bool has_witness = j.contains("witness") && !j.at("witness").is_null();
  if (has_witness != (e.status == ReportStatus::Refuted))
    throw Error("entry " + e.id + ": witness must be present exactly when refuted");
  if (has_witness) e.witness = j.at("witness");
  e.bound = j.contains("bound") ? j.at("bound") : json(nullptr);
  e.mode = j.at("mode").get<std::string>();
  if (e.mode != "exhaustive" && e.mode != "randomized")
    throw Error("entry " + e.id + ": unknown mode " + e.mode);
  e.seed = j.at("seed").get<std::uint64_t>();
  if (auto it = j.find("trials"); it != j.end()) e.trials = it->get<std::uint64_t>();
  e.elapsed_ms = j.at("elapsed_ms").get<double>();
  e.analog_note = get_or<std::string>(j, "analog_note", "");
  e.detail = get_or<std::string>(j, "detail", "");
  e.evidence = j.contains("evidence") ? j.at("evidence") : json(nullptr);
  if (auto it = j.find("meets_expectation");
      it != j.end() && it->get<bool>() != e.meets_expectation())
    throw Error("entry " + e.id + ": meets_expectation disagrees with the statuses");
  return e;
}

ReportDocument report_from_json(const json& j) {
  if (!j.is_object()) throw Error("report must be an object");
  if (j.value("schema", "") != ReportDocument::kSchema)
    throw Error("unsupported report schema");
  ReportDocument doc;
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.invocation = j.at("invocation");
  for (const auto& e : j.at("entries")) doc.entries.push_back(entry_from_json(e));
  const json& s = j.at("summary");
  const ReportSummary want = doc.summary();
  const ReportSummary got{s.at("total").get<std::size_t>(),
                          s.at("verified").get<std::size_t>(),
                          s.at("refuted").get<std::size_t>(),
                          s.at("certified_bounded").get<std::size_t>(),
                          s.at("hypothesis_not_met").get<std::size_t>(),
                          s.at("skipped").get<std::size_t>(),
                          s.at("unexpected").get<std::size_t>()};
  if (!(want == got)) throw Error("report summary disagrees with its entries");
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  std::set<std::string> noted;
  for (const auto& e : doc.entries) {
    if (!e.example.empty() && !e.analog_note.empty() && noted.insert(e.example).second)
      out << "# " << e.example << ": " << e.analog_note << "\n";
    out << std::left << std::setw(40) << e.id << " " << std::setw(18)
        << report_status_name(e.status);
    if (e.expected) {
      out << (e.meets_expectation() ? " ok" : " UNEXPECTED (wanted ")
          << (e.meets_expectation() ? "" : std::string(report_status_name(*e.expected)) + ")");
    }
    if (e.mode == "randomized")
      out << " [randomized seed=" << e.seed << " trials=" << e.trials.value_or(0) << "]";
    out << "\n";
    if (e.status == ReportStatus::Refuted && e.witness.is_object()) {
      out << "    witness:";
      for (const auto& [role, v] : e.witness.items()) {
        if (role == "note") continue;
        out << " " << role << "=" << value_text(v);
      }
      out << "\n";
      if (e.witness.contains("note")) out << "    note: " << e.witness["note"].get<std::string>() << "\n";
    }
    if (!e.bound.is_null())
      out << "    bound: deg_p=" << e.bound.value("deg_p", 0) << " deg_q=" << e.bound.value("deg_q", 0)
          << " candidates=" << value_text(e.bound.value("candidates", json(0))) << "\n";
    if (!e.detail.empty()) out << "    " << e.detail << "\n";
  }
  const ReportSummary s = doc.summary();
  out << "summary: " << s.total << " entries, " << s.verified << " verified, " << s.refuted
      << " refuted, " << s.certified_bounded << " certified_bounded, " << s.hypothesis_not_met
      << " hypothesis_not_met, " << s.skipped << " skipped; " << s.unexpected << " unexpected\n";
  return out.str();
}

ReportDocument without_timings(ReportDocument doc) {
  for (auto& e : doc.entries) e.elapsed_ms = 0;
  return doc;
}

}  // namespace oreqb
