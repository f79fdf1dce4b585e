#include "oreqb/registry.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"
#include "registry_data.hpp"

#ifndef OREQB_VERSION
#define OREQB_VERSION "0.0.0"
#endif

namespace oreqb {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> names{
      "reduced",     "abelian",    "semiprime",       "rigid",
      "compatible",  "automorphism", "stable",        "stable-left-semicentral",
      "quasi-baer",  "baer",       "skew-armendariz", "sigma-skew-armendariz",
      "idempotents", "constant-idempotents"};
  return names;
}

std::string literal_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw DescriptorError("expected an element or polynomial literal, got " + v.dump());
}

Elem elem_of(const FiniteRing& R, const json& v) { return parse_element(R, literal_of(v)); }

CoeffVec poly_of(const FiniteRing& R, const json& v) {
  CoeffVec c = parse_coefficient_list(R, literal_of(v));
  while (!c.empty() && R.is_zero(c.back())) c.pop_back();
  return c;
}

std::vector<OrePoly> polys_of(const ContextPtr& ctx, const json& list) {
  std::vector<OrePoly> out;
  for (const auto& v : list) out.emplace_back(ctx, poly_of(ctx->ring(), v));
  return out;
}

std::string params_label(const json& params) {
  if (!params.is_object() || params.empty()) return "";
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : params.items()) {
    if (k == "mode") continue;
    out += (first ? "" : ",") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    first = false;
  }
  return first ? "" : out + ")";
}

std::size_t param_size(const json& params, const char* key, std::size_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  return params.at(key).get<std::size_t>();
}

ArmendarizOptions::Mode armendariz_mode(const std::string& m) {
  if (m == "auto") return ArmendarizOptions::Mode::Auto;
  if (m == "exhaustive") return ArmendarizOptions::Mode::Exhaustive;
  if (m == "randomized") return ArmendarizOptions::Mode::Randomized;
  throw Error("unknown search mode \"" + m + "\" (expected auto, exhaustive or randomized)");
}

PropertyVerdict automorphism_verdict(const OreContext& ctx) {
  const auto start = Clock::now();
  const auto& sigma = ctx.sigma();
  const FiniteRing& R = ctx.ring();
  PropertyVerdict v;
  v.property = "automorphism";
  if (sigma.is_automorphism()) {
    v.status = Status::Holds;
    v.detail = "sigma is a bijection of the " + std::to_string(R.order()) + " elements";
  } else {
    std::vector<std::int64_t> first(R.order(), -1);
    for (Elem a : R.elements()) {
      auto& slot = first[sigma(a).index];
      if (slot >= 0) {
        Witness w;
        w.add("a", Elem{static_cast<std::uint32_t>(slot)}).add("b", a);
        w.note = "sigma(a) = sigma(b) with a != b";
        v.status = Status::Fails;
        v.witness = std::move(w);
        break;
      }
      slot = a.index;
    }
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict inventory_verdict(const FiniteRing& R, const json& params) {
  const auto start = Clock::now();
  std::vector<Elem> got;
  for (const auto& c : idempotent_set(R)) got.push_back(c.element);
  PropertyVerdict v;
  v.property = "idempotents";
  if (!params.is_object() || !params.contains("elements")) {
    v.detail = "idempotents: {";
    for (std::size_t i = 0; i < got.size(); ++i) v.detail += (i ? ", " : "") + R.name(got[i]);
    v.detail += "}";
    v.elapsed_ms = ms_since(start);
    return v;
  }
  std::vector<Elem> want;
  for (const auto& v : params.at("elements")) want.push_back(elem_of(R, v));
  std::sort(want.begin(), want.end());
  if (got == want) {
    v.status = Status::Holds;
    v.detail = "exactly " + std::to_string(got.size()) + " idempotents";
  } else {
    v.status = Status::Fails;
    Witness w;
    w.add_set("idempotents", got).add_set("expected", want);
    w.note = "idempotent inventory differs";
    v.witness = std::move(w);
  }
  v.elapsed_ms = ms_since(start);
  return v;
}

PropertyVerdict constant_idempotent_verdict(const ContextPtr& ctx, std::size_t max_degree,
                                            std::uint64_t budget) {
  const auto start = Clock::now();
  const auto found = idempotent_search(ctx, max_degree, budget);
  PropertyVerdict v;
  v.property = "constant-idempotents";
  v.bound = SearchBound{max_degree, 0, search_size(ctx->ring().order(), max_degree + 1)};
  for (const auto& e : found) {
    if (e.is_constant() || e.is_zero()) continue;
    Witness w;
    w.add("e", e.coeffs());
    w.note = "non-constant idempotent " + pretty_poly(e);
    v.status = Status::Fails;
    v.witness = std::move(w);
    v.elapsed_ms = ms_since(start);
    return v;
  }
  v.status = Status::CertifiedUpToBound;
  v.detail = "all " + std::to_string(found.size()) + " idempotents of degree <= " +
             std::to_string(max_degree) + " are constant";
  v.elapsed_ms = ms_since(start);
  return v;
}

std::vector<Elem> sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

json status_json(const PropertyVerdict& v) { return std::string(report_status_name(report_status(v.status))); }

}  // namespace

// ---------------------------------------------------------------- records

ReportStatus ClaimRecord::expected_for(const std::string& example) const {
  auto it = expected.find(example);
  return it == expected.end() ? default_expected : it->second;
}

ExampleRecord example_from_json(const json& j) {
  ExampleRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.title = j.value("title", "");
  rec.analog_note = j.value("analog_note", "exact");
  if (j.contains("skip_reason")) {
    rec.skip_reason = j.at("skip_reason").get<std::string>();
  } else {
    rec.context = context_descriptor_from_json(j.at("context"));
  }
  for (const auto& e : j.value("expected", json::array())) {
    ExpectedCheck c;
    c.property = e.at("property").get<std::string>();
    if (std::find(known_properties().begin(), known_properties().end(), c.property) ==
        known_properties().end())
      throw DescriptorError(rec.id + ": unknown property \"" + c.property + "\"");
    c.status = report_status_from_name(e.at("status").get<std::string>());
    c.params = e.value("params", json::object());
    c.witness = e.value("witness", json::object());
    rec.expected.push_back(std::move(c));
  }
  rec.hints = j.value("hints", json::object());
  rec.panels = j.value("panels", json::object());
  return rec;
}

ClaimRecord claim_from_json(const json& j) {
  ClaimRecord c;
  c.id = j.at("id").get<std::string>();
  c.statement = j.value("statement", "");
  c.params = j.value("params", json::object());
  c.applicable = j.value("applicable", std::vector<std::string>{"*"});
  c.default_expected = report_status_from_name(j.value("default_expected", "verified"));
  const json expected = j.value("expected", json::object());
  for (const auto& [ex, st] : expected.items())
    c.expected[ex] = report_status_from_name(st.get<std::string>());
  return c;
}

const Registry& Registry::builtin() {
  static const Registry reg = [] {
    std::vector<json> examples;
    json claims = json::object();
    for (const auto& [name, text] : detail::registry_files()) {
      json doc = parse_json_text(text);
      if (name == "claims.json")
        claims = std::move(doc);
      else
        examples.push_back(std::move(doc));
    }
    return from_documents(examples, claims);
  }();
  return reg;
}

Registry Registry::from_documents(const std::vector<json>& examples, const json& claims) {
  Registry reg;
  for (const auto& e : examples) reg.add_example(example_from_json(e));
  for (const auto& c : claims.value("claims", json::array()))
    reg.claims_.push_back(claim_from_json(c));
  std::sort(reg.claims_.begin(), reg.claims_.end(),
            [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; });
  return reg;
}

void Registry::add_example(ExampleRecord rec) {
  if (has_example(rec.id)) throw DescriptorError("duplicate example id " + rec.id);
  auto pos = std::lower_bound(examples_.begin(), examples_.end(), rec.id,
                              [](const ExampleRecord& r, const std::string& id) { return r.id < id; });
  examples_.insert(pos, std::move(rec));
}

void Registry::load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json" && entry.path().filename() != "claims.json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    add_example(example_from_json(parse_json_text(buf.str())));
  }
}

bool Registry::has_example(const std::string& id) const {
  return std::any_of(examples_.begin(), examples_.end(),
                     [&](const ExampleRecord& r) { return r.id == id; });
}

bool Registry::has_claim(const std::string& id) const {
  return std::any_of(claims_.begin(), claims_.end(),
                     [&](const ClaimRecord& c) { return c.id == id; });
}

const ExampleRecord& Registry::example(const std::string& id) const {
  for (const auto& r : examples_)
    if (r.id == id) return r;
  throw UnknownId("example", id);
}

const ClaimRecord& Registry::claim(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return c;
  throw UnknownId("claim", id);
}

ContextPtr Registry::instantiate(const std::string& id) const {
  if (auto it = contexts_.find(id); it != contexts_.end()) return it->second;
  const ExampleRecord& rec = example(id);
  if (rec.skipped()) throw Error(id + " is skipped: " + *rec.skip_reason);
  ContextPtr ctx = oreqb::instantiate(*rec.context);
  contexts_.emplace(id, ctx);
  return ctx;
}

// --------------------------------------------------------------- checkers

std::vector<std::string> property_names() { return known_properties(); }

bool property_needs_maps(const std::string& name) {
  static const std::set<std::string> ring_only{"reduced", "abelian",    "semiprime",
                                               "quasi-baer", "baer",   "idempotents"};
  return !ring_only.count(name);
}

PropertyVerdict run_property(const ContextPtr& ctx, const std::string& name, const json& params,
                             const json& hints, const CheckOptions& opts) {
  const FiniteRing& R = ctx->ring();
  const json hint_list = hints.is_object() && hints.contains(name) ? hints.at(name) : json::array();
  if (name == "reduced") return check_basic(R, BasicProperty::Reduced);
  if (name == "abelian") return check_basic(R, BasicProperty::Abelian);
  if (name == "semiprime") return check_basic(R, BasicProperty::Semiprime);
  if (name == "rigid") return check_rigid(ctx->sigma());
  if (name == "automorphism") return automorphism_verdict(*ctx);
  if (name == "compatible") {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (const auto& h : hint_list) pairs.emplace_back(elem_of(R, h.at(0)), elem_of(R, h.at(1)));
    return check_compatible(*ctx, pairs);
  }
  if (name == "stable") {
    if (!params.is_object() || !params.contains("element"))
      throw Error("property 'stable' needs an idempotent (params.element)");
    auto v = check_stability(*ctx, elem_of(R, params.at("element")));
    return v;
  }
  if (name == "stable-left-semicentral") return check_stability_left_semicentral(*ctx);
  if (name == "quasi-baer") return check_quasi_baer(ctx->ring_ptr());
  if (name == "baer") return check_baer(ctx->ring_ptr());
  if (name == "skew-armendariz" || name == "sigma-skew-armendariz") {
    ArmendarizOptions ao;
    ao.deg_p = param_size(params, "deg_p", opts.max_degree);
    ao.deg_q = param_size(params, "deg_q", opts.max_degree);
    ao.mode = armendariz_mode(params.is_object() && params.contains("mode")
                                  ? params.at("mode").get<std::string>()
                                  : opts.mode);
    ao.budget = opts.budget;
    ao.seed = opts.seed;
    ao.trials = opts.trials;
    ao.variant = name == "skew-armendariz" ? ArmendarizOptions::Variant::Skew
                                           : ArmendarizOptions::Variant::Sigma;
    for (const auto& h : hint_list) ao.hints.emplace_back(poly_of(R, h.at("p")), poly_of(R, h.at("q")));
    return check_skew_armendariz(ctx, ao);
  }
  if (name == "idempotents") return inventory_verdict(R, params);
  if (name == "constant-idempotents")
    return constant_idempotent_verdict(ctx, param_size(params, "max_degree", opts.max_degree),
                                       opts.budget);
  throw UnknownId("property", name);
}

std::optional<std::string> match_witness(const FiniteRing& R, const PropertyVerdict& verdict,
                                         const json& expected) {
  if (!expected.is_object() || expected.empty()) return std::nullopt;
  if (!verdict.witness) return "verdict carries no witness";
  const Witness& w = *verdict.witness;
  for (const auto& [role, want] : expected.items()) {
    auto find = [&](const auto& list) {
      return std::find_if(list.begin(), list.end(), [&](const auto& p) { return p.first == role; });
    };
    if (auto it = find(w.elements); it != w.elements.end()) {
      if (!want.is_null() && elem_of(R, want) != it->second)
        return "role " + role + " is " + R.name(it->second) + ", expected " + literal_of(want);
      continue;
    }
    if (auto it = find(w.polys); it != w.polys.end()) {
      CoeffVec got = it->second;
      while (!got.empty() && R.is_zero(got.back())) got.pop_back();
      if (!want.is_null() && poly_of(R, want) != got)
        return "role " + role + " is " + format_coefficient_list(R, got) + ", expected " +
               literal_of(want);
      continue;
    }
    if (auto it = find(w.sets); it != w.sets.end()) {
      if (want.is_null()) continue;
      std::vector<Elem> exp;
      for (const auto& v : want) exp.push_back(elem_of(R, v));
      if (sorted(exp) != sorted(it->second)) return "role " + role + " differs from the expected set";
      continue;
    }
    if (auto it = find(w.integers); it != w.integers.end()) {
      if (!want.is_null() && want.get<std::int64_t>() != it->second)
        return "role " + role + " is " + std::to_string(it->second) + ", expected " + want.dump();
      continue;
    }
    return "witness has no role " + role;
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- claims

namespace {

struct Run {
  const Registry& reg;
  VerifyOptions opts;
  std::map<std::string, PropertyVerdict> cache;

  CheckOptions check_options() const {
    CheckOptions c;
    c.seed = opts.seed;
    c.budget = opts.budget;
    c.trials = opts.trials;
    return c;
  }

  const PropertyVerdict& verdict(const ExampleRecord& ex, const std::string& property,
                                 const json& params = json::object()) {
    const std::string key = ex.id + "|" + property + "|" + params.dump();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto v = run_property(reg.instantiate(ex.id), property, params, ex.hints, check_options());
    return cache.emplace(key, std::move(v)).first->second;
  }
};

json verdict_json(const FiniteRing& R, const PropertyVerdict& v) {
  json j{{"property", v.property}, {"status", status_json(v)}};
  if (v.witness) j["witness"] = witness_to_json(R, *v.witness);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

void inherit_search_mode(ReportEntry& out, const PropertyVerdict& v) {
  if (v.mode.kind == SearchMode::Kind::Randomized) {
    out.mode = "randomized";
    out.seed = v.mode.seed;
    out.trials = v.mode.trials;
  }
}

void hypothesis_not_met(ReportEntry& out, const std::string& what, json evidence) {
  out.status = ReportStatus::HypothesisNotMet;
  out.detail = "hypothesis not met: " + what;
  out.evidence = std::move(evidence);
}

void refute(ReportEntry& out, json witness, const std::string& detail) {
  out.status = ReportStatus::Refuted;
  out.witness = std::move(witness);
  out.detail = detail;
}

json armendariz_params(const json& params) {
  return json{{"deg_p", param_size(params, "deg_p", 1)}, {"deg_q", param_size(params, "deg_q", 1)}};
}

std::string armendariz_bound_text(const json& params) {
  return "(" + std::to_string(param_size(params, "deg_p", 1)) + "," +
         std::to_string(param_size(params, "deg_q", 1)) + ")";
}

// x * p for left-coefficient p, using only x a = sigma(a) x + delta(a).
OrePoly times_x(const OreContext& ctx, const OrePoly& p) {
  const FiniteRing& R = ctx.ring();
  std::vector<Elem> out(p.coeffs().size() + 1, R.zero());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Elem a = p.coeffs()[k];
    out[k + 1] = R.add(out[k + 1], ctx.sigma()(a));
    out[k] = R.add(out[k], ctx.delta()(a));
  }
  return OrePoly(p.context(), std::move(out));
}

void claim_lem_2_1(Run&, const ExampleRecord&, const ContextPtr& ctx, const json& params,
                   ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const std::size_t max_n = param_size(params, "max_n", 5);
  for (Elem r : R.elements()) {
    OrePoly oracle = OrePoly::constant(ctx, r);
    for (std::size_t n = 0; n <= max_n; ++n) {
      const OrePoly got = monomial_shift(ctx, n, r);
      if (!(got == oracle)) {
        refute(out,
               json{{"r", R.name(r)},
                    {"n", n},
                    {"expected", format_poly(oracle)},
                    {"monomial_shift", format_poly(got)}},
               "x^n r disagrees with repeated multiplication by x");
        return;
      }
      oracle = times_x(*ctx, oracle);
    }
  }
  out.status = ReportStatus::Verified;
  out.detail = "monomial_shift(n, r) equals n-fold multiplication by x for all " +
               std::to_string(R.order()) + " elements r and n <= " + std::to_string(max_n);
}

void claim_lem_2_2(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                   ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& hyp = run.verdict(ex, "skew-armendariz", armendariz_params(params));
  inherit_search_mode(out, hyp);
  const std::size_t D = param_size(params, "max_degree", 2);
  const auto idems = idempotent_search(ctx, D, run.opts.budget);
  std::vector<std::string> nonconstant;
  std::optional<OrePoly> first;
  for (const auto& e : idems) {
    if (e.is_zero() || e.is_constant()) continue;
    if (!first) first = e;
    nonconstant.push_back(pretty_poly(e));
  }
  if (hyp.status == Status::Fails) {
    json shown = json::array();
    for (std::size_t i = 0; i < nonconstant.size() && i < 8; ++i) shown.push_back(nonconstant[i]);
    std::string what = "not (sigma,delta)-skew Armendariz at bound " + armendariz_bound_text(params);
    if (!nonconstant.empty())
      what += "; non-constant idempotents of degree <= " + std::to_string(D) + " exist (" +
              std::to_string(nonconstant.size()) + ", first " + nonconstant.front() +
              "), consistent with the contrapositive";
    hypothesis_not_met(out, what,
                       json{{"hypothesis", verdict_json(R, hyp)},
                            {"nonconstant_idempotents", shown},
                            {"nonconstant_count", nonconstant.size()},
                            {"idempotent_count", idems.size()}});
    return;
  }
  out.bound = {{"deg_p", D}, {"deg_q", 0}, {"candidates", static_cast<double>(search_size(R.order(), D + 1))}};
  if (first) {
    refute(out, json{{"e", format_poly(*first)}, {"note", "non-constant idempotent " + pretty_poly(*first)}},
           "a non-constant idempotent exists although the Armendariz search found no violation");
    return;
  }
  out.status = ReportStatus::CertifiedBounded;
  out.detail = "skew Armendariz at bound " + armendariz_bound_text(params) + "; all " +
               std::to_string(idems.size()) + " idempotents of degree <= " + std::to_string(D) +
               " are constant";
}

void claim_lem_2_3(Run&, const ExampleRecord&, const ContextPtr& ctx, const json&,
                   ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  std::size_t central = 0, sigma_stable = 0;
  for (const auto& c : idempotent_set(R)) {
    if (!c.is_central) continue;
    ++central;
    const RingSubset Re = principal_left_ideal(ctx->ring_ptr(), c.element);
    const auto elems = Re.elements();
    const bool stable = std::all_of(elems.begin(), elems.end(),
                                    [&](Elem x) { return Re.contains(ctx->sigma()(x)); });
    if (!stable) continue;
    ++sigma_stable;
    for (Elem x : elems) {
      const Elem d = ctx->delta()(x);
      if (!Re.contains(d)) {
        refute(out, json{{"e", R.name(c.element)}, {"re", R.name(x)}, {"escaped", R.name(d)}},
               "delta(Re) leaves Re for a central idempotent with sigma(Re) in Re");
        return;
      }
    }
  }
  out.status = ReportStatus::Verified;
  out.detail = std::to_string(central) + " central idempotents, " + std::to_string(sigma_stable) +
               " with sigma(Re) in Re; delta(Re) in Re for each";
}

void claim_lem_2_4(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                   ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& hyp = run.verdict(ex, "compatible");
  if (hyp.status == Status::Fails) {
    hypothesis_not_met(out, "not (sigma,delta)-compatible", json{{"hypothesis", verdict_json(R, hyp)}});
    return;
  }
  const std::size_t max_j = param_size(params, "max_j", 4);
  const auto table = ctx->word_table(max_j);
  std::size_t pairs = 0;
  for (Elem a : R.elements()) {
    for (Elem b : R.elements()) {
      if (!R.is_zero(R.mul(a, b))) continue;
      ++pairs;
      for (std::size_t j = 0; j <= max_j; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          if (!R.is_zero(R.mul(a, table.f(i, j)[b.index]))) {
            refute(out, json{{"a", R.name(a)}, {"b", R.name(b)}, {"i", i}, {"j", j}},
                   "ab = 0 but a f_i^j(b) != 0");
            return;
          }
        }
      }
    }
  }
  out.status = ReportStatus::Verified;
  out.detail = "a f_i^j(b) = 0 for all " + std::to_string(pairs) +
               " zero-product pairs and 0 <= i <= j <= " + std::to_string(max_j);
}

void claim_lem_2_5(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                   ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& hyp = run.verdict(ex, "rigid");
  if (hyp.status == Status::Fails) {
    hypothesis_not_met(out, "not sigma-rigid", json{{"hypothesis", verdict_json(R, hyp)}});
    return;
  }
  json degrees = params.value("degrees", json::array({json::array({1, 1})}));
  json runs = json::array();
  for (const auto& d : degrees) {
    const json p{{"deg_p", d.at(0)}, {"deg_q", d.at(1)}};
    const auto& v = run.verdict(ex, "skew-armendariz", p);
    inherit_search_mode(out, v);
    if (v.status == Status::Fails) {
      json w = witness_to_json(R, *v.witness);
      refute(out, w, "sigma-rigid ring with a skew Armendariz violation at " + armendariz_bound_text(p));
      return;
    }
    runs.push_back(json{{"deg_p", d.at(0)}, {"deg_q", d.at(1)}, {"status", status_json(v)},
                        {"candidates", static_cast<double>(v.bound->candidates)}});
    out.bound = {{"deg_p", d.at(0)}, {"deg_q", d.at(1)}, {"candidates", static_cast<double>(v.bound->candidates)}};
  }
  out.status = ReportStatus::CertifiedBounded;
  out.detail = "sigma-rigid; no skew Armendariz violation at any of " + std::to_string(runs.size()) +
               " degree bounds";
  out.evidence = json{{"searches", runs}};
}

struct PanelResult {
  json summary;
  bool passed = false;
  std::string failed_check;
};

struct PanelRun {
  std::vector<SubCheck> hypotheses;
  std::vector<PanelResult> results;
  bool minus_all = true;
  bool plus_all = true;
};

PanelRun run_panel(const ContextPtr& ctx, const ExampleRecord& ex, std::size_t max_degree) {
  const FiniteRing& R = ctx->ring();
  json panel = ex.panels.value("PROP_3_2", json::array());
  if (panel.empty()) panel = json::array({json::array({"[1]"})});
  PanelRun run;
  for (const auto& gens_json : panel) {
    const auto gens = polys_of(ctx, gens_json);
    const auto rep = annihilator_idempotent_witness(ctx, gens, max_degree, false);
    if (run.hypotheses.empty()) run.hypotheses = rep.hypotheses;
    PanelResult res;
    res.passed = rep.passed();
    json checks = json::object();
    for (const auto& c : rep.checks) {
      checks[c.name] = c.passed;
      if (!c.passed && res.failed_check.empty()) res.failed_check = c.name;
    }
    json gen_text = json::array();
    for (const auto& g : gens) gen_text.push_back(pretty_poly(g));
    res.summary = json{{"generators", gen_text},
                       {"passed", res.passed},
                       {"e", rep.e ? json(R.name(*rep.e)) : json(nullptr)},
                       {"i0_size", rep.i0.size()},
                       {"annihilator_count", rep.annihilator_count},
                       {"sigma_minus_n_form", rep.sigma_minus_n_form},
                       {"sigma_plus_n_form", rep.sigma_plus_n_form},
                       {"checks", checks}};
    run.minus_all = run.minus_all && rep.sigma_minus_n_form;
    run.plus_all = run.plus_all && rep.sigma_plus_n_form;
    run.results.push_back(std::move(res));
  }
  return run;
}

json hypotheses_json(const std::vector<SubCheck>& hs) {
  json arr = json::array();
  for (const auto& h : hs) arr.push_back(json{{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
  return arr;
}

void claim_prop_3_2(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                    ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const std::size_t D = param_size(params, "max_degree", 3);
  const auto& aut = run.verdict(ex, "automorphism");
  const auto& qb = run.verdict(ex, "quasi-baer");
  const auto& st = run.verdict(ex, "stable-left-semicentral");
  std::vector<std::string> unmet;
  if (aut.status == Status::Fails) unmet.push_back("sigma is not an automorphism");
  if (qb.status == Status::Fails) unmet.push_back("R is not quasi-Baer");
  if (st.status == Status::Fails) unmet.push_back("Re is not (sigma,delta)-stable for some left semicentral e");
  const json hyp_evidence = json::array({verdict_json(R, aut), verdict_json(R, qb), verdict_json(R, st)});

  if (!unmet.empty() && !ex.panels.contains("PROP_3_2")) {
    std::string what;
    for (const auto& u : unmet) what += (what.empty() ? "" : "; ") + u;
    hypothesis_not_met(out, what, json{{"hypotheses", hyp_evidence}});
    return;
  }
  const PanelRun pr = run_panel(ctx, ex, D);
  json audit = json::array();
  std::size_t passing = 0;
  for (const auto& r : pr.results) {
    audit.push_back(r.summary);
    if (r.passed) ++passing;
  }
  const json sign = {{"sigma_minus_n", pr.minus_all}, {"sigma_plus_n", pr.plus_all}};
  if (!unmet.empty()) {
    std::string what;
    for (const auto& u : unmet) what += (what.empty() ? "" : "; ") + u;
    hypothesis_not_met(out,
                       what + "; the construction was still run on " + std::to_string(pr.results.size()) +
                           " generator sets and " + std::to_string(passing) + " pass every sub-check",
                       json{{"hypotheses", hyp_evidence},
                            {"construction_hypotheses", hypotheses_json(pr.hypotheses)},
                            {"audit", audit},
                            {"lambda_forms", sign}});
    return;
  }
  for (const auto& r : pr.results) {
    if (!r.passed) {
      refute(out, json{{"generators", r.summary.at("generators")}, {"failed_check", r.failed_check}},
             "sub-check " + r.failed_check + " fails on the truncated ideal");
      out.evidence = json{{"panel", audit}};
      return;
    }
  }
  out.status = ReportStatus::CertifiedBounded;
  out.bound = {{"deg_p", D}, {"deg_q", D},
               {"candidates", static_cast<double>(search_size(ctx->ring().order(), D + 1))}};
  out.detail = "all sub-checks pass for " + std::to_string(pr.results.size()) +
               " generator sets at degree <= " + std::to_string(D) +
               " (slice-level evidence, not a proof)";
  out.evidence = json{{"panel", audit}, {"lambda_forms", sign}};
}

struct ExtractionRun {
  json rows = json::array();
  std::size_t found = 0;
  std::size_t missing = 0;
  std::optional<json> contradiction;
};

ExtractionRun run_extraction(const ContextPtr& ctx, const ExampleRecord& ex, std::size_t idem_degree,
                             std::size_t slice_degree, std::uint64_t budget) {
  const FiniteRing& R = ctx->ring();
  const auto idems = idempotent_search(ctx, idem_degree, budget);
  std::vector<Elem> gens;
  if (ex.panels.contains("PROP_3_9")) {
    for (const auto& v : ex.panels.at("PROP_3_9")) gens.push_back(elem_of(R, v));
  } else {
    gens = R.elements();
  }
  ExtractionRun run;
  std::set<std::vector<Elem>> seen_ideals;
  for (Elem a : gens) {
    const auto rep = constant_term_extraction(ctx, a, idems, slice_degree);
    if (!seen_ideals.insert(rep.ideal).second) continue;
    json row{{"a", R.name(a)}, {"ideal_size", rep.ideal.size()}, {"annihilator_size", rep.annihilator.size()}};
    if (rep.e) {
      ++run.found;
      const OrePoly e(ctx, *rep.e);
      row["e"] = pretty_poly(e);
      row["e_constant"] = rep.e_constant;
      row["annihilator_is_e0R"] = rep.annihilator_is_e0R;
      if ((!rep.e_constant || !rep.annihilator_is_e0R) && !run.contradiction)
        run.contradiction = json{{"a", R.name(a)}, {"e", format_poly(e)}, {"note", rep.detail}};
    } else {
      ++run.missing;
      row["e"] = nullptr;
    }
    run.rows.push_back(std::move(row));
  }
  return run;
}

void claim_prop_3_9(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                    ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& hyp = run.verdict(ex, "skew-armendariz", armendariz_params(params));
  inherit_search_mode(out, hyp);
  if (hyp.status == Status::Fails) {
    hypothesis_not_met(out, "not (sigma,delta)-skew Armendariz at bound " + armendariz_bound_text(params),
                       json{{"hypothesis", verdict_json(R, hyp)}});
    return;
  }
  const auto ext = run_extraction(ctx, ex, param_size(params, "max_degree", 2),
                                  param_size(params, "slice_degree", 3), run.opts.budget);
  const auto& qb = run.verdict(ex, "quasi-baer");
  if (ext.contradiction) {
    refute(out, *ext.contradiction, "an annihilator generator is non-constant or r_R(I) != e0 R");
    out.evidence = json{{"ideals", ext.rows}};
    return;
  }
  out.status = ReportStatus::CertifiedBounded;
  out.detail = std::to_string(ext.found + ext.missing) + " principal ideals I = RaR: " +
               std::to_string(ext.found) + " with an idempotent generator of r_S(IS) of degree <= " +
               std::to_string(param_size(params, "max_degree", 2)) +
               " (constant, r_R(I) = e0 R), " + std::to_string(ext.missing) +
               " with none (S not quasi-Baer at this bound, implication vacuous); R is " +
               (qb.status == Status::Holds ? "quasi-Baer" : "not quasi-Baer");
  out.evidence = json{{"ideals", ext.rows}, {"ring_quasi_baer", status_json(qb)}};
}

void claim_thm_3_11(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json& params,
                    ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& arm = run.verdict(ex, "skew-armendariz", armendariz_params(params));
  const auto& aut = run.verdict(ex, "automorphism");
  const auto& st = run.verdict(ex, "stable-left-semicentral");
  inherit_search_mode(out, arm);
  std::vector<std::string> unmet;
  if (arm.status == Status::Fails)
    unmet.push_back("not (sigma,delta)-skew Armendariz at bound " + armendariz_bound_text(params));
  if (aut.status == Status::Fails) unmet.push_back("sigma is not an automorphism");
  if (st.status == Status::Fails) unmet.push_back("Re is not (sigma,delta)-stable for some left semicentral e");
  const json hyp_evidence = json::array({verdict_json(R, arm), verdict_json(R, aut), verdict_json(R, st)});
  if (!unmet.empty()) {
    std::string what;
    for (const auto& u : unmet) what += (what.empty() ? "" : "; ") + u;
    hypothesis_not_met(out, what, json{{"hypotheses", hyp_evidence}});
    return;
  }
  const auto& qb = run.verdict(ex, "quasi-baer");
  json evidence{{"hypotheses", hyp_evidence}, {"ring_quasi_baer", status_json(qb)}};
  if (qb.status == Status::Holds) {
    const PanelRun pr = run_panel(ctx, ex, param_size(params, "max_degree", 3));
    json audit = json::array();
    for (const auto& r : pr.results) audit.push_back(r.summary);
    evidence["forward_panel"] = audit;
    for (const auto& r : pr.results) {
      if (!r.passed) {
        refute(out, json{{"generators", r.summary.at("generators")}, {"failed_check", r.failed_check}},
               "R is quasi-Baer but the construction fails on the truncated ideal");
        out.evidence = evidence;
        return;
      }
    }
  }
  const auto ext = run_extraction(ctx, ex, param_size(params, "idempotent_degree", 2),
                                  param_size(params, "max_degree", 3), run.opts.budget);
  evidence["converse_ideals"] = ext.rows;
  if (ext.contradiction) {
    refute(out, *ext.contradiction, "converse direction: generator non-constant or r_R(I) != e0 R");
    out.evidence = evidence;
    return;
  }
  if (qb.status == Status::Fails && ext.missing == 0) {
    refute(out, json{{"note", "every principal ideal has a constant annihilator generator although R is not quasi-Baer"}},
           "converse direction inconsistent");
    out.evidence = evidence;
    return;
  }
  out.status = ReportStatus::CertifiedBounded;
  out.detail = std::string("hypotheses hold; R is ") +
               (qb.status == Status::Holds ? "quasi-Baer and the forward construction passes on every panel member"
                                           : "not quasi-Baer and some annihilator slice has no idempotent generator") +
               "; converse extraction consistent on " + std::to_string(ext.found + ext.missing) + " ideals";
  out.evidence = evidence;
}

void claim_rigid_equiv(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json&,
                       ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto& rig = run.verdict(ex, "rigid");
  const auto& red = run.verdict(ex, "reduced");
  const auto& com = run.verdict(ex, "compatible");
  const bool lhs = rig.status == Status::Holds;
  const bool rhs = red.status == Status::Holds && com.status == Status::Holds;
  json statuses{{"rigid", status_json(rig)}, {"reduced", status_json(red)}, {"compatible", status_json(com)}};
  if (lhs != rhs) {
    refute(out, statuses, "rigidity disagrees with reduced and compatible");
    out.evidence = json{{"rigid", verdict_json(R, rig)}, {"reduced", verdict_json(R, red)}, {"compatible", verdict_json(R, com)}};
    return;
  }
  out.status = ReportStatus::Verified;
  out.detail = std::string(lhs ? "rigid, reduced and compatible" : "not rigid, and not both reduced and compatible");
  out.evidence = statuses;
}

void claim_semiprime(Run& run, const ExampleRecord& ex, const ContextPtr& ctx, const json&,
                     ReportEntry& out) {
  const FiniteRing& R = ctx->ring();
  const auto cls = idempotent_set(R);
  std::size_t left = 0, right = 0, central = 0;
  for (const auto& c : cls) {
    left += c.is_left_semicentral;
    right += c.is_right_semicentral;
    central += c.is_central;
  }
  const json sizes{{"left_semicentral", left}, {"right_semicentral", right}, {"central", central}};
  const auto& sp = run.verdict(ex, "semiprime");
  if (sp.status == Status::Fails) {
    hypothesis_not_met(out, "R is not semiprime", json{{"hypothesis", verdict_json(R, sp)}, {"idempotent_sets", sizes}});
    return;
  }
  for (const auto& c : cls) {
    if (c.is_left_semicentral != c.is_central || c.is_right_semicentral != c.is_central) {
      refute(out,
             json{{"e", R.name(c.element)}, {"left_semicentral", c.is_left_semicentral},
                  {"right_semicentral", c.is_right_semicentral}, {"central", c.is_central}},
             "semiprime ring with a one-sided semicentral idempotent that is not central");
      return;
    }
  }
  out.status = ReportStatus::Verified;
  out.detail = "S_l = S_r = B with " + std::to_string(central) + " idempotents";
  out.evidence = json{{"idempotent_sets", sizes}};
}

using ClaimFn = void (*)(Run&, const ExampleRecord&, const ContextPtr&, const json&, ReportEntry&);

ClaimFn claim_function(const std::string& id) {
  static const std::map<std::string, ClaimFn> table{
      {"LEM_2_1", claim_lem_2_1},   {"LEM_2_2", claim_lem_2_2},
      {"LEM_2_3", claim_lem_2_3},   {"LEM_2_4", claim_lem_2_4},
      {"LEM_2_5", claim_lem_2_5},   {"PROP_3_2", claim_prop_3_2},
      {"PROP_3_9", claim_prop_3_9}, {"THM_3_11", claim_thm_3_11},
      {"RIGID_EQUIV", claim_rigid_equiv}, {"SEMIPRIME_COINCIDENCE", claim_semiprime}};
  auto it = table.find(id);
  if (it == table.end()) throw UnknownId("claim check", id);
  return it->second;
}

bool applies(const ClaimRecord& c, const std::string& example) {
  return std::any_of(c.applicable.begin(), c.applicable.end(),
                     [&](const std::string& a) { return a == "*" || a == example; });
}

ReportEntry skipped_entry(const ExampleRecord& ex, const std::string& id, const std::string& kind,
                          const std::string& subject, std::uint64_t seed) {
  ReportEntry e;
  e.id = id;
  e.kind = kind;
  e.example = ex.id;
  e.subject = subject;
  e.status = ReportStatus::Skipped;
  e.expected = ReportStatus::Skipped;
  e.seed = seed;
  e.analog_note = ex.analog_note;
  e.detail = *ex.skip_reason;
  return e;
}

std::vector<ReportEntry> claim_entries(Run& run, const ClaimRecord& claim,
                                       const std::vector<std::string>& only) {
  const ClaimFn fn = claim_function(claim.id);
  std::vector<ReportEntry> out;
  for (const auto& ex : run.reg.examples()) {
    if (!only.empty() && std::find(only.begin(), only.end(), ex.id) == only.end()) continue;
    if (!applies(claim, ex.id)) continue;
    const std::string id = claim.id + "/" + ex.id;
    if (ex.skipped()) {
      out.push_back(skipped_entry(ex, id, "claim", claim.id, run.opts.seed));
      continue;
    }
    const auto start = Clock::now();
    ReportEntry e;
    e.id = id;
    e.kind = "claim";
    e.example = ex.id;
    e.subject = claim.id;
    e.expected = claim.expected_for(ex.id);
    e.seed = run.opts.seed;
    e.analog_note = ex.analog_note;
    fn(run, ex, run.reg.instantiate(ex.id), claim.params, e);
    e.elapsed_ms = ms_since(start);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ReportEntry> example_entries(Run& run, const ExampleRecord& ex) {
  if (ex.skipped()) return {skipped_entry(ex, ex.id, "example", ex.id, run.opts.seed)};
  const ContextPtr ctx = run.reg.instantiate(ex.id);
  const FiniteRing& R = ctx->ring();
  std::vector<ReportEntry> out;
  for (const auto& c : ex.expected) {
    ReportEntry e;
    e.id = property_entry_id(ex.id, c.property, c.params);
    e.kind = "property";
    e.example = ex.id;
    e.subject = c.property;
    e.seed = run.opts.seed;
    e.analog_note = ex.analog_note;
    const PropertyVerdict& v = run.verdict(ex, c.property, c.params);
    apply_verdict(e, R, v);
    e.expected = c.status;
    if (e.status == c.status && v.status == Status::Fails) {
      if (auto mismatch = match_witness(R, v, c.witness)) {
        // Status agrees but the witness shape does not: flag it.
        e.expected = ReportStatus::Verified;
        e.detail = "witness mismatch: " + *mismatch;
        e.evidence = json{{"expected_witness", c.witness}};
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

ReportDocument make_document(const std::string& target, const VerifyOptions& opts) {
  ReportDocument doc;
  doc.tool_version = tool_version();
  doc.invocation = json{{"command", "verify"},
                        {"target", target},
                        {"seed", opts.seed},
                        {"budget", opts.budget},
                        {"trials", opts.trials}};
  return doc;
}

}  // namespace

std::vector<ReportEntry> verify_claim(const Registry& reg, const std::string& claim_id,
                                      const VerifyOptions& opts,
                                      const std::vector<std::string>& only_examples) {
  Run run{reg, opts, {}};
  return claim_entries(run, reg.claim(claim_id), only_examples);
}

std::vector<ReportEntry> verify_example(const Registry& reg, const std::string& example_id,
                                        const VerifyOptions& opts) {
  Run run{reg, opts, {}};
  return example_entries(run, reg.example(example_id));
}

ReportDocument verify_filtered(const Registry& reg, const std::vector<std::string>& examples,
                               const std::vector<std::string>& claims, const VerifyOptions& opts) {
  ReportDocument doc = make_document("filter", opts);
  doc.invocation["examples"] = examples;
  doc.invocation["claims"] = claims;
  Run run{reg, opts, {}};
  for (const auto& id : examples) {
    auto entries = example_entries(run, reg.example(id));
    doc.entries.insert(doc.entries.end(), entries.begin(), entries.end());
  }
  std::vector<std::string> active;
  for (const auto& id : examples)
    if (!reg.example(id).skipped()) active.push_back(id);
  if (!active.empty()) {
    for (const auto& id : claims) {
      auto entries = claim_entries(run, reg.claim(id), active);
      doc.entries.insert(doc.entries.end(), entries.begin(), entries.end());
    }
  }
  return doc;
}

ReportDocument verify(const Registry& reg, const std::string& target, const VerifyOptions& opts) {
  ReportDocument doc = make_document(target, opts);
  Run run{reg, opts, {}};
  auto append = [&](std::vector<ReportEntry> entries) {
    doc.entries.insert(doc.entries.end(), std::make_move_iterator(entries.begin()),
                       std::make_move_iterator(entries.end()));
  };
  if (target == "all") {
    for (const auto& ex : reg.examples()) append(example_entries(run, ex));
    for (const auto& c : reg.claims()) append(claim_entries(run, c, {}));
  } else if (reg.has_claim(target)) {
    append(claim_entries(run, reg.claim(target), {}));
  } else if (reg.has_example(target)) {
    const ExampleRecord& ex = reg.example(target);
    append(example_entries(run, ex));
    if (!ex.skipped())
      for (const auto& c : reg.claims()) append(claim_entries(run, c, {target}));
  } else {
    throw UnknownId("claim or example", target);
  }
  return doc;
}

std::string property_entry_id(const std::string& target, const std::string& property,
                              const json& params) {
  return target + "/" + property + params_label(params);
}

std::string tool_version() { return OREQB_VERSION; }

}  // namespace oreqb
