#include "oreqb_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oreqb/descriptor.hpp"
#include "oreqb/error.hpp"
#include "oreqb/expr.hpp"
#include "oreqb/registry.hpp"

namespace oreqb::cli {

using nlohmann::json;

namespace {

struct Target {
  std::string label;
  ContextPtr ctx;  // null for skipped records
  const ExampleRecord* record = nullptr;
  bool has_maps = false;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Target resolve(const Registry& reg, const std::string& text) {
  Target t;
  t.label = text;
  if (reg.has_example(text)) {
    t.record = &reg.example(text);
    if (!t.record->skipped()) t.ctx = reg.instantiate(text);
    t.has_maps = true;
    return t;
  }
  if (auto d = parse_ring_shorthand(text)) {
    ContextDescriptor cd;
    cd.ring = *d;
    t.ctx = instantiate(cd);
    return t;
  }
  if (std::filesystem::is_regular_file(text)) {
    const json doc = parse_json_text(read_file(text));
    t.has_maps = doc.is_object() && (doc.contains("sigma") || doc.contains("delta"));
    t.ctx = instantiate(context_descriptor_from_json(doc));
    return t;
  }
  throw UnknownId("example, ring shorthand or descriptor file", text);
}

const ContextPtr& need_context(const Target& t) {
  if (!t.ctx) throw Error(t.label + " is skipped: " + *t.record->skip_reason);
  return t.ctx;
}

std::string set_text(const FiniteRing& R, const std::vector<Elem>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? ", " : "") + R.name(elems[i]);
  return out + "}";
}

std::string classification(const IdempotentClass& c) {
  if (c.is_central) return "central";
  if (c.is_left_semicentral) return "left semicentral";
  if (c.is_right_semicentral) return "right semicentral";
  return "not semicentral";
}

void print_table(std::ostream& out, const FiniteRing& R, const char* op,
                 Elem (FiniteRing::*fn)(Elem, Elem) const noexcept) {
  const auto elems = R.elements();
  std::size_t w = 1;
  for (Elem e : elems) w = std::max(w, R.name(e).size());
  out << "  " << std::setw(static_cast<int>(w)) << op << " |";
  for (Elem b : elems) out << " " << std::setw(static_cast<int>(w)) << R.name(b);
  out << "\n";
  for (Elem a : elems) {
    out << "  " << std::setw(static_cast<int>(w)) << R.name(a) << " |";
    for (Elem b : elems) out << " " << std::setw(static_cast<int>(w)) << R.name((R.*fn)(a, b));
    out << "\n";
  }
}

json ring_json(const Target& t) {
  const FiniteRing& R = t.ctx->ring();
  json j{{"target", t.label},
         {"kind", std::string(kind_name(R.descriptor().kind))},
         {"descriptor", to_json(R.descriptor())},
         {"order", R.order()},
         {"characteristic", R.characteristic()},
         {"commutative", R.is_commutative()}};
  json idems = json::array();
  for (const auto& c : idempotent_set(R))
    idems.push_back(json{{"element", R.name(c.element)}, {"class", classification(c)}});
  j["idempotents"] = idems;
  if (R.order() <= 64) {
    json names = json::array();
    for (Elem e : R.elements()) names.push_back(R.name(e));
    j["elements"] = names;
  }
  if (t.has_maps) {
    j["sigma_automorphism"] = t.ctx->sigma().is_automorphism();
    j["delta_zero"] = t.ctx->delta_is_zero();
  }
  if (t.record) j["analog_note"] = t.record->analog_note;
  return j;
}

void show_ring(std::ostream& out, const Target& t) {
  const FiniteRing& R = t.ctx->ring();
  out << "ring " << t.label << "\n";
  if (t.record && !t.record->title.empty()) out << "  title: " << t.record->title << "\n";
  if (t.record) out << "  analog: " << t.record->analog_note << "\n";
  out << "  kind: " << kind_name(R.descriptor().kind) << "\n";
  out << "  order: " << R.order() << "\n";
  out << "  characteristic: " << R.characteristic() << "\n";
  out << "  commutative: " << (R.is_commutative() ? "yes" : "no") << "\n";
  if (R.order() <= 64) out << "  elements: " << set_text(R, R.elements()) << "\n";
  const auto idems = idempotent_set(R);
  std::vector<Elem> elems;
  for (const auto& c : idems) elems.push_back(c.element);
  out << "  idempotents: " << set_text(R, elems) << "\n";
  for (const auto& c : idems) out << "    " << R.name(c.element) << ": " << classification(c) << "\n";
  if (t.has_maps) {
    const auto& sigma = t.ctx->sigma();
    out << "  sigma: " << (sigma.is_automorphism() ? "automorphism" : "endomorphism, not bijective")
        << (sigma.is_identity() ? " (identity)" : "") << "\n";
    out << "  delta: " << (t.ctx->delta_is_zero() ? "zero" : "nonzero sigma-derivation") << "\n";
    if (R.order() <= 16) {
      out << "  maps:\n";
      for (Elem a : R.elements())
        out << "    " << R.name(a) << " -> sigma " << R.name(sigma(a)) << ", delta "
            << R.name(t.ctx->delta()(a)) << "\n";
    }
  }
  if (R.order() <= 16) {
    out << "addition:\n";
    print_table(out, R, "+", &FiniteRing::add);
    out << "multiplication:\n";
    print_table(out, R, "*", &FiniteRing::mul);
  }
}

void emit(std::ostream& out, const ReportDocument& doc, const std::string& format) {
  if (format == "json")
    out << to_json(doc).dump(2) << "\n";
  else
    out << render_text(doc);
}

std::optional<ExpectedCheck> expectation(const ExampleRecord* rec, const std::string& property,
                                         const json& params) {
  if (!rec) return std::nullopt;
  json stripped = params;
  if (stripped.is_object()) stripped.erase("mode");
  for (const auto& c : rec->expected) {
    json p = c.params;
    if (p.is_object()) p.erase("mode");
    if (c.property == property && p == stripped) return c;
  }
  return std::nullopt;
}

struct Common {
  std::string format = "text";
  std::string registry_dir;
  std::uint64_t seed = 42;
  std::uint64_t budget = 20'000'000;
  std::uint64_t trials = 100'000;
};

Registry load_registry(const Common& c) {
  Registry reg = Registry::builtin();
  if (!c.registry_dir.empty()) reg.load_directory(c.registry_dir);
  return reg;
}

json invocation_of(const std::string& command, const std::vector<std::string>& args) {
  return json{{"command", command}, {"args", args}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for finite rings and Ore extensions R[x;sigma,delta]", "oreqb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  Common common;
  std::function<int()> action;
  auto add_common = [&](CLI::App* sub, bool with_search) {
    sub->add_option("--registry", common.registry_dir, "Directory of extra example records")
        ->check(CLI::ExistingDirectory);
    if (with_search) {
      sub->add_option("--seed", common.seed, "Seed for randomized searches")->capture_default_str();
      sub->add_option("--budget", common.budget, "Exhaustive search budget (candidates)")
          ->capture_default_str();
      sub->add_option("--trials", common.trials, "Trials for randomized searches")
          ->capture_default_str();
    }
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  // ring show | validate
  auto* ring = app.add_subcommand("ring", "Inspect or validate a ring");
  ring->require_subcommand(1);
  std::string ring_target;
  auto* ring_show = ring->add_subcommand("show", "Order, idempotent classification, small tables");
  ring_show->add_option("target", ring_target, "Example id, modular:N or descriptor file")->required();
  add_common(ring_show, false);
  add_format(ring_show);
  ring_show->callback([&] {
    action = [&] {
      const Registry reg = load_registry(common);
      const Target t = resolve(reg, ring_target);
      need_context(t);
      if (common.format == "json")
        out << ring_json(t).dump(2) << "\n";
      else
        show_ring(out, t);
      return kOk;
    };
  });
  auto* ring_validate = ring->add_subcommand("validate", "Build the ring and scan the axioms");
  ring_validate->add_option("target", ring_target, "Example id, modular:N or descriptor file")
      ->required();
  add_common(ring_validate, false);
  ring_validate->callback([&] {
    action = [&] {
      const Registry reg = load_registry(common);
      const Target t = resolve(reg, ring_target);
      const FiniteRing& R = need_context(t)->ring();
      out << "valid: " << t.label << " is a ring of order " << R.order();
      if (t.has_maps) out << "; sigma is a ring endomorphism and delta a sigma-derivation";
      out << "\n";
      return kOk;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Run one property checker");
  std::string property, check_target, mode = "auto", element;
  std::size_t max_degree = 2;
  check->add_option("property", property, "Property name")->required();
  check->add_option("target", check_target, "Example id, modular:N or descriptor file")->required();
  check->add_option("--max-degree", max_degree, "Degree bound for polynomial searches")
      ->capture_default_str();
  check->add_option("--mode", mode, "Armendariz search mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "randomized"}))
      ->capture_default_str();
  check->add_option("--element", element, "Idempotent for the 'stable' property");
  add_common(check, true);
  add_format(check);
  check->callback([&] {
    action = [&] {
      const Registry reg = load_registry(common);
      const auto names = property_names();
      if (std::find(names.begin(), names.end(), property) == names.end())
        throw UnknownId("property", property);
      const Target t = resolve(reg, check_target);

      json params = json::object();
      if (property == "skew-armendariz" || property == "sigma-skew-armendariz") {
        params["deg_p"] = max_degree;
        params["deg_q"] = max_degree;
      } else if (property == "constant-idempotents") {
        params["max_degree"] = max_degree;
      } else if (property == "stable") {
        if (element.empty()) throw Error("property 'stable' needs --element");
        params["element"] = element;
      }

      ReportDocument doc;
      doc.tool_version = tool_version();
      doc.invocation = invocation_of("check", args);
      ReportEntry e;
      e.id = property_entry_id(t.label, property, params);
      e.kind = "property";
      e.example = t.record ? t.record->id : "";
      e.subject = property;
      e.seed = common.seed;
      e.analog_note = t.record ? t.record->analog_note : "";
      if (!t.ctx) {
        e.status = ReportStatus::Skipped;
        e.detail = *t.record->skip_reason;
        doc.entries.push_back(e);
        emit(out, doc, common.format);
        return kOk;
      }
      if (property_needs_maps(property) && !t.has_maps)
        throw Error("property '" + property + "' needs sigma and delta; " + t.label +
                    " is a bare ring");
      CheckOptions copts;
      copts.max_degree = max_degree;
      copts.budget = common.budget;
      copts.seed = common.seed;
      copts.trials = common.trials;
      copts.mode = mode;
      const json hints = t.record ? t.record->hints : json::object();
      const PropertyVerdict v = run_property(t.ctx, property, params, hints, copts);
      apply_verdict(e, t.ctx->ring(), v);
      if (auto want = expectation(t.record, property, params)) {
        e.expected = want->status;
        if (v.status == Status::Fails)
          if (auto bad = match_witness(t.ctx->ring(), v, want->witness))
            e.detail += (e.detail.empty() ? "" : "; ") + std::string("witness differs from the record: ") + *bad;
      }
      doc.entries.push_back(e);
      emit(out, doc, common.format);
      return e.status == ReportStatus::Refuted ? kRefuted : kOk;
    };
  });

  // ore
  auto* ore = app.add_subcommand("ore", "Arithmetic in R[x;sigma,delta]");
  ore->require_subcommand(1);
  std::string ore_target, lhs, rhs;
  bool pretty = false;
  auto print_poly = [&](const OrePoly& p) { out << (pretty ? pretty_poly(p) : format_poly(p)) << "\n"; };
  auto ore_context = [&] {
    const Registry reg = load_registry(common);
    return need_context(resolve(reg, ore_target));
  };
  auto binary = [&](const char* name, const char* help, std::function<OrePoly(const OrePoly&, const OrePoly&)> fn) {
    auto* sub = ore->add_subcommand(name, help);
    sub->add_option("context", ore_target, "Example id, modular:N or descriptor file")->required();
    sub->add_option("p", lhs, "Coefficient list, e.g. \"[t,0,1]\"")->required();
    sub->add_option("q", rhs, "Coefficient list")->required();
    sub->add_flag("--pretty", pretty, "Print as a sum of monomials");
    add_common(sub, false);
    sub->callback([&, fn] {
      action = [&, fn] {
        const ContextPtr ctx = ore_context();
        print_poly(fn(parse_poly(ctx, lhs), parse_poly(ctx, rhs)));
        return kOk;
      };
    });
  };
  binary("mul", "Product p*q", [](const OrePoly& p, const OrePoly& q) { return p * q; });
  binary("add", "Sum p+q", [](const OrePoly& p, const OrePoly& q) { return p + q; });
  binary("sub", "Difference p-q", [](const OrePoly& p, const OrePoly& q) { return p - q; });

  auto* ore_neg = ore->add_subcommand("neg", "Negation -p");
  ore_neg->add_option("context", ore_target, "Example id, modular:N or descriptor file")->required();
  ore_neg->add_option("p", lhs, "Coefficient list")->required();
  ore_neg->add_flag("--pretty", pretty, "Print as a sum of monomials");
  add_common(ore_neg, false);
  ore_neg->callback([&] {
    action = [&] {
      const ContextPtr ctx = ore_context();
      print_poly(-parse_poly(ctx, lhs));
      return kOk;
    };
  });

  auto* ore_eq = ore->add_subcommand("eq", "Prints true or false");
  ore_eq->add_option("context", ore_target, "Example id, modular:N or descriptor file")->required();
  ore_eq->add_option("p", lhs, "Coefficient list")->required();
  ore_eq->add_option("q", rhs, "Coefficient list")->required();
  add_common(ore_eq, false);
  ore_eq->callback([&] {
    action = [&] {
      const ContextPtr ctx = ore_context();
      out << (parse_poly(ctx, lhs) == parse_poly(ctx, rhs) ? "true" : "false") << "\n";
      return kOk;
    };
  });

  std::size_t shift_n = 0;
  auto* ore_shift = ore->add_subcommand("shift", "x^n r written with left coefficients");
  ore_shift->add_option("context", ore_target, "Example id, modular:N or descriptor file")->required();
  ore_shift->add_option("n", shift_n, "Power of x")->required();
  ore_shift->add_option("r", lhs, "Ring element")->required();
  ore_shift->add_flag("--pretty", pretty, "Print as a sum of monomials");
  add_common(ore_shift, false);
  ore_shift->callback([&] {
    action = [&] {
      const ContextPtr ctx = ore_context();
      print_poly(monomial_shift(ctx, shift_n, parse_element(ctx->ring(), lhs)));
      return kOk;
    };
  });

  std::size_t idem_degree = 2;
  auto* ore_idem = ore->add_subcommand("idempotents", "All idempotents up to a degree");
  ore_idem->add_option("context", ore_target, "Example id, modular:N or descriptor file")->required();
  ore_idem->add_option("--max-degree", idem_degree, "Degree bound")->capture_default_str();
  ore_idem->add_flag("--pretty", pretty, "Print as a sum of monomials");
  add_common(ore_idem, true);
  ore_idem->callback([&] {
    action = [&] {
      const ContextPtr ctx = ore_context();
      for (const auto& e : idempotent_search(ctx, idem_degree, common.budget)) print_poly(e);
      return kOk;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run registry expectations and claims");
  std::string verify_target;
  std::vector<std::string> only;
  verify_cmd->add_option("target", verify_target, "Claim id, example id or 'all'")->required();
  verify_cmd->add_option("--only", only, "Restrict to these example ids");
  add_common(verify_cmd, true);
  add_format(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      const Registry reg = load_registry(common);
      VerifyOptions vo;
      vo.seed = common.seed;
      vo.budget = common.budget;
      vo.trials = common.trials;
      ReportDocument doc;
      if (only.empty()) {
        doc = verify(reg, verify_target, vo);
      } else {
        for (const auto& id : only) reg.example(id);
        std::vector<std::string> claims;
        if (verify_target == "all") {
          for (const auto& c : reg.claims()) claims.push_back(c.id);
        } else if (reg.has_claim(verify_target)) {
          claims.push_back(verify_target);
        } else {
          throw UnknownId("claim", verify_target);
        }
        doc = verify_filtered(reg, only, claims, vo);
        doc.invocation["target"] = verify_target;
      }
      doc.invocation["args"] = args;
      emit(out, doc, common.format);
      return doc.all_expected() ? kOk : kRefuted;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }
  if (!action) return kError;
  try {
    return action();
  } catch (const BudgetExceeded& e) {
    err << "oreqb: " << e.what() << "\n";
    return kBudget;
  } catch (const RingAxiomViolation& e) {
    err << "oreqb: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "oreqb: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace oreqb::cli
