#include "oreqb/descriptor.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "oreqb/error.hpp"

namespace oreqb {

using nlohmann::json;

namespace {

struct KindName {
  RingDescriptor::Kind kind;
  std::string_view name;
};

constexpr KindName kKinds[] = {
    {RingDescriptor::Kind::Modular, "modular"},
    {RingDescriptor::Kind::Quotient, "quotient"},
    {RingDescriptor::Kind::UpperTriangular, "upper_triangular_2x2"},
    {RingDescriptor::Kind::FullMatrix, "full_matrix"},
    {RingDescriptor::Kind::Product, "product"},
    {RingDescriptor::Kind::Subring, "subring"},
    {RingDescriptor::Kind::Table, "table"},
};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DescriptorError((path.empty() ? std::string("descriptor") : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint32_t unsigned_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > UINT32_MAX)
    fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::uint32_t>();
}

std::string literal(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  fail(path, "expected an element literal (string or integer)");
}

std::vector<std::string> literal_list(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(literal(v[i], path + "." + key + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<std::uint32_t>> table_field(const json& j, const char* key,
                                                    const std::string& path) {
  const json& v = field(j, key, path);
  try {
    return v.get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const json::exception&) {
    fail(path + "." + key, "expected a square array of element indices");
  }
}

RingDescriptor ring_from(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (auto d = parse_ring_shorthand(j.get<std::string>())) return *d;
    fail(path, "unknown ring shorthand \"" + j.get<std::string>() + "\"");
  }
  const json& k = field(j, "kind", path);
  if (!k.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = k.get<std::string>();
  if (kind == "modular") return RingDescriptor::modular(unsigned_field(j, "n", path));
  if (kind == "quotient") {
    std::string var = "t";
    if (auto it = j.find("var"); it != j.end()) {
      if (!it->is_string()) fail(path + ".var", "expected a string");
      var = it->get<std::string>();
    }
    return RingDescriptor::quotient(ring_from(field(j, "base", path), path + ".base"),
                                    literal_list(j, "modulus", path), var);
  }
  if (kind == "upper_triangular_2x2")
    return RingDescriptor::upper_triangular(ring_from(field(j, "base", path), path + ".base"));
  if (kind == "full_matrix")
    return RingDescriptor::full_matrix(ring_from(field(j, "base", path), path + ".base"),
                                       unsigned_field(j, "size", path));
  if (kind == "product")
    return RingDescriptor::product(ring_from(field(j, "left", path), path + ".left"),
                                   ring_from(field(j, "right", path), path + ".right"));
  if (kind == "subring")
    return RingDescriptor::subring(ring_from(field(j, "base", path), path + ".base"),
                                   literal_list(j, "generators", path));
  if (kind == "table") {
    RawTables t;
    t.order = unsigned_field(j, "order", path);
    t.zero = unsigned_field(j, "zero", path);
    t.one = unsigned_field(j, "one", path);
    t.add = table_field(j, "add", path);
    t.mul = table_field(j, "mul", path);
    if (j.contains("names")) t.names = literal_list(j, "names", path);
    return RingDescriptor::table(std::move(t));
  }
  fail(path + ".kind", "unknown ring kind \"" + kind + "\"");
}

std::string_view kind_label(RingDescriptor::Kind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "unknown";
}

// Converts a 1-based byte offset into a line and column.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = locate(text, e.byte);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, col);
  }
}

json to_json(const RingDescriptor& d) {
  json j;
  j["kind"] = std::string(kind_label(d.kind));
  switch (d.kind) {
    case RingDescriptor::Kind::Modular:
      j["n"] = d.modulus;
      break;
    case RingDescriptor::Kind::Quotient:
      j["base"] = to_json(d.parts.at(0));
      j["modulus"] = d.poly;
      j["var"] = d.var;
      break;
    case RingDescriptor::Kind::UpperTriangular:
      j["base"] = to_json(d.parts.at(0));
      break;
    case RingDescriptor::Kind::FullMatrix:
      j["base"] = to_json(d.parts.at(0));
      j["size"] = d.matrix_size;
      break;
    case RingDescriptor::Kind::Product:
      j["left"] = to_json(d.parts.at(0));
      j["right"] = to_json(d.parts.at(1));
      break;
    case RingDescriptor::Kind::Subring:
      j["base"] = to_json(d.parts.at(0));
      j["generators"] = d.generators;
      break;
    case RingDescriptor::Kind::Table: {
      const RawTables& t = d.tables.value();
      j["order"] = t.order;
      j["zero"] = t.zero;
      j["one"] = t.one;
      j["add"] = t.add;
      j["mul"] = t.mul;
      if (!t.names.empty()) j["names"] = t.names;
      break;
    }
  }
  return j;
}

json to_json(const MapRule& rule) {
  json j;
  j["rule"] = std::string(rule_name(rule.kind));
  switch (rule.kind) {
    case MapRule::Kind::ScaleCorner:
      j["factor"] = rule.factor;
      break;
    case MapRule::Kind::Substitute:
    case MapRule::Kind::ConjugateBy:
    case MapRule::Kind::Inner:
      j["element"] = rule.element;
      break;
    case MapRule::Kind::Image:
      j["image"] = rule.image;
      break;
    default:
      break;
  }
  return j;
}

json to_json(const ContextDescriptor& d) {
  return json{{"ring", to_json(d.ring)}, {"sigma", to_json(d.sigma)}, {"delta", to_json(d.delta)}};
}

RingDescriptor ring_descriptor_from_json(const json& j) { return ring_from(j, "ring"); }

MapRule map_rule_from_json(const json& j) {
  const json& r = field(j, "rule", "map");
  if (!r.is_string()) fail("map.rule", "expected a string");
  auto kind = rule_from_name(r.get<std::string>());
  if (!kind) fail("map.rule", "unknown rule \"" + r.get<std::string>() + "\"");
  MapRule rule;
  rule.kind = *kind;
  if (auto it = j.find("factor"); it != j.end()) {
    if (!it->is_number_integer()) fail("map.factor", "expected an integer");
    rule.factor = it->get<std::int64_t>();
  }
  if (auto it = j.find("element"); it != j.end()) rule.element = literal(*it, "map.element");
  if (j.contains("image")) rule.image = literal_list(j, "image", "map");
  return rule;
}

ContextDescriptor context_descriptor_from_json(const json& j) {
  ContextDescriptor d;
  if (j.is_object() && j.contains("kind")) {
    d.ring = ring_from(j, "ring");
    return d;
  }
  d.ring = ring_from(field(j, "ring", "context"), "ring");
  if (auto it = j.find("sigma"); it != j.end()) d.sigma = map_rule_from_json(*it);
  if (auto it = j.find("delta"); it != j.end()) d.delta = map_rule_from_json(*it);
  return d;
}

ContextDescriptor parse_context_text(std::string_view text) {
  return context_descriptor_from_json(parse_json_text(text));
}

ContextDescriptor load_context_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_context_text(buf.str());
}

std::optional<RingDescriptor> parse_ring_shorthand(std::string_view text) {
  constexpr std::string_view prefix = "modular:";
  if (!text.starts_with(prefix)) return std::nullopt;
  std::uint32_t n = 0;
  const char* first = text.data() + prefix.size();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return RingDescriptor::modular(n);
}

ContextPtr instantiate(const ContextDescriptor& d) {
  return make_context(construct_ring(d.ring), d.sigma, d.delta);
}

}  // namespace oreqb
