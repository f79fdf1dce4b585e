#pragma once

// JSON form of ring descriptors, map rules and Ore contexts.
//
//   ring    := {"kind": "modular", "n": 6}
//            | {"kind": "quotient", "base": ring, "modulus": [literal...], "var": "t"}
//            | {"kind": "upper_triangular_2x2", "base": ring}
//            | {"kind": "full_matrix", "base": ring, "size": 2}
//            | {"kind": "product", "left": ring, "right": ring}
//            | {"kind": "subring", "base": ring, "generators": [literal...]}
//            | {"kind": "table", "order": n, "zero": i, "one": j,
//               "add": [[...]], "mul": [[...]], "names": [...]}
//   rule    := {"rule": name, "factor": k, "element": literal, "image": [literal...]}
//   context := {"ring": ring, "sigma": rule, "delta": rule}
//
// A bare ring document is accepted wherever a context is expected, with
// sigma = identity and delta = zero.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "oreqb/maps.hpp"
#include "oreqb/ring.hpp"

namespace oreqb {

struct ContextDescriptor {
  RingDescriptor ring;
  MapRule sigma;
  MapRule delta = [] {
    MapRule r;
    r.kind = MapRule::Kind::Zero;
    return r;
  }();

  friend bool operator==(const ContextDescriptor&, const ContextDescriptor&) = default;
};

/// Throws ParseError with line and column for malformed JSON.
nlohmann::json parse_json_text(std::string_view text);

nlohmann::json to_json(const RingDescriptor& d);
nlohmann::json to_json(const MapRule& rule);
nlohmann::json to_json(const ContextDescriptor& d);

/// Structural problems (unknown kind, missing field) raise DescriptorError
/// naming the offending path.
RingDescriptor ring_descriptor_from_json(const nlohmann::json& j);
MapRule map_rule_from_json(const nlohmann::json& j);
ContextDescriptor context_descriptor_from_json(const nlohmann::json& j);

ContextDescriptor parse_context_text(std::string_view text);
ContextDescriptor load_context_file(const std::filesystem::path& path);

/// "modular:N" shorthand; nullopt for anything else.
std::optional<RingDescriptor> parse_ring_shorthand(std::string_view text);

ContextPtr instantiate(const ContextDescriptor& d);

}  // namespace oreqb
