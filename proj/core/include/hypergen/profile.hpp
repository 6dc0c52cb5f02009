#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypergen/hypergraph.hpp"

namespace hypergen {

/// A node seen as an entity: attributes plus free-text persona.
struct EntityProfile {
  NodeId id = 0;
  std::vector<std::pair<std::string, std::string>> attributes;  // unique keys
  std::string persona;

  std::optional<std::string_view> attribute(std::string_view key) const;
};

// Profiles CSV: `id,key=value;key=value,persona` per line. An optional
// `id,attributes,persona` header and `#` comment lines are skipped. The persona
// field runs to the end of the line and may itself contain commas.
std::vector<EntityProfile> parse_profiles(std::string_view csv);
std::vector<EntityProfile> read_profiles_file(const std::string& path);
std::string serialize_profiles(const std::vector<EntityProfile>& profiles);

// Deterministic stand-in population for runs without a profiles file.
std::vector<EntityProfile> synthetic_profiles(std::size_t count);

}  // namespace hypergen
