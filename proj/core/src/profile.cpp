#include "hypergen/profile.hpp"

#include <unordered_set>

#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

std::optional<std::string_view> EntityProfile::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return std::string_view(v);
  return std::nullopt;
}

std::vector<EntityProfile> parse_profiles(std::string_view csv) {
  std::vector<EntityProfile> out;
  std::unordered_set<NodeId> seen_ids;
  std::size_t line_no = 0;
  for (auto raw : text::split(csv, '\n')) {
    ++line_no;
    auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto c1 = line.find(',');
    const auto id_field = text::trim(line.substr(0, c1));
    auto id = text::parse_uint(id_field);
    if (!id) {
      if (out.empty() && id_field == "id") continue;  // header row
      throw ParseError(line_no, "invalid profile id '" + std::string(id_field) + "'");
    }
    if (!seen_ids.insert(*id).second)
      throw ParseError(line_no, "duplicate profile id " + std::to_string(*id));

    EntityProfile p;
    p.id = *id;
    if (c1 != std::string_view::npos) {
      auto rest = line.substr(c1 + 1);
      const auto c2 = rest.find(',');
      auto attrs = text::trim(rest.substr(0, c2));
      if (c2 != std::string_view::npos) p.persona = std::string(text::trim(rest.substr(c2 + 1)));
      if (!attrs.empty()) {
        for (auto kv : text::split(attrs, ';')) {
          kv = text::trim(kv);
          if (kv.empty()) continue;
          const auto eq = kv.find('=');
          if (eq == std::string_view::npos || eq == 0)
            throw ParseError(line_no, "attribute must be key=value: '" + std::string(kv) + "'");
          std::string key(text::trim(kv.substr(0, eq)));
          if (p.attribute(key)) throw ParseError(line_no, "duplicate attribute key '" + key + "'");
          p.attributes.emplace_back(std::move(key), std::string(text::trim(kv.substr(eq + 1))));
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<EntityProfile> read_profiles_file(const std::string& path) {
  return parse_profiles(text::read_file(path));
}

std::string serialize_profiles(const std::vector<EntityProfile>& profiles) {
  std::string out = "id,attributes,persona\n";
  for (const auto& p : profiles) {
    out += std::to_string(p.id);
    out += ',';
    for (std::size_t i = 0; i < p.attributes.size(); ++i) {
      if (i) out += ';';
      out += p.attributes[i].first + '=' + p.attributes[i].second;
    }
    out += ',';
    out += p.persona;
    out += '\n';
  }
  return out;
}

std::vector<EntityProfile> synthetic_profiles(std::size_t count) {
  static constexpr const char* kFields[] = {"systems", "theory", "biology", "economics",
                                            "linguistics", "physics", "design", "medicine"};
  static constexpr const char* kRoles[] = {"lead", "analyst", "engineer", "student", "advisor"};
  std::vector<EntityProfile> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    EntityProfile p;
    p.id = i;
    p.attributes = {{"field", kFields[(i * 7 + i / 8) % 8]},
                    {"role", kRoles[(i * 3 + 1) % 5]},
                    {"site", "s" + std::to_string(i % 13)}};
    p.persona = "entity " + std::to_string(i);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hypergen
