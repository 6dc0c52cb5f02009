#include "hypergen/hgt_format.hpp"

#include "hypergen/error.hpp"
#include "hypergen/text.hpp"

namespace hypergen {

namespace {

enum class Mode { kHeaderless, kTemporal, kStatic };

std::vector<NodeId> parse_node_list(std::string_view field, std::size_t line_no) {
  field = text::trim(field);
  if (field.empty()) throw ParseError(line_no, "empty node list");
  std::vector<NodeId> ids;
  for (auto tok : text::split(field, ',')) {
    auto v = text::parse_uint(text::trim(tok));
    if (!v) throw ParseError(line_no, "invalid node id '" + std::string(tok) + "'");
    ids.push_back(*v);
  }
  return ids;
}

}  // namespace

TemporalHypergraph parse_hypergraph(std::string_view input) {
  TemporalHypergraph h;
  Mode mode = Mode::kHeaderless;
  bool all_timestamped = true;
  std::size_t line_no = 0;
  std::size_t start = 0;

  while (start < input.size()) {
    auto end = input.find('\n', start);
    if (end == std::string_view::npos) end = input.size();
    std::string_view line = input.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line_no == 1 && line.starts_with("#HGT1")) {
      auto flag = text::trim(line.substr(5));
      if (flag.empty() || flag == "temporal") {
        mode = Mode::kTemporal;
      } else if (flag == "static") {
        mode = Mode::kStatic;
      } else {
        throw ParseError(line_no, "unknown header flag '" + std::string(flag) + "'");
      }
      continue;
    }
    if (text::trim(line).empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    Timestamp ts = h.num_edges();
    std::string_view nodes_field = line;
    if (tab != std::string_view::npos) {
      if (mode == Mode::kStatic) throw ParseError(line_no, "timestamp in a static file");
      auto t = text::parse_uint(text::trim(line.substr(0, tab)));
      if (!t) throw ParseError(line_no, "invalid timestamp '" + std::string(line.substr(0, tab)) + "'");
      ts = *t;
      nodes_field = line.substr(tab + 1);
    } else {
      if (mode == Mode::kTemporal) throw ParseError(line_no, "missing timestamp");
      all_timestamped = false;
    }
    h.add_hyperedge(Hyperedge::make(parse_node_list(nodes_field, line_no), ts));
  }

  switch (mode) {
    case Mode::kTemporal: h.set_temporal(true); break;
    case Mode::kStatic: h.set_temporal(false); break;
    case Mode::kHeaderless: h.set_temporal(all_timestamped); break;
  }
  return h;
}

std::string serialize_hypergraph(const TemporalHypergraph& h) {
  std::string out = h.is_temporal() ? "#HGT1\n" : "#HGT1 static\n";
  for (const auto& e : h.edges()) {
    if (h.is_temporal()) {
      out += std::to_string(e.timestamp);
      out += '\t';
    }
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.nodes[i]);
    }
    out += '\n';
  }
  return out;
}

TemporalHypergraph read_hypergraph_file(const std::string& path) {
  return parse_hypergraph(text::read_file(path));
}

void write_hypergraph_file(const std::string& path, const TemporalHypergraph& h) {
  text::write_file(path, serialize_hypergraph(h));
}

}  // namespace hypergen
