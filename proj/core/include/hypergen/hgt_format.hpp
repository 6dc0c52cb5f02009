#pragma once

#include <string>
#include <string_view>

#include "hypergen/hypergraph.hpp"

namespace hypergen {

// HGT v1: a line-oriented text format for temporal hypergraphs.
//
//   #HGT1              header; `#HGT1 static` marks a file without timestamps
//   # anything         comment
//   12<TAB>3,7,9       edge {3,7,9} at timestamp 12
//   3,7,9              edge without timestamp (static files only)
//
// A file without a header is accepted: it is temporal when every data line
// carries a timestamp. Missing timestamps default to the edge's index.

/// Throws ParseError carrying the offending line number.
TemporalHypergraph parse_hypergraph(std::string_view text);

/// Header line, then one line per edge in list order, node ids ascending,
/// '\n' line endings. Isolated nodes are not represented.
std::string serialize_hypergraph(const TemporalHypergraph& h);

TemporalHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const std::string& path, const TemporalHypergraph& h);

}  // namespace hypergen
