#ifndef glcs_graph_io_hpp
#define glcs_graph_io_hpp

#include <string>
#include <string_view>

#include "glcs/graph.hpp"

/*
 * Line-oriented graph files:
 *
 *   # comment
 *   vertex <id> <label>
 *   edge <from> <to>
 *
 * Ids are decimal unsigned 64-bit integers. A label that contains whitespace
 * is written in double quotes with \" and \\ as the only escapes. Blank lines
 * are ignored, and a trailing \r is dropped so CRLF files parse.
 */
namespace glcs {

// throws ParseError with the 1-based line of the first violation
LabeledGraph parse_graph(std::string_view text);

// throws ParseError (line 0) if the file cannot be read
LabeledGraph read_graph_file(const std::string& path);

// Writes vertices then edges in insertion order; parse_graph reads it back
// to an identical graph.
std::string serialize_graph(const LabeledGraph& graph);

// Atomic vertices are written with ids 1..n in index order.
std::string serialize_graph(const AtomicGraph& graph);

// Components get ids 1..n; the label is the sorted character set, quoted,
// followed by `cyclic` when the component is cyclic. Self-loops are listed.
std::string serialize_graph(const CondensedGraph& graph);

// The label as it appears in a file, quoted only when it has to be.
std::string format_label(std::u32string_view label);

}

#endif /* glcs_graph_io_hpp */
