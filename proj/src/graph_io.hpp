#ifndef X3P_GRAPH_IO_HPP
#define X3P_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "partitioned_graph.hpp"

namespace x3p {

// x3p-graph v1: line-oriented text format.
//   # x3p-graph v1                 (mandatory first line)
//   # construction: <free text>    (optional metadata comment)
//   # loops-discarded: <count>     (optional metadata comment)
//   p <k> <n1> ... <nk>            (exactly one, before any v/e line)
//   v <index> <label>              (optional, ascending index)
//   e <u> <v>                      (one per edge, u < v, global 0-based)
// Writing is canonical: metadata comments, p line, labelled vertices in
// ascending order, edges sorted by (u, v).

void write_graph(const PartitionedGraph& g, std::ostream& out);
void write_graph_file(const PartitionedGraph& g, const std::string& path);

// throws errc::parse with a line number on any malformed or invalid input;
// the returned graph has been validated
PartitionedGraph read_graph(std::istream& in);
PartitionedGraph read_graph_file(const std::string& path);

} // namespace x3p

#endif
