#ifndef ANTIFLAG_GRAPH_IO_HPP
#define ANTIFLAG_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "antiflag/antiflag_space.hpp"
#include "antiflag/relation_graph.hpp"

namespace antiflag {

/// graph6 line (no trailing newline): N(n) header, then the upper triangle
/// column-major in 6-bit chunks offset by 63. Supports n <= 258047.
std::string encode_graph6(const RelGraph& g);

/// Inverse of encode_graph6; the result carries relation index 0 (unknown).
/// Throws std::invalid_argument on malformed input.
RelGraph decode_graph6(const std::string& line);

/// DIMACS: "p edge V E" then one "e u v" line per edge, 1-based vertex ids
/// in canonical order.
void write_dimacs(const RelGraph& g, std::ostream& os);

/// JSON lines: one {"id","point","hyperplane"} record per vertex carrying
/// its coordinates, then one {"u","v"} record per edge.
void write_jsonl(const RelGraph& g, const AntiFlagSpace& afs, std::ostream& os);

}  // namespace antiflag

#endif
