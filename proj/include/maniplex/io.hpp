#ifndef MANIPLEX_IO_HPP
#define MANIPLEX_IO_HPP

#include <string>
#include <string_view>

#include "maniplex/premaniplex.hpp"

namespace maniplex {

/// A premaniplex document: rank, flag_count, connections (row i = s_i),
/// base_flag (default 0) and an optional name.
struct Document {
    std::string name;
    RootedPremaniplex premaniplex;
};

/// Fixed key order, one connection row per line, trailing newline.
std::string serialize(const Document& doc);
std::string serialize(const RootedPremaniplex& rp, std::string_view name = {});

/**
 * @throws Error(SchemaError) naming the offending field, or a ValidationError
 *         whose message names the offending connections[i][f] entry.
 */
Document parse_document(std::string_view text);

/// @throws Error(IoError) and the errors of parse_document.
Document read_document(const std::string& path);
/// @throws Error(IoError)
void write_document(const Document& doc, const std::string& path);

/// Undirected DOT graph: nodes in flag order, base flag drawn as a double
/// circle, one edge per color pair with `color=i`, semi-edges as self-loops.
std::string dot_string(const RootedPremaniplex& rp);
/// @throws Error(IoError)
void export_dot(const RootedPremaniplex& rp, const std::string& path);

}  // namespace maniplex

#endif
