#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ecdp/instance.hpp"

namespace ecdp {

// ECG text format, one record per line, '#' starts a comment:
//
//   n <vertex_count>
//   colors <id> <id> ...
//   s <vertex>
//   t <vertex>
//   l <bound>                     (optional)
//   e <u> <v> <color>[,<color>...]
//
// Vertices are 0-based. The parsed instance has mode CDP; the mode is chosen
// by the caller. Errors are reported as ParseError carrying the line number.

ProblemInstance parse_instance(std::istream& in);
ProblemInstance parse_instance(std::string_view text);
ProblemInstance load_instance(const std::string& path);

/// Canonical form: header lines in the order above, colors in declaration
/// order, edges sorted by (u, v) with u < v and colors in declaration order.
std::string serialize_instance(const ProblemInstance& inst);
void save_instance(const ProblemInstance& inst, const std::string& path);

}  // namespace ecdp

namespace ecdp {

/// 64-bit FNV-1a of `text` as 16 hex digits; identifies instances in reports.
std::string content_digest(std::string_view text);

}  // namespace ecdp
