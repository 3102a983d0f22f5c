#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fbg/formula.hpp"
#include "fbg/multigraph.hpp"
#include "fbg/solver.hpp"

namespace fbg {

enum class OutputFormat { kText, kKv };

/// Reads the instance format:
///   p fbg <n> <m>
///   w <vertex-id> <f-value>   (n lines, ascending ids, each exactly once)
///   e <u> <v>                 (m lines, u != v, repetition = parallel edges)
/// Lines starting with '#' and blank lines are ignored. Throws ParseError
/// with the offending line number on any format violation.
Instance parse_instance(std::istream& in);

/// parse_instance over a file; throws Error when the file cannot be opened.
Instance load_instance(const std::string& path);

/// Canonical serialization: header, weight lines, then edge lines in index
/// order with endpoints as stored (smaller first). Parsing the result yields
/// an equal Instance, and serializing that parses back byte-identically.
std::string serialize_instance(const Instance& inst);

/// "0,2,5" with members ascending; "-" for the empty set.
std::string format_vertex_set(VertexSet s);

/// Sets joined by ';' ("0,1;3"); "-" for an empty list.
std::string format_vertex_sets(const std::vector<VertexSet>& sets);

void write_solve_report(std::ostream& out, const Instance& inst, const Subgraph& h,
                        OutputFormat format);
void write_certificate_report(std::ostream& out, const DeficiencyCertificate& cert,
                              OutputFormat format);
void write_verification_report(std::ostream& out, const VerificationReport& rep,
                               OutputFormat format);

}  // namespace fbg
